"""Command line interface.

Exit status: 0 on success, 1 for unreadable input, failed validation or bad
parameters, 2 when the input passes validation but turns out not to be a
face lattice during the run.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .diagram import LABEL_MODES
from .enumeration import ContractViolation, build_face_lattice
from .incidence import IncidenceError, parse_incidence, serialize
from .om import CocircuitError, build_covector_lattice, parse_cocircuits
from .oracle import GENERATORS, gen_cyclic
from .variants import (NotSimpleError, build_k_skeleton, build_simple_lattice,
                       build_simplicial_lattice, enumerate_faces_dfs, simple_dimension,
                       simplicial_dimension)

EXIT_OK, EXIT_INPUT, EXIT_CONTRACT = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _faces_only(inc, args) -> tuple[str, int]:
    faces = []
    enumerate_faces_dfs(inc, lambda S, dim: faces.append((dim, S)),
                        restrict=not args.no_restrict, auto_dualize=not args.no_dualize,
                        kernel=args.kernel)
    if args.format == "json":
        doc = [{"dim": dim, "vertices": list(S)} for dim, S in faces]
        return json.dumps(doc) + "\n", len(faces)
    lines = [" ".join([str(dim), *map(str, S)]) for dim, S in faces]
    return "\n".join(lines) + "\n", len(faces)


def cmd_build(args) -> int:
    try:
        inc = parse_incidence(_read(args.file))
    except (OSError, IncidenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        if args.faces_only:
            text, phi = _faces_only(inc, args)
            arcs = "-"
        else:
            if args.simple:
                d = simple_dimension(inc)
                if d is None:
                    raise NotSimpleError("not simple: some vertex lies on more facets than "
                                         "the dimension")
                diagram = build_simple_lattice(inc, d, labels=args.labels, kernel=args.kernel)
            elif args.simplicial:
                d = simplicial_dimension(inc)
                if d is None:
                    raise NotSimpleError("not simplicial: some facet has more vertices than "
                                         "the dimension")
                diagram = build_simplicial_lattice(inc, d, labels=args.labels, kernel=args.kernel)
            elif args.k_skeleton is not None:
                diagram = build_k_skeleton(inc, args.k_skeleton, labels=args.labels,
                                           restrict=not args.no_restrict, kernel=args.kernel)
            else:
                diagram = build_face_lattice(inc, labels=args.labels,
                                             restrict=not args.no_restrict,
                                             auto_dualize=not args.no_dualize,
                                             kernel=args.kernel)
            text = diagram.to_json() if args.format == "json" else diagram.to_text()
            phi, arcs = len(diagram), diagram.num_arcs
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (IncidenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    _write(text, args.out)
    print(f"n={inc.n} m={inc.m} alpha={inc.alpha} phi={phi} arcs={arcs}", file=sys.stderr)
    return EXIT_OK


def cmd_om(args) -> int:
    try:
        cocircuits = parse_cocircuits(_read(args.file))
        lattice = build_covector_lattice(cocircuits)
    except (OSError, CocircuitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    text = lattice.to_json() if args.format == "json" else lattice.to_text()
    _write(text, args.out)
    print(f"cocircuits={len(lattice.cocircuits)} k={lattice.k} phi={len(lattice)} "
          f"arcs={lattice.num_arcs} topes={len(lattice.topes())}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.family == "cyclic":
            if len(args.params) != 2:
                raise ValueError("usage: gen cyclic D N")
            inc = gen_cyclic(*args.params)
        else:
            if len(args.params) != 1:
                raise ValueError(f"usage: gen {args.family} D")
            inc = GENERATORS[args.family](args.params[0])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(serialize(inc), args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facelattice",
                                description="Face lattices of polytopes from vertex-facet incidences.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build the Hasse diagram of a face lattice")
    b.add_argument("file", help="incidence file, or - for stdin")
    b.add_argument("--labels", choices=LABEL_MODES, default="vertices")
    mode = b.add_mutually_exclusive_group()
    mode.add_argument("--k-skeleton", type=int, metavar="K")
    mode.add_argument("--simple", action="store_true")
    mode.add_argument("--simplicial", action="store_true")
    mode.add_argument("--faces-only", action="store_true")
    b.add_argument("--no-dualize", action="store_true",
                   help="never run on the transposed matrix")
    b.add_argument("--no-restrict", action="store_true",
                   help="try every vertex outside a face, not only those on its facets")
    b.add_argument("--kernel", choices=("bitset", "sparse", "merge"), default="bitset")
    b.add_argument("--format", choices=("text", "json"), default="text")
    b.add_argument("--out", metavar="PATH")
    b.set_defaults(func=cmd_build)

    o = sub.add_parser("om", help="build the big face lattice of an oriented matroid")
    o.add_argument("file", help="cocircuit file, or - for stdin")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.add_argument("--out", metavar="PATH")
    o.set_defaults(func=cmd_om)

    g = sub.add_parser("gen", help="write the incidences of a standard polytope")
    g.add_argument("family", choices=(*GENERATORS, "cyclic"))
    g.add_argument("params", type=int, nargs="+", metavar="D")
    g.add_argument("--out", metavar="PATH")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
