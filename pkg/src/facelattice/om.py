"""Big face lattice of an oriented matroid, built from its cocircuits.

Covectors play the role of faces and cocircuits the role of vertices. The
join of two covectors is their composition when they do not separate, and
the artificial top element otherwise.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import HasseDiagram
from .enumeration import ContractViolation
from .facetree import FaceTree

_CHARS = {"+": 1, "-": -1, "0": 0}


class CocircuitError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class SignVector:
    """Element of {-,0,+}^k stored as two disjoint bit masks."""

    k: int
    plus: int
    minus: int

    @classmethod
    def from_string(cls, s: str) -> "SignVector":
        plus = minus = 0
        for i, ch in enumerate(s):
            if ch == "+":
                plus |= 1 << i
            elif ch == "-":
                minus |= 1 << i
            elif ch != "0":
                raise CocircuitError(f"bad sign character {ch!r} in {s!r}")
        return cls(len(s), plus, minus)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignVector":
        signs = list(signs)
        plus = minus = 0
        for i, x in enumerate(signs):
            if x > 0:
                plus |= 1 << i
            elif x < 0:
                minus |= 1 << i
        return cls(len(signs), plus, minus)

    @classmethod
    def zero(cls, k: int) -> "SignVector":
        return cls(k, 0, 0)

    def __neg__(self) -> "SignVector":
        return SignVector(self.k, self.minus, self.plus)

    def __getitem__(self, i: int) -> int:
        return (self.plus >> i & 1) - (self.minus >> i & 1)

    def __str__(self) -> str:
        return "".join("+" if self.plus >> i & 1 else "-" if self.minus >> i & 1 else "0"
                       for i in range(self.k))

    @property
    def support(self) -> int:
        return self.plus | self.minus

    def conforms_to(self, other: "SignVector") -> bool:
        """``self`` precedes-or-equals ``other``: every nonzero sign of self agrees."""
        return not (self.plus & ~other.plus or self.minus & ~other.minus)

    def is_positive(self) -> bool:
        return not self.minus


class Top:
    """The adjoined maximum of the big face lattice."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TOP"


TOP = Top()


def _same_length(v: SignVector, w: SignVector) -> None:
    if v.k != w.k:
        raise ValueError(f"sign vectors of lengths {v.k} and {w.k}")


def separation_set(v: SignVector, w: SignVector) -> tuple[int, ...]:
    _same_length(v, w)
    sep = (v.plus & w.minus) | (v.minus & w.plus)
    return tuple(i for i in range(v.k) if sep >> i & 1)


def compose(v: SignVector, w: SignVector) -> SignVector:
    _same_length(v, w)
    return SignVector(v.k, v.plus | (w.plus & ~v.minus), v.minus | (w.minus & ~v.plus))


def join_covectors(v: SignVector, w: SignVector) -> SignVector | Top:
    _same_length(v, w)
    if (v.plus & w.minus) | (v.minus & w.plus):
        return TOP
    return SignVector(v.k, v.plus | w.plus, v.minus | w.minus)


def canonical_index_set(cocircuits: Sequence[SignVector], S: SignVector) -> tuple[int, ...]:
    """Indices of the conforming cocircuits at which the running join grows."""
    running = SignVector.zero(S.k)
    out = []
    for j, c in enumerate(cocircuits):
        if c.conforms_to(S):
            nxt = SignVector(S.k, running.plus | c.plus, running.minus | c.minus)
            if nxt != running:
                out.append(j)
                running = nxt
    if running != S:
        raise ValueError(f"{S} is not a join of cocircuits")
    return tuple(out)


def complete_negations(cocircuits: Sequence[SignVector]) -> list[SignVector]:
    """Append missing negatives, warning once if any were missing."""
    out = list(cocircuits)
    present = set(out)
    added = []
    for c in cocircuits:
        if -c not in present:
            present.add(-c)
            out.append(-c)
            added.append(-c)
    if added:
        warnings.warn(f"cocircuit set not closed under negation; added {len(added)} "
                      f"vector(s): {' '.join(map(str, added))}", stacklevel=2)
    return out


class CovectorLattice(HasseDiagram):
    """Hasse diagram whose nodes are sign vectors plus :data:`TOP`."""

    def __init__(self, k: int, cocircuits: Sequence[SignVector] = ()):
        super().__init__(k)
        self.k = k
        self.cocircuits = list(cocircuits)

    def topes(self) -> list[SignVector]:
        if self.top is None:
            return []
        return [self.faces[a] for a, b in self.arcs if b == self.top]

    def covectors(self) -> list[SignVector]:
        return [f for f in self.faces if f is not TOP]

    def labeled_arcs(self):
        return {(self.faces[a], self.faces[b]) for a, b in self.arcs}

    def _sort_key(self, node: int):
        f = self.faces[node]
        return (self.dims[node], "" if f is TOP else str(f))

    def _label_fields(self, node: int, labels: str) -> list[str]:
        f = self.faces[node]
        return ["top"] if f is TOP else ["s", str(f)]

    def _label_json(self, node: int, labels: str):
        f = self.faces[node]
        return {"top": True} if f is TOP else {"sign": str(f)}


def build_covector_lattice(cocircuits: Sequence[SignVector]) -> CovectorLattice:
    """Hasse diagram of all covectors ordered by conformance, plus the top.

    Cocircuit order is kept as given; it fixes the face-tree keys.
    """
    cocircuits = list(cocircuits)
    if not cocircuits:
        raise CocircuitError("no cocircuits given")
    k = cocircuits[0].k
    for c in cocircuits:
        if c.k != k:
            raise CocircuitError(f"cocircuit {c} has length {c.k}, expected {k}")
        if not c.support:
            raise CocircuitError("the zero vector is not a cocircuit")
    cocircuits = complete_negations(cocircuits)

    lat = CovectorLattice(k, cocircuits)
    stats = lat.stats
    stats.run_n, stats.run_m = len(cocircuits), k
    tree = FaceTree()
    zero = SignVector.zero(k)
    root = lat.add_node(zero, -1)
    tree.root.ref = root
    lat.root = root
    dims = lat.dims
    tope_dim = None

    queue = deque([(root, zero)])
    while queue:
        if len(queue) > stats.max_queue:
            stats.max_queue = len(queue)
        node, H = queue.popleft()
        stats.expanded += 1
        dim = dims[node] + 1

        joins: dict[SignVector, None] = {}
        for c in cocircuits:
            if c.conforms_to(H):
                continue
            if (H.plus & c.minus) | (H.minus & c.plus):
                continue
            joins[SignVector(k, H.plus | c.plus, H.minus | c.minus)] = None
        if not joins:
            if tope_dim is None:
                tope_dim = dims[node]
                lat.top = lat.add_node(TOP, tope_dim + 1)
            elif dims[node] != tope_dim:
                raise ContractViolation(f"topes at dimensions {tope_dim} and {dims[node]}")
            lat.add_arc(node, lat.top)
            continue

        cands = list(joins)
        minimal = [g for g in cands
                   if not any(o != g and o.conforms_to(g) for o in cands)]
        for G in minimal:
            ref, created = tree.locate_or_create(
                canonical_index_set(cocircuits, G), lambda G=G: lat.add_node(G, dim))
            if created:
                queue.append((ref, G))
            elif dims[ref] != dim:
                raise ContractViolation(f"covector {G} reached at dimensions {dims[ref]} and {dim}")
            lat.add_arc(node, ref)
    stats.tree_nodes, stats.tree_depth = tree.size, tree.depth
    lat.tree = tree
    return lat


def parse_cocircuits(text: str) -> list[SignVector]:
    """Parse ``n k`` followed by n sign strings of length k."""
    lines = [(i, s.strip()) for i, s in enumerate(text.splitlines(), start=1)]
    lines = [(i, s) for i, s in lines if s and not s.startswith("#")]
    if not lines:
        raise CocircuitError("missing header line 'n k'")
    lineno, header = lines[0]
    try:
        count, k = (int(x) for x in header.split())
    except ValueError:
        raise CocircuitError(f"line {lineno}: malformed header {header!r}") from None
    body = lines[1:]
    if len(body) != count:
        raise CocircuitError(f"header announces {count} cocircuits but {len(body)} lines follow")
    out = []
    for lineno, s in body:
        if len(s) != k:
            raise CocircuitError(f"line {lineno}: {s!r} has length {len(s)}, expected {k}")
        if set(s) - set(_CHARS):
            raise CocircuitError(f"line {lineno}: {s!r} contains characters other than +-0")
        out.append(SignVector.from_string(s))
    return out


def serialize_cocircuits(cocircuits: Sequence[SignVector]) -> str:
    k = cocircuits[0].k if cocircuits else 0
    return "\n".join([f"{len(cocircuits)} {k}", *map(str, cocircuits)]) + "\n"
