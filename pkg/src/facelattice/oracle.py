"""Brute-force references and instance generators.

Nothing here calls into the closure, face tree, enumeration, variants or
oriented-matroid code: the oracles read the dense matrix, use plain Python
sets, and exist only to check those modules. The generators build
incidence structures for well-understood polytope families.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .diagram import HasseDiagram, diagram_from_faces
from .incidence import IncidenceStructure, dualize

MAX_ORACLE_SIZE = 20
MAX_GEN_DIM = 16


# -- face lattices -------------------------------------------------------


def brute_force_faces(inc: IncidenceStructure) -> set[frozenset[int]]:
    """All vertex sets S with Vertices(Facets(S)) == S.

    The closed sets are exactly the sets Vertices(T) for T ranging over all
    facet subsets, so the enumeration runs over subsets of whichever of V
    and F is smaller.
    """
    n, m = inc.n, inc.m
    if min(n, m) > MAX_ORACLE_SIZE:
        raise ValueError(f"brute force over 2^{min(n, m)} subsets refused "
                         f"(limit {MAX_ORACLE_SIZE})")
    A = inc.to_matrix()
    faces = set()
    if m < n:
        for bits in range(1 << m):
            T = [f for f in range(m) if bits >> f & 1]
            faces.add(frozenset(v for v in range(n) if all(A[f][v] for f in T)))
        return faces
    for bits in range(1 << n):
        S = [v for v in range(n) if bits >> v & 1]
        facets = [f for f in range(m) if all(A[f][v] for v in S)]
        closed = [v for v in range(n) if all(A[f][v] for f in facets)]
        if closed == S:
            faces.add(frozenset(S))
    return faces


def brute_force_hasse(faces: Iterable[Iterable[int]], n: int | None = None) -> HasseDiagram:
    """Cover relations by pairwise inclusion; dimension = longest chain from the bottom, minus one."""
    faces = sorted({frozenset(f) for f in faces}, key=lambda f: (len(f), sorted(f)))
    if n is None:
        n = max((max(f) + 1 for f in faces if f), default=0)
    below = {f: [g for g in faces if g < f] for f in faces}
    arcs = []
    for f in faces:
        for g in below[f]:
            if not any(g < h for h in below[f]):
                arcs.append((g, f))
    height = {}
    for f in faces:  # sorted by size, so every predecessor is already done
        height[f] = max((height[g] + 1 for g in below[f]), default=0)
    index = {f: i for i, f in enumerate(faces)}
    return diagram_from_faces(
        n, [sorted(f) for f in faces], [height[f] - 1 for f in faces],
        [(index[g], index[f]) for g, f in arcs])


def oracle_diagram(inc: IncidenceStructure) -> HasseDiagram:
    d = brute_force_hasse(brute_force_faces(inc), inc.n)
    d.inc = inc
    return d


# -- generators ----------------------------------------------------------


def _check_dim(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d!r}")
    if d > MAX_GEN_DIM:
        raise ValueError(f"dimension {d} too large (limit {MAX_GEN_DIM})")


def gen_simplex(d: int) -> IncidenceStructure:
    """d-simplex: d+1 vertices, facet i is every vertex except i."""
    _check_dim(d)
    n = d + 1
    return IncidenceStructure.from_rows([[v for v in range(n) if v != i] for i in range(n)], n)


def gen_cube(d: int) -> IncidenceStructure:
    """d-cube on {0,1}^d; vertex v has coordinate x_i = bit i of v.

    Facet 2i is x_i = 0 and facet 2i+1 is x_i = 1.
    """
    _check_dim(d)
    n = 1 << d
    rows = []
    for i in range(d):
        rows.append([v for v in range(n) if not v >> i & 1])
        rows.append([v for v in range(n) if v >> i & 1])
    return IncidenceStructure.from_rows(rows, n)


def gen_cross(d: int) -> IncidenceStructure:
    """d-dimensional cross-polytope, the polar of the d-cube."""
    return dualize(gen_cube(d))


def gale_evenness(S: Sequence[int], n: int) -> bool:
    """Between any two non-members, the number of members is even."""
    members = set(S)
    outside = [i for i in range(n) if i not in members]
    for a, b in zip(outside, outside[1:]):
        if (b - a - 1) % 2:
            return False
    return True


def gen_cyclic(d: int, n: int) -> IncidenceStructure:
    """Cyclic polytope C(d, n): facets are the d-subsets passing Gale's evenness test."""
    if not (isinstance(d, int) and isinstance(n, int)) or d < 2 or n <= d:
        raise ValueError(f"cyclic polytope needs n > d >= 2, got d={d}, n={n}")
    rows = [list(S) for S in combinations(range(n), d) if gale_evenness(S, n)]
    return IncidenceStructure.from_rows(rows, n)


GENERATORS = {"simplex": gen_simplex, "cube": gen_cube, "cross": gen_cross}


# -- oriented matroids ---------------------------------------------------

SignTuple = tuple[int, ...]


def _sign_tuple(v) -> SignTuple:
    if isinstance(v, str):
        return tuple({"+": 1, "-": -1, "0": 0}[c] for c in v)
    if hasattr(v, "k") and hasattr(v, "plus"):
        return tuple(1 if v.plus >> i & 1 else -1 if v.minus >> i & 1 else 0
                     for i in range(v.k))
    return tuple(v)


def brute_force_covectors(cocircuits: Iterable, k: int | None = None) -> set[SignTuple]:
    """Fixed point of {0} and the cocircuits under the conformal join."""
    vecs = [_sign_tuple(c) for c in cocircuits]
    if k is None:
        if not vecs:
            raise ValueError("need k when no cocircuits are given")
        k = len(vecs[0])
    found = {(0,) * k, *vecs}
    while True:
        new = set()
        for a in found:
            for b in found:
                if any(x * y < 0 for x, y in zip(a, b)):
                    continue
                c = tuple(x if x else y for x, y in zip(a, b))
                if c not in found:
                    new.add(c)
        if not new:
            return found
        found |= new


def sign_leq(a: SignTuple, b: SignTuple) -> bool:
    return all(x == 0 or x == y for x, y in zip(a, b))


def brute_force_covector_hasse(covectors: Iterable[SignTuple]):
    """Cover pairs among covectors plus arcs from every maximal covector to the top ("TOP")."""
    covs = list(covectors)
    below = {c: [o for o in covs if o != c and sign_leq(o, c)] for c in covs}
    arcs = set()
    for c in covs:
        for o in below[c]:
            if not any(sign_leq(o, p) for p in below[c] if p != o):
                arcs.add((o, c))
    for c in covs:
        if not any(c != o and sign_leq(c, o) for o in covs):
            arcs.add((c, "TOP"))
    return set(covs) | {"TOP"}, arcs
