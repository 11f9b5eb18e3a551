"""Closure operator cl(S) = Vertices(Facets(S)).

Four implementations share one contract:

* the sorted-list functions (:func:`intersect_sorted`, :func:`facets_of`,
  :func:`vertices_of`, :func:`closure`) work on the sorted sparse rows and
  columns and touch at most a constant times ``alpha`` list elements;
* :class:`MergeKernel` runs everything through those functions;
* :class:`SparseKernel` keeps facet sets as sorted lists and shrinks them
  with O(1) incidence lookups;
* :class:`BitsetKernel` does the same intersections on integer masks.

The enumeration code talks to a *kernel* so any representation can drive
it. Vertex sets crossing the kernel boundary are always int masks; facet sets
are kernel-native (an int mask or a sorted tuple).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bits import iter_bits, to_mask
from .incidence import IncidenceStructure


@dataclass
class WorkCounter:
    """Counts list elements visited by the sorted-list routines."""

    touched: int = 0
    intersections: int = 0

    def reset(self) -> None:
        self.touched = 0
        self.intersections = 0


def intersect_sorted(a: Sequence[int], b: Sequence[int],
                     counter: WorkCounter | None = None) -> tuple[int, ...]:
    """Intersection of two strictly increasing sequences, in increasing order.

    The longer list is hashed and the shorter one filtered through it, so
    every element of both is visited once.
    """
    if len(a) > len(b):
        a, b = b, a
    if counter is not None:
        counter.touched += len(a) + len(b)
        counter.intersections += 1
    if not a:
        return ()
    return tuple(filter(frozenset(b).__contains__, a))


def _fold(lists: list[Sequence[int]], universe: int,
          counter: WorkCounter | None) -> tuple[int, ...]:
    if not lists:
        if counter is not None:
            counter.touched += universe
        return tuple(range(universe))
    # Shortest first: the running intersection never grows.
    lists.sort(key=len)
    acc = tuple(lists[0])
    if counter is not None:
        counter.touched += len(acc)
    for other in lists[1:]:
        if not acc:
            break
        acc = intersect_sorted(acc, other, counter)
    return acc


def facets_of(inc: IncidenceStructure, S: Iterable[int],
              counter: WorkCounter | None = None) -> tuple[int, ...]:
    """Facets containing every vertex of ``S``; all facets when ``S`` is empty."""
    return _fold([inc.cols[v] for v in S], inc.m, counter)


def vertices_of(inc: IncidenceStructure, T: Iterable[int],
                counter: WorkCounter | None = None) -> tuple[int, ...]:
    """Vertices lying in every facet of ``T``; all vertices when ``T`` is empty."""
    return _fold([inc.rows[f] for f in T], inc.n, counter)


def closure(inc: IncidenceStructure, S: Iterable[int],
            counter: WorkCounter | None = None) -> tuple[int, ...]:
    """Vertex set of the smallest face containing ``S``."""
    return vertices_of(inc, facets_of(inc, S, counter), counter)


class BitsetKernel:
    """Closure primitives on int masks. Facet sets are masks over F."""

    name = "bitset"

    def __init__(self, inc: IncidenceStructure):
        self.inc = inc
        self.n = inc.n
        self.all_facets = inc.all_facets
        self.all_vertices = inc.all_vertices
        self._rows = inc.row_masks
        self._cols = inc.col_masks

    def facets(self, S: int) -> int:
        acc = self.all_facets
        cols = self._cols
        for v in iter_bits(S):
            acc &= cols[v]
            if not acc:
                break
        return acc

    def meet_vertex(self, T: int, v: int) -> int:
        return T & self._cols[v]

    def vertices(self, T: int) -> int:
        # Either AND the |T| row masks or test all n columns against T.
        if T.bit_count() <= self.n:
            acc = self.all_vertices
            rows = self._rows
            for f in iter_bits(T):
                acc &= rows[f]
                if not acc:
                    break
            return acc
        acc = 0
        for v, c in enumerate(self._cols):
            if not T & ~c:
                acc |= 1 << v
        return acc

    def union_rows(self, T: int) -> int:
        if T.bit_count() <= self.n:
            acc = 0
            rows = self._rows
            for f in iter_bits(T):
                acc |= rows[f]
            return acc
        acc = 0
        for v, c in enumerate(self._cols):
            if T & c:
                acc |= 1 << v
        return acc

    def closure(self, S: int) -> int:
        return self.vertices(self.facets(S))

    def facet_count(self, T: int) -> int:
        return T.bit_count()


class SparseKernel:
    """Closure primitives on sorted facet lists.

    A facet set is a sorted tuple. Meeting it with Facets({v}) keeps the
    entries f with a_fv = 1, looked up in per-vertex hash sets, so the cost
    is the length of the running list and never that of the column.
    """

    name = "sparse"

    def __init__(self, inc: IncidenceStructure, counter: WorkCounter | None = None):
        self.inc = inc
        self.n = inc.n
        self.counter = counter
        self.all_facets = tuple(range(inc.m))
        self.all_vertices = inc.all_vertices
        self._colsets = [frozenset(c) for c in inc.cols]

    def facets(self, S: int) -> tuple[int, ...]:
        it = iter_bits(S)
        first = next(it, None)
        if first is None:
            return self.all_facets
        acc = self.inc.cols[first]
        for v in it:
            if not acc:
                break
            acc = tuple(filter(self._colsets[v].__contains__, acc))
        return acc

    def meet_vertex(self, T: tuple[int, ...], v: int) -> tuple[int, ...]:
        if T is self.all_facets:
            return self.inc.cols[v]
        return tuple(filter(self._colsets[v].__contains__, T))

    def vertices(self, T: tuple[int, ...]) -> int:
        if not T:
            return self.all_vertices
        rows, colsets = self.inc.rows, self._colsets
        shortest = min(T, key=lambda f: len(rows[f]))
        acc = 0
        for v in rows[shortest]:
            if colsets[v].issuperset(T):
                acc |= 1 << v
        return acc

    def union_rows(self, T: tuple[int, ...]) -> int:
        if T is self.all_facets:
            return self.all_vertices
        rows = self.inc.rows
        return to_mask(v for f in T for v in rows[f])

    def closure(self, S: int) -> int:
        return self.vertices(self.facets(S))

    def facet_count(self, T: tuple[int, ...]) -> int:
        return len(T)


class MergeKernel:
    """Every intersection visits both operand lists in full, as
    :func:`intersect_sorted` does.

    Slowest of the three, but its running time follows the list lengths
    closely, which makes it the one to time against the analytic bound.
    """

    name = "merge"

    def __init__(self, inc: IncidenceStructure, counter: WorkCounter | None = None):
        self.inc = inc
        self.n = inc.n
        self.counter = counter
        self.all_facets = tuple(range(inc.m))
        self.all_vertices = inc.all_vertices
        self._bit = [1 << v for v in range(inc.n)]

    def facets(self, S: int) -> tuple[int, ...]:
        return facets_of(self.inc, iter_bits(S), self.counter)

    def meet_vertex(self, T: tuple[int, ...], v: int) -> tuple[int, ...]:
        if T is self.all_facets:
            return self.inc.cols[v]
        if self.counter is not None:
            return intersect_sorted(T, self.inc.cols[v], self.counter)
        # same visit pattern as intersect_sorted, minus the call and bookkeeping
        c = self.inc.cols[v]
        if len(T) > len(c):
            return tuple(filter(frozenset(T).__contains__, c))
        return tuple(filter(frozenset(c).__contains__, T))

    def vertices(self, T: tuple[int, ...]) -> int:
        # distinct bits, so the sum is the union
        return sum(map(self._bit.__getitem__, vertices_of(self.inc, T, self.counter)))

    def union_rows(self, T: tuple[int, ...]) -> int:
        if T is self.all_facets:
            return self.all_vertices
        rows = self.inc.rows
        return sum(map(self._bit.__getitem__, {v for f in T for v in rows[f]}))

    def closure(self, S: int) -> int:
        return self.vertices(self.facets(S))

    def facet_count(self, T: tuple[int, ...]) -> int:
        return len(T)


KERNELS = {"bitset": BitsetKernel, "sparse": SparseKernel, "merge": MergeKernel}


def make_kernel(inc: IncidenceStructure, kind: str = "bitset"):
    try:
        return KERNELS[kind](inc)
    except KeyError:
        raise ValueError(f"unknown kernel {kind!r}; choose from {sorted(KERNELS)}") from None
