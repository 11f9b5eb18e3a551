"""Specialized builders: simple and simplicial polytopes, k-skeleta, and a
depth-first faces-only enumerator that needs neither a face tree nor arcs."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .bits import iter_bits, members, to_mask
from .closure import BitsetKernel, make_kernel
from .diagram import LABEL_MODES, HasseDiagram
from .enumeration import (ContractViolation, check_input, cover_masks,
                          exchange_roles, run_algorithm)
from .facetree import FaceTree, spanning_key
from .incidence import IncidenceStructure, dualize


class NotSimpleError(ValueError):
    pass


def _simple_degree_check(inc: IncidenceStructure, d: int, what: str = "simple") -> None:
    for v, c in enumerate(inc.cols):
        if len(c) != d:
            raise NotSimpleError(
                f"not a {what} {d}-polytope: vertex {v} lies on {len(c)} facets")


def uniform_degree(lists) -> int | None:
    """Common length of all lists, or None."""
    sizes = {len(x) for x in lists}
    return sizes.pop() if len(sizes) == 1 else None


def polytope_dimension(inc: IncidenceStructure) -> int:
    """Length of one maximal chain of faces, minus one."""
    return lattice_dimension(BitsetKernel(inc))


def simple_dimension(inc: IncidenceStructure) -> int | None:
    """d if ``inc`` is a simple d-polytope (every vertex on exactly d facets), else None."""
    deg = uniform_degree(inc.cols)
    if deg is None or deg != polytope_dimension(inc):
        return None
    return deg


def simplicial_dimension(inc: IncidenceStructure) -> int | None:
    """d if every facet of the d-polytope ``inc`` has exactly d vertices, else None."""
    return simple_dimension(dualize(inc))


def polytope_graph(inc: IncidenceStructure, d: int) -> list[tuple[int, int]]:
    """Edges of a simple d-polytope: vertex pairs sharing exactly d-1 facets."""
    _simple_degree_check(inc, d)
    cols = inc.col_masks
    edges = []
    for v in range(inc.n):
        cv = cols[v]
        for w in range(v + 1, inc.n):
            if (cv & cols[w]).bit_count() == d - 1:
                edges.append((v, w))
    return edges


def _neighbor_masks(n: int, edges) -> list[int]:
    adj = [0] * n
    for v, w in edges:
        adj[v] |= 1 << w
        adj[w] |= 1 << v
    return adj


def build_simple_lattice(inc: IncidenceStructure, d: int, labels: str = "vertices",
                         kernel: str = "bitset", check: bool = True) -> HasseDiagram:
    """Face lattice of a simple d-polytope without the minimal-set step.

    Expansion of a face H only looks at graph neighbours of one vertex of H
    (the smallest); each neighbour outside H spans exactly one cover. The
    queue holds facet sets rather than vertex sets.
    """
    if labels not in LABEL_MODES:
        raise ValueError(f"unknown label mode {labels!r}")
    if check:
        check_input(inc)
    adj = _neighbor_masks(inc.n, polytope_graph(inc, d))
    if polytope_dimension(inc) != d:
        raise NotSimpleError(f"not a simple {d}-polytope: its dimension is "
                             f"{polytope_dimension(inc)}")
    k = make_kernel(inc, kernel)
    full = inc.all_vertices

    diagram = HasseDiagram(inc.n, inc)
    diagram.labels = labels
    stats = diagram.stats
    stats.run_n, stats.run_m = inc.n, inc.m
    tree = FaceTree()
    root = diagram.add_node(0, -1)
    tree.root.ref = root
    diagram.root = root
    dims = diagram.dims

    queue = deque()
    for v in range(inc.n):
        ref, _ = tree.locate_or_create((v,), lambda v=v: diagram.add_node(1 << v, 0))
        diagram.add_arc(root, ref)
        queue.append((ref, k.facets(1 << v)))

    while queue:
        if len(queue) > stats.max_queue:
            stats.max_queue = len(queue)
        node, FH = queue.popleft()
        H = k.vertices(FH)
        if H == full:
            continue
        stats.expanded += 1
        dim = dims[node] + 1
        w = (H & -H).bit_length() - 1
        for v in iter_bits(adj[w] & ~H):
            FG = k.meet_vertex(FH, v)
            G = k.vertices(FG)
            ref, created = tree.locate_or_create(
                spanning_key(k, G), lambda G=G: diagram.add_node(G, dim))
            if created:
                if G == full:
                    diagram.top = ref
                queue.append((ref, FG))
            elif dims[ref] != dim:
                raise ContractViolation(
                    f"face {list(members(G))} reached at dimensions {dims[ref]} and {dim}")
            diagram.add_arc(node, ref)
    if diagram.top is None:
        raise ContractViolation("the full vertex set was never generated")
    stats.tree_nodes, stats.tree_depth = tree.size, tree.depth
    diagram.tree = tree
    return diagram


def build_simplicial_lattice(inc: IncidenceStructure, d: int, labels: str = "vertices",
                             kernel: str = "bitset", check: bool = True) -> HasseDiagram:
    """Dual of :func:`build_simple_lattice`: every facet must have d vertices."""
    for f, r in enumerate(inc.rows):
        if len(r) != d:
            raise NotSimpleError(
                f"not a simplicial {d}-polytope: facet {f} has {len(r)} vertices")
    if check:
        check_input(inc)
    dual = dualize(inc)
    run = build_simple_lattice(dual, d, kernel=kernel, check=False)
    diagram = exchange_roles(run, inc)
    diagram.labels = labels
    return diagram


def build_k_skeleton(inc: IncidenceStructure, k: int, labels: str = "vertices",
                     restrict: bool = True, kernel: str = "bitset",
                     check: bool = True) -> HasseDiagram:
    """Diagram of all faces of dimension at most ``k`` and the arcs among them.

    Faces of dimension ``k`` are never put on the queue. This always runs in
    the given orientation, since truncation from below does not survive
    transposition.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if check:
        check_input(inc)
    diagram = run_algorithm(inc, make_kernel(inc, kernel), restrict, max_dim=k)
    diagram.labels = labels
    return diagram


# -- faces-only depth-first enumeration ----------------------------------


def canonical_facet_mask(kernel, G: int, facets_G=None) -> tuple[list[int], int]:
    """(D(G), cl(D(G))) for a nonempty face mask G.

    One pass over G in increasing order, keeping a vertex when it shrinks
    the running facet intersection without shrinking it all the way down to
    Facets(G).
    """
    if facets_G is None:
        facets_G = kernel.facets(G)
    running = kernel.all_facets
    D = []
    for g in iter_bits(G):
        nxt = kernel.meet_vertex(running, g)
        if nxt != running and nxt != facets_G:
            D.append(g)
            running = nxt
    return D, kernel.vertices(running)


def canonical_facet(inc: IncidenceStructure, G: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lexicographically smallest subset of ``G`` spanning a facet of ``G``, and that facet."""
    Gm = to_mask(G)
    if not Gm:
        raise ValueError("the empty face has no facets")
    D, Hp = canonical_facet_mask(BitsetKernel(inc), Gm)
    return tuple(D), members(Hp)


@dataclass
class DFSStats:
    visited: int = 0
    pushes: int = 0
    generated: int = 0
    max_stack: int = 0
    run_n: int = 0
    dim: int = -1
    dualized: bool = False


def lattice_dimension(kernel, restrict: bool = True) -> int:
    """Walk one maximal chain from the empty face to the top."""
    H, d = 0, -1
    while H != kernel.all_vertices:
        H = cover_masks(kernel, H, restrict)[0]
        d += 1
    return d


def enumerate_faces_dfs(inc: IncidenceStructure,
                        visitor: Callable[[tuple[int, ...], int], None],
                        restrict: bool = True, auto_dualize: bool = True,
                        kernel: str = "bitset", check: bool = True) -> DFSStats:
    """Call ``visitor(vertex_tuple, dim)`` once for every face, empty face and top included.

    A face G produced while expanding H is pushed only if H is the canonical
    facet of G, so each face is pushed once without any lookup structure.
    """
    if check:
        check_input(inc)
    stats = DFSStats()
    dualized = auto_dualize and inc.m < inc.n
    run_inc = dualize(inc) if dualized else inc
    k = make_kernel(run_inc, kernel)
    full = run_inc.all_vertices
    stats.run_n, stats.dualized = run_inc.n, dualized

    if dualized:
        d = lattice_dimension(k, restrict)
        back = BitsetKernel(inc)

        def emit(H: int, dim: int) -> None:
            visitor(members(back.vertices(H)), d - 1 - dim)
    else:
        def emit(H: int, dim: int) -> None:
            visitor(members(H), dim)

    stack = [(0, -1)]
    top_dim = -1
    while stack:
        H, dim = stack.pop()
        stats.visited += 1
        emit(H, dim)
        if H == full:
            top_dim = dim
            continue
        for G in cover_masks(k, H, restrict):
            stats.generated += 1
            _, Hp = canonical_facet_mask(k, G)
            if Hp == H:
                stack.append((G, dim + 1))
                stats.pushes += 1
        if len(stack) > stats.max_stack:
            stats.max_stack = len(stack)
    stats.dim = top_dim
    return stats
