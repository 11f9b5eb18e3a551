"""Bottom-up construction of the face lattice's Hasse diagram.

The builder keeps a FIFO queue of faces whose out-arcs are still missing.
For a face H it forms H(v) = cl(H + v) for the relevant vertices v, keeps
the inclusion-minimal ones (these are exactly the faces covering H), looks
each up in the face tree, and inserts the arcs. Faces in the queue are int
masks.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .bits import members, to_mask
from .closure import BitsetKernel, make_kernel
from .diagram import LABEL_MODES, HasseDiagram
from .facetree import FaceTree, spanning_key
from .incidence import IncidenceError, IncidenceStructure, dualize, validate


class ValidationFailed(IncidenceError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class ContractViolation(RuntimeError):
    """The input passed validation but does not behave like a face lattice."""


# -- per-face steps ------------------------------------------------------


def candidate_masks(kernel, H: int, facets_H, restrict: bool) -> list[tuple[int, int]]:
    """(v, H(v)) pairs for the vertices v outside H worth trying.

    With ``restrict`` only vertices on some facet through H are used. That
    pool is empty exactly when H is a facet.
    """
    if restrict:
        pool = kernel.union_rows(facets_H) & ~H
    else:
        pool = kernel.all_vertices & ~H
    out = []
    meet, vertices = kernel.meet_vertex, kernel.vertices
    while pool:
        low = pool & -pool
        v = low.bit_length() - 1
        pool ^= low
        out.append((v, vertices(meet(facets_H, v))))
    return out


def minimal_masks(cands: Sequence[tuple[int, int]]) -> list[int]:
    """Inclusion-minimal H(v) among ``cands``, each reported once.

    Every vertex starts out labeled *candidate*. Visiting v in turn: if H(v)
    holds another vertex that still carries a label, v loses its label,
    otherwise it becomes *minimal*. ``labeled`` tracks both kinds.
    """
    labeled = 0
    for v, _ in cands:
        labeled |= 1 << v
    out = []
    for v, Hv in cands:
        bit = 1 << v
        if labeled & Hv & ~bit:
            labeled &= ~bit
        else:
            out.append(Hv)
    return out


def cover_masks(kernel, H: int, restrict: bool = True, facets_H=None) -> list[int]:
    """Vertex masks of all faces covering the face H (H must not be the top)."""
    if facets_H is None:
        facets_H = kernel.facets(H)
    cands = candidate_masks(kernel, H, facets_H, restrict)
    if not cands:
        # H is a facet; its only cover is the polytope itself, which lies on
        # no facet and so is invisible to the restricted pool.
        return [kernel.all_vertices]
    return minimal_masks(cands)


def candidates(inc: IncidenceStructure, H: Iterable[int],
               restrict: bool = False) -> list[tuple[int, tuple[int, ...]]]:
    """Public form of :func:`candidate_masks` on plain vertex collections."""
    kernel = BitsetKernel(inc)
    Hm = to_mask(H)
    return [(v, members(Hv)) for v, Hv in candidate_masks(kernel, Hm, kernel.facets(Hm), restrict)]


def minimal_faces(n: int, H: Iterable[int],
                  cands: Sequence[tuple[int, Iterable[int]]]) -> list[tuple[int, ...]]:
    """Distinct inclusion-minimal sets of ``cands``, ordered by their first vertex label."""
    Hm = to_mask(H)
    masks = [(v, to_mask(s) | Hm) for v, s in cands]
    for v, s in masks:
        if not 0 <= v < n or s >> n:
            raise ValueError(f"candidate {v} outside 0..{n - 1}")
    return [members(s) for s in minimal_masks(masks)]


# -- main loop -----------------------------------------------------------


def run_algorithm(inc: IncidenceStructure, kernel=None, restrict: bool = True,
                  max_dim: int | None = None) -> HasseDiagram:
    """Bottom-up construction on ``inc`` as given (no transposition).

    ``max_dim`` truncates the diagram: faces of that dimension are created
    but never expanded, so nothing above them is generated.
    """
    kernel = kernel or BitsetKernel(inc)
    diagram = HasseDiagram(inc.n, inc)
    stats = diagram.stats
    stats.run_n, stats.run_m = inc.n, inc.m
    full = inc.all_vertices

    tree = FaceTree()
    root = diagram.add_node(0, -1)
    tree.root.ref = root
    diagram.root = root
    if max_dim is not None and max_dim < 0:
        return diagram

    queue = deque([(root, 0)])
    dims = diagram.dims
    add_node, add_arc = diagram.add_node, diagram.add_arc
    while queue:
        if len(queue) > stats.max_queue:
            stats.max_queue = len(queue)
        node, H = queue.popleft()
        if H == full:
            continue
        stats.expanded += 1
        dim = dims[node] + 1
        for G in cover_masks(kernel, H, restrict):
            ref, created = tree.locate_or_create(
                spanning_key(kernel, G), lambda G=G: add_node(G, dim))
            if created:
                if G == full:
                    diagram.top = ref
                if max_dim is None or dim < max_dim:
                    queue.append((ref, G))
            elif dims[ref] != dim:
                raise ContractViolation(
                    f"face {list(members(G))} reached at dimensions {dims[ref]} and {dim}; "
                    "the lattice is not graded")
            add_arc(node, ref)
    stats.tree_nodes = tree.size
    stats.tree_depth = tree.depth
    diagram.tree = tree
    if max_dim is None and diagram.top is None:
        raise ContractViolation("the full vertex set was never generated")
    return diagram


def exchange_roles(run: HasseDiagram, inc: IncidenceStructure) -> HasseDiagram:
    """Turn a diagram built on ``dualize(inc)`` into the diagram of ``inc``.

    Each node's label (a set of facets of ``inc``) is replaced by the
    vertices lying on all of them, dimensions are reflected, arcs reversed.
    """
    if run.top is None:
        raise ValueError("cannot exchange roles in a truncated diagram")
    d = run.dims[run.top]
    kernel = BitsetKernel(inc)
    out = HasseDiagram(inc.n, inc)
    for T, k in zip(run.faces, run.dims):
        out.add_node(kernel.vertices(T), d - 1 - k)
    out.arcs = [(b, a) for a, b in run.arcs]
    out.root, out.top = run.top, run.root
    out.stats = run.stats
    out.stats.dualized = True
    out.tree = getattr(run, "tree", None)
    return out


def check_input(inc: IncidenceStructure) -> None:
    diags = validate(inc)
    if diags:
        raise ValidationFailed(diags)


def build_face_lattice(inc: IncidenceStructure, labels: str = "vertices",
                       restrict: bool = True, auto_dualize: bool = True,
                       kernel: str = "bitset", check: bool = True) -> HasseDiagram:
    """Hasse diagram of the face lattice of the polytope with incidences ``inc``.

    Args:
        labels: what serialization prints per node: "vertices", "facets" or "dim".
        restrict: only try vertices on facets through the current face.
        auto_dualize: run on the transpose when there are fewer facets than vertices.
        kernel: "bitset" or "sparse" closure primitives.
        check: run :func:`validate` first and raise on any diagnostic.

    The result is always in the orientation of ``inc``.
    """
    if labels not in LABEL_MODES:
        raise ValueError(f"unknown label mode {labels!r}")
    if check:
        check_input(inc)
    if auto_dualize and inc.m < inc.n:
        dual = dualize(inc)
        diagram = exchange_roles(run_algorithm(dual, make_kernel(dual, kernel), restrict), inc)
    else:
        diagram = run_algorithm(inc, make_kernel(inc, kernel), restrict)
    diagram.labels = labels
    return diagram


def f_vector(diagram: HasseDiagram) -> tuple[int, ...]:
    """(f_0, ..., f_{d-1}): face counts by dimension, without the empty face and the top."""
    d = diagram.dim
    if diagram.top is None:
        d += 1
    counts = [0] * max(d, 0)
    for k in diagram.dims:
        if 0 <= k < d:
            counts[k] += 1
    return tuple(counts)
