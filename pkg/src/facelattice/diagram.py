"""Hasse diagram container and its canonical serializations."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

from .bits import iter_bits, members, to_mask

LABEL_MODES = ("vertices", "facets", "dim")


@dataclass
class BuildStats:
    """Counters collected while a diagram is built."""

    dualized: bool = False
    run_n: int = 0
    run_m: int = 0
    closures: int = 0
    expanded: int = 0
    tree_nodes: int = 0
    tree_depth: int = 0
    max_queue: int = 0
    extra: dict[str, Any] = field(default_factory=dict)


class HasseDiagram:
    """Cover graph of a face lattice.

    Node ``i`` has dimension ``dims[i]`` and vertex set ``faces[i]``, stored
    as an int mask. ``arcs`` holds (child, parent) id pairs, i.e. from the
    smaller face to the larger one. ``top`` is None for truncated diagrams.
    """

    def __init__(self, n: int, inc=None):
        self.n = n
        self.inc = inc
        self.dims: list[int] = []
        self.faces: list[int] = []
        self.arcs: list[tuple[int, int]] = []
        self.root: int | None = None
        self.top: int | None = None
        self.labels = "vertices"
        self.stats = BuildStats()

    def add_node(self, face: int, dim: int) -> int:
        self.faces.append(face)
        self.dims.append(dim)
        return len(self.faces) - 1

    def add_arc(self, child: int, parent: int) -> None:
        self.arcs.append((child, parent))

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def dim(self) -> int:
        """Dimension of the top node, or the largest dimension present."""
        if self.top is not None:
            return self.dims[self.top]
        return max(self.dims)

    def vertex_set(self, node: int) -> tuple[int, ...]:
        return members(self.faces[node])

    def facet_set(self, node: int) -> tuple[int, ...]:
        if self.inc is None:
            raise ValueError("facet labels need the incidence structure")
        acc = self.inc.all_facets
        for v in iter_bits(self.faces[node]):
            acc &= self.inc.col_masks[v]
        return members(acc)

    # -- comparisons -----------------------------------------------------

    def face_dims(self) -> dict[frozenset[int], int]:
        return {frozenset(iter_bits(f)): d for f, d in zip(self.faces, self.dims)}

    def labeled_arcs(self) -> set[tuple[frozenset[int], frozenset[int]]]:
        fs = [frozenset(iter_bits(f)) for f in self.faces]
        return {(fs[a], fs[b]) for a, b in self.arcs}

    def restrict(self, max_dim: int) -> "HasseDiagram":
        """Sub-diagram on the faces of dimension at most ``max_dim``."""
        out = HasseDiagram(self.n, self.inc)
        remap = {}
        for i, (f, d) in enumerate(zip(self.faces, self.dims)):
            if d <= max_dim:
                remap[i] = out.add_node(f, d)
        for a, b in self.arcs:
            if a in remap and b in remap:
                out.add_arc(remap[a], remap[b])
        out.root = remap.get(self.root)
        out.top = remap.get(self.top) if self.top is not None else None
        return out

    # -- canonical form --------------------------------------------------

    def _sort_key(self, node: int):
        return (self.dims[node], self.vertex_set(node))

    def canonical_order(self) -> list[int]:
        return sorted(range(len(self.faces)), key=self._sort_key)

    def canonical_arcs(self, order: list[int] | None = None) -> list[tuple[int, int]]:
        order = order if order is not None else self.canonical_order()
        new_id = {old: new for new, old in enumerate(order)}
        return sorted((new_id[a], new_id[b]) for a, b in self.arcs)

    def _label_fields(self, node: int, labels: str) -> list[str]:
        if labels == "vertices":
            return ["v", *map(str, self.vertex_set(node))]
        if labels == "facets":
            return ["f", *map(str, self.facet_set(node))]
        if labels == "dim":
            return []
        raise ValueError(f"unknown label mode {labels!r}; choose from {LABEL_MODES}")

    def _label_json(self, node: int, labels: str) -> dict[str, Any]:
        if labels == "vertices":
            return {"vertices": list(self.vertex_set(node))}
        if labels == "facets":
            return {"facets": list(self.facet_set(node))}
        return {}

    def to_text(self, labels: str | None = None) -> str:
        labels = labels or self.labels
        order = self.canonical_order()
        lines = [f"faces {len(self.faces)} arcs {len(self.arcs)} dim {self.dim}"]
        for new, old in enumerate(order):
            lines.append(" ".join([str(new), str(self.dims[old]),
                                   *self._label_fields(old, labels)]))
        lines.extend(f"{a} {b}" for a, b in self.canonical_arcs(order))
        return "\n".join(lines) + "\n"

    def to_json(self, labels: str | None = None) -> str:
        labels = labels or self.labels
        order = self.canonical_order()
        nodes = []
        for new, old in enumerate(order):
            entry = {"id": new, "dim": self.dims[old]}
            entry.update(self._label_json(old, labels))
            nodes.append(entry)
        doc = {
            "faces": len(self.faces),
            "arcs": len(self.arcs),
            "dim": self.dim,
            "nodes": nodes,
            "edges": [list(e) for e in self.canonical_arcs(order)],
        }
        return json.dumps(doc, indent=1) + "\n"


def diagram_from_faces(n: int, faces: Iterable[Iterable[int]], dims: Iterable[int],
                       arcs: Iterable[tuple[int, int]]) -> HasseDiagram:
    """Assemble a diagram from explicit node and arc lists."""
    d = HasseDiagram(n)
    for f, k in zip(faces, dims):
        d.add_node(to_mask(f), k)
    for a, b in arcs:
        d.add_arc(a, b)
    for i, f in enumerate(d.faces):
        if f == 0:
            d.root = i
        if f == (1 << n) - 1:
            d.top = i
    return d
