"""Face tree: a trie over canonical spanning sets.

Every face S is keyed by C(S), the lexicographically smallest subset of S
whose closure is S. Arc labels increase along root-to-node paths, so walking
C(S) from the root either finds the face's diagram node or builds the path
to it. Nodes on a fresh path that do not yet have a diagram node hold
``None`` until the face they stand for is reached.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .bits import to_mask
from .closure import BitsetKernel
from .incidence import IncidenceStructure

Ref = TypeVar("Ref")


class TreeNode:
    __slots__ = ("children", "ref", "depth")

    def __init__(self, depth: int = 0):
        self.children: dict[int, TreeNode] = {}
        self.ref = None
        self.depth = depth


class FaceTree:
    """Trie with increasing integer labels. The root stands for the empty face."""

    def __init__(self) -> None:
        self.root = TreeNode()
        self.size = 1
        self.depth = 0

    def locate_or_create(self, key: Sequence[int],
                         make_node: Callable[[], Ref]) -> tuple[Ref, bool]:
        node = self.root
        for label in key:
            child = node.children.get(label)
            if child is None:
                child = TreeNode(node.depth + 1)
                node.children[label] = child
                self.size += 1
                if child.depth > self.depth:
                    self.depth = child.depth
            node = child
        if node.ref is None:
            node.ref = make_node()
            return node.ref, True
        return node.ref, False

    def find(self, key: Sequence[int]):
        node = self.root
        for label in key:
            node = node.children.get(label)
            if node is None:
                return None
        return node.ref

    def walk(self) -> Iterator[tuple[tuple[int, ...], TreeNode]]:
        """Depth-first traversal yielding (path labels, node)."""
        stack = [((), self.root)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for label, child in node.children.items():
                stack.append((path + (label,), child))


def spanning_key(kernel, S: int) -> list[int]:
    """C(S) for a closed, nonempty vertex mask, via one running intersection.

    Scans the vertices of S in increasing order and keeps those that shrink
    Facets({s1}) & ... & Facets({si}). The first two vertices of a closed
    set always shrink it, so the |S| <= 2 case falls out of the same loop.
    """
    meet = kernel.meet_vertex
    running = kernel.all_facets
    key = []
    while S:
        low = S & -S
        s = low.bit_length() - 1
        S ^= low
        nxt = meet(running, s)
        if nxt != running:
            key.append(s)
            running = nxt
    return key


def canonical_spanning_set(inc: IncidenceStructure, S: Iterable[int],
                           kernel=None) -> tuple[int, ...]:
    """Lexicographically smallest generating subset of the closed set ``S``."""
    S = set(S)
    if not S:
        raise ValueError("canonical spanning set of the empty face is not defined")
    if len(S) <= 2:
        return tuple(sorted(S))
    kernel = kernel or BitsetKernel(inc)
    if __debug__:
        mask = to_mask(S)
        if kernel.closure(mask) != mask:
            raise ValueError(f"{sorted(S)} is not closed")
    return tuple(spanning_key(kernel, to_mask(S)))


def locate_or_create(tree: FaceTree, inc: IncidenceStructure, S: Iterable[int],
                     make_node: Callable[[], Ref], kernel=None) -> tuple[Ref, bool]:
    return tree.locate_or_create(canonical_spanning_set(inc, S, kernel), make_node)
