"""Vertex-facet incidence matrices.

An :class:`IncidenceStructure` stores the same 0/1 matrix three ways: sorted
row lists (vertices of each facet), sorted column lists (facets of each
vertex), and integer bit masks for both. Everything downstream reads from
these views; nothing mutates them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class IncidenceError(ValueError):
    """Malformed incidence input."""


@dataclass(frozen=True)
class Diagnostic:
    code: str
    index: int | None
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    m: int
    n: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    alpha: int
    row_masks: tuple[int, ...] = field(repr=False)
    col_masks: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], n: int) -> "IncidenceStructure":
        """Build both views from per-facet vertex lists.

        Rows may be given in any order; duplicates and out-of-range vertex
        indices raise :class:`IncidenceError`.
        """
        sorted_rows = []
        for f, row in enumerate(rows):
            r = sorted(row)
            for a, b in zip(r, r[1:]):
                if a == b:
                    raise IncidenceError(f"facet {f}: duplicate vertex {a}")
            if r and (r[0] < 0 or r[-1] >= n):
                bad = r[0] if r[0] < 0 else r[-1]
                raise IncidenceError(f"facet {f}: vertex index {bad} out of range 0..{n - 1}")
            sorted_rows.append(tuple(r))
        m = len(sorted_rows)
        if m == 0 or n <= 0:
            raise IncidenceError(f"empty incidence structure (m={m}, n={n})")

        # Filling columns facet by facet keeps every column sorted.
        cols: list[list[int]] = [[] for _ in range(n)]
        for f, r in enumerate(sorted_rows):
            for v in r:
                cols[v].append(f)
        row_masks = tuple(_mask(r) for r in sorted_rows)
        col_masks = tuple(_mask(c) for c in cols)
        alpha = sum(len(r) for r in sorted_rows)
        return cls(m, n, tuple(sorted_rows), tuple(tuple(c) for c in cols),
                   alpha, row_masks, col_masks)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "IncidenceStructure":
        """Build from a dense m x n 0/1 matrix (rows are facets)."""
        if not matrix:
            raise IncidenceError("empty matrix")
        n = len(matrix[0])
        for f, row in enumerate(matrix):
            if len(row) != n:
                raise IncidenceError(f"row {f} has length {len(row)}, expected {n}")
        return cls.from_rows(([v for v, a in enumerate(row) if a] for row in matrix), n)

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_facets(self) -> int:
        return (1 << self.m) - 1

    def to_matrix(self) -> list[list[int]]:
        out = [[0] * self.n for _ in range(self.m)]
        for f, r in enumerate(self.rows):
            for v in r:
                out[f][v] = 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))


def _mask(indices: Iterable[int]) -> int:
    value = 0
    for i in indices:
        value |= 1 << i
    return value


def parse_incidence(text: str) -> IncidenceStructure:
    """Parse the ``m n`` header format.

    '#' lines and blank lines are skipped; after the header come exactly
    ``m`` lines, one per facet, listing its 0-based vertex indices.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))
    if not lines:
        raise IncidenceError("missing header line 'm n'")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise IncidenceError(f"line {lineno}: malformed header {header!r}, expected 'm n'")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise IncidenceError(f"line {lineno}: malformed header {header!r}") from None
    if m <= 0 or n <= 0:
        raise IncidenceError(f"line {lineno}: header must have m > 0 and n > 0, got {m} {n}")

    body = lines[1:]
    if len(body) != m:
        raise IncidenceError(f"header announces {m} facets but {len(body)} facet lines follow")

    rows = []
    for f, (lineno, s) in enumerate(body):
        try:
            row = [int(tok) for tok in s.split()]
        except ValueError:
            raise IncidenceError(f"line {lineno}: non-integer token in {s!r}") from None
        if len(set(row)) != len(row):
            raise IncidenceError(f"line {lineno}: duplicate vertex in facet {f}")
        for v in row:
            if v < 0 or v >= n:
                raise IncidenceError(f"line {lineno}: vertex index {v} out of range 0..{n - 1}")
        rows.append(row)
    return IncidenceStructure.from_rows(rows, n)


def read_incidence(path: str) -> IncidenceStructure:
    with open(path, encoding="utf-8") as fh:
        return parse_incidence(fh.read())


def serialize(inc: IncidenceStructure) -> str:
    out = [f"{inc.m} {inc.n}"]
    out.extend(" ".join(map(str, r)) for r in inc.rows)
    return "\n".join(out) + "\n"


def dualize(inc: IncidenceStructure) -> IncidenceStructure:
    """Transpose: facets become vertices and vice versa."""
    return IncidenceStructure(inc.n, inc.m, inc.cols, inc.rows, inc.alpha,
                              inc.col_masks, inc.row_masks)


def validate(inc: IncidenceStructure) -> list[Diagnostic]:
    """Check necessary conditions for a polytope's incidence matrix.

    Returns an empty list when every check passes. An empty result does not
    mean the matrix comes from a polytope.
    """
    diags: list[Diagnostic] = []
    full_v = inc.all_vertices

    def vertices_of(T: int) -> int:
        acc = full_v
        f = 0
        while T:
            if T & 1:
                acc &= inc.row_masks[f]
            T >>= 1
            f += 1
        return acc

    bottom = vertices_of(inc.all_facets)
    if bottom:
        diags.append(Diagnostic(
            "empty-not-closed", None,
            f"closure of the empty set is {_members(bottom)}, not empty"))

    for v in range(inc.n):
        cl = vertices_of(inc.col_masks[v])
        if cl != 1 << v:
            diags.append(Diagnostic(
                "atom-not-closed", v,
                f"vertex {v}: closure of {{{v}}} is {_members(cl)}"))

    first_seen: dict[tuple[int, ...], int] = {}
    for f, r in enumerate(inc.rows):
        if r in first_seen:
            diags.append(Diagnostic(
                "duplicate-facet", f,
                f"facet {f} has the same vertex set as facet {first_seen[r]}"))
        else:
            first_seen[r] = f
        if len(r) == inc.n:
            diags.append(Diagnostic("full-facet", f, f"facet {f} contains every vertex"))
    return diags


def _members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]
