"""Index assignments: the unit of the brute-force moment sum.

An assignment is a sorted tuple of d rows; each row is either the
diagonal index (v, v, ..., v) or a hyperedge rooted at one of its
vertices with a chosen permutation of the remaining k-1 vertices.
These are exactly the rows that can contribute a nonzero entry product
for the weighted degree/adjacency tensor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .errors import HypergraphError


@dataclass(frozen=True, slots=True)
class DiagonalRow:
    vertex: int

    @property
    def root(self) -> int:
        return self.vertex


@dataclass(frozen=True, slots=True)
class EdgeRow:
    edge: int
    root: int
    perm: int = 0  # which of the (k-1)! orderings of the non-root vertices


Row = DiagonalRow | EdgeRow


@dataclass(frozen=True, slots=True)
class Assignment:
    rows: tuple[Row, ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def validate(self, h) -> None:
        prev = None
        for row in self.rows:
            if isinstance(row, DiagonalRow):
                if not 0 <= row.vertex < h.n:
                    raise HypergraphError(f"diagonal row vertex {row.vertex} out of range")
            else:
                if not 0 <= row.edge < h.m:
                    raise HypergraphError(f"edge index {row.edge} out of range")
                if row.root not in h.edges[row.edge]:
                    raise HypergraphError(
                        f"root {row.root} not in edge {h.edges[row.edge]}"
                    )
                if not 0 <= row.perm < math.factorial(h.k - 1):
                    raise HypergraphError(f"permutation id {row.perm} out of range")
            if prev is not None and row.root < prev:
                raise HypergraphError("rows must be sorted by root index")
            prev = row.root

    def word(self, row: Row, h) -> tuple[int, ...]:
        """The full index tuple (root, then k-1 trailing indices) of a row."""
        if isinstance(row, DiagonalRow):
            return (row.vertex,) * h.k
        others = tuple(v for v in h.edges[row.edge] if v != row.root)
        perm = list(permutations(others))[row.perm]
        return (row.root,) + perm
