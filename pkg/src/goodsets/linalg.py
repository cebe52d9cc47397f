"""Exact Gaussian elimination over the rationals (dense, desk scale)."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence


class Echelon:
    """Row space in echelon form, keyed by pivot position.

    Vectors are lists of Fractions of a fixed length; ``reduce`` returns
    the residual after eliminating all pivots, so a vector lies in the
    span iff its residual is zero.
    """

    def __init__(self, length: int):
        self.length = length
        self.rows: Dict[int, List[Fraction]] = {}

    def reduce(self, vec: Sequence[Fraction]) -> List[Fraction]:
        v = list(vec)
        for piv in sorted(self.rows):
            if v[piv] != 0:
                row = self.rows[piv]
                f = v[piv]
                for k in range(piv, self.length):
                    v[k] -= f * row[k]
        return v

    def insert(self, vec: Sequence[Fraction]) -> bool:
        """Add a vector to the span; returns True if the rank grew."""
        v = self.reduce(vec)
        piv = next((k for k, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = Fraction(1) / v[piv]
        self.rows[piv] = [x * inv for x in v]
        return True

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    @property
    def rank(self) -> int:
        return len(self.rows)


def nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the solution space of (rows) * x = 0."""
    mat = [list(r) for r in rows if any(x != 0 for x in r)]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for prow, pcol in zip(mat, pivots):
            v[pcol] = -prow[fc]
        basis.append(v)
    return basis
