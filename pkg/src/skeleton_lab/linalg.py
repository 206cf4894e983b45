"""Exact rank computations over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class RationalMatrix:
    """Dense matrix of exact rationals.

    >>> RationalMatrix([[1, 2], [2, 4]]).rank()
    1
    """

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [tuple(Fraction(x) for x in row) for row in rows]
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.n_rows = len(self.rows)
        self.n_cols = widths.pop() if widths else 0

    def integer_rows(self) -> list[list[int]]:
        """Each row scaled by the lcm of its denominators."""
        out = []
        for row in self.rows:
            scale = lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * scale) for x in row])
        return out

    def rank(self) -> int:
        """Fraction-free (Bareiss) elimination on the integer-scaled rows."""
        a = self.integer_rows()
        n_rows, n_cols = self.n_rows, self.n_cols
        rank = 0
        prev = 1
        for col in range(n_cols):
            if rank == n_rows:
                break
            pivot = next((r for r in range(rank, n_rows) if a[r][col] != 0), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            p = a[rank][col]
            for r in range(rank + 1, n_rows):
                factor = a[r][col]
                row = a[r]
                base = a[rank]
                for c in range(col, n_cols):
                    # exact by Sylvester's identity
                    row[c] = (p * row[c] - factor * base[c]) // prev
            prev = p
            rank += 1
        return rank


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    base = [Fraction(x) for x in points[0]]
    diffs = [[Fraction(x) - b for x, b in zip(p, base)] for p in points[1:]]
    if not diffs or not base:
        return 0
    return RationalMatrix(diffs).rank()
