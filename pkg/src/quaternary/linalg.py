"""Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["rank", "independent_rows", "solve_square", "SingularMatrixError"]


class SingularMatrixError(ArithmeticError):
    pass


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [list(r) for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = next((r for r in rows if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        inv = 1 / pivot[col]
        pivot = [x * inv for x in pivot]
        rows = [
            [x - r[col] * p for x, p in zip(r, pivot)] if r[col] else r
            for r in rows
        ]
        out.append(pivot)
        col += 1
    return out


def rank(matrix: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in r] for r in matrix]
    return len(_echelon(rows)) if rows else 0


def independent_rows(matrix: Sequence[Sequence]) -> list[int]:
    """Indices of the first maximal independent set of rows, scanning top down."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for i, r in enumerate(matrix):
        cand = basis + [[Fraction(x) for x in r]]
        if len(_echelon(cand)) > len(basis):
            basis = cand
            chosen.append(i)
    return chosen


def solve_square(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a x = b for square, nonsingular a, exactly."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
