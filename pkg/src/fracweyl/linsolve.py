"""Exact Gauss-Jordan elimination over the rationals."""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence


def solve_linear(rows: Sequence[Dict[int, Fraction]], rhs: Sequence[Fraction],
                 ncols: int) -> Optional[List[Fraction]]:
    """Solve sum_j rows[i][j] * u_j = rhs[i].

    Rows are sparse dicts.  Returns one solution with all free variables set
    to zero, or None when the system is inconsistent."""
    if len(rows) != len(rhs):
        raise ValueError("row count and right-hand side length differ")
    mat = [[Fraction(r.get(j, 0)) for j in range(ncols)] + [Fraction(b)]
           for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    for i in range(row, len(mat)):
        if mat[i][ncols]:
            return None
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = mat[i][ncols]
    return solution
