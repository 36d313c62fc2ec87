"""Exact linear algebra over the rational-function field.

Everything is deterministic: pivots are chosen as the first nonzero
entry in column order, never by magnitude (there is no rounding to
fight).  Underdetermined systems pin every free variable to zero, so a
solvable system always returns the same representative solution.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RatFunc


def _rref(rows: list[list[RatFunc]]) -> tuple[list[list[RatFunc]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [entry * inv for entry in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def solve_linear(matrix: list[list[RatFunc]],
                 rhs: list[RatFunc]) -> list[RatFunc] | None:
    """Solve matrix * x = rhs over Q(var); None when inconsistent.

    Free variables are set to zero, so the returned solution is the
    unique echelon representative.
    """
    if len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side sizes differ")
    if not matrix:
        return []
    ncols = len(matrix[0])
    if any(len(row) != ncols for row in matrix):
        raise ValueError("ragged matrix")
    var = rhs[0].var if rhs else matrix[0][0].var
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = _rref(augmented)
    if ncols in pivots:
        return None   # pivot in the rhs column: inconsistent
    solution = [RatFunc.zero(var) for _ in range(ncols)]
    for row, col in zip(reduced, pivots):
        solution[col] = row[ncols]
    return solution


def nullspace(matrix: list[list[RatFunc]], var: str) -> list[list[RatFunc]]:
    """Basis of the right nullspace, one vector per free column.

    Each basis vector has a single free variable set to one and the
    others to zero, in ascending free-column order.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    reduced, pivots = _rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [RatFunc.zero(var) for _ in range(ncols)]
        vec[free] = RatFunc.one(var)
        for row, col in zip(reduced, pivots):
            vec[col] = -row[free]
        basis.append(vec)
    return basis


def det_fractions(matrix: list[list[Fraction]]) -> Fraction:
    """Determinant of a square Fraction matrix by exact elimination."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix is not square")
    mat = [list(row) for row in matrix]
    det = Fraction(1)
    for col in range(size):
        pivot_row = None
        for i in range(col, size):
            if mat[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            det = -det
        pivot = mat[col][col]
        det *= pivot
        for i in range(col + 1, size):
            if mat[i][col] != 0:
                factor = mat[i][col] / pivot
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[col])]
    return det
