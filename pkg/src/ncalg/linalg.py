"""Gauss-Jordan elimination over Fractions (exact) or floats (with a pivot tolerance)."""
from __future__ import annotations

from fractions import Fraction


def rref(rows, tol: float = 0.0):
    """Reduced row echelon form of a list-of-lists matrix.

    Returns ``(matrix, pivot_columns)``.  With ``tol == 0`` pivots are any
    nonzero entry (exact arithmetic); otherwise the largest entry in the
    column is chosen and entries with magnitude <= tol count as zero.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        if tol == 0:
            pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        else:
            best = max(range(r, nrows), key=lambda i: abs(m[i][c]))
            pivot = best if abs(m[best][c]) > tol else None
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][c]
        m[r] = [v / lead for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def solve_affine(matrix, rhs, tol: float = 0.0):
    """Solve ``matrix @ v = rhs``.

    Returns ``(particular, kernel_basis)`` with free variables of the
    particular solution set to zero, or ``None`` when the system is
    inconsistent.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    zero = 0.0 if tol else Fraction(0)
    one = 1.0 if tol else Fraction(1)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug, tol)
    if ncols in pivots:
        return None
    if tol:
        for row in red[len(pivots):]:
            if abs(row[ncols]) > tol:
                return None
    particular = [zero] * ncols
    for r, c in enumerate(pivots):
        particular[c] = red[r][ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        kernel.append(v)
    return particular, kernel


def rank(matrix, tol: float = 0.0) -> int:
    return len(rref(matrix, tol)[1])
