"""Exact Gaussian elimination over :class:`~suqconn.scalars.Scalar`.

Matrices are lists of rows; entries are anything :meth:`Scalar.coerce` accepts.
The sizes involved here are tiny (a handful of rows) except for the Haar
oracle, which uses its own sparse solver in :mod:`suqconn.haar`.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar

__all__ = ["rref", "rank", "inverse", "solve", "nullspace", "SingularMatrixError"]


class SingularMatrixError(ArithmeticError):
    pass


def _coerce(rows):
    return [[Scalar.coerce(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form and pivot columns."""
    A = _coerce(rows)
    if not A:
        return A, []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if not A[i][c].is_zero()), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and not A[i][c].is_zero():
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def inverse(rows):
    n = len(rows)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(_coerce(rows))]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in R]


def solve(rows, rhs):
    """Solve ``A x = b``; raises when inconsistent, returns one solution otherwise."""
    n = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(_coerce(rows), rhs)]
    R, piv = rref(aug)
    if n in piv:
        raise SingularMatrixError("inconsistent system")
    x = [ZERO] * n
    for i, c in enumerate(piv):
        x[c] = R[i][n]
    return x


def nullspace(rows):
    """Basis of ``{x : A x = 0}``."""
    R, piv = rref(rows)
    n = len(R[0]) if R else 0
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(piv):
            v[c] = -R[i][f]
        basis.append(v)
    return basis
