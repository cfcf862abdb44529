"""Exact dense linear algebra over Q(i).

Matrices are lists of rows of :class:`GaussianRational`. Elimination is
Gauss-Jordan with the first nonzero entry in each column as pivot, so the
output is deterministic.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrix
from .field import GR, ONE, ZERO


def zeros(n: int, m: int | None = None) -> list[list[GR]]:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> list[list[GR]]:
    out = zeros(n)
    for i in range(n):
        out[i][i] = ONE
    return out


def as_matrix(rows) -> list[list[GR]]:
    return [[GR.coerce(x) for x in row] for row in rows]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([sum((a * col[k] for k, a in nz), ZERO) for col in Bt])
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = ZERO
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def mat_add(A, B, scale=ONE):
    return [[a + scale * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale_matrix(A, c):
    return [[c * a for a in row] for row in A]


def trace(M):
    return sum((M[i][i] for i in range(len(M))), ZERO)


def rref(M, ncols: int | None = None):
    """Reduced row echelon form of a copy of ``M``. Returns ``(R, pivot_columns)``."""
    R = [list(row) for row in M]
    if not R:
        return R, []
    ncols = len(R[0]) if ncols is None else ncols
    pivots = []
    r = 0
    nrows = len(R)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = R[r][c].inverse()
        R[r] = [x * inv if x else x for x in R[r]]
        prow = R[r]
        nz = [(k, x) for k, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r:
                f = R[i][c]
                if f:
                    row = R[i]
                    for k, x in nz:
                        row[k] = row[k] - f * x
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None) -> list[list[GR]]:
    """Basis of {v : M v = 0}; one vector per free column, that column set to 1."""
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [[ONE if k == j else ZERO for k in range(ncols)] for j in range(ncols)]
    R, pivots = rref(M, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -R[row_idx][free]
        basis.append(v)
    return basis


def solve(M, b):
    """One solution of ``M x = b`` (free variables zero), or ``None`` if inconsistent."""
    ncols = len(M[0]) if M else 0
    aug = [list(row) + [GR.coerce(bi)] for row, bi in zip(M, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row_idx, pc in enumerate(pivots):
        x[pc] = R[row_idx][ncols]
    return x


def inverse(M):
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(n))]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def is_zero_matrix(M) -> bool:
    return not any(x for row in M for x in row)
