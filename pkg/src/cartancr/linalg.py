"""Exact dense linear algebra over the AlgNum field.

Gaussian elimination with exact pivoting; everything stays in
Q(i, sqrt2, sqrt3), so ranks and kernels are certificates, not estimates.
Matrices are lists of lists of AlgNum.
"""

from __future__ import annotations

from .numfield import AlgNum, ZERO, ONE


def zeros(rows: int, cols: int) -> list[list[AlgNum]]:
    return [[ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> list[list[AlgNum]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if aik.is_zero():
                continue
            for j in range(cols):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v)) if not a[i][j].is_zero()),
                ZERO) for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    return (len(a) == len(b) and all(len(ra) == len(rb) for ra, rb in zip(a, b))
            and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)))


def rref(matrix) -> tuple[list[list[AlgNum]], list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix) -> list[list[AlgNum]]:
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * cols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs) -> list[AlgNum]:
    """Unique solution of matrix @ x = rhs; raises on inconsistent/underdetermined."""
    cols = len(matrix[0])
    aug = [row[:] + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < cols:
        raise ValueError("underdetermined linear system")
    x = [ZERO] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def inverse(matrix) -> list[list[AlgNum]]:
    n = len(matrix)
    aug = [row[:] + identity(n)[i] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def determinant(matrix) -> AlgNum:
    m = [row[:] for row in matrix]
    n = len(m)
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inv()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
