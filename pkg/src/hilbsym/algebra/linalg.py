"""Small exact dense linear algebra over any field-like scalars (QQ, RatFunc).

Sizes here are partition counts (<= 22 for n <= 8), so plain fraction-ful
Gaussian elimination is fine.
"""

from __future__ import annotations


def mat_vec(A, v):
    return [sum_nonempty([A[i][j] * v[j] for j in range(len(v))]) for i in range(len(A))]


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        [sum_nonempty([A[i][k] * B[k][j] for k in range(m)]) for j in range(p)]
        for i in range(n)
    ]


def sum_nonempty(xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = acc + x
    return acc


def solve(A, b):
    """Solve A x = b exactly; A square, entries invertible-field scalars."""
    n = len(A)
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix in exact solve")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


def inverse(A):
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix in exact inverse")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [row[n:] for row in M]
