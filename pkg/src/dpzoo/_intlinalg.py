"""Exact integer/rational linear algebra on tiny matrices.

Everything here operates on plain lists of Python ints (or Fractions) and is
written for matrices of size at most ~10, which is all the Picard-lattice
computations ever need.  No floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def determinant(mat: Matrix) -> int:
    """Integer determinant via fraction-free Gaussian elimination (Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (s, d, t) with s*a*t = d, s and t unimodular, d diagonal.

    The diagonal entries are nonnegative and satisfy d[0] | d[1] | ... .
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [row[:] for row in a]
    s = identity(rows)
    t = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        s[i], s[j] = s[j], s[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        for j in range(cols):
            d[dst][j] += q * d[src][j]
        for j in range(rows):
            s[dst][j] += q * s[src][j]

    def add_col(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in t:
            row[dst] += q * row[src]

    def negate_row(i):
        d[i] = [-x for x in d[i]]
        s[i] = [-x for x in s[i]]

    k = 0
    while k < rows and k < cols:
        # Find a nonzero pivot.
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if d[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        # Euclidean passes until the pivot divides its row and column.
        while True:
            changed = False
            for i in range(k + 1, rows):
                if d[i][k] != 0:
                    q = d[i][k] // d[k][k]
                    add_row(i, k, -q)
                    if d[i][k] != 0:
                        swap_rows(i, k)
                    changed = True
            for j in range(k + 1, cols):
                if d[k][j] != 0:
                    q = d[k][j] // d[k][k]
                    add_col(j, k, -q)
                    if d[k][j] != 0:
                        swap_cols(j, k)
                    changed = True
            if not changed:
                break
        if d[k][k] < 0:
            negate_row(k)
        k += 1

    # Enforce the divisibility chain d[i] | d[i+1].
    m = min(rows, cols)
    again = True
    while again:
        again = False
        for i in range(m - 1):
            x, y = d[i][i], d[i + 1][i + 1]
            if y % x if x else y:
                # Fold d[i+1][i+1] into position (i, i) and re-reduce.
                add_col(i, i + 1, 1)
                while True:
                    q = d[i + 1][i] // d[i][i]
                    add_row(i + 1, i, -q)
                    if d[i + 1][i] == 0:
                        break
                    swap_rows(i, i + 1)
                q = d[i][i + 1] // d[i][i]
                add_col(i + 1, i, -q)
                if d[i][i] < 0:
                    negate_row(i)
                if d[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                again = True
    return s, d, t


def solve_integer(a: Matrix, b: list[int]) -> list[int] | None:
    """One integer solution x of a @ x = b, or None if none exists."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    s, d, t = smith_normal_form(a)
    y = mat_vec(s, b)
    z = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if y[i] != 0:
                return None
        else:
            if y[i] % di != 0:
                return None
            if i < cols:
                z[i] = y[i] // di
    return mat_vec(t, z)


def solve_rational(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve a square nonsingular rational system by Gaussian elimination."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]
