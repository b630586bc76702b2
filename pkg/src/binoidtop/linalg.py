"""Exact integer and rational linear algebra.

Everything here works with Python ints and ``fractions.Fraction`` — no
floating point and no fixed-width overflow.  The Smith normal form keeps
entries small by always pivoting on a minimal-absolute-value entry, with
lexicographic position tie-breaking so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a or not b:
        return [[]] * len(a)
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def determinant(a):
    """Bareiss fraction-free determinant (exact, for modest sizes)."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
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
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass
class SNFResult:
    """D = P * A * Q with P, Q unimodular; diagonal of D is the invariant chain."""

    d: list
    p: list
    q: list
    qinv: list

    @property
    def diagonal(self):
        out = []
        for i in range(min(len(self.d), len(self.d[0]) if self.d else 0)):
            out.append(self.d[i][i])
        return out

    @property
    def rank(self):
        return sum(1 for x in self.diagonal if x != 0)

    def invariant_factors(self):
        return [x for x in self.diagonal if x > 1]


def smith_normal_form(matrix) -> SNFResult:
    """Smith normal form over the integers.

    Pivot selection: minimal nonzero absolute value in the working
    submatrix, ties broken by (row, col) position.  The returned diagonal
    is non-negative and satisfies d1 | d2 | ... .
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [list(row) for row in matrix]
    p = identity_matrix(m)
    q = identity_matrix(n)
    qinv = identity_matrix(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]
        qinv[i], qinv[j] = qinv[j], qinv[i]

    def add_col(i, j, c):
        # col_i += c * col_j; qinv gets the inverse op on rows
        for row in a:
            row[i] += c * row[j]
        for row in q:
            row[i] += c * row[j]
        qinv[j] = [x - c * y for x, y in zip(qinv[j], qinv[i])]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    t = 0
    while t < min(m, n):
        piv = find_pivot(t)
        if piv is None:
            break
        _, pi, pj = piv
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # Clear column t below the pivot.
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            # Clear row t right of the pivot.
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                piv = find_pivot(t)
                _, pi, pj = piv
                if pi != t:
                    swap_rows(t, pi)
                if pj != t:
                    swap_cols(t, pj)
                continue
            # Enforce divisibility of the remaining submatrix by the pivot.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            p[i] = [-x for x in p[i]]
    return SNFResult(a, p, q, qinv)


def integer_rank(matrix):
    if not matrix or not matrix[0]:
        return 0
    return smith_normal_form(matrix).rank


def lp_feasible_point(a_rows, b):
    """Exact feasibility for {x >= 0 : A x = b}; returns a point or None.

    Phase-one simplex with Bland's rule over Fractions.  Sized for the
    tiny certificate systems used by the structure module.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    a = [[Fraction(x) for x in row] for row in a_rows]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            a[i] = [-x for x in a[i]]
            rhs[i] = -rhs[i]

    # Tableau with artificial variables n..n+m-1 as the initial basis.
    width = n + m
    t = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = list(range(n, n + m))
    # Cost row for minimizing the artificial sum, already priced out.
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            cost[j] -= t[i][j]
    for j in range(n, n + m):
        cost[j] += 1

    while True:
        enter = None
        for j in range(width):
            if cost[j] < 0:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if t[i][enter] > 0:
                ratio = t[i][width] / t[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave is None:
            return None  # unbounded phase-one cannot happen; defensive
        piv = t[leave][enter]
        t[leave] = [x / piv for x in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter]:
                f = t[i][enter]
                t[i] = [x - f * y for x, y in zip(t[i], t[leave])]
        if cost[enter]:
            f = cost[enter]
            cost = [x - f * y for x, y in zip(cost, t[leave])]
        basis[leave] = enter

    residual = sum((t[i][width] for i in range(m) if basis[i] >= n), Fraction(0))
    if residual != 0:
        return None
    point = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            point[basis[i]] = t[i][width]
    return point
