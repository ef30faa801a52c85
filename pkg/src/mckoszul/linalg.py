"""Exact Gaussian elimination over the rationals.

Matrices are lists of lists of Fraction.  Everything here is dense and
small; the algebras this library works with have a few dozen basis
elements at most, so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def copy_matrix(m: Matrix) -> Matrix:
    return [row[:] for row in m]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    a = copy_matrix(m)
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for i in range(r, n_rows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {x : m @ x = 0}, one vector per free column."""
    if not m:
        return []
    n_cols = len(m[0])
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(m: Matrix, b: list[Fraction]) -> list[Fraction] | None:
    """One solution of m @ x = b, or None if inconsistent."""
    if not m:
        return [] if all(x == 0 for x in b) else None
    n_cols = len(m[0])
    aug = [row[:] + [bv] for row, bv in zip(m, b)]
    r, pivots = rref(aug)
    for i in range(len(r)):
        if all(x == 0 for x in r[i][:n_cols]) and r[i][n_cols] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for i, pc in enumerate(pivots):
        if pc == n_cols:
            return None
        x[pc] = r[i][n_cols]
    return x


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        for j in range(m):
            s = Fraction(0)
            for t in range(k):
                if a[i][t] != 0 and b[t][j] != 0:
                    s += a[i][t] * b[t][j]
            out[i][j] = s
    return out


def row_space_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Canonical (RREF) basis of the span of the given row vectors."""
    rows = [r for r in rows if any(x != 0 for x in r)]
    if not rows:
        return []
    r, pivots = rref(rows)
    return [r[i] for i in range(len(pivots))]


def in_span(rows: list[list[Fraction]], v: list[Fraction]) -> bool:
    before = len(row_space_basis(rows))
    after = len(row_space_basis(rows + [v]))
    return before == after


def coordinates_in_span(rows: list[list[Fraction]], v: list[Fraction]) -> list[Fraction] | None:
    """Coefficients c with sum(c_i * rows[i]) = v, or None if v is outside the span."""
    if not rows:
        return [] if all(x == 0 for x in v) else None
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(len(v))]
    return solve(cols, v)


def extend_to_basis(inner: list[list[Fraction]], outer: list[list[Fraction]]) -> list[list[Fraction]]:
    """Vectors from `outer` extending a basis of span(inner) to one of span(outer).

    Both arguments are lists of row vectors; `inner` must span a subspace of
    span(outer).  Returns the chosen complement vectors (a subset of outer).
    """
    current = [r[:] for r in inner]
    chosen = []
    base_rank = len(row_space_basis(current))
    for v in outer:
        if len(row_space_basis(current + [v])) > base_rank:
            current.append(v)
            chosen.append(v)
            base_rank += 1
    return chosen
