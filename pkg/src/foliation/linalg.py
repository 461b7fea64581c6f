"""Exact linear algebra over any exact field scalar (Fraction or field element).

Scalars must support +, -, *, /, equality with 0-like elements produced by
``x * 0``, and truthiness (nonzero). Matrices are lists of row lists.
"""

from __future__ import annotations

from fractions import Fraction


def _zero_like(x):
    return x * 0


def rank(matrix) -> int:
    """Rank by fraction-preserving Gaussian elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / pv
                for j in range(col, ncols):
                    rows[i][j] = rows[i][j] - factor * rows[r][j]
        r += 1
        if r == len(rows):
            break
    return r


def solve(matrix, rhs):
    """One solution x of matrix @ x = rhs, or None when inconsistent.

    Free variables are set to zero. matrix is m x n, rhs length m.
    """
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [list(matrix[i]) + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, m):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n]:
            return None
    zero = _zero_like(rows[0][n]) if m else Fraction(0)
    x = [zero] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return x


def in_span(vectors, target):
    """Coefficients expressing target in the span of vectors, or None."""
    if not vectors:
        return None if any(target) else []
    matrix = [[vectors[j][i] for j in range(len(vectors))] for i in range(len(target))]
    return solve(matrix, list(target))


def nullspace(matrix):
    """Basis vectors of the kernel of matrix, one per free column.

    An all-zero matrix over exotic scalars falls back to Fraction ones for
    the basis entries.
    """
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [list(r) for r in matrix]
    one = Fraction(1)
    for row in rows:
        for x in row:
            if x:
                one = x / x
                break
        else:
            continue
        break
    pivots = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, m):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    zero = _zero_like(one)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [zero] * n
        v[free] = one
        for i, col in enumerate(pivots):
            v[col] = -rows[i][free]
        basis.append(v)
    return basis


def independent_subset(vectors) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily from the left."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        if any(v) and rank([vectors[j] for j in chosen] + [v]) == len(chosen) + 1:
            chosen.append(i)
    return chosen


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j]) for j in range(m)]
        for i in range(n)
    ]


def mat_vec(a, v):
    return [sum((a[i][t] * v[t] for t in range(1, len(v))), a[i][0] * v[0]) for i in range(len(a))]


def identity_like(n, one):
    zero = _zero_like(one)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def charpoly(matrix, one):
    """Monic characteristic polynomial coefficients (ascending) of an n x n
    matrix by the Faddeev-LeVerrier recurrence; exact for any field scalar."""
    n = len(matrix)
    zero = _zero_like(one)
    coeffs = [zero] * n + [one]  # ascending: x^n + c_{n-1} x^{n-1} + ...
    m = identity_like(n, one)
    c = one
    for k in range(1, n + 1):
        am = mat_mul(matrix, m)
        tr = am[0][0]
        for i in range(1, n):
            tr = tr + am[i][i]
        c = tr / (-k)
        coeffs[n - k] = c
        m = [[am[i][j] + (c if i == j else zero) for j in range(n)] for i in range(n)]
    return coeffs


def det(matrix, one):
    cp = charpoly(matrix, one)
    d = cp[0]
    if len(matrix) % 2:
        d = -d
    return d
