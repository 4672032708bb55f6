"""Exact dense linear algebra over a field descriptor.

Matrices are lists of lists of field elements; nothing here mutates its
arguments.  Only desk-scale sizes appear in this package, so plain Gaussian
elimination with exact division is the right tool.
"""

from __future__ import annotations


def mat_identity(n: int, field):
    one, zero = field.one(), field.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_zero(rows: int, cols: int, field):
    zero = field.zero()
    return [[zero for _ in range(cols)] for _ in range(rows)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(a, b, field):
    if not a or not b:
        return [[] for _ in a]
    rows, inner, cols = len(a), len(b), len(b[0])
    zero = field.zero()
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    return all(ra == rb for ra, rb in zip(a, b))


def is_idempotent(m, field) -> bool:
    return mat_eq(mat_mul(m, m, field), m)


def rank(m, field) -> int:
    """Rank by fraction-free-enough Gaussian elimination (exact division)."""
    if not m or not m[0]:
        return 0
    a = [row[:] for row in m]
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(a[i][c])), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def nullspace(m, field, cols: int):
    """Basis of {x : m x = 0} for an r x cols matrix m (rows may be empty)."""
    a = [row[:] for row in m]
    rows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(a[i][c])), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = field.inv(a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    one, zero = field.one(), field.zero()
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def solve(a, b, field):
    """One solution x of a x = b (a: rows x cols, b: rows), or None."""
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not field.is_zero(aug[i][c])), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and not field.is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if not field.is_zero(aug[i][cols]):
            return None
    x = [field.zero()] * cols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][cols]
    return x


def invert(m, field):
    """Inverse of a square matrix; raises ValueError if singular."""
    n = len(m)
    aug = [m[i][:] + mat_identity(n, field)[i] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if not field.is_zero(aug[i][c])), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and not field.is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]
