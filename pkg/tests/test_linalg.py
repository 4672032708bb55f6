import random
from fractions import Fraction

import pytest

from gradedk0 import linalg
from gradedk0.scalars import QQ, PrimeField

F7 = PrimeField(7)


def random_invertible(field, n, rng):
    """Product of a unit lower and unit upper triangular matrix: invertible."""
    lo = linalg.mat_identity(n, field)
    up = linalg.mat_identity(n, field)
    for i in range(n):
        for j in range(n):
            if i > j:
                lo[i][j] = field.from_int(rng.randint(-3, 3))
            elif i < j:
                up[i][j] = field.from_int(rng.randint(-3, 3))
    return linalg.mat_mul(lo, up, field)


def test_rank_examples():
    assert linalg.rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]], QQ) == 1
    assert linalg.rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], QQ) == 1
    assert linalg.rank([[Fraction(1), Fraction(0)], [Fraction(1), Fraction(2)]], QQ) == 2
    assert linalg.rank([], QQ) == 0


def test_rank_of_idempotent_equals_trace_over_q():
    # over Q the trace of an idempotent equals its rank: independent oracle
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 5)
        diag_bits = [rng.randint(0, 1) for _ in range(n)]
        d = [
            [Fraction(diag_bits[i] if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        t = random_invertible(QQ, n, rng)
        t_inv = linalg.invert(t, QQ)
        e = linalg.mat_mul(t_inv, linalg.mat_mul(d, t, QQ), QQ)
        assert linalg.is_idempotent(e, QQ)
        trace = sum((e[i][i] for i in range(n)), Fraction(0))
        assert trace == sum(diag_bits)
        assert linalg.rank(e, QQ) == sum(diag_bits)


def test_rank_mod_p():
    # 2x2 matrix with determinant divisible by 7 drops rank mod 7
    m = [[F7.from_int(1), F7.from_int(3)], [F7.from_int(5), F7.from_int(1)]]
    # det = 1 - 15 = -14 = 0 mod 7
    assert linalg.rank(m, F7) == 1


def test_nullspace_and_solve():
    rng = random.Random(5)
    for _ in range(20):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]
        basis = linalg.nullspace(m, QQ, cols)
        assert linalg.rank(m, QQ) + len(basis) == cols
        for v in basis:
            image = [sum((m[i][j] * v[j] for j in range(cols)), Fraction(0)) for i in range(rows)]
            assert all(x == 0 for x in image)
        x = [Fraction(rng.randint(-2, 2)) for _ in range(cols)]
        b = [sum((m[i][j] * x[j] for j in range(cols)), Fraction(0)) for i in range(rows)]
        sol = linalg.solve(m, b, QQ)
        assert sol is not None
        back = [sum((m[i][j] * sol[j] for j in range(cols)), Fraction(0)) for i in range(rows)]
        assert back == b


def test_solve_inconsistent():
    m = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert linalg.solve(m, [Fraction(0), Fraction(1)], QQ) is None


def test_invert():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = random_invertible(QQ, n, rng)
        inv = linalg.invert(m, QQ)
        assert linalg.mat_mul(m, inv, QQ) == linalg.mat_identity(n, QQ)
    with pytest.raises(ValueError):
        linalg.invert([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], QQ)
