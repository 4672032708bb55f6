from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedk0.cones import Cone, OrderForm, enumerate_window, facets_from_generators, idot
from gradedk0.scalars import QQ, PrimeField, QuadraticField

F2 = QuadraticField(2)
ORTHANT = Cone.rational([(1, 0), (0, 1)])
CONE_12 = Cone.rational([(1, 0), (1, 2)])
CONE_SQRT2 = Cone([(1, 0), (F2.one(), F2.sqrt_gen())], F2)

points = st.tuples(st.integers(-40, 40), st.integers(-40, 40))


def direction_present(facets, expected, field):
    """expected (as a field vector) is a positive multiple of some facet."""
    expected = [field.coerce(x) for x in expected]
    for h in facets:
        lead = next(i for i, x in enumerate(expected) if not field.is_zero(x))
        if field.is_zero(h[lead]):
            continue
        scale = h[lead] * field.inv(expected[lead])
        if field.sign(scale) > 0 and all(
            hx == ex * scale for hx, ex in zip(h, expected)
        ):
            return True
    return False


class TestFacets:
    def test_orthant(self):
        facets = ORTHANT.facets
        assert len(facets) == 2
        assert direction_present(facets, (1, 0), QQ)
        assert direction_present(facets, (0, 1), QQ)

    def test_cone_12(self):
        # inward perpendiculars checked on both generators:
        # (0,1).(1,0) = 0, (0,1).(1,2) = 2; (2,-1).(1,0) = 2, (2,-1).(1,2) = 0
        facets = CONE_12.facets
        assert len(facets) == 2
        assert direction_present(facets, (0, 1), QQ)
        assert direction_present(facets, (2, -1), QQ)

    def test_cone_sqrt2(self):
        # same construction in Q(sqrt 2): normals y >= 0 and sqrt(2) x - y >= 0
        facets = CONE_SQRT2.facets
        assert len(facets) == 2
        assert direction_present(facets, (0, 1), F2)
        assert direction_present(
            facets, (F2.sqrt_gen(), F2.from_int(-1)), F2
        )

    def test_not_full_dimensional(self):
        with pytest.raises(ValueError):
            facets_from_generators([(1, 1)], QQ)

    def test_quadratic_high_dimension_unsupported(self):
        with pytest.raises(ValueError):
            facets_from_generators(
                [(F2.one(), F2.zero(), F2.zero())] * 3, F2
            )

    def test_generators_satisfy_facets(self):
        for cone in (ORTHANT, CONE_12, CONE_SQRT2):
            for g in cone.generators:
                assert cone.contains(g)

    def test_three_dimensional_orthant(self):
        cone = Cone.rational([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert len(cone.facets) == 3
        for unit in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
            assert direction_present(cone.facets, unit, QQ)
        pointed, order = cone.is_pointed()
        assert pointed and order.gamma0 == (1, 1, 1)

    def test_three_dimensional_pyramid(self):
        # cone over a square: four facets, each spanned by two adjacent rays;
        # the facet through (1,0,1) and (0,1,1) solves a+c = b+c = 0
        gens = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
        cone = Cone.rational(gens)
        facets = cone.facets
        assert len(facets) == 4
        for h in [(-1, -1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, 1)]:
            assert direction_present(facets, h, QQ)
        pointed, order = cone.is_pointed()
        assert pointed
        for g in gens:
            assert idot(order.gamma0, g) > 0
        assert cone.contains((0, 0, 5))
        assert not cone.contains((2, 0, 1))

    def test_one_dimensional_cone(self):
        cone = Cone.rational([(3,)])
        assert cone.facets == ((Fraction(1),),)
        pointed, order = cone.is_pointed()
        assert pointed and order.gamma0 == (1,)
        assert cone.contains((7,)) and not cone.contains((-1,))


class TestConeConstruction:
    def test_zero_generator_rejected(self):
        with pytest.raises(ValueError):
            Cone.rational([(0, 0), (1, 0)])

    def test_unordered_scalars_rejected(self):
        with pytest.raises(ValueError):
            Cone([(1, 0)], PrimeField(7))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Cone.rational([(1, 0), (1,)])


class TestPointedness:
    def test_orthant(self):
        pointed, order = ORTHANT.is_pointed()
        assert pointed and order.gamma0 == (1, 1)

    def test_line_not_pointed(self):
        cone = Cone.rational([(1, 0), (-1, 0)])
        pointed, order = cone.is_pointed()
        assert not pointed and order is None
        x, y = cone.opposite_pair()
        assert tuple(-c for c in x) == tuple(y)
        assert any(c != 0 for c in x)

    def test_half_plane_not_pointed(self):
        cone = Cone.rational([(1, 0), (-1, 0), (0, 1)])
        pointed, _ = cone.is_pointed()
        assert not pointed

    def test_quadratic_cone(self):
        pointed, order = CONE_SQRT2.is_pointed()
        assert pointed
        assert order.gamma0 == (1, 0)
        # witness is strictly positive on the generators, exactly
        for g in CONE_SQRT2.generators:
            acc = F2.zero()
            for w, x in zip(order.gamma0, g):
                acc = acc + x * w
            assert acc.sign() > 0

    def test_single_ray_pointed(self):
        cone = Cone.rational([(1, 1)])
        pointed, order = cone.is_pointed()
        assert pointed
        assert idot(order.gamma0, (1, 1)) > 0

    def test_witness_strictly_positive_always(self):
        for cone in (ORTHANT, CONE_12, CONE_SQRT2):
            pointed, order = cone.is_pointed()
            assert pointed
            for g in cone.generators:
                acc = cone.field.zero()
                for w, x in zip(order.gamma0, g):
                    acc = acc + x * w
                assert cone.field.sign(acc) > 0


class TestFullDimensional:
    def test_examples(self):
        assert ORTHANT.is_full_dimensional()
        assert not Cone.rational([(1, 1)]).is_full_dimensional()
        # determinant of ((1,0),(1,2)) is 2, nonzero
        assert CONE_12.is_full_dimensional()


class TestContains:
    def test_examples(self):
        # (2,3): 3 >= 0 and 2*2 - 3 = 1 >= 0
        assert CONE_12.contains((2, 3))
        # (0,1): 2*0 - 1 < 0
        assert not CONE_12.contains((0, 1))
        assert CONE_12.contains((0, 0))
        assert ORTHANT.contains((0, 0))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            ORTHANT.contains((1, 2, 3))


class TestCompare:
    ORDER = OrderForm((2, 3))

    def test_examples(self):
        assert self.ORDER.compare((1, 0), (0, 1)) == -1
        # tie 6 = 6 broken by ascending lex: (0,2) < (3,0)
        assert self.ORDER.compare((3, 0), (0, 2)) == 1
        assert self.ORDER.compare((4, -1), (4, -1)) == 0

    @given(points, points)
    def test_trichotomy(self, a, b):
        c1, c2 = self.ORDER.compare(a, b), self.ORDER.compare(b, a)
        assert c1 == -c2
        assert (c1 == 0) == (a == b)

    @given(points, points, points)
    def test_transitive(self, a, b, c):
        if self.ORDER.compare(a, b) <= 0 and self.ORDER.compare(b, c) <= 0:
            assert self.ORDER.compare(a, c) <= 0

    @given(points, points, points)
    def test_translation_invariant(self, a, b, c):
        shifted = self.ORDER.compare(
            tuple(x + y for x, y in zip(a, c)), tuple(x + y for x, y in zip(b, c))
        )
        assert self.ORDER.compare(a, b) == shifted


def oracle_window(member, gamma, base, bound, radius):
    """Independent brute-force box scan; member tests cone membership of x-base."""
    out = []
    for x in product(*[range(b - radius, b + radius + 1) for b in base]):
        if idot(gamma, x) <= bound and member(tuple(p - q for p, q in zip(x, base))):
            out.append(x)
    return set(out)


def in_orthant(d):
    return d[0] >= 0 and d[1] >= 0


def in_cone_12(d):
    return d[1] >= 0 and 2 * d[0] - d[1] >= 0


def in_cone_sqrt2(d):
    # y >= 0 and sqrt(2) x >= y, exactly: x >= 0 and y^2 <= 2 x^2
    return d[1] >= 0 and d[0] >= 0 and d[1] * d[1] <= 2 * d[0] * d[0]


class TestEnumerateWindow:
    def test_orthant_example(self):
        order = OrderForm((2, 3))
        got = enumerate_window(order, ORTHANT, (0, 0), 5)
        assert got == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]
        assert set(got) == oracle_window(in_orthant, (2, 3), (0, 0), 5, 8)

    def test_sqrt2_example(self):
        order = OrderForm((1, 0))
        got = enumerate_window(order, CONE_SQRT2, (0, 0), 2)
        assert got == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
        assert set(got) == oracle_window(in_cone_sqrt2, (1, 0), (0, 0), 2, 6)

    def test_empty_window(self):
        order = OrderForm((2, 3))
        assert enumerate_window(order, ORTHANT, (1, 1), 0) == []

    def test_matches_oracle_and_sorted(self):
        import random

        rng = random.Random(23)
        cases = [
            (ORTHANT, OrderForm((2, 3)), in_orthant),
            (CONE_12, OrderForm((1, 1)), in_cone_12),
            (CONE_SQRT2, OrderForm((1, 0)), in_cone_sqrt2),
        ]
        for cone, order, member in cases:
            for _ in range(10):
                base = (rng.randint(-3, 3), rng.randint(-3, 3))
                bound = rng.randint(-2, 10)
                got = enumerate_window(order, cone, base, bound)
                radius = 4 * (abs(bound) + sum(abs(b) for b in base) + 2)
                assert set(got) == oracle_window(
                    member, order.gamma0, base, bound, radius
                )
                for p in got:
                    assert all(abs(x - b) <= radius for x, b in zip(p, base))
                for a, b in zip(got, got[1:]):
                    assert order.compare(a, b) < 0

    def test_unbounded_slice_rejected(self):
        order = OrderForm((1, -1))
        with pytest.raises(ValueError):
            enumerate_window(order, ORTHANT, (0, 0), 5)

    def test_base_affects_degrees(self):
        order = OrderForm((1, 1))
        got = enumerate_window(order, ORTHANT, (1, 1), 3)
        # gamma ties at 3 broken by ascending lex: (1,2) before (2,1)
        assert got == [(1, 1), (1, 2), (2, 1)]


class TestInteriorVector:
    def test_orthant(self):
        assert ORTHANT.interior_vector() == (1, 1)

    def test_cone_12(self):
        v = CONE_12.interior_vector()
        assert CONE_12.contains_strictly(v)
        assert v == (1, 1)

    def test_cone_sqrt2(self):
        v = CONE_SQRT2.interior_vector()
        assert CONE_SQRT2.contains_strictly(v)

    def test_requires_pointed_full_dim(self):
        with pytest.raises(ValueError):
            Cone.rational([(1, 0), (-1, 0), (0, 1)]).interior_vector()
        with pytest.raises(ValueError):
            Cone.rational([(1, 1)]).interior_vector()
