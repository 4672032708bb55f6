import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedk0.presets import preset_ring
from gradedk0.rings import from_term_list
from gradedk0.scalars import QQ, ZZ, PrimeField, ProductRing

R1 = preset_ring("R1")
R2 = preset_ring("R2")
R2_F7 = preset_ring("R2", base=PrimeField(7))

# exponents in the orthant with small gamma value, nonzero rational coefficients
_exponents = st.tuples(st.integers(0, 5), st.integers(0, 5))
_coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=8).filter(bool)
_elems = st.dictionaries(_exponents, _coeffs, max_size=8).map(
    lambda terms: sum(
        (R1.monomial(e, c) for e, c in terms.items()), R1.zero()
    )
)


class TestArithmetic:
    def test_monoid_relation(self):
        U, V, W = R2.gen("U"), R2.gen("V"), R2.gen("W")
        assert U * W == V * V
        assert (U * W - V**2).is_zero()

    def test_commutativity_of_named_monomials(self):
        X, Y = R1.gen("X"), R1.gen("Y")
        assert X * Y == Y * X

    def test_additive_inverse(self):
        x = R1.monomial((1, 0), Fraction(2, 3)) + R1.constant(5)
        assert (x + (-1) * x).is_zero()

    def test_mixed_contexts_rejected(self):
        with pytest.raises(ValueError):
            R1.one() + R2.one()

    def test_prime_base(self):
        U, V, W = (R2_F7.gen(g) for g in "UVW")
        assert (U * W - V**2).is_zero()
        assert (7 * U).is_zero()

    def test_integer_base_arithmetic(self):
        ring = preset_ring("R2", base=ZZ)
        U, V, W = (ring.gen(g) for g in "UVW")
        elem = (U + W) ** 2 - 2 * V**2
        assert elem.graded_piece((2, 2)) == 0
        assert elem.graded_piece((2, 0)) == 1
        assert (U * W - V**2).is_zero()
        assert elem.reduce_mod_plus() == 0
        with pytest.raises(ValueError):
            ring.constant(Fraction(1, 2))

    @settings(max_examples=50)
    @given(_elems, _elems, _elems)
    def test_ring_axioms(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @settings(max_examples=50)
    @given(_elems, _elems)
    def test_support_containment(self, x, y):
        prod_support = (x * y).support()
        sums = {
            tuple(a + b for a, b in zip(e1, e2))
            for e1 in x.support()
            for e2 in y.support()
        }
        assert prod_support <= sums
        for e in prod_support:
            assert R1.cone.contains(e)


class TestGradedPiece:
    def test_examples(self):
        x = R1.constant(5) + 3 * R1.gen("X")
        assert x.graded_piece((1, 0)) == Fraction(3)
        assert x.graded_piece((0, 1)) == Fraction(0)
        assert R1.zero().graded_piece((2, 2)) == Fraction(0)

    def test_sum_of_pieces(self):
        x = R1.constant(5) + 3 * R1.gen("X") + R1.monomial((2, 1), Fraction(1, 2))
        rebuilt = sum(
            (R1.monomial(e, c) for e, c in x.terms()), R1.zero()
        )
        assert rebuilt == x


class TestReduction:
    def test_examples(self):
        assert (R1.constant(5) + R1.gen("X")).reduce_mod_plus() == Fraction(5)
        assert R1.gen("X").reduce_mod_plus() == Fraction(0)
        assert R1.zero().reduce_mod_plus() == Fraction(0)

    @settings(max_examples=50)
    @given(_elems, _elems)
    def test_ring_homomorphism(self, x, y):
        assert (x * y).reduce_mod_plus() == x.reduce_mod_plus() * y.reduce_mod_plus()
        assert (x + y).reduce_mod_plus() == x.reduce_mod_plus() + y.reduce_mod_plus()

    def test_positive_degrees_have_gamma_at_least_one(self):
        rng = random.Random(1)
        for ring in (R1, R2):
            for _ in range(50):
                e = (rng.randint(0, 4), rng.randint(0, 4))
                if not ring.cone.contains(e):
                    continue
                if any(e):
                    assert ring.order.value(e) >= 1


class TestValidation:
    def test_exponent_outside_cone(self):
        with pytest.raises(ValueError):
            R2.monomial((0, 1))
        with pytest.raises(ValueError):
            R1.monomial((-1, 0))

    def test_homogeneity_helpers(self):
        assert R1.gen("X").is_homogeneous()
        assert R1.gen("X").degree() == (1, 0)
        assert R1.zero().degree() is None
        with pytest.raises(ValueError):
            (R1.gen("X") + R1.one()).degree()

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            R1.gen("Q")


class TestSerialization:
    def test_canonical_order_and_round_trip(self):
        x = R1.monomial((2, 0), Fraction(1, 2)) + R1.constant(3) + R1.gen("Y")
        data = x.to_term_list()
        # ascending gamma order: origin, then (0,1), then (2,0)
        assert [t["exp"] for t in data] == [[0, 0], [0, 1], [2, 0]]
        assert from_term_list(R1, data) == x

    def test_duplicate_exponent_rejected(self):
        with pytest.raises(ValueError):
            from_term_list(
                R1,
                [
                    {"exp": [0, 0], "coef": "1"},
                    {"exp": [0, 0], "coef": "2"},
                ],
            )

    def test_product_base_coefficients(self):
        ring = preset_ring("R1", base=ProductRing([QQ, QQ]))
        x = ring.monomial((1, 0), ring.base.from_factor_values([Fraction(1), Fraction(0)]))
        assert not x.is_zero()
        data = x.to_term_list()
        assert data[0]["coef"] == "(1,0)"
        assert from_term_list(ring, data) == x

    def test_str_forms(self):
        assert str(R1.zero()) == "0"
        assert str(R1.one()) == "1"
        assert str(R1.gen("X")) == "x^(1,0)"
        assert str(2 * R1.gen("X")) == "2*x^(1,0)"
