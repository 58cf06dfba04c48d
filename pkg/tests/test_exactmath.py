from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import long_division_series, naive_convolution
from orbifold_rr.exactmath import (
    CycloElem,
    NotRationalError,
    Poly,
    RationalFunction,
    TruncSeries,
    cyclo_inv,
    cyclotomic_poly,
    poly_mul,
    rational_part,
    series_of,
)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
polys = st.lists(rationals, max_size=8).map(Poly)


class TestPoly:
    def test_telescoping(self):
        assert poly_mul(Poly([1, -1]), Poly([1, 1, 1])) == Poly([1, 0, 0, -1])

    def test_zero_annihilates(self):
        assert poly_mul(Poly(), Poly([3, 4])) == Poly()
        assert Poly().degree == -1

    def test_against_convolution(self):
        a = Poly.one_minus_t_pow(3) ** 2 * Poly.one_minus_t_pow(5)
        # naive convolution of [1,0,0,-1]^2 * [1,0,0,0,0,-1]
        assert a.coeffs == (1, 0, 0, -2, 0, -1, 1, 0, 2, 0, 0, -1)
        ref = naive_convolution(naive_convolution([1, 0, 0, -1], [1, 0, 0, -1]), [1, 0, 0, 0, 0, -1])
        assert list(a.coeffs) == ref

    def test_no_trailing_zeros(self):
        assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
        assert Poly([0, 0]).coeffs == ()

    def test_divmod(self):
        q, r = divmod(Poly([1, 0, 0, -1]), Poly([1, -1]))
        assert q == Poly([1, 1, 1]) and not r
        with pytest.raises(ZeroDivisionError):
            divmod(Poly([1]), Poly())

    def test_immutable(self):
        with pytest.raises(AttributeError):
            Poly([1]).coeffs = ()

    @settings(max_examples=60, deadline=None)
    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=60, deadline=None)
    @given(polys, polys.filter(bool))
    def test_division_identity(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @settings(max_examples=40, deadline=None)
    @given(polys, polys)
    def test_mul_matches_convolution(self, a, b):
        if a and b:
            assert list((a * b).coeffs) == naive_convolution(a.coeffs, b.coeffs)


class TestSeries:
    def test_geometric(self):
        rf = RationalFunction(Poly([1]), (1,))
        assert list(series_of(rf, 4)) == [1, 1, 1, 1, 1]

    def test_derivative_of_geometric(self):
        rf = RationalFunction(Poly([0, 1]), (1, 1))
        assert list(series_of(rf, 4)) == [0, 1, 2, 3, 4]

    def test_cubes(self):
        rf = RationalFunction(Poly([0, 1, 4, 1]), (1, 1, 1, 1))
        expected = long_division_series([0, 1, 4, 1], (Poly([1, -1]) ** 4).coeffs, 5)
        assert expected == [0, 1, 8, 27, 64, 125]
        assert list(series_of(rf, 5)) == expected

    def test_rejects_pole_at_zero(self):
        from orbifold_rr.exactmath.series import series_of as raw

        with pytest.raises(ZeroDivisionError):
            raw(Poly([1]), Poly([0, 1]), 3)

    def test_mixed_order_takes_minimum(self):
        a = TruncSeries([1, 1, 1, 1], 3)
        b = TruncSeries([1, 2], 1)
        assert (a + b).order == 1
        assert (a * b).order == 1
        assert list(a * b) == [1, 3]

    def test_truncate_never_extends(self):
        with pytest.raises(ValueError):
            TruncSeries([1], 2).truncate(5)

    @settings(max_examples=40, deadline=None)
    @given(polys, st.lists(st.integers(1, 6), min_size=1, max_size=4), st.integers(0, 25))
    def test_truncation_consistent(self, num, weights, m):
        rf = RationalFunction(num, tuple(weights))
        assert series_of(rf, 30).truncate(m) == series_of(rf, m)

    @settings(max_examples=40, deadline=None)
    @given(polys, st.lists(st.integers(1, 6), min_size=1, max_size=4))
    def test_product_with_denominator(self, num, weights):
        rf = RationalFunction(num, tuple(weights))
        prod = Poly.product_one_minus(weights)
        left = series_of(RationalFunction(num * prod, tuple(weights)), 25)
        right = series_of(rf, 25) * prod
        assert left == right
        # and clearing the denominator entirely recovers the numerator
        assert series_of(rf, 25) * prod == TruncSeries.from_poly(num, 25)


class TestRationalFunction:
    def test_equality_across_representations(self):
        a = RationalFunction(Poly([1]), (1,))
        b = RationalFunction(Poly([1, 1]), (2,))
        assert a == b
        assert hash(a) == hash(b)

    def test_reduction(self):
        num, exps = RationalFunction(Poly([1, 1]), (2,)).reduced_parts()
        assert num == Poly([1]) and exps == {1: 1}

    def test_clear(self):
        rf = RationalFunction(Poly([1]), (1, 2))
        q, res = rf.cleared((2, 2))
        assert q == Poly([1, 1]) and res == {}
        q, res = rf.cleared((1,))
        assert q is None and res == {1: 1, 2: 1}


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic_poly(1) == Poly([-1, 1])
        assert cyclotomic_poly(2) == Poly([1, 1])
        assert cyclotomic_poly(9) == Poly([1, 0, 0, 1, 0, 0, 1])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cyclotomic_poly(0)

    @pytest.mark.parametrize("d", range(1, 61))
    def test_divides_t_d_minus_1(self, d):
        assert cyclotomic_poly(d).divides(Poly.monomial(d) - 1)

    def test_inverse_identity(self):
        assert cyclo_inv(CycloElem.rational(7, 1)) == 1

    def test_inverse_of_root_is_power(self):
        z = CycloElem.zeta_power(4, 1)
        inv = cyclo_inv(z)
        assert inv == CycloElem.zeta_power(4, 3)
        assert inv.coeffs == Poly([0, -1])

    def test_inverse_conductor_5(self):
        x = 1 - CycloElem.zeta_power(5, 1)
        y = cyclo_inv(x)
        assert (x * y).coeffs == Poly([1])

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            cyclo_inv(CycloElem.rational(5, 0))

    def test_rational_part(self):
        assert rational_part(CycloElem.rational(11, Fraction(7, 3))) == Fraction(7, 3)
        trace = CycloElem.zeta_power(3, 1) + CycloElem.zeta_power(3, 2)
        assert rational_part(trace) == -1

    def test_rational_part_tripwire(self):
        with pytest.raises(NotRationalError):
            rational_part(CycloElem.zeta_power(5, 1))

    def test_random_inverses(self):
        import random

        rng = random.Random(20041)
        for _ in range(100):
            d = rng.randint(1, 24)
            phi = cyclotomic_poly(d).degree
            while True:
                coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(phi)]
                x = CycloElem(d, Poly(coeffs))
                if x:
                    break
            assert (x * cyclo_inv(x)).coeffs == Poly([1])
