"""Exact polynomial arithmetic: unit values frozen by hand, algebra checked by
round trips, Gaussian binomials against an independent series oracle."""
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mzeta.poly import (
    BiPoly,
    UniPoly,
    cyclotomic,
    cyclotomic_in_monomial,
    format_terms,
    gaussian_binomial,
    totient,
)


def series_binomial_oracle(m, k):
    """Coefficient of y^k in the product over j=0..m of 1/(1 - x^j y), computed
    by plain truncated-series multiplication."""
    series = [UniPoly.one()]  # y^0 coefficient of the running product
    for j in range(m + 1):
        # multiply by 1/(1 - x^j y): new_t = sum over s of old_s * x^{j(t-s)}
        new = []
        for t in range(k + 1):
            acc = UniPoly()
            for s in range(min(t, len(series) - 1) + 1):
                acc = acc + series[s].shift(j * (t - s))
            new.append(acc)
        series = new
    return series[k]


unipolys = st.lists(st.integers(-5, 5), max_size=5).map(UniPoly)
bipolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4),
    max_size=5,
).map(BiPoly)


class TestUniPoly:
    def test_normalisation(self):
        assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UniPoly((0, 0)).coeffs == ()
        assert not UniPoly()
        assert UniPoly((3,)).degree() == 0
        assert UniPoly().degree() == -1

    def test_arithmetic(self):
        assert UniPoly((1, 1)) * UniPoly((-1, 1)) == UniPoly((-1, 0, 1))
        assert UniPoly((1, 2)) + UniPoly((0, -2)) == UniPoly((1,))
        assert UniPoly((1, 2)) - UniPoly((1, 2)) == UniPoly()
        assert UniPoly((1, 1)).shift(2) == UniPoly((0, 0, 1, 1))
        assert 3 * UniPoly((1, 1)) == UniPoly((3, 3))

    def test_evaluate(self):
        assert UniPoly((1, 2, 1)).evaluate(3) == 16
        assert UniPoly((1, 2, 1)).evaluate(Fraction(1, 2)) == Fraction(9, 4)

    def test_div_exact(self):
        p = UniPoly((-1, 0, 1))
        assert p.div_exact(UniPoly((1, 1))) == UniPoly((-1, 1))
        assert p.div_exact(UniPoly((1, 1, 1))) is None
        assert UniPoly((2, 2)).div_exact(UniPoly((0, 4))) is None  # 2+2x over 4x
        with pytest.raises(ZeroDivisionError):
            p.div_exact(UniPoly())

    @given(unipolys, unipolys)
    @settings(max_examples=80, deadline=None)
    def test_division_round_trip(self, f, g):
        if not g:
            return
        assert (f * g).div_exact(g) == f


class TestCyclotomic:
    def test_small_values(self):
        assert cyclotomic(1) == UniPoly((-1, 1))
        assert cyclotomic(2) == UniPoly((1, 1))
        assert cyclotomic(3) == UniPoly((1, 1, 1))
        assert cyclotomic(4) == UniPoly((1, 0, 1))
        assert cyclotomic(6) == UniPoly((1, -1, 1))
        assert cyclotomic(12) == UniPoly((1, 0, -1, 0, 1))

    def test_degree_is_totient(self):
        for d in range(1, 40):
            assert cyclotomic(d).degree() == totient(d)

    def test_product_recovers_power(self):
        for n in (6, 12):
            prod = UniPoly.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == UniPoly((-1,) + (0,) * (n - 1) + (1,))

    def test_value_at_one(self):
        # For d >= 2 the value at 1 is p when d is a prime power, else 1.
        assert cyclotomic(9).evaluate(1) == 3
        assert cyclotomic(8).evaluate(1) == 2
        assert cyclotomic(6).evaluate(1) == 1
        assert cyclotomic(15).evaluate(1) == 1


class TestGaussianBinomial:
    def test_frozen(self):
        assert gaussian_binomial(1, 1) == UniPoly((1, 1))
        assert gaussian_binomial(3, 0) == UniPoly.one()
        assert gaussian_binomial(0, 5) == UniPoly.one()
        assert gaussian_binomial(2, 2) == UniPoly((1, 1, 2, 1, 1))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gaussian_binomial(-1, 2)

    @pytest.mark.parametrize("m", range(0, 7))
    @pytest.mark.parametrize("k", range(0, 7))
    def test_palindromic_and_binomial_value(self, m, k):
        if m + k > 12:
            return
        g = gaussian_binomial(m, k)
        assert g.is_palindromic()
        assert g.evaluate(1) == math.comb(m + k, k)

    @pytest.mark.parametrize("m", range(0, 5))
    @pytest.mark.parametrize("k", range(0, 5))
    def test_against_series_oracle(self, m, k):
        assert gaussian_binomial(m, k) == series_binomial_oracle(m, k)


class TestBiPoly:
    def test_canonical(self):
        assert BiPoly({(0, 0): 0, (1, 1): 2}).terms == {(1, 1): 2}
        assert not BiPoly()
        with pytest.raises(ValueError):
            BiPoly({(-1, 0): 1})

    def test_arithmetic(self):
        p = BiPoly.one() + BiPoly.monomial(1, 1)
        q = BiPoly.one() - BiPoly.monomial(1, 1)
        assert p * q == BiPoly({(0, 0): 1, (2, 2): -1})
        assert p - p == BiPoly()
        assert (p * 3).terms == {(0, 0): 3, (1, 1): 3}

    def test_degrees_and_eval(self):
        p = BiPoly({(2, 1): 1, (0, 0): 1})
        assert p.degree_x() == 2 and p.degree_y() == 1
        assert p.evaluate(2, Fraction(1, 8)) == Fraction(3, 2)
        assert BiPoly().degree_x() == -1

    def test_sorted_terms_order(self):
        p = BiPoly({(2, 1): 1, (0, 0): 1, (1, 1): 1, (0, 2): 1})
        assert p.sorted_terms() == [(0, 0, 1), (1, 1, 1), (2, 1, 1), (0, 2, 1)]

    def test_str(self):
        assert str(BiPoly()) == "0"
        assert str(BiPoly.one()) == "1"
        assert str(BiPoly({(0, 0): 1, (1, 1): 1, (2, 1): 1})) == "1 + x*y + x^2*y"
        assert str(BiPoly({(0, 0): 1, (2, 1): -1})) == "1 - x^2*y"
        assert str(BiPoly({(1, 0): -2, (0, 1): 1})) == "-2*x + y"
        assert format_terms([(0, 0, -5)]) == "-5"

    def test_json_round_trip(self):
        p = BiPoly({(0, 0): 1, (1, 1): 12345678901234567890, (2, 1): -3})
        obj = p.to_json_obj()
        assert obj["vars"] == ["x", "y"]
        assert obj["terms"] == [[0, 0, "1"], [1, 1, "12345678901234567890"], [2, 1, "-3"]]
        # terms sorted by (y, x), coefficients as decimal strings
        assert obj["terms"] == sorted(obj["terms"], key=lambda t: (t[1], t[0]))
        assert BiPoly.from_json_obj(json.loads(json.dumps(obj))) == p

    def test_from_json_rejects(self):
        with pytest.raises(ValueError):
            BiPoly.from_json_obj({"vars": ["x"], "terms": []})
        with pytest.raises(ValueError):
            BiPoly.from_json_obj({"vars": ["x", "y"], "terms": [[0, 0, "1"], [0, 0, "2"]]})

    def test_y_coefficients_round_trip(self):
        p = BiPoly({(0, 0): 1, (3, 2): 4, (1, 2): -1})
        coeffs = p.y_coefficients()
        assert coeffs[0] == UniPoly((1,))
        assert coeffs[2] == UniPoly((0, -1, 0, 4))
        assert BiPoly.from_y_coefficients(coeffs) == p

    def test_reversed_xy(self):
        p = BiPoly({(0, 0): 1, (1, 1): 2, (2, 2): 1})
        assert p.reversed_xy() == BiPoly({(2, 2): 1, (1, 1): 2, (0, 0): 1})
        q = BiPoly({(0, 0): 1, (2, 1): 1})
        assert q.reversed_xy() == BiPoly({(2, 1): 1, (0, 0): 1})


class TestDivision:
    def test_binomial_divisor_examples(self):
        one_xy = BiPoly({(0, 0): 1, (1, 1): 1})
        assert one_xy.divide_exact(one_xy) == BiPoly.one()
        numerator = BiPoly({(0, 0): 1, (1, 1): 1, (2, 1): 1})
        assert numerator.divide_exact(one_xy) is None

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            BiPoly.one().divide_exact(BiPoly())

    def test_constant_divisor(self):
        p = BiPoly({(0, 0): 2, (1, 1): 4})
        assert p.divide_exact(BiPoly({(0, 0): 2})) == BiPoly({(0, 0): 1, (1, 1): 2})
        assert p.divide_exact(BiPoly({(0, 0): 3})) is None

    @given(bipolys, bipolys)
    @settings(max_examples=80, deadline=None)
    def test_round_trip(self, f, g):
        if not g:
            return
        product = f * g
        quotient = product.divide_exact(g)
        assert quotient is not None
        assert quotient == f
        assert quotient * g == product


class TestCyclotomicMonomial:
    def test_values(self):
        assert cyclotomic_in_monomial(2, 1, 1) == BiPoly({(0, 0): 1, (1, 1): 1})
        assert cyclotomic_in_monomial(4, 1, 1) == BiPoly({(0, 0): 1, (2, 2): 1})
        assert cyclotomic_in_monomial(2, 3, 1) == BiPoly({(0, 0): 1, (3, 1): 1})
        assert cyclotomic_in_monomial(1, 1, 0) == BiPoly({(0, 0): -1, (1, 0): 1})

    def test_rejects_zero_direction(self):
        with pytest.raises(ValueError):
            cyclotomic_in_monomial(2, 0, 0)


class TestTotient:
    def test_values(self):
        assert [totient(d) for d in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        with pytest.raises(ValueError):
            totient(0)
