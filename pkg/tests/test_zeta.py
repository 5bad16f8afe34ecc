"""Distributions, the rational form, and the identity checks, each against an
independently computed oracle where one exists."""
from collections import Counter
from fractions import Fraction

import pytest

from mzeta.admissible import admissible_perms, den, i_set, iexc, n_minus_set, n_plus_set
from mzeta.multiset import Composition, denh, des, exc, maj, words
from mzeta.poly import BiPoly, UniPoly
from mzeta.zeta import (
    BudgetError,
    RationalW,
    ScanBounds,
    conjecture_report,
    default_bounds,
    domain_size,
    domain_stats,
    expected_reciprocity,
    hadamard_check,
    hadamard_series_coefficient,
    joint_distribution,
    reciprocity_check,
    unitary_factor_scan,
    w_numerator,
    zeta_eval,
)
from test_multiset import small_compositions


def series_oracle(rational, terms):
    """y-series of the factored form by truncated multiplication: expand every
    1/(1 - x^j y) as a geometric series, multiply, then multiply by the
    numerator."""
    series = [UniPoly.one()] + [UniPoly()] * (terms - 1)
    for j in rational.denom_exponents:
        new = []
        for t in range(terms):
            acc = UniPoly()
            for s in range(t + 1):
                acc = acc + series[s].shift(j * (t - s))
            new.append(acc)
        series = new
    numc = rational.numerator.y_coefficients()
    out = []
    for t in range(terms):
        acc = UniPoly()
        for s in range(t + 1):
            acc = acc + numc.get(s, UniPoly()) * series[t - s]
        out.append(acc)
    return out


class TestDomains:
    def test_sizes(self):
        assert domain_size("words", eta=Composition((2, 1))) == 3
        assert domain_size("admissible", eta=Composition((3, 2, 2, 3))) == 25200
        assert domain_size("B", n=2) == 8
        assert domain_size("D", n=2) == 4

    def test_unknown(self):
        with pytest.raises(ValueError):
            domain_size("C", n=2)
        with pytest.raises(ValueError):
            domain_size("words")

    def test_stats_registry(self):
        assert "denh" in domain_stats("words")
        assert domain_stats("admissible") == ("den", "iexc")
        assert "dden" in domain_stats("D")
        assert "dden" not in domain_stats("B")


class TestJointDistribution:
    def test_words_examples(self):
        eta = Composition((2, 1))
        expected = BiPoly({(0, 0): 1, (1, 1): 1, (2, 1): 1})
        assert joint_distribution("words", ("denh", "exc"), eta=eta) == expected
        assert joint_distribution("words", ("maj", "des"), eta=eta) == expected
        assert joint_distribution("words", ("maj", "des"), eta=Composition((3,))) == BiPoly.one()

    def test_admissible_example(self):
        eta = Composition((1, 1, 1, 1))
        lhs = joint_distribution("admissible", ("den", "iexc"), eta=eta)
        rhs = joint_distribution("words", ("maj", "des"), eta=eta)
        assert lhs == rhs

    def test_d_domain(self):
        poly = joint_distribution("D", ("dden", "dexc"), n=2)
        assert poly == BiPoly({(0, 0): 1, (1, 1): 2, (2, 2): 1})
        assert poly.evaluate(1, 1) == 4

    def test_value_at_one(self):
        eta = Composition((2, 2))
        poly = joint_distribution("words", ("denh", "exc"), eta=eta)
        assert poly.evaluate(1, 1) == eta.word_count()

    def test_unknown_stat(self):
        with pytest.raises(ValueError):
            joint_distribution("words", ("denh", "dden"), eta=Composition((2, 1)))

    def test_budget(self):
        with pytest.raises(BudgetError):
            joint_distribution("words", ("maj", "des"), eta=Composition((2, 1)), budget=2)

    @pytest.mark.parametrize("eta", small_compositions(5))
    def test_fast_paths_match_public_functions(self, eta):
        # The tight loops inside joint_distribution must agree with the plain
        # per-object statistics, including the set-based den.
        by_loop = joint_distribution("words", ("denh", "exc"), eta=eta)
        by_funcs = Counter((denh(w, eta), exc(w, eta)) for w in words(eta))
        assert by_loop == BiPoly(by_funcs)
        by_loop = joint_distribution("admissible", ("den", "iexc"), eta=eta)
        by_sets = Counter()
        for sigma in admissible_perms(eta):
            cells = i_set(eta, sigma)
            value = (
                sum(j for _, j in cells)
                + len(n_plus_set(eta, sigma))
                - len(n_minus_set(eta, sigma))
                - len(cells)
            )
            assert value == den(eta, sigma)
            by_sets[(value, iexc(eta, sigma))] += 1
        assert by_loop == BiPoly(by_sets)


class TestNumerator:
    def test_frozen(self):
        assert w_numerator(Composition((1, 1))) == BiPoly({(0, 0): 1, (1, 1): 1})
        assert w_numerator(Composition((4,))) == BiPoly.one()
        assert w_numerator(Composition((2, 1))) == BiPoly({(0, 0): 1, (1, 1): 1, (2, 1): 1})

    def test_cross_check_runs_both_routes(self):
        eta = Composition((2, 2))
        num = w_numerator(eta, cross_check=True)
        assert num == joint_distribution("words", ("maj", "des"), eta=eta)
        assert num == joint_distribution("admissible", ("den", "iexc"), eta=eta)

    @pytest.mark.parametrize("eta", small_compositions(5))
    def test_counts(self, eta):
        assert w_numerator(eta).evaluate(1, 1) == eta.word_count()


class TestRationalW:
    def test_evaluate_example(self):
        assert zeta_eval(Composition((2, 1)), Fraction(2), Fraction(1, 8)) == Fraction(16, 3)
        assert zeta_eval(Composition((3,)), 2, 0) == 1
        assert zeta_eval(Composition((1, 1)), Fraction(7, 3), 0) == 1

    def test_pole(self):
        with pytest.raises(ZeroDivisionError):
            zeta_eval(Composition((2, 1)), 2, Fraction(1, 2))

    def test_series_frozen(self):
        series = RationalW.for_composition(Composition((1, 1))).series(3)
        assert series == [UniPoly((1,)), UniPoly((1, 2)), UniPoly((1, 2, 2))]

    @pytest.mark.parametrize("parts", [(1, 1), (2, 1), (3,), (2, 2)])
    def test_series_against_oracle(self, parts):
        rational = RationalW.for_composition(Composition(parts))
        assert rational.series(6) == series_oracle(rational, 6)

    def test_evaluate_matches_series_truncation(self):
        # At t with |t| small the truncated series approaches the value; check
        # exactly via the rational identity value * denom == numerator.
        eta = Composition((2, 1))
        rational = RationalW.for_composition(eta)
        q, t = Fraction(3), Fraction(1, 5)
        value = rational.evaluate(q, t)
        denom = Fraction(1)
        for j in rational.denom_exponents:
            denom *= 1 - q**j * t
        assert value * denom == rational.numerator.evaluate(q, t)


class TestHadamard:
    def test_first_coefficients(self):
        eta = Composition((1, 1))
        assert hadamard_series_coefficient(eta, 0) == UniPoly.one()
        assert hadamard_series_coefficient(eta, 1) == UniPoly((1, 2, 1))  # (1+x)^2

    @pytest.mark.parametrize("parts", [(1, 1), (2, 1), (3,), (2, 2), (3, 2, 2, 3)])
    def test_holds(self, parts):
        result = hadamard_check(Composition(parts))
        assert result.ok, result

    def test_detects_mismatch(self):
        result = hadamard_check(Composition((1, 1)), numerator=BiPoly.one())
        assert not result.ok
        assert result.mismatch_degree == 1
        assert result.product_side != result.numerator_side


class TestReciprocity:
    def test_examples(self):
        assert reciprocity_check(Composition((1, 1))).triple() == (1, 0, 1)
        assert not reciprocity_check(Composition((2, 1))).holds

    def test_rectangles(self):
        for m, r in [(1, 2), (2, 2), (1, 3), (3, 2), (2, 3), (4, 1)]:
            eta = Composition((m,) * r)
            observed = reciprocity_check(eta)
            assert observed == expected_reciprocity(eta)
            assert observed.triple() == ((-1) ** (r * m), r * m * (m - 1) // 2, m)

    @pytest.mark.parametrize("eta", small_compositions(6))
    def test_dichotomy(self, eta):
        observed = reciprocity_check(eta)
        assert observed.holds == (eta.is_rectangle() is not None)


class TestUnitaryScan:
    def test_finds_binomial_factor(self):
        num = w_numerator(Composition((1, 1)))
        found = unitary_factor_scan(num, default_bounds(2))
        assert [(u.order, u.x_power, u.y_power) for u in found] == [(2, 1, 1)]
        assert str(found[0].poly) == "1 + x*y"

    def test_empty_on_two_one(self):
        num = w_numerator(Composition((2, 1)))
        assert unitary_factor_scan(num, ScanBounds(3, 2, 12)) == ()

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            unitary_factor_scan(BiPoly(), default_bounds(2))

    def test_scan_of_constant_is_empty(self):
        assert unitary_factor_scan(BiPoly.one(), default_bounds(3)) == ()


class TestConjecture:
    def test_one_one(self):
        report = conjecture_report(Composition((1, 1)))
        assert report.qualifies
        assert report.factor_divides
        assert report.residual == BiPoly.one()
        assert report.consistent

    def test_two_one(self):
        report = conjecture_report(Composition((2, 1)), bounds=ScanBounds(3, 2, 12))
        assert not report.qualifies
        assert report.factors_found == ()
        assert report.consistent

    def test_four_ones(self):
        report = conjecture_report(Composition((1, 1, 1, 1)))
        assert report.qualifies
        assert report.predicted_factor == BiPoly({(0, 0): 1, (2, 1): 1})
        assert report.factor_divides
        assert report.consistent

    def test_three_three(self):
        report = conjecture_report(Composition((3, 3)))
        assert report.qualifies
        assert report.predicted_factor == BiPoly({(0, 0): 1, (3, 1): 1})
        assert report.factor_divides
        assert report.consistent

    def test_non_qualifying_rectangle(self):
        # All parts equal but the part is even: predicted to have no factor.
        report = conjecture_report(Composition((2, 2)))
        assert not report.qualifies
        assert report.consistent
