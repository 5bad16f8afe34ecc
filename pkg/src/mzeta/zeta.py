"""
Joint distributions, genus zeta numerators, and the identities they satisfy.

For a composition eta of n, the central object is the rational function
W_eta(x, y) with numerator the joint distribution of (den, iexc) over the
admissible permutations and denominator the product of (1 - x^j y) for
j = 0..n-1.  Specialising x to a prime power q and y to q^(-n*s) turns W_eta
into the ideal-counting Dirichlet series of the associated local hereditary
order, which is why everything here is exact: numerators are integer
polynomials and evaluations are Fractions.

The checks in this module certify, at desk scale, that the numerator is also
the joint distribution of (maj, des) over the multiset words (w_numerator
computes both and insists they agree), that the y-series of the numerator over
the extended denominator is the termwise product of Gaussian binomials
(hadamard_check), that the numerator is self-reciprocal exactly for rectangle
compositions (reciprocity_check), and that cyclotomic factors in a single
monomial direction appear exactly where the rectangle factorisation predicts
(unitary_factor_scan, conjecture_report).
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from . import admissible as adm
from . import signed
from . import multiset as wd
from .poly import BiPoly, UniPoly, cyclotomic_in_monomial, gaussian_binomial, totient
from .multiset import Composition

DEFAULT_BUDGET = 10_000_000

DOMAINS = ("words", "admissible", "B", "D")


class BudgetError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def domain_size(domain: str, *, eta: Composition | None = None, n: int | None = None) -> int:
    if domain in ("words", "admissible"):
        if eta is None:
            raise ValueError(f"domain {domain!r} needs a composition")
        return eta.word_count()
    if domain in ("B", "D"):
        if n is None:
            raise ValueError(f"domain {domain!r} needs n")
        size = 2**n * math.factorial(n)
        return size // 2 if domain == "D" else size
    raise ValueError(f"unknown domain {domain!r}; expected one of {DOMAINS}")


def _check_budget(size: int, budget: int) -> None:
    if size > budget:
        raise BudgetError(f"domain of size {size} exceeds the budget of {budget}")


WORD_STATS: dict[str, Callable[[Sequence[int], Composition], int]] = {
    "des": lambda w, eta: wd.des(w),
    "maj": lambda w, eta: wd.maj(w),
    "inv": lambda w, eta: wd.inv(w),
    "imv": lambda w, eta: wd.imv(w),
    "exc": wd.exc,
    "denh": wd.denh,
}

ADMISSIBLE_STATS: dict[str, Callable[[Composition, Sequence[int]], int]] = {
    "den": adm.den,
    "iexc": adm.iexc,
}

B_STATS: dict[str, Callable[[Sequence[int]], int]] = {
    "des": wd.des,
    "maj": wd.maj,
    "neg": signed.neg,
    "ndes": lambda w: signed.b_stats(w).ndes,
    "nmaj": lambda w: signed.b_stats(w).nmaj,
    "fdes": lambda w: signed.b_stats(w).fdes,
    "fmaj": lambda w: signed.b_stats(w).fmaj,
    "excabs": signed.excabs,
    "nden": signed.nden,
}

D_STATS: dict[str, Callable[[Sequence[int]], int]] = dict(
    B_STATS,
    dneg=lambda w: signed.d_stats(w).dneg,
    ddes=lambda w: signed.d_stats(w).ddes,
    dmaj=lambda w: signed.d_stats(w).dmaj,
    dexc=lambda w: signed.d_stats(w).dexc,
    nsp=signed.nsp,
    dden=lambda w: signed.d_stats(w).dden,
)


def domain_stats(domain: str) -> tuple[str, ...]:
    """The statistic names joint_distribution accepts for a domain."""
    registry = {
        "words": WORD_STATS,
        "admissible": ADMISSIBLE_STATS,
        "B": B_STATS,
        "D": D_STATS,
    }[domain]
    return tuple(registry)


def _dist_words(eta: Composition, pair: tuple[str, str]) -> BiPoly:
    counts: dict[tuple[int, int], int] = {}
    if pair == ("maj", "des"):
        for w in wd.words(eta):
            m = 0
            d = 0
            for i in range(1, len(w)):
                if w[i - 1] > w[i]:
                    m += i
                    d += 1
            key = (m, d)
            counts[key] = counts.get(key, 0) + 1
    elif pair == ("denh", "exc"):
        triv = eta.trivial_word
        imv = wd.imv
        inv = wd.inv
        for w in wd.words(eta):
            pos_sum = 0
            exceeding = []
            rest = []
            for i, (a, b) in enumerate(zip(w, triv), start=1):
                if a > b:
                    pos_sum += i
                    exceeding.append(a)
                else:
                    rest.append(a)
            key = (pos_sum + imv(exceeding) + inv(rest), len(exceeding))
            counts[key] = counts.get(key, 0) + 1
    else:
        f1 = WORD_STATS[pair[0]]
        f2 = WORD_STATS[pair[1]]
        for w in wd.words(eta):
            key = (f1(w, eta), f2(w, eta))
            counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts)


def _dist_admissible(eta: Composition, pair: tuple[str, str]) -> BiPoly:
    counts: dict[tuple[int, int], int] = {}
    if pair == ("den", "iexc"):
        blocks = adm.block_lookup(eta)
        den_iexc = adm._den_iexc
        for perm in adm.admissible_perms(eta):
            key = den_iexc(blocks, perm)
            counts[key] = counts.get(key, 0) + 1
    else:
        f1 = ADMISSIBLE_STATS[pair[0]]
        f2 = ADMISSIBLE_STATS[pair[1]]
        for perm in adm.admissible_perms(eta):
            key = (f1(eta, perm), f2(eta, perm))
            counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts)


def _dist_signed(domain: str, n: int, pair: tuple[str, str]) -> BiPoly:
    registry = B_STATS if domain == "B" else D_STATS
    f1 = registry[pair[0]]
    f2 = registry[pair[1]]
    stream = signed.signed_perms(n) if domain == "B" else signed.even_signed_perms(n)
    counts: dict[tuple[int, int], int] = {}
    for window in stream:
        key = (f1(window), f2(window))
        counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts)


def joint_distribution(
    domain: str,
    pair: tuple[str, str],
    *,
    eta: Composition | None = None,
    n: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> BiPoly:
    """The generating polynomial sum of x^{stat1} y^{stat2} over the domain.

    Evaluating the result at (1, 1) recovers the domain cardinality.  Raises
    BudgetError when the domain is larger than the budget, KeyError-free
    ValueError on unknown statistic names.
    """
    _check_budget(domain_size(domain, eta=eta, n=n), budget)
    names = domain_stats(domain)
    for stat in pair:
        if stat not in names:
            raise ValueError(
                f"statistic {stat!r} is not defined on domain {domain!r}; "
                f"choose from {', '.join(names)}"
            )
    pair = (pair[0], pair[1])
    if domain == "words":
        assert eta is not None
        return _dist_words(eta, pair)
    if domain == "admissible":
        assert eta is not None
        return _dist_admissible(eta, pair)
    assert n is not None
    return _dist_signed(domain, n, pair)


def w_numerator(
    eta: Composition, *, budget: int = DEFAULT_BUDGET, cross_check: bool = True
) -> BiPoly:
    """The numerator of W_eta: the (den, iexc) distribution over admissible
    permutations.

    With cross_check (the default) the (maj, des) distribution over the words
    is computed independently and must coincide; a mismatch would mean one of
    the two statistic implementations is broken, and raises RuntimeError.
    """
    num = joint_distribution("admissible", ("den", "iexc"), eta=eta, budget=budget)
    if cross_check:
        alt = joint_distribution("words", ("maj", "des"), eta=eta, budget=budget)
        if num != alt:
            raise RuntimeError(
                f"numerator mismatch for eta={eta}: (den, iexc) over admissible "
                f"permutations gives {num} but (maj, des) over words gives {alt}"
            )
    return num


def _one_minus_xy_product(exponents: Iterable[int]) -> list[UniPoly]:
    """y-coefficients of the product of (1 - x^j y) over the given j."""
    out = [UniPoly.one()]
    for j in exponents:
        xj = UniPoly.monomial(j)
        nxt = [UniPoly() for _ in range(len(out) + 1)]
        for k, c in enumerate(out):
            nxt[k] = nxt[k] + c
            nxt[k + 1] = nxt[k + 1] - c * xj
        out = nxt
    return out


@dataclasses.dataclass(frozen=True)
class RationalW:
    """W_eta in factored form: numerator over the product of (1 - x^j y)."""

    numerator: BiPoly
    denom_exponents: tuple[int, ...]

    @classmethod
    def for_composition(
        cls, eta: Composition, *, budget: int = DEFAULT_BUDGET, cross_check: bool = True
    ) -> RationalW:
        num = w_numerator(eta, budget=budget, cross_check=cross_check)
        return cls(num, tuple(range(eta.n)))

    def evaluate(self, q: Fraction | int, t: Fraction | int) -> Fraction:
        """Exact value at (q, t); raises ZeroDivisionError on a denominator pole."""
        denom = Fraction(1)
        for j in self.denom_exponents:
            factor = 1 - Fraction(q) ** j * Fraction(t)
            if factor == 0:
                raise ZeroDivisionError(
                    f"(1 - q^{j} t) vanishes at q={q}, t={t}"
                )
            denom *= factor
        return Fraction(self.numerator.evaluate(Fraction(q), Fraction(t))) / denom

    def series(self, terms: int) -> list[UniPoly]:
        """The first y-series coefficients, each an integer polynomial in x."""
        dcoeffs = _one_minus_xy_product(self.denom_exponents)
        numc = self.numerator.y_coefficients()
        out: list[UniPoly] = []
        for k in range(terms):
            acc = numc.get(k, UniPoly())
            for j in range(1, min(k, len(dcoeffs) - 1) + 1):
                acc = acc - dcoeffs[j] * out[k - j]
            out.append(acc)
        return out


def zeta_eval(
    eta: Composition,
    q: Fraction | int,
    t: Fraction | int,
    *,
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """W_eta(q, t) as an exact rational number."""
    return RationalW.for_composition(eta, budget=budget).evaluate(q, t)


@dataclasses.dataclass(frozen=True)
class HadamardResult:
    ok: bool
    eta: Composition
    truncation: int
    mismatch_degree: int | None = None
    numerator_side: UniPoly | None = None
    product_side: UniPoly | None = None


def hadamard_series_coefficient(eta: Composition, k: int) -> UniPoly:
    """Coefficient of y^k on the termwise-product side: the product over the
    parts of the Gaussian binomials (part + k choose k)_x."""
    out = UniPoly.one()
    for p in eta.parts:
        out = out * gaussian_binomial(p, k)
    return out


def hadamard_check(
    eta: Composition,
    *,
    numerator: BiPoly | None = None,
    budget: int = DEFAULT_BUDGET,
) -> HadamardResult:
    """Certify that the numerator equals the y-truncation of the product of
    (1 - x^j y) for j = 0..n with the termwise Gaussian-binomial series.

    Both sides, cleared to the common denominator, are polynomials of y-degree
    at most n + 1, so agreement through y^(n+1) proves the identity of
    rational functions.  On failure the first mismatching y-degree and both
    coefficient polynomials are reported.
    """
    n = eta.n
    trunc = n + 1
    if numerator is None:
        numerator = w_numerator(eta, budget=budget)
    lhs = numerator.y_coefficients()
    dplus = _one_minus_xy_product(range(n + 1))
    gauss = [hadamard_series_coefficient(eta, k) for k in range(trunc + 1)]
    for k in range(trunc + 1):
        acc = UniPoly()
        for j in range(0, min(k, len(dplus) - 1) + 1):
            acc = acc + dplus[j] * gauss[k - j]
        expected = lhs.get(k, UniPoly())
        if acc != expected:
            return HadamardResult(False, eta, trunc, k, expected, acc)
    return HadamardResult(True, eta, trunc)


@dataclasses.dataclass(frozen=True)
class ReciprocityResult:
    """Outcome of testing W_eta(1/x, 1/y) = sign * x^a * y^b * W_eta(x, y)."""

    holds: bool
    sign: int | None = None
    x_exponent: int | None = None
    y_exponent: int | None = None

    def triple(self) -> tuple[int, int, int]:
        if not self.holds:
            raise ValueError("no functional equation to report")
        return self.sign, self.x_exponent, self.y_exponent


def expected_reciprocity(eta: Composition) -> ReciprocityResult | None:
    """The functional equation a rectangle (m copies r times) must satisfy."""
    rect = eta.is_rectangle()
    if rect is None:
        return None
    m, r = rect
    return ReciprocityResult(True, (-1) ** (r * m), r * m * (m - 1) // 2, m)


def reciprocity_check(
    eta: Composition,
    *,
    numerator: BiPoly | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ReciprocityResult:
    """Decide whether W_eta(1/x, 1/y) is a signed monomial times W_eta(x, y).

    Inverting every denominator factor pulls out a fixed monomial, so the
    functional equation holds iff the reversed numerator x^A y^B N(1/x, 1/y)
    equals the numerator itself up to a sign and a monomial shift.  The
    reported exponents absorb the denominator contribution: sign times
    x^(n(n-1)/2 - A + shift_x) y^(n - B + shift_y).
    """
    n = eta.n
    if numerator is None:
        numerator = w_numerator(eta, budget=budget)
    if not numerator:
        raise ValueError("zero numerator")
    rev = numerator.reversed_xy()
    fwd_terms = sorted(numerator.terms.items())
    rev_terms = sorted(rev.terms.items())
    if len(fwd_terms) != len(rev_terms):
        return ReciprocityResult(False)
    (fa, fb), fc = fwd_terms[0]
    (ra, rb), rc = rev_terms[0]
    shift_x = ra - fa
    shift_y = rb - fb
    if rc == fc:
        delta = 1
    elif rc == -fc:
        delta = -1
    else:
        return ReciprocityResult(False)
    for ((a1, b1), c1), ((a2, b2), c2) in zip(fwd_terms, rev_terms):
        if a2 != a1 + shift_x or b2 != b1 + shift_y or c2 != delta * c1:
            return ReciprocityResult(False)
    big_a = numerator.degree_x()
    big_b = numerator.degree_y()
    return ReciprocityResult(
        True,
        (-1) ** n * delta,
        n * (n - 1) // 2 - big_a + shift_x,
        n - big_b + shift_y,
    )


class ScanBounds(NamedTuple):
    max_a: int
    max_b: int
    max_d: int


def default_bounds(n: int) -> ScanBounds:
    return ScanBounds(max_a=n, max_b=n, max_d=2 * n * n)


@dataclasses.dataclass(frozen=True)
class UnitaryFactor:
    """A cyclotomic polynomial in a single monomial direction dividing f."""

    order: int
    x_power: int
    y_power: int
    poly: BiPoly

    def describe(self) -> str:
        return f"cyclotomic({self.order}) at x^{self.x_power}*y^{self.y_power}: {self.poly}"


def unitary_factor_scan(f: BiPoly, bounds: ScanBounds) -> tuple[UnitaryFactor, ...]:
    """Search for divisors of the form cyclotomic_d(x^a y^b) within bounds.

    Candidates are the directions a in 0..max_a with b in 1..max_b, plus the
    pure-x direction (1, 0), against every cyclotomic index d <= max_d.  A hit
    certifies a unitary factor; an empty result only says no cyclotomic
    candidate within the bounds divides f, nothing stronger.

    Candidates are pruned by degree and by exact integer divisibility of
    f(2, 3), so the expensive polynomial divisions are rare.
    """
    if not f:
        raise ValueError("scan needs a nonzero polynomial")
    dx = f.degree_x()
    dy = f.degree_y()
    f23 = f.evaluate(2, 3)
    directions = [(1, 0)] + [(a, b) for b in range(1, bounds.max_b + 1) for a in range(bounds.max_a + 1)]
    found: list[UnitaryFactor] = []
    for a, b in directions:
        # base >= 2 whenever (a, b) != (0, 0), so the integer test is exact:
        # a polynomial divisor evaluated at (2, 3) divides f(2, 3).
        base = 2**a * 3**b
        for d in range(1, bounds.max_d + 1):
            ph = totient(d)
            if a * ph > dx or b * ph > dy:
                continue
            probe = _cyclotomic_at(d, base)
            if probe and f23 % probe:
                continue
            candidate = cyclotomic_in_monomial(d, a, b)
            if f.divide_exact(candidate) is not None:
                found.append(UnitaryFactor(d, a, b, candidate))
    return tuple(found)


def _cyclotomic_at(d: int, value: int) -> int:
    from .poly import cyclotomic

    return cyclotomic(d).evaluate(value)


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    """Evidence about unitary factors of a composition's numerator.

    A composition qualifies when it is a rectangle with an even number of
    copies of an odd part; then the binomial 1 + x^(rm/2) y must divide the
    numerator and the residual must scan clean.  Otherwise the numerator
    itself must scan clean.  consistent records whether the observations match
    that prediction; the scan is bounded, so "clean" means within bounds.
    """

    eta: Composition
    numerator: BiPoly
    rectangle: tuple[int, int] | None
    qualifies: bool
    predicted_factor: BiPoly | None
    factor_divides: bool | None
    residual: BiPoly | None
    factors_found: tuple[UnitaryFactor, ...]
    consistent: bool
    bounds: ScanBounds


def conjecture_report(
    eta: Composition,
    *,
    bounds: ScanBounds | None = None,
    numerator: BiPoly | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ConjectureReport:
    if bounds is None:
        bounds = default_bounds(eta.n)
    if numerator is None:
        numerator = w_numerator(eta, budget=budget)
    rect = eta.is_rectangle()
    qualifies = rect is not None and rect[0] % 2 == 1 and rect[1] % 2 == 0
    if qualifies:
        m, r = rect
        factor = BiPoly({(0, 0): 1, (r * m // 2, 1): 1})
        residual = numerator.divide_exact(factor)
        if residual is None:
            return ConjectureReport(
                eta, numerator, rect, True, factor, False, None, (), False, bounds
            )
        found = unitary_factor_scan(residual, bounds)
        return ConjectureReport(
            eta, numerator, rect, True, factor, True, residual, found, not found, bounds
        )
    found = unitary_factor_scan(numerator, bounds)
    return ConjectureReport(
        eta, numerator, rect, False, None, None, None, found, not found, bounds
    )
