"""
Exact integer polynomial arithmetic in one and two variables.

UniPoly is a dense tuple of coefficients, constant term first; BiPoly is a
sparse map from exponent pairs (x-degree, y-degree) to nonzero integer
coefficients.  Both are canonical (no stored zeros, no trailing zeros) and
treated as immutable, and all arithmetic is exact over the integers; no
floating point enters anywhere.

>>> gaussian_binomial(2, 2)
UniPoly((1, 1, 2, 1, 1))
>>> print(BiPoly.one() + BiPoly.monomial(1, 1) + BiPoly.monomial(2, 1))
1 + x*y + x^2*y
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class UniPoly:
    """Integer polynomial in one variable.

    >>> UniPoly((1, 1)) * UniPoly((-1, 1))
    UniPoly((-1, 0, 1))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls) -> UniPoly:
        return cls(())

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> UniPoly:
        return cls((0,) * power + (coeff,))

    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            other = UniPoly((other,))
        return self + (-other)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def div_exact(self, other: UniPoly) -> UniPoly | None:
        """The quotient self/other over the integers, or None if not divisible."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return UniPoly()
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        if len(rem) - 1 < dd:
            return None
        out = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                return None
            out[top - dd] = q
            for j in range(dd + 1):
                rem[top - dd + j] -= q * div[j]
        if any(rem):
            return None
        return UniPoly(out)

    def evaluate(self, x):
        """Exact value at x (int or Fraction)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __str__(self) -> str:
        return format_terms((a, 0, c) for a, c in enumerate(self.coeffs) if c)

    def __repr__(self) -> str:
        return f"UniPoly({self.coeffs!r})"


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    """Euler's totient by trial factorisation."""
    if d < 1:
        raise ValueError("totient needs a positive argument")
    out = d
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UniPoly:
    """The d-th cyclotomic polynomial.

    >>> cyclotomic(2)
    UniPoly((1, 1))
    >>> cyclotomic(6)
    UniPoly((1, -1, 1))
    """
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = UniPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            quot = poly.div_exact(cyclotomic(e))
            assert quot is not None
            poly = quot
    return poly


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int) -> UniPoly:
    if b < 0 or b > a:
        return UniPoly()
    if b == 0 or b == a:
        return UniPoly.one()
    return _qbinom(a - 1, b - 1) + _qbinom(a - 1, b).shift(b)


def gaussian_binomial(m: int, k: int) -> UniPoly:
    """The Gaussian binomial (m+k choose k)_x.

    Built from the q-Pascal recurrence.  Its value at x=1 is binomial(m+k, k),
    its coefficient list is palindromic, and it is the coefficient of y^k in
    the geometric product over (1 - x^j y)^{-1} for j = 0..m.

    >>> gaussian_binomial(1, 1)
    UniPoly((1, 1))
    """
    if m < 0 or k < 0:
        raise ValueError("gaussian_binomial needs nonnegative arguments")
    return _qbinom(m + k, k)


def format_terms(terms: Iterable[tuple[int, int, int]]) -> str:
    """Render (x-exp, y-exp, coeff) triples as a sum, in the given order.

    Unit exponents and unit coefficients are omitted: 1 + x*y + 2*x^2*y.
    """
    parts: list[str] = []
    for a, b, c in terms:
        names = []
        if a:
            names.append("x" if a == 1 else f"x^{a}")
        if b:
            names.append("y" if b == 1 else f"y^{b}")
        mag = abs(c)
        if mag != 1 or not names:
            names.insert(0, str(mag))
        body = "*".join(names)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    if not parts:
        return "0"
    return " ".join(parts)


class BiPoly:
    """Integer polynomial in x and y, sparse on exponent pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] = ()) -> None:
        data = {k: int(v) for k, v in dict(terms).items() if v}
        for a, b in data:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent pair ({a}, {b})")
        self.terms = data

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @classmethod
    def one(cls) -> BiPoly:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> BiPoly:
        return cls({(a, b): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return BiPoly(out)

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def degree_x(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    def evaluate(self, x, y):
        """Exact value at (x, y); Fractions are welcome."""
        return sum(c * x**a * y**b for (a, b), c in self.terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(x-exp, y-exp, coeff) triples sorted by (y-exp, x-exp)."""
        return [(a, b, self.terms[(a, b)]) for a, b in sorted(self.terms, key=lambda k: (k[1], k[0]))]

    def y_coefficients(self) -> dict[int, UniPoly]:
        """The polynomial as a map y-degree -> coefficient in x."""
        buckets: dict[int, list[tuple[int, int]]] = {}
        for (a, b), c in self.terms.items():
            buckets.setdefault(b, []).append((a, c))
        out: dict[int, UniPoly] = {}
        for b, pairs in buckets.items():
            top = max(a for a, _ in pairs)
            coeffs = [0] * (top + 1)
            for a, c in pairs:
                coeffs[a] = c
            out[b] = UniPoly(coeffs)
        return out

    @classmethod
    def from_y_coefficients(cls, coeffs: Mapping[int, UniPoly]) -> BiPoly:
        terms: dict[tuple[int, int], int] = {}
        for b, poly in coeffs.items():
            for a, c in enumerate(poly.coeffs):
                if c:
                    terms[(a, b)] = c
        return cls(terms)

    def reversed_xy(self) -> BiPoly:
        """x^A y^B f(1/x, 1/y) where (A, B) is the bidegree of f."""
        big_a = self.degree_x()
        big_b = self.degree_y()
        return BiPoly({(big_a - a, big_b - b): c for (a, b), c in self.terms.items()})

    def divide_exact(self, other: BiPoly) -> BiPoly | None:
        """The quotient self/other over the integers, or None if not divisible.

        Division happens in y-major order with exact one-variable divisions of
        the coefficients, so a None return certifies indivisibility over Z.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return BiPoly()
        num = self.y_coefficients()
        den = other.y_coefficients()
        dy = max(den)
        lead = den[dy]
        quot: dict[int, UniPoly] = {}
        cur = dict(num)
        while cur:
            ny = max(cur)
            if ny < dy:
                return None
            q = cur[ny].div_exact(lead)
            if q is None:
                return None
            quot[ny - dy] = q
            for k, dpoly in den.items():
                tgt = ny - dy + k
                updated = cur.get(tgt, UniPoly()) - dpoly * q
                if updated:
                    cur[tgt] = updated
                else:
                    cur.pop(tgt, None)
        return BiPoly.from_y_coefficients(quot)

    def to_json_obj(self) -> dict:
        """The interchange form: decimal-string coefficients, sorted by (y, x)."""
        return {
            "vars": ["x", "y"],
            "terms": [[a, b, str(c)] for a, b, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> BiPoly:
        if obj.get("vars") != ["x", "y"]:
            raise ValueError("polynomial object must declare vars ['x', 'y']")
        terms: dict[tuple[int, int], int] = {}
        for a, b, c in obj["terms"]:
            key = (int(a), int(b))
            if key in terms:
                raise ValueError(f"duplicate exponent pair {key}")
            terms[key] = int(c)
        return cls(terms)

    def __str__(self) -> str:
        return format_terms(self.sorted_terms())

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r})"


def cyclotomic_in_monomial(d: int, a: int, b: int) -> BiPoly:
    """The d-th cyclotomic polynomial evaluated at x^a y^b.

    >>> print(cyclotomic_in_monomial(2, 1, 1))
    1 + x*y
    """
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise ValueError(f"monomial direction ({a}, {b}) must be nonzero and nonnegative")
    base = cyclotomic(d)
    return BiPoly({(a * e, b * e): c for e, c in enumerate(base.coeffs) if c})
