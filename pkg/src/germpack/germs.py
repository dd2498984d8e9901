"""Exact arithmetic for germs at q -> 1-.

A subset S of the naturals has generating function S_q = sum_{n in S} q^n.
Two such functions are compared by their *germs*: f dominates g if f >= g on
some interval (1-eps, 1).  For eventually periodic sets the generating
functions are rational, of the form P(q)/(1-q^d), and the germ order is total
and computable exactly: substitute t = 1-q and look at the sign of the lowest
nonzero coefficient of the t-expansion.

Everything here is integer/rational arithmetic; no floating point is used
anywhere (the binomial coefficients that appear in the t-expansion overflow
fixed-width types almost immediately).

Orderings are reported as LESS (-1), EQUAL (0), GREATER (+1), so that
swapping arguments negates the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

LESS = -1
EQUAL = 0
GREATER = 1

ORDER_NAMES = {LESS: "Less", EQUAL: "Equal", GREATER: "Greater"}


def _strip(coeffs):
    """Drop trailing zero coefficients from a mutable list, in place."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _sign_near_one(coeffs) -> int:
    """Sign of sum(coeffs[i] * q**i) on some interval (1-eps, 1), exactly.

    Repeatedly divides by (q - 1): the remainder of each division is the value
    at q = 1, and the first nonzero remainder is the lowest t-coefficient of
    the polynomial rewritten in t = 1 - q.  Since (q - 1) is negative just
    left of 1, each exact division flips the sign.
    """
    work = _strip(list(coeffs))
    flip = 1
    while work:
        total = sum(work)
        if total:
            return flip if total > 0 else -flip
        # Exact quotient by (q - 1): b[i-1] = c[i] + b[i], seeded b[n] = 0.
        quot = [0] * (len(work) - 1)
        acc = 0
        for i in range(len(work) - 1, 0, -1):
            acc += work[i]
            quot[i - 1] = acc
        work = _strip(quot)
        flip = -flip
    return 0


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    coeffs[i] multiplies q**i; trailing zeros are stripped so the zero
    polynomial is the empty tuple and degree == len(coeffs) - 1 otherwise.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_bits(cls, bits) -> IntPolynomial:
        """Indicator polynomial of a 0/1 string: sum of q**i over the 1s."""
        return cls(tuple(1 if b in (1, "1") else 0 for b in bits))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> IntPolynomial:
        return cls((0,) * power + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shifted(self, power: int) -> IntPolynomial:
        """Multiply by q**power."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * power + self.coeffs)

    def __call__(self, x):
        """Evaluate by Horner; exact when x is an int or Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def one_minus_power(d: int) -> IntPolynomial:
    """The polynomial 1 - q**d."""
    if d < 1:
        raise ValueError("power must be >= 1")
    return IntPolynomial((1,) + (0,) * (d - 1) + (-1,))


def poly_sign_near_one(p: IntPolynomial) -> int:
    """Sign of p(q) for all q in some interval (1-eps, 1); 0 iff p == 0."""
    return _sign_near_one(p.coeffs)


def poly_germ_compare(p: IntPolynomial, r: IntPolynomial) -> int:
    """Total order on polynomials by germ at 1-: the sign of p - r there."""
    return _sign_near_one([a - b for a, b in _padded(p.coeffs, r.coeffs)])


def _padded(a, b):
    n = max(len(a), len(b))
    return zip(tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b)))


@dataclass(frozen=True)
class RationalGF:
    """Rational generating function numerator(q) / (1 - q**period).

    Not reduced to lowest terms; germ equality is semantic and decided by
    cross-multiplication (see germ_compare), which avoids any gcd machinery.
    """

    numerator: IntPolynomial
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")

    def with_period(self, period: int) -> RationalGF:
        """Rewrite over denominator 1 - q**period (period a multiple of ours)."""
        if period == self.period:
            return self
        if period % self.period:
            raise ValueError("new period must be a multiple of the old")
        reps = period // self.period
        geom = IntPolynomial(
            tuple((1 if i % self.period == 0 else 0) for i in range(self.period * (reps - 1) + 1))
        )
        return RationalGF(self.numerator * geom, period)

    def __sub__(self, other: RationalGF) -> RationalGF:
        d = _lcm(self.period, other.period)
        return RationalGF(
            self.with_period(d).numerator - other.with_period(d).numerator, d
        )


def _lcm(a, b):
    g, x = a, b
    while x:
        g, x = x, g % x
    return a * b // g


def germ_compare(f: RationalGF, g: RationalGF) -> int:
    """Total order on rational generating functions by germ at 1-.

    Cross-multiplies: both denominators 1 - q**d are positive on (0, 1), so
    f - g has the sign of num(f)*(1-q^{dg}) - num(g)*(1-q^{df}) near 1.
    """
    cross = f.numerator * one_minus_power(g.period) - g.numerator * one_minus_power(f.period)
    return poly_sign_near_one(cross)


@dataclass(frozen=True)
class LaurentPrefix:
    """Leading coefficients of the Laurent expansion in t = 1 - q.

    coefficients[j] is the exact rational coefficient of t**(j-1), i.e. the
    tuple starts at order -1.  For the germ of a set, the order -1 value is
    the set's density.
    """

    coefficients: tuple[Fraction, ...]

    @property
    def density(self) -> Fraction:
        return self.coefficients[0]

    @property
    def a0(self) -> Fraction:
        return self.coefficients[1]

    def coefficient(self, order: int) -> Fraction:
        return self.coefficients[order + 1]


def _t_coefficients(p: IntPolynomial) -> list:
    """Integer coefficients of p rewritten in powers of t = 1 - q."""
    n = len(p.coeffs)
    out = []
    for j in range(n):
        s = sum(c * comb(i, j) for i, c in enumerate(p.coeffs) if c)
        out.append(-s if j % 2 else s)
    return out


def laurent_prefix(f: RationalGF, count: int = 4) -> LaurentPrefix:
    """First `count` Laurent coefficients of f at t = 1 - q, exactly.

    Substituting q = 1 - t turns the denominator 1 - (1-t)**d into t*u(t)
    with u(0) = d, so f = (N(t)/u(t)) / t and the series N/u (computed by
    truncated power-series division over the rationals) gives the
    coefficients of orders -1, 0, 1, ...
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    num_t = _t_coefficients(f.numerator)
    d = f.period
    # u[i] = coeff of t**i in (1 - (1-t)**d) / t
    u = [(-comb(d, i + 1) if i % 2 else comb(d, i + 1)) for i in range(d)]
    out = []
    for n in range(count):
        acc = Fraction(num_t[n] if n < len(num_t) else 0)
        for i in range(1, min(n, d - 1) + 1):
            acc -= u[i] * out[n - i]
        out.append(acc / u[0])
    return LaurentPrefix(tuple(out))


def germ_gap(f: RationalGF, g: RationalGF):
    """Leading term of the Laurent expansion of f - g at t = 1 - q.

    Returns (order, value) for the first nonzero coefficient (order >= -1),
    or None when the germs are identical.  Equal densities show up as a gap
    at order 0, the constant-term level.
    """
    diff = f - g
    if diff.numerator.is_zero:
        return None
    prefix = laurent_prefix(diff, diff.numerator.degree + 2)
    for order_plus_one, value in enumerate(prefix.coefficients):
        if value:
            return order_plus_one - 1, value
    raise AssertionError("nonzero rational function with all-zero expansion")
