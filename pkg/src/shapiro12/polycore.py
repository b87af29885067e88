"""Exact univariate polynomial arithmetic over the rationals.

Dense representation: ``coeffs[i]`` holds the coefficient of ``x**i`` and
trailing zeros are stripped, so equality is structural.  All arithmetic is
exact; nothing in this module ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

CoefficientLike = Union[Fraction, int, str]

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _canonical(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over Q, ascending coefficients, canonical form."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use from_coefficients")

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x**power (zero beyond the degree)."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(_canonical(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(_canonical(out))

    def __rmul__(self, other: "Fraction | int") -> "Polynomial":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c: Fraction | int) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return Polynomial(tuple(coef * c for coef in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(_canonical(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def eval_at(self, x: Fraction | int) -> Fraction:
        """Exact value at x, by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "x" if i == 1 else f"x^{i}"
                term = base if mag == 1 else f"{mag}{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


ZERO = Polynomial(())
ONE = Polynomial((Fraction(1),))


def from_coefficients(coeffs: Sequence[CoefficientLike]) -> Polynomial:
    """Build a canonical polynomial from ascending coefficients."""
    return Polynomial(_canonical(Fraction(c) for c in coeffs))


def constant(c: CoefficientLike) -> Polynomial:
    return from_coefficients([c])


def monic(p: Polynomial) -> Polynomial:
    if p.is_zero:
        raise ValueError("cannot normalize the zero polynomial")
    return p.scale(1 / p.leading_coefficient())


def divmod_exact(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of p by q over Q."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lq = q.coeffs[-1]
    quo = [Fraction(0)] * max(0, len(rem) - dq)
    while len(rem) - 1 >= dq and rem:
        k = len(rem) - 1 - dq
        f = rem[-1] / lq
        quo[k] = f
        for i, c in enumerate(q.coeffs):
            rem[i + k] -= f * c
        while rem and rem[-1] == 0:
            rem.pop()
    return Polynomial(_canonical(quo)), Polynomial(tuple(rem))


def div_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    quo, rem = divmod_exact(p, q)
    if not rem.is_zero:
        raise ValueError("inexact polynomial division")
    return quo


# ---------------------------------------------------------------------------
# Integer kernel: primitive integer images used for fast exact sign work.
# A primitive image is a positive rational multiple of the polynomial, so it
# has the same real roots and the same sign everywhere.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _int_coeffs(p: Polynomial) -> tuple[int, ...]:
    if not p.coeffs:
        return ()
    lcm = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [c.numerator * (lcm // c.denominator) for c in p.coeffs]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def _int_primitive(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    g = math.gcd(*coeffs)
    return [c // g for c in coeffs]


def _int_derivative(coeffs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _int_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder of a by b (result is some rational multiple of a mod b)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] -= lr * bc
        del r[-1]
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_rem_positive(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Remainder of a by b up to a strictly positive rational factor.

    Each reduction step scales by abs(lc(b)) instead of lc(b), so the sign
    of the true remainder is preserved.  Needed for Sturm chains.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    alb = abs(lb)
    slb = _sign(lb)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        k = len(r) - 1 - db
        r = [alb * c for c in r]
        for i, bc in enumerate(b):
            r[i + k] -= slb * lr * bc
        del r[-1]
        while r and r[-1] == 0:
            r.pop()
    return r


def sign_at(p: Polynomial, x: Fraction | int) -> int:
    """Exact sign of p(x), computed with integer arithmetic only."""
    c = _int_coeffs(p)
    if not c:
        return 0
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    acc = c[-1]
    bp = 1
    for coef in reversed(c[:-1]):
        bp *= b
        acc = acc * a + coef * bp
    return _sign(acc)


def sign_at_infinity(p: Polynomial, positive: bool) -> int:
    """Sign of p(x) as x -> +inf (positive=True) or x -> -inf."""
    if p.is_zero:
        return 0
    s = _sign(p.leading_coefficient())
    if positive or len(p.coeffs) % 2 == 1:
        return s
    return -s


@lru_cache(maxsize=None)
def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor, via a primitive Euclidean remainder scheme."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a = list(_int_coeffs(p))
    b = list(_int_coeffs(q))
    if not a:
        a, b = b, a
    while b:
        a, b = b, _int_primitive(_int_prem(a, b))
    return monic(from_coefficients(a))


@lru_cache(maxsize=None)
def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return ONE
    return monic(div_exact(p, gcd(p, p.derivative())))


@lru_cache(maxsize=None)
def squarefree_decomposition(p: Polynomial) -> tuple[tuple[int, Polynomial], ...]:
    """Yun decomposition: pairs (multiplicity, monic squarefree factor).

    p equals its leading coefficient times the product of factor**multiplicity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree == 0:
        return ()
    f = monic(p)
    fp = f.derivative()
    g = gcd(f, fp)
    if g.degree == 0:
        return ((1, f),)
    w = div_exact(f, g)
    z = div_exact(fp, g) - w.derivative()
    out: list[tuple[int, Polynomial]] = []
    i = 1
    while w.degree > 0:
        gi = gcd(w, z)
        if gi.degree > 0:
            out.append((i, gi))
        w = div_exact(w, gi)
        z = div_exact(z, gi) - w.derivative()
        i += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Text format: comma-separated ascending coefficients, integers or num/den.
# ---------------------------------------------------------------------------

def parse_polynomial(text: str, descending: bool = False) -> Polynomial:
    """Parse the comma-separated coefficient format, e.g. ``1,0,1`` for x^2+1."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t for t in tokens):
        raise ValueError(f"malformed polynomial text: {text!r}")
    try:
        values = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed polynomial text: {text!r}") from exc
    if descending:
        values.reverse()
    return from_coefficients(values)


def format_polynomial(p: Polynomial) -> str:
    """Inverse of parse_polynomial; bit-exact round trip."""
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in p.coeffs)
