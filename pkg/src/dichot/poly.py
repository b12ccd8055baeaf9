"""Dense univariate polynomials with exact integer or rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import IntegrityError


def _norm(c):
    # keep plain ints where possible; Fraction(k, 1) -> k
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Immutable polynomial; coefficient j counts objects of weight j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x_power(cls, d: int, c=1) -> "Polynomial":
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return Polynomial()
        return Polynomial(a * c for a in self.coeffs)

    def evaluate(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return _norm(acc)

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) for c in self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_int(self) -> "Polynomial":
        """Coerce to integer coefficients, or raise if any is fractional."""
        if not self.is_integral():
            raise IntegrityError(f"non-integer coefficients in {self!r}")
        return self

    def is_palindromic(self, span: int) -> bool:
        """True if coefficient j equals coefficient span - j for 0 <= j <= span."""
        if self.degree > span:
            return False
        padded = list(self.coeffs) + [0] * (span + 1 - len(self.coeffs))
        return padded == padded[::-1]

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                x = "x" if j == 1 else f"x^{j}"
                parts.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(parts)


def binomial_power(d: int, e: int) -> Polynomial:
    """(1 + x^d) ** e expanded exactly."""
    out = [0] * (d * e + 1)
    for j in range(e + 1):
        out[d * j] = comb(e, j)
    return Polynomial(out)


def poly_sum(polys) -> Polynomial:
    acc = Polynomial()
    for p in polys:
        acc = acc + p
    return acc
