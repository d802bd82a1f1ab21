"""Exact univariate polynomials over arbitrary-precision rationals.

Coefficients are Python ints wherever possible and `fractions.Fraction`
otherwise; arithmetic never rounds. The named product families used for the
reduced Gram-matrix diagonals live here as `phi_z2` and `phi_partition`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = ["Poly", "phi_z2", "phi_partition", "quadratic_factor", "linear_factor"]


def _normalize_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Dense exact polynomial; `coeffs[i]` multiplies x**i, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_normalize_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return _ZERO

    @classmethod
    def one(cls) -> "Poly":
        return _ONE

    @classmethod
    def x(cls) -> "Poly":
        return _X

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of a nonzero polynomial; the zero polynomial returns -1."""
        return len(self.coeffs) - 1

    def leading_coeff(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def scalar_mul(self, c: Scalar) -> "Poly":
        if c == 0:
            return _ZERO
        return Poly([c * a for a in self.coeffs])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = Fraction(other.coeffs[-1])
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return _ZERO, self
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            top = rem[i + len(other.coeffs) - 1]
            if top == 0:
                continue
            q = _normalize_scalar(Fraction(top) / lead)
            quo[i] = q
            for j, c in enumerate(other.coeffs):
                rem[i + j] -= q * c
        return Poly(quo), Poly(rem)

    def divides(self, other: "Poly") -> bool:
        """True iff self divides other exactly."""
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def eval_at(self, q: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return _normalize_scalar(acc)

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = -c if c < 0 else c
            if e == 0:
                body = str(mag)
            else:
                xpow = "x" if e == 1 else f"x^{e}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            terms.append(sign + body)
        return "".join(terms)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """Ascending coefficients as exact decimal strings (big-int safe)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: Sequence[str]) -> "Poly":
        return cls(Fraction(c) for c in coeffs)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)


_ZERO = Poly([])
_ONE = Poly([1])
_X = Poly([0, 1])


def quadratic_factor(m: int) -> Poly:
    """x^2 - x - 2m, the quadratic attached to level m."""
    return Poly([-2 * m, -1, 1])


def linear_factor(m: int) -> Poly:
    """x - m."""
    return Poly([-m, 1])


def phi_z2(s1: int, s2: int, r1: int, r2: int) -> Poly:
    """Reduced diagonal polynomial for a cell with r1 paired and r2 fixed edges.

    Product of r1 quadratics x^2-x-2(s1+j) and r2 linear factors x-(s2+l);
    empty products are 1, and the convention for negative r1 or r2 is the
    zero polynomial.
    """
    if r1 < 0 or r2 < 0:
        return Poly.zero()
    out = Poly.one()
    for j in range(r1):
        out = out * quadratic_factor(s1 + j)
    for l in range(r2):
        out = out * linear_factor(s2 + l)
    return out


def phi_partition(s: int, r: int) -> Poly:
    """Falling product (x-s)(x-s-1)...(x-s-r+1); zero polynomial if r < 0."""
    if r < 0:
        return Poly.zero()
    out = Poly.one()
    for l in range(r):
        out = out * linear_factor(s + l)
    return out
