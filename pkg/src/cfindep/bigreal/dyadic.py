"""Exact dyadic rationals m * 2**e with directed rounding.

Dyadics are the endpoint type of every interval in the library.  Addition,
subtraction and multiplication are exact; anything inexact (division, square
roots, transcendental bounds) lives at the interval layer and rounds outward
through the helpers here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Dyadic",
    "rational_to_dyadic",
    "sqrt_down",
    "sqrt_up",
]


def _split_twos(man: int) -> tuple[int, int]:
    # largest s with 2^s | man, for man != 0
    s = (man & -man).bit_length() - 1
    return man >> s, s


@dataclass(frozen=True, slots=True)
class Dyadic:
    """Canonical dyadic rational: ``man`` odd or zero, zero has ``exp == 0``."""

    man: int = 0
    exp: int = 0

    def __post_init__(self):
        if self.man == 0:
            if self.exp != 0:
                object.__setattr__(self, "exp", 0)
        elif self.man % 2 == 0:
            m, s = _split_twos(self.man)
            object.__setattr__(self, "man", m)
            object.__setattr__(self, "exp", self.exp + s)

    # -- constructors / conversions ------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Dyadic":
        return cls(n, 0)

    @classmethod
    def from_float(cls, x: float) -> "Dyadic":
        if not math.isfinite(x):
            raise ValueError("non-finite float")
        m, e = math.frexp(x)
        return cls(int(m * (1 << 53)), e - 53)

    def as_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def __float__(self) -> float:
        man, exp = self.man, self.exp
        bits = abs(man).bit_length()
        if bits > 53:
            man >>= bits - 53
            exp += bits - 53
        try:
            return math.ldexp(man, exp)
        except OverflowError:
            # magnitude only matters for display; clamp
            return math.inf if man > 0 else -math.inf

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.man == 0

    def sign(self) -> int:
        return (self.man > 0) - (self.man < 0)

    def bit_size(self) -> int:
        """Number of significant bits of the mantissa."""
        return abs(self.man).bit_length()

    def is_integer(self) -> bool:
        return self.exp >= 0

    def floor(self) -> int:
        if self.exp >= 0:
            return self.man << self.exp
        return self.man >> -self.exp

    # -- exact arithmetic -------------------------------------------------

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.man, self.exp)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.man), self.exp)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        e = min(self.exp, other.exp)
        return Dyadic((self.man << (self.exp - e)) + (other.man << (other.exp - e)), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        e = min(self.exp, other.exp)
        return Dyadic((self.man << (self.exp - e)) - (other.man << (other.exp - e)), e)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.man * other.man, self.exp + other.exp)

    def scaled(self, k: int) -> "Dyadic":
        """Exact multiplication by 2**k."""
        if self.man == 0:
            return self
        return Dyadic(self.man, self.exp + k)

    # -- comparisons (exact) ----------------------------------------------

    def _cmp(self, other: "Dyadic") -> int:
        e = min(self.exp, other.exp)
        a = self.man << (self.exp - e)
        b = other.man << (other.exp - e)
        return (a > b) - (a < b)

    def __lt__(self, other: "Dyadic") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Dyadic") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Dyadic") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Dyadic") -> bool:
        return self._cmp(other) >= 0

    # __eq__/__hash__ from the frozen dataclass agree with _cmp because the
    # representation is canonical.

    # -- directed rounding --------------------------------------------------

    def round_down(self, prec: int) -> "Dyadic":
        """Largest dyadic with at most ``prec`` mantissa bits that is <= self."""
        excess = abs(self.man).bit_length() - prec
        if excess <= 0:
            return self
        return Dyadic(self.man >> excess, self.exp + excess)  # >> floors

    def round_up(self, prec: int) -> "Dyadic":
        excess = abs(self.man).bit_length() - prec
        if excess <= 0:
            return self
        return Dyadic(-((-self.man) >> excess), self.exp + excess)

    def __repr__(self) -> str:
        return f"Dyadic({self.man}, {self.exp})"


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)


def rational_to_dyadic(num: int, den: int, prec: int, up: bool) -> Dyadic:
    """Directed rounding of num/den to at most ``prec`` significant bits.

    ``den`` must be positive.  ``up=False`` rounds toward -inf, ``up=True``
    toward +inf.  Exact when num/den happens to be dyadic and fits.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num == 0:
        return ZERO
    # scale so that the integer quotient carries prec+1 bits
    shift = prec + 1 - (abs(num).bit_length() - den.bit_length())
    if shift >= 0:
        n, d = num << shift, den
    else:
        n, d = num, den << -shift
    if up:
        q = -((-n) // d)
    else:
        q = n // d
    return Dyadic(q, -shift)


def sqrt_down(x: Dyadic, prec: int) -> Dyadic:
    """Largest dyadic with ~prec bits that is <= sqrt(x).  Requires x >= 0."""
    if x.man < 0:
        raise ValueError("sqrt of negative dyadic")
    if x.man == 0:
        return ZERO
    # work with v = man * 2^exp; force an even exponent 2t and enough bits
    man, exp = x.man, x.exp
    extra = max(0, 2 * prec + 2 - man.bit_length())
    if (exp - extra) % 2:
        extra += 1
    man <<= extra
    exp -= extra
    r = math.isqrt(man)  # r^2 <= man
    return Dyadic(r, exp // 2).round_down(prec + 1)


def sqrt_up(x: Dyadic, prec: int) -> Dyadic:
    if x.man < 0:
        raise ValueError("sqrt of negative dyadic")
    if x.man == 0:
        return ZERO
    man, exp = x.man, x.exp
    extra = max(0, 2 * prec + 2 - man.bit_length())
    if (exp - extra) % 2:
        extra += 1
    man <<= extra
    exp -= extra
    r = math.isqrt(man)
    if r * r < man:
        r += 1
    return Dyadic(r, exp // 2).round_up(prec + 1)
