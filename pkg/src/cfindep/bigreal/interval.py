"""Outward-rounded interval arithmetic over dyadic endpoints.

Every operation returns an interval that contains the exact mathematical
result of applying the operation to any points of its inputs.  Endpoints are
rounded outward to the working precision, which is either passed explicitly
or taken from the ambient :func:`precision` context (default 128 bits).

Beyond ring operations the module provides the few directed transcendental
bounds the hypothesis checkers need (``iv_exp2``, ``iv_log2``, rational
powers) and a complex box type used by lemma verification and conjugate
enclosures.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DivisorContainsZero, NegativeSqrt, TailContainsZero
from .dyadic import Dyadic, rational_to_dyadic, sqrt_down, sqrt_up

__all__ = [
    "DyadicInterval",
    "ComplexInterval",
    "precision",
    "get_precision",
    "iv_add",
    "iv_sub",
    "iv_mul",
    "iv_div",
    "iv_sqrt",
    "iv_abs",
    "iv_neg",
    "iv_square",
    "iv_pow_int",
    "iv_max",
    "iv_min",
    "iv_hull",
    "iv_exp2",
    "iv_log2",
    "iv_pow_frac",
    "from_fraction",
    "singleton",
]

_PRECISION: ContextVar[int] = ContextVar("cfindep_precision", default=128)


def get_precision() -> int:
    return _PRECISION.get()


@contextmanager
def precision(bits: int):
    """Set the ambient working precision for interval operators."""
    if bits < 4:
        raise ValueError("precision below 4 bits is meaningless")
    token = _PRECISION.set(bits)
    try:
        yield
    finally:
        _PRECISION.reset(token)


@dataclass(frozen=True, slots=True)
class DyadicInterval:
    """Closed interval [lo, hi] with dyadic endpoints, lo <= hi."""

    lo: Dyadic
    hi: Dyadic

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    # -- queries ---------------------------------------------------------

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def midpoint(self) -> Dyadic:
        return (self.lo + self.hi).scaled(-1)

    def mag(self) -> Dyadic:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> Dyadic:
        """min |x| over the interval (0 if the interval straddles 0)."""
        if self.lo.sign() <= 0 <= self.hi.sign():
            return Dyadic(0)
        return min(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains_zero(self) -> bool:
        return self.lo.sign() <= 0 <= self.hi.sign()

    def contains(self, x) -> bool:
        f = _as_fraction(x)
        return self.lo.as_fraction() <= f <= self.hi.as_fraction()

    def contains_interval(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "DyadicInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def certainly_lt(self, other: "DyadicInterval") -> bool:
        return self.hi < other.lo

    def certainly_gt(self, other: "DyadicInterval") -> bool:
        return self.lo > other.hi

    def certainly_ge(self, other: "DyadicInterval") -> bool:
        return self.lo >= other.hi

    def certainly_le(self, other: "DyadicInterval") -> bool:
        return self.hi <= other.lo

    def __float__(self) -> float:
        return float(self.midpoint())

    def __repr__(self) -> str:
        return f"DyadicInterval({float(self.lo)!r}, {float(self.hi)!r})"

    # -- operators at ambient precision -----------------------------------

    def __add__(self, other):
        o = _coerce(other)
        return iv_add(self, o) if o is not None else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        return iv_sub(self, o) if o is not None else NotImplemented

    def __rsub__(self, other):
        o = _coerce(other)
        return iv_sub(o, self) if o is not None else NotImplemented

    def __mul__(self, other):
        o = _coerce(other)
        return iv_mul(self, o) if o is not None else NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        return iv_div(self, o) if o is not None else NotImplemented

    def __rtruediv__(self, other):
        o = _coerce(other)
        return iv_div(o, self) if o is not None else NotImplemented

    def __neg__(self):
        return iv_neg(self)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Dyadic):
        return x.as_fraction()
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def _coerce(x):
    if isinstance(x, DyadicInterval):
        return x
    if isinstance(x, Dyadic):
        return DyadicInterval(x, x)
    if isinstance(x, int):
        d = Dyadic(x)
        return DyadicInterval(d, d)
    if isinstance(x, Fraction):
        return from_fraction(x, get_precision())
    return None


def singleton(x) -> DyadicInterval:
    """Exact zero-width interval from an int or Dyadic."""
    d = x if isinstance(x, Dyadic) else Dyadic(int(x))
    return DyadicInterval(d, d)


def from_fraction(value: Fraction, prec: int | None = None) -> DyadicInterval:
    """Tight enclosure of an exact rational at the given precision."""
    prec = prec or get_precision()
    value = Fraction(value)
    lo = rational_to_dyadic(value.numerator, value.denominator, prec, up=False)
    hi = rational_to_dyadic(value.numerator, value.denominator, prec, up=True)
    return DyadicInterval(lo, hi)


ZERO_IV = DyadicInterval(Dyadic(0), Dyadic(0))
ONE_IV = DyadicInterval(Dyadic(1), Dyadic(1))


def _round_out(lo: Dyadic, hi: Dyadic, prec: int) -> DyadicInterval:
    return DyadicInterval(lo.round_down(prec), hi.round_up(prec))


def iv_add(a: DyadicInterval, b: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    return _round_out(a.lo + b.lo, a.hi + b.hi, prec)


def iv_sub(a: DyadicInterval, b: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    return _round_out(a.lo - b.hi, a.hi - b.lo, prec)


def iv_neg(a: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(-a.hi, -a.lo)


def iv_mul(a: DyadicInterval, b: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return _round_out(min(products), max(products), prec)


def iv_div(a: DyadicInterval, b: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    if b.contains_zero():
        raise DivisorContainsZero(f"divisor {b!r} contains zero")
    quots = [
        a.lo.as_fraction() / b.lo.as_fraction(),
        a.lo.as_fraction() / b.hi.as_fraction(),
        a.hi.as_fraction() / b.lo.as_fraction(),
        a.hi.as_fraction() / b.hi.as_fraction(),
    ]
    lo, hi = min(quots), max(quots)
    return DyadicInterval(
        rational_to_dyadic(lo.numerator, lo.denominator, prec, up=False),
        rational_to_dyadic(hi.numerator, hi.denominator, prec, up=True),
    )


def iv_sqrt(a: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    if a.lo.sign() < 0:
        raise NegativeSqrt(f"sqrt of {a!r}")
    return DyadicInterval(sqrt_down(a.lo, prec), sqrt_up(a.hi, prec))


def iv_abs(a: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(a.mig(), a.mag())


def iv_square(a: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    lo, hi = a.mig(), a.mag()
    return _round_out(lo * lo, hi * hi, prec)


def iv_pow_int(a: DyadicInterval, k: int, prec: int | None = None) -> DyadicInterval:
    prec = prec or get_precision()
    if k < 0:
        return iv_div(ONE_IV, iv_pow_int(a, -k, prec), prec)
    result = ONE_IV
    base = a
    while k:
        if k & 1:
            result = iv_mul(result, base, prec)
        k >>= 1
        if k:
            base = iv_square(base, prec)
    return result


def iv_max(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(max(a.lo, b.lo), max(a.hi, b.hi))


def iv_min(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(min(a.lo, b.lo), min(a.hi, b.hi))


def iv_hull(a: DyadicInterval, b: DyadicInterval) -> DyadicInterval:
    return DyadicInterval(min(a.lo, b.lo), max(a.hi, b.hi))


# ---------------------------------------------------------------------------
# directed exponential / logarithm bounds
# ---------------------------------------------------------------------------

_LN2_CACHE: dict[int, DyadicInterval] = {}


def _ln2(prec: int) -> DyadicInterval:
    """Enclosure of ln 2 = 2*atanh(1/3)."""
    cached = _LN2_CACHE.get(prec)
    if cached is not None:
        return cached
    work = prec + 16
    t = from_fraction(Fraction(1, 3), work)
    t2 = iv_square(t, work)
    threshold = Dyadic(1, -(prec + 8))
    total = ZERO_IV
    power = t
    k = 0
    while True:
        term = iv_div(power, singleton(2 * k + 1), work)
        total = iv_add(total, term, work)
        power = iv_mul(power, t2, work)
        k += 1
        nxt = power.hi
        if nxt < threshold:
            # remaining terms are bounded by a geometric tail < 2 * next power
            total = iv_add(total, DyadicInterval(Dyadic(0), nxt.scaled(1)), work)
            break
    res = iv_mul(total, singleton(2), work)
    _LN2_CACHE[prec] = res
    return res


def _ln_mantissa(m_num: int, m_shift: int, prec: int) -> DyadicInterval:
    """ln(m) for m = m_num / 2**m_shift in [1, 2), via 2*atanh((m-1)/(m+1))."""
    work = prec + 16
    num = m_num - (1 << m_shift)
    den = m_num + (1 << m_shift)
    if num == 0:
        return ZERO_IV
    t = DyadicInterval(
        rational_to_dyadic(num, den, work, up=False),
        rational_to_dyadic(num, den, work, up=True),
    )
    t2 = iv_square(t, work)
    threshold = Dyadic(1, -(prec + 8))
    total = ZERO_IV
    power = t
    k = 0
    while True:
        term = iv_div(power, singleton(2 * k + 1), work)
        total = iv_add(total, term, work)
        power = iv_mul(power, t2, work)
        k += 1
        if power.hi < threshold:
            total = iv_add(total, DyadicInterval(Dyadic(0), power.hi.scaled(1)), work)
            break
    return iv_mul(total, singleton(2), work)


def _log2_point(x: Dyadic, prec: int) -> DyadicInterval:
    if x.sign() <= 0:
        raise ValueError("log2 requires a positive argument")
    if x.man == 1:
        return singleton(x.exp)  # exact power of two
    bits = x.man.bit_length()
    e = x.exp + bits - 1
    work = prec + 16
    ln_m = _ln_mantissa(x.man, bits - 1, work)
    frac = iv_div(ln_m, _ln2(work), work)
    return iv_add(singleton(e), frac, prec)


def iv_log2(a: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    """Enclosure of log2 over a strictly positive interval."""
    prec = prec or get_precision()
    if a.lo.sign() <= 0:
        raise ValueError("log2 requires a strictly positive interval")
    return DyadicInterval(_log2_point(a.lo, prec).lo, _log2_point(a.hi, prec).hi)


def _exp2_point(x: Dyadic, prec: int) -> DyadicInterval:
    if x.is_integer():
        k = x.floor()
        return singleton(Dyadic(1, k))
    k = x.floor()
    r = x - Dyadic(k)  # in (0, 1), exact
    work = prec + 16
    u = iv_mul(DyadicInterval(r, r), _ln2(work), work)  # in (0, ln 2)
    threshold = Dyadic(1, -(prec + 8))
    total = ONE_IV
    term = u
    j = 1
    while True:
        total = iv_add(total, term, work)
        j += 1
        term = iv_div(iv_mul(term, u, work), singleton(j), work)
        if term.hi < threshold:
            # ratio of consecutive terms < ln2/j <= 0.35 here, tail < 2*term
            total = iv_add(total, DyadicInterval(Dyadic(0), term.hi.scaled(1)), work)
            break
    return _round_out(total.lo.scaled(k), total.hi.scaled(k), prec)


def iv_exp2(a: DyadicInterval, prec: int | None = None) -> DyadicInterval:
    """Enclosure of 2**x over the interval."""
    prec = prec or get_precision()
    return DyadicInterval(_exp2_point(a.lo, prec).lo, _exp2_point(a.hi, prec).hi)


def _introot(n: int, k: int) -> int:
    """Floor of the integer k-th root of n >= 0."""
    if n == 0:
        return 0
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _exact_pow(v: Dyadic, gamma: Fraction) -> Dyadic | None:
    """v**gamma when it happens to be dyadic, else None."""
    u, w = gamma.numerator, gamma.denominator
    if v.man == 0:
        return Dyadic(0)
    if v.exp % w:
        return None
    r = _introot(v.man, w)
    if r ** w != v.man:
        return None
    root = Dyadic(r, v.exp // w)
    out = Dyadic(1)
    for _ in range(u):
        out = out * root
    return out


def _pow_point(v: Dyadic, gamma: Fraction, prec: int) -> DyadicInterval:
    if v.sign() < 0:
        raise ValueError("rational power requires a nonnegative base")
    if v.man == 0:
        return ZERO_IV
    exact = _exact_pow(v, gamma)
    if exact is not None:
        return singleton(exact)
    if gamma.denominator == 2:
        sq = iv_pow_int(DyadicInterval(v, v), gamma.numerator, prec + 8)
        return iv_sqrt(sq, prec)
    lg = iv_mul(_log2_point(v, prec + 8), from_fraction(gamma, prec + 8), prec + 8)
    return iv_exp2(lg, prec)


def iv_pow_frac(a: DyadicInterval, gamma: Fraction, prec: int | None = None) -> DyadicInterval:
    """Enclosure of x**gamma for x >= 0 and rational gamma > 0 (monotone)."""
    prec = prec or get_precision()
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("exponent must be positive")
    return DyadicInterval(_pow_point(a.lo, gamma, prec).lo, _pow_point(a.hi, gamma, prec).hi)


# ---------------------------------------------------------------------------
# complex boxes
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ComplexInterval:
    """Axis-aligned box re + i*im with interval components."""

    re: DyadicInterval
    im: DyadicInterval

    @classmethod
    def from_rationals(cls, re: Fraction, im: Fraction, prec: int | None = None) -> "ComplexInterval":
        return cls(from_fraction(Fraction(re), prec), from_fraction(Fraction(im), prec))

    @classmethod
    def point(cls, re, im=0) -> "ComplexInterval":
        return cls(_coerce(re), _coerce(im))

    def is_point(self) -> bool:
        return self.re.is_point() and self.im.is_point()

    def conjugate(self) -> "ComplexInterval":
        return ComplexInterval(self.re, iv_neg(self.im))

    def __neg__(self) -> "ComplexInterval":
        return ComplexInterval(iv_neg(self.re), iv_neg(self.im))

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(iv_add(self.re, other.re), iv_add(self.im, other.im))

    def __sub__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(iv_sub(self.re, other.re), iv_sub(self.im, other.im))

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        re = iv_sub(iv_mul(self.re, other.re), iv_mul(self.im, other.im))
        im = iv_add(iv_mul(self.re, other.im), iv_mul(self.im, other.re))
        return ComplexInterval(re, im)

    def abs_squared(self, prec: int | None = None) -> DyadicInterval:
        return iv_add(iv_square(self.re, prec), iv_square(self.im, prec), prec)

    def abs_interval(self, prec: int | None = None) -> DyadicInterval:
        return iv_sqrt(self.abs_squared(prec), prec)

    def inverse(self, prec: int | None = None) -> "ComplexInterval":
        d = self.abs_squared(prec)
        if d.lo.sign() <= 0:
            raise TailContainsZero("complex box may contain zero")
        return ComplexInterval(iv_div(self.re, d, prec), iv_div(iv_neg(self.im), d, prec))
