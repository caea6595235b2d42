"""Continued-fraction engine over exact scalars.

Scalars are a closed union: int/Fraction, FieldElement, or DyadicInterval
(the last for sequences that are real but not algebraic over a fixed field,
e.g. 1 + 2/sqrt(n)).  Recurrences, backward evaluation and the classical
identities are exact whenever the scalars are; value enclosures are rigorous
dyadic intervals obtained from consecutive convergents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigreal.dyadic import Dyadic
from .bigreal.interval import (
    ComplexInterval,
    DyadicInterval,
    from_fraction,
    iv_div,
    iv_hull,
    iv_mul,
    precision,
    singleton,
)
from .errors import (
    FieldMismatch,
    PrecisionInsufficient,
    QuotientBelowOne,
    TailContainsZero,
    ZeroTailDivision,
)
from .numfield import FieldElement

__all__ = [
    "ConvergentState",
    "CFValueEnclosure",
    "GaussianRational",
    "initial_state",
    "advance",
    "run_recurrence",
    "eval_finite",
    "alternating_sum",
    "product_lower_bound_check",
    "enclose_value",
    "error_term_diagnostic",
    "complex_cf_eval",
    "complex_cf_eval_exact",
    "scalar_enclosure",
    "scalar_sign",
    "scalar_is_zero",
    "determinant_value",
]


# -- scalar helpers -----------------------------------------------------------

def _normalize(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def scalar_is_zero(x) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    if isinstance(x, FieldElement):
        return x.is_zero()
    if isinstance(x, DyadicInterval):
        return x.is_point() and x.lo.is_zero()
    return x == 0


def scalar_sign(x):
    """Exact sign for exact scalars; None when an interval straddles zero."""
    x = _normalize(x)
    if isinstance(x, Fraction):
        return (x > 0) - (x < 0)
    if isinstance(x, FieldElement):
        return x.sign_at_identity()
    if isinstance(x, DyadicInterval):
        if x.lo.sign() > 0:
            return 1
        if x.hi.sign() < 0:
            return -1
        if x.is_point():
            return 0
        return None
    raise TypeError(f"unsupported scalar {type(x).__name__}")


def scalar_enclosure(x, prec: int) -> DyadicInterval:
    """Identity-embedding enclosure of a scalar."""
    x = _normalize(x)
    if isinstance(x, Fraction):
        return from_fraction(x, prec)
    if isinstance(x, FieldElement):
        return x.enclosure(prec)
    if isinstance(x, DyadicInterval):
        return x
    raise TypeError(f"unsupported scalar {type(x).__name__}")


def _check_compatible(a, b):
    fa = a.field if isinstance(a, FieldElement) else None
    fb = b.field if isinstance(b, FieldElement) else None
    if fa is not None and fb is not None and fa is not fb:
        raise FieldMismatch("partial quotient from a different field")


def scalar_at_least_one(x) -> bool:
    """Certainly >= 1 under the identity embedding (exact for exact scalars)."""
    x = _normalize(x)
    if isinstance(x, DyadicInterval):
        return x.lo >= Dyadic(1)
    s = scalar_sign(x - 1)
    return s is not None and s >= 0


# -- convergent recurrence -----------------------------------------------------

@dataclass(frozen=True)
class ConvergentState:
    """(p_{n-1}, q_{n-1}, p_n, q_n) plus the index n."""

    n: int
    p_prev: object
    q_prev: object
    p_cur: object
    q_cur: object


def initial_state(a0=0) -> ConvergentState:
    a0 = _normalize(a0)
    one = Fraction(1)
    zero = Fraction(0)
    return ConvergentState(0, one, zero, a0, one)


def advance(state: ConvergentState, a_next) -> ConvergentState:
    """One step of p_{n+1} = a_{n+1} p_n + p_{n-1} (and likewise for q)."""
    a = _normalize(a_next)
    _check_compatible(a, state.p_cur)
    p = a * state.p_cur + state.p_prev
    q = a * state.q_cur + state.q_prev
    return ConvergentState(state.n + 1, state.p_cur, state.q_cur, p, q)


def determinant_value(state: ConvergentState):
    """q_n p_{n-1} - p_n q_{n-1}; equals (-1)^n for exact CF states."""
    return state.q_cur * state.p_prev - state.p_cur * state.q_prev


def run_recurrence(quotients, a0=0) -> list[ConvergentState]:
    """States after each quotient, starting from [a0; q1, q2, ...]."""
    out = []
    st = initial_state(a0)
    for a in quotients:
        st = advance(st, a)
        out.append(st)
    return out


def eval_finite(quotients) -> object:
    """Exact backward evaluation a0 + 1/(a1 + 1/(...)).

    Equals p_n/q_n from the recurrence.  Raises ZeroTailDivision when an
    intermediate tail is exactly zero.
    """
    qs = [_normalize(a) for a in quotients]
    if not qs:
        raise ValueError("empty quotient list")
    acc = qs[-1]
    for a in reversed(qs[:-1]):
        if scalar_is_zero(acc):
            raise ZeroTailDivision("tail evaluates to zero")
        acc = a + 1 / acc
    return acc


def alternating_sum(quotients) -> object:
    """sum_{k=1}^n (-1)^(k+1) / (q_k q_{k-1}) for the CF [0; a1, ..., an]."""
    st = initial_state(0)
    total = None
    prev_q = st.q_cur
    sign = 1
    for a in quotients:
        st = advance(st, a)
        term = sign / (st.q_cur * prev_q)
        total = term if total is None else total + term
        prev_q = st.q_cur
        sign = -sign
    if total is None:
        raise ValueError("empty quotient list")
    return total


def product_lower_bound_check(state: ConvergentState, quotients) -> bool:
    """Exact check of q_n > prod(a_k) for positive quotients."""
    prod = None
    for a in quotients:
        a = _normalize(a)
        prod = a if prod is None else prod * a
    if prod is None:
        raise ValueError("empty quotient list")
    diff = state.q_cur - prod
    s = scalar_sign(diff)
    if s is None:
        raise PrecisionInsufficient("product bound comparison is indeterminate")
    return s > 0


# -- value enclosures ----------------------------------------------------------

@dataclass(frozen=True)
class CFValueEnclosure:
    value: DyadicInterval
    order: int
    tail_bound_kind: str


def _convergent_interval(state: ConvergentState, work: int) -> DyadicInterval:
    p, q = state.p_cur, state.q_cur
    if isinstance(p, Fraction) and isinstance(q, Fraction):
        return from_fraction(p / q, work)
    return iv_div(scalar_enclosure(p, work), scalar_enclosure(q, work), work)


def enclose_value(cf, n: int, prec: int) -> CFValueEnclosure:
    """Rigorous enclosure of the CF limit [0; a1, a2, ...] at order n.

    The limit is sandwiched between consecutive convergents two orders deeper
    than requested: their hull sits strictly inside the order-n bracket with
    margin, so outward rounding can violate neither containment nor the width
    bound 1/(q_n q_{n+1}).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    work = prec + 16
    for _ in range(8):
        with precision(work):
            st = initial_state(0)
            states = []
            for k in range(1, n + 4):
                a = cf.quotient(k)
                if not scalar_at_least_one(a):
                    raise QuotientBelowOne(f"quotient at index {k} is not certainly >= 1")
                st = advance(st, a)
                states.append(st)
            c1 = _convergent_interval(states[n + 1], work)  # order n+2
            c2 = _convergent_interval(states[n + 2], work)  # order n+3
            value = iv_hull(c1, c2)
            qn = scalar_enclosure(states[n - 1].q_cur, work)
            qn1 = scalar_enclosure(states[n].q_cur, work)
            bound = iv_div(singleton(1), iv_mul(qn, qn1, work), work)
        if value.width() <= bound.lo:
            return CFValueEnclosure(value, n, "nested-convergents")
        work *= 2
    raise PrecisionInsufficient("enclosure width bound not met")  # pragma: no cover


def error_term_diagnostic(quotients, prec: int = 128) -> dict:
    """Bounds from the alternating error formula at the last index.

    Given a1..a_{n+1}, bounds |alpha - p_n/q_n| by
    1/(q_n^2 (a_{n+1} + q_{n-1}/q_n [+1]))
    and cross-checks that [0; a_n, ..., a_1] equals q_{n-1}/q_n exactly.
    """
    qs = [_normalize(a) for a in quotients]
    if len(qs) < 2:
        raise ValueError("need at least two quotients")
    states = run_recurrence(qs[:-1])
    st = states[-1]
    a_next = qs[-1]
    with precision(prec):
        qn = scalar_enclosure(st.q_cur, prec)
        qprev = scalar_enclosure(st.q_prev, prec)
        an1 = scalar_enclosure(a_next, prec)
        ratio = iv_div(qprev, qn, prec)
        qn2 = iv_mul(qn, qn, prec)
        upper = iv_div(singleton(1), iv_mul(qn2, an1 + ratio, prec), prec)
        lower = iv_div(singleton(1), iv_mul(qn2, an1 + ratio + 1, prec), prec)
    reversed_val = eval_finite([Fraction(0)] + list(reversed(qs[:-1])))
    identity_ok = scalar_is_zero(reversed_val - st.q_prev / st.q_cur)
    return {
        "upper": upper,
        "lower": lower,
        "reversed_tail_identity": identity_ok,
    }


# -- complex evaluation ----------------------------------------------------------

def complex_cf_eval(zs: list[ComplexInterval], prec: int = 128) -> ComplexInterval:
    """Backward evaluation of [z0; z1, ..., zn] on complex boxes."""
    if not zs:
        raise ValueError("empty quotient list")
    with precision(prec):
        acc = zs[-1]
        for z in reversed(zs[:-1]):
            acc = z + acc.inverse(prec)
    return acc


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational re + i*im."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        d = self.re * self.re + self.im * self.im
        if d == 0:
            raise TailContainsZero("exact zero tail in complex CF")
        return GaussianRational(self.re / d, -self.im / d)

    def abs_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def as_box(self, prec: int = 128) -> ComplexInterval:
        return ComplexInterval.from_rationals(self.re, self.im, prec)


def complex_cf_eval_exact(zs: list[GaussianRational]) -> GaussianRational:
    if not zs:
        raise ValueError("empty quotient list")
    acc = zs[-1]
    for z in reversed(zs[:-1]):
        acc = z + acc.inverse()
    return acc
