"""Finite-prefix checkers for the linear-independence hypotheses.

Each condition of the criterion is verified mechanically for n <= N with
interval evidence and per-index margins.  Asymptotic hypotheses (liminf and
limsup conditions) cannot be decided from a prefix: their "pass" verdicts
mean *prefix-consistent* and are labeled as such in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .bigreal.dyadic import Dyadic
from .bigreal.interval import (
    DyadicInterval,
    from_fraction,
    iv_div,
    iv_exp2,
    iv_log2,
    iv_max,
    iv_mul,
    iv_pow_frac,
    iv_sqrt,
    iv_sub,
    singleton,
)
from .cfcore import scalar_enclosure, scalar_sign
from .errors import IndeterminateAtPrecision
from .numfield import FieldElement, NumberField, embeddings, house, is_algebraic_integer, sigma_eval
from .sequences import CFSpec, spec

__all__ = [
    "Thm1Config",
    "ConditionReport",
    "HypothesisReport",
    "MarginSeries",
    "compute_d",
    "growth_bound",
    "check_decomposition",
    "check_house_conditions",
    "check_condition10",
    "check_interleaving",
    "ratio_margin",
    "growth_margin",
    "check_all",
    "c2_config",
]

PASS = "pass"
FAIL = "fail"
INDET = "indeterminate"


def compute_d(D: int, M: int) -> int:
    """The growth base d = max(2, D*M - 1)."""
    if D < 1 or M < 1:
        raise ValueError("degree and sequence count must be >= 1")
    return max(2, D * M - 1)


@dataclass
class Thm1Config:
    """A concrete instance of the criterion's hypotheses.

    ``sequences`` are ordered with j=1 the (eventually) largest, matching the
    ratio condition a_{n,j}/a_{n,j+1} > 1.  ``field`` fixes the ambient field
    degree D; None means Q (D=1).  Per-sequence elements may live in their own
    fields (e.g. root families of a reducible polynomial); houses, integrality
    and embedding signs are evaluated against each element's own conjugates.
    """

    M: int
    sequences: list[CFSpec]
    gamma: Fraction = Fraction(1, 2)
    field: NumberField | None = None
    D: int | None = None
    condition5_mode: str = "auto"  # house-half | real-part-sign | auto
    e_table: dict | None = None
    name: str | None = None

    def __post_init__(self):
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie strictly inside (0, 1)")
        if len(self.sequences) != self.M:
            raise ValueError("sequence count must equal M")
        if self.condition5_mode not in ("house-half", "real-part-sign", "auto"):
            raise ValueError(f"unknown condition5 mode {self.condition5_mode!r}")

    @property
    def degree(self) -> int:
        if self.D is not None:
            return self.D
        return self.field.degree if self.field is not None else 1

    @property
    def d(self) -> int:
        return compute_d(self.degree, self.M)

    def quotient(self, n: int, j: int):
        return self.sequences[j - 1].quotient(n)


@dataclass
class MarginSeries:
    """Per-index margins plus the windowed diagnostics behind a verdict."""

    values: list[DyadicInterval]
    verdict: str
    window_min: DyadicInterval | None = None
    monotonicity: str | None = None
    records: list[int] | None = None


@dataclass
class ConditionReport:
    name: str
    verdict: str
    verified_up_to: int
    margin_series: list[DyadicInterval]
    failing_index: tuple | None = None
    notes: dict = dc_field(default_factory=dict)


@dataclass
class HypothesisReport:
    overall: str
    conditions: list[ConditionReport]
    d: int
    gamma: Fraction
    mode_used: str | None
    name: str | None = None


# ---------------------------------------------------------------------------
# scalar utilities that accept Fraction or FieldElement
# ---------------------------------------------------------------------------

def _house(x, prec: int) -> DyadicInterval:
    if isinstance(x, FieldElement):
        return house(x, prec)
    f = abs(Fraction(x))
    return from_fraction(f, prec)


def _is_alg_int(x) -> bool:
    if isinstance(x, FieldElement):
        return is_algebraic_integer(x)
    return Fraction(x).denominator == 1


def _embedding_re_parts(x, prec: int) -> list[DyadicInterval]:
    """Real parts of all conjugate embeddings of x (own field)."""
    if isinstance(x, FieldElement):
        e = embeddings(x.field, prec)
        return [sigma_eval(e, x, i)[0] for i in range(e.degree)]
    return [from_fraction(Fraction(x), prec)]


def _invert(x):
    if isinstance(x, FieldElement):
        return x.inverse()
    return 1 / Fraction(x)


def _scalars_equal(a, b) -> bool:
    if isinstance(a, FieldElement) and isinstance(b, FieldElement):
        if a.field is not b.field:
            return a.is_rational() and b.is_rational() and a.as_fraction() == b.as_fraction()
        return a.coords == b.coords
    if isinstance(a, FieldElement):
        return a.is_rational() and a.as_fraction() == Fraction(b)
    if isinstance(b, FieldElement):
        return b.is_rational() and b.as_fraction() == Fraction(a)
    return Fraction(a) == Fraction(b)


# ---------------------------------------------------------------------------
# the right-hand-side growth bound
# ---------------------------------------------------------------------------

def growth_bound(a_value, n: int, gamma: Fraction, d: int, prec: int) -> DyadicInterval:
    """max(2^((log2 a)^gamma), 2^(d^(n^gamma))) as an interval enclosure.

    Exact fast paths keep boundary comparisons decidable: n^gamma is exact for
    perfect powers, making the second branch an exact power of two.  log2(a)
    is clamped at zero so the bound stays evaluable when a quotient dips below
    one (which the decomposition condition reports separately).
    """
    a_iv = scalar_enclosure(a_value, prec)
    if a_iv.lo.sign() <= 0:
        raise ValueError("growth bound needs a positive quotient enclosure")
    lg = iv_log2(a_iv, prec)
    zero = Dyadic(0)
    lg = DyadicInterval(max(zero, lg.lo), max(zero, lg.hi))
    first = iv_exp2(iv_pow_frac(lg, gamma, prec), prec)
    ng = iv_pow_frac(singleton(n), gamma, prec)
    if ng.is_point() and ng.lo.is_integer():
        second = iv_exp2(singleton(d ** ng.lo.floor()), prec)
    else:
        second = iv_exp2(iv_mul(ng, iv_log2(singleton(d), prec), prec), prec)
    return iv_max(first, second)


def _escalating(fn, prec: int, doublings: int = 5):
    """Run fn(work) until it returns a non-None verdict; None means undecided."""
    work = prec
    last = None
    for _ in range(doublings + 1):
        verdict, payload = fn(work)
        last = payload
        if verdict is not None:
            return verdict, payload
        work *= 2
    return None, last


# ---------------------------------------------------------------------------
# individual condition checkers
# ---------------------------------------------------------------------------

def check_decomposition(cfg: Thm1Config, n: int, j: int) -> str:
    """Exact check of a_{n,j} = (S b + c)/d with integral pieces and a >= 1."""
    seq = cfg.sequences[j - 1]
    dec = seq.decomposition(n)
    if dec is None:
        return INDET
    if not isinstance(dec.S, int):
        return FAIL
    if not (_is_alg_int(dec.b) and _is_alg_int(dec.c) and _is_alg_int(dec.d)):
        return FAIL
    recomposed = (dec.S * dec.b + dec.c) / dec.d
    a = cfg.quotient(n, j)
    if not _scalars_equal(recomposed, a):
        return FAIL
    s = scalar_sign(a - 1)
    if s is None or s < 0:
        return FAIL
    return PASS


def check_house_conditions(cfg: Thm1Config, n: int, j: int, precision: int = 128) -> str:
    """Interval check of house(1/a) >= 1/2 and house(b|c|d) <= growth bound."""
    v5 = _check_house_half(cfg, n, j, precision)
    v4 = _check_house_bound(cfg, n, j, precision)
    if FAIL in (v5, v4):
        return FAIL
    if INDET in (v5, v4):
        raise IndeterminateAtPrecision(f"house conditions undecided at (n={n}, j={j})")
    return PASS


def _check_house_half(cfg: Thm1Config, n: int, j: int, precision: int):
    a = cfg.quotient(n, j)
    half = from_fraction(Fraction(1, 2), 32)

    def attempt(work):
        h = _house(_invert(a), work)
        if h.certainly_ge(half):
            return PASS, h
        if h.certainly_lt(half):
            return FAIL, h
        return None, h

    verdict, _ = _escalating(attempt, precision)
    return verdict if verdict is not None else INDET


def _check_house_bound(cfg: Thm1Config, n: int, j: int, precision: int):
    a = cfg.quotient(n, j)
    dec = cfg.sequences[j - 1].decomposition(n)
    if dec is None:
        return INDET

    def attempt(work):
        if scalar_enclosure(a, work).lo.sign() <= 0:
            return FAIL, None  # quotient not positive; decomposition check owns the witness
        bound = growth_bound(a, n, cfg.gamma, cfg.d, work)
        worst = None
        for part in (dec.b, dec.c, dec.d):
            h = _house(part, work)
            worst = h if worst is None else iv_max(worst, h)
        if worst.certainly_le(bound):
            return PASS, (worst, bound)
        if worst.certainly_gt(bound):
            return FAIL, (worst, bound)
        return None, (worst, bound)

    verdict, _ = _escalating(attempt, precision)
    return verdict if verdict is not None else INDET


def derive_sign_table(cfg: Thm1Config, precision: int = 128) -> dict:
    """Sign table e_{j,sigma} read off from the first index n=1."""
    table: dict[tuple[int, int], int] = {}
    for j in range(1, cfg.M + 1):
        a1 = cfg.quotient(1, j)

        def attempt(work):
            res = _embedding_re_parts(a1, work)
            signs = []
            for re in res:
                if re.lo.sign() > 0:
                    signs.append(0)
                elif re.hi.sign() < 0:
                    signs.append(1)
                else:
                    return None, None
            return signs, None

        signs, _ = _escalating(attempt, precision)
        if signs is None:
            raise IndeterminateAtPrecision(f"embedding sign of a_(1,{j}) undecided")
        for i, e in enumerate(signs):
            table[(j, i)] = e
    return table


def check_condition10(cfg: Thm1Config, n: int, j: int, precision: int = 128,
                      e_table: dict | None = None) -> str:
    """(-1)^e * Re(sigma(a_{n,j})) >= 1/bound(a_{n,1}), every embedding sigma."""
    table = e_table or cfg.e_table
    if table is None:
        table = derive_sign_table(cfg, precision)
    a = cfg.quotient(n, j)
    a1 = cfg.quotient(n, 1)

    def attempt(work):
        if scalar_enclosure(a1, work).lo.sign() <= 0:
            return FAIL, None
        rhs = iv_div(singleton(1), growth_bound(a1, n, cfg.gamma, cfg.d, work), work)
        res = _embedding_re_parts(a, work)
        margin = None
        for i, re in enumerate(res):
            e = table.get((j, i))
            if e is None:
                return FAIL, None
            signed = re if e == 0 else DyadicInterval(-re.hi, -re.lo)
            m = iv_sub(signed, rhs, work)
            margin = m if margin is None else (m if m.lo < margin.lo else margin)
            if signed.certainly_lt(rhs):
                return FAIL, margin
        for i, re in enumerate(res):
            e = table[(j, i)]
            signed = re if e == 0 else DyadicInterval(-re.hi, -re.lo)
            if not signed.certainly_ge(rhs):
                return None, margin
        return PASS, margin

    verdict, _ = _escalating(attempt, precision)
    if verdict is None:
        return INDET
    return verdict


def _condition10_margin(cfg: Thm1Config, n: int, j: int, table: dict, work: int) -> DyadicInterval | None:
    if scalar_enclosure(cfg.quotient(n, 1), work).lo.sign() <= 0:
        return None
    rhs = iv_div(singleton(1), growth_bound(cfg.quotient(n, 1), n, cfg.gamma, cfg.d, work), work)
    worst = None
    for i, re in enumerate(_embedding_re_parts(cfg.quotient(n, j), work)):
        e = table.get((j, i))
        if e is None:
            return None
        signed = re if e == 0 else DyadicInterval(-re.hi, -re.lo)
        m = iv_sub(signed, rhs, work)
        worst = m if worst is None or m.lo < worst.lo else worst
    return worst


def check_interleaving(cfg: Thm1Config, n: int, precision: int = 128) -> str:
    """Strict a_{n,1} < max(a_{n,M} * 2^((log2 a_{n,M})^gamma), 2^(d^(n^gamma)))."""
    a1 = cfg.quotient(n, 1)
    aM = cfg.quotient(n, cfg.M)

    def attempt(work):
        lhs = scalar_enclosure(a1, work)
        aM_iv = scalar_enclosure(aM, work)
        if aM_iv.lo.sign() <= 0:
            return FAIL, None
        lg = iv_log2(aM_iv, work)
        zero = Dyadic(0)
        lg = DyadicInterval(max(zero, lg.lo), max(zero, lg.hi))
        first = iv_mul(aM_iv, iv_exp2(iv_pow_frac(lg, cfg.gamma, work), work), work)
        ng = iv_pow_frac(singleton(n), cfg.gamma, work)
        if ng.is_point() and ng.lo.is_integer():
            second = iv_exp2(singleton(cfg.d ** ng.lo.floor()), work)
        else:
            second = iv_exp2(iv_mul(ng, iv_log2(singleton(cfg.d), work), work), work)
        rhs = iv_max(first, second)
        margin = iv_sub(rhs, lhs, work)
        if lhs.certainly_lt(rhs):
            return PASS, margin
        if lhs.certainly_ge(rhs):
            return FAIL, margin
        return None, margin

    verdict, margin = _escalating(attempt, precision)
    if verdict is None:
        return INDET
    return verdict


def _interleaving_margin(cfg: Thm1Config, n: int, work: int) -> DyadicInterval | None:
    lhs = scalar_enclosure(cfg.quotient(n, 1), work)
    aM_iv = scalar_enclosure(cfg.quotient(n, cfg.M), work)
    if aM_iv.lo.sign() <= 0:
        return None
    lg = iv_log2(aM_iv, work)
    zero = Dyadic(0)
    lg = DyadicInterval(max(zero, lg.lo), max(zero, lg.hi))
    first = iv_mul(aM_iv, iv_exp2(iv_pow_frac(lg, cfg.gamma, work), work), work)
    ng = iv_pow_frac(singleton(n), cfg.gamma, work)
    if ng.is_point() and ng.lo.is_integer():
        second = iv_exp2(singleton(cfg.d ** ng.lo.floor()), work)
    else:
        second = iv_exp2(iv_mul(ng, iv_log2(singleton(cfg.d), work), work), work)
    return iv_sub(iv_max(first, second), lhs, work)


def ratio_margin(cfg: Thm1Config, j: int, N: int, precision: int = 128,
                 window: int | None = None) -> MarginSeries:
    """Series sqrt(n) * (a_{n,j}/a_{n,j+1} - 1), with trailing-window verdict.

    The verdict is prefix-consistent only: pass needs a certainly positive
    trailing-window minimum that is not strictly decaying; a nonpositive
    window minimum is a fail witness.  The trailing window defaults to the
    last ceil(N/4) indices to suppress small-n transients.
    """
    if not 1 <= j <= cfg.M - 1:
        raise ValueError("ratio condition needs 1 <= j <= M-1")
    sj, sj1 = cfg.sequences[j - 1], cfg.sequences[j]
    values: list[DyadicInterval] = []
    for n in range(1, N + 1):
        a, b = sj.quotient(n), sj1.quotient(n)
        exact_pair = _exact_ratio(a, b)
        if exact_pair is not None:
            diff_enc = scalar_enclosure(exact_pair, precision)
        else:
            diff_enc = iv_sub(
                iv_div(scalar_enclosure(a, precision), scalar_enclosure(b, precision), precision),
                singleton(1),
                precision,
            )
        values.append(iv_mul(iv_sqrt(singleton(n), precision), diff_enc, precision))
    window_len = window if window is not None else -(-N // 4)
    window = values[-max(1, min(window_len, N)):]
    wmin = window[0]
    for v in window[1:]:
        if v.lo < wmin.lo:
            wmin = v
    mono = _window_monotonicity(window)
    if wmin.hi.sign() <= 0:
        verdict = FAIL
    elif wmin.lo.sign() > 0:
        verdict = INDET if mono == "decreasing" else PASS
    else:
        verdict = INDET
    return MarginSeries(values, verdict, window_min=wmin, monotonicity=mono)


def _exact_ratio(a, b):
    """a/b - 1 when exactly computable in a shared domain, else None."""
    if isinstance(a, FieldElement) and isinstance(b, FieldElement):
        if a.field is b.field:
            return a / b - 1
        return None
    if isinstance(a, FieldElement) or isinstance(b, FieldElement):
        return None
    if isinstance(a, DyadicInterval) or isinstance(b, DyadicInterval):
        return None
    return Fraction(a) / Fraction(b) - 1


def _window_monotonicity(window: list[DyadicInterval]) -> str:
    if len(window) < 2:
        return "flat"
    inc = all(b.lo > a.hi for a, b in zip(window, window[1:]))
    dec = all(b.hi < a.lo for a, b in zip(window, window[1:]))
    if inc:
        return "increasing"
    if dec:
        return "decreasing"
    return "mixed"


def growth_margin(cfg: Thm1Config, j: int, N: int, precision: int = 128,
                  threshold: int = 2) -> MarginSeries:
    """Series a_{n,j}^(1/d^n) in the log domain, with record tracking.

    pass: at least two strictly increasing records with the final one
    certainly above ``threshold``.  fail: a certainly decreasing trailing
    window that stays below the threshold.  Anything else is indeterminate.
    """
    seq = cfg.sequences[j - 1]
    d = cfg.d
    values: list[DyadicInterval] = []
    records: list[int] = []
    best_hi: Dyadic | None = None
    for n in range(1, N + 1):
        a_iv = scalar_enclosure(seq.quotient(n), precision)
        g = iv_exp2(iv_div(iv_log2(a_iv, precision), singleton(d ** n), precision), precision)
        values.append(g)
        if best_hi is None or g.lo > best_hi:
            records.append(n)
        best_hi = g.hi if best_hi is None else max(best_hi, g.hi)
    thr = singleton(threshold)
    last_record_val = values[records[-1] - 1] if records else values[0]
    window = values[-max(1, -(-N // 4)):]
    mono = _window_monotonicity(window)
    wmax = window[0]
    for v in window[1:]:
        if v.hi > wmax.hi:
            wmax = v
    if len(records) >= 2 and last_record_val.certainly_gt(thr):
        verdict = PASS
    elif mono == "decreasing" and wmax.certainly_lt(thr):
        verdict = FAIL
    else:
        verdict = INDET
    return MarginSeries(values, verdict, window_min=wmax, monotonicity=mono, records=records)


# ---------------------------------------------------------------------------
# aggregation
# ---------------------------------------------------------------------------

def check_all(cfg: Thm1Config, N: int, precision: int = 128) -> HypothesisReport:
    """Run every condition for n <= N and aggregate into one report."""
    conditions: list[ConditionReport] = []

    # condition: integral decomposition and a >= 1 (exact)
    verdict, witness = PASS, None
    margins = []
    for n in range(1, N + 1):
        worst = None
        for j in range(1, cfg.M + 1):
            v = check_decomposition(cfg, n, j)
            if v == FAIL and verdict != FAIL:
                verdict, witness = FAIL, (n, j)
            elif v == INDET and verdict == PASS:
                verdict, witness = INDET, (n, j)
            a = cfg.quotient(n, j)
            m = iv_sub(scalar_enclosure(a, precision), singleton(1), precision)
            worst = m if worst is None or m.lo < worst.lo else worst
        margins.append(worst)
    conditions.append(ConditionReport("decomposition", verdict, N, margins, witness))

    # condition: house(1/a) >= 1/2, possibly replaced by the sign variant
    mode_used, c5_report = _check_condition5(cfg, N, precision)
    conditions.append(c5_report)

    # condition: house bounds on b, c, d
    verdict, witness = PASS, None
    margins = []
    for n in range(1, N + 1):
        worst = None
        for j in range(1, cfg.M + 1):
            v = _check_house_bound(cfg, n, j, precision)
            if v == FAIL and verdict != FAIL:
                verdict, witness = FAIL, (n, j)
            elif v == INDET and verdict == PASS:
                verdict, witness = INDET, (n, j)
            dec = cfg.sequences[j - 1].decomposition(n)
            if dec is not None:
                b = growth_bound(cfg.quotient(n, j), n, cfg.gamma, cfg.d, precision)
                h = iv_max(iv_max(_house(dec.b, precision), _house(dec.c, precision)),
                           _house(dec.d, precision))
                m = iv_sub(b, h, precision)
                worst = m if worst is None or m.lo < worst.lo else worst
        margins.append(worst if worst is not None else singleton(0))
    conditions.append(ConditionReport("house-growth-bound", verdict, N, margins, witness))

    # condition: interleaving of extremes
    verdict, witness = PASS, None
    margins = []
    for n in range(1, N + 1):
        v = check_interleaving(cfg, n, precision)
        if v == FAIL and verdict != FAIL:
            verdict, witness = FAIL, (n,)
        elif v == INDET and verdict == PASS:
            verdict, witness = INDET, (n,)
        m = _interleaving_margin(cfg, n, precision)
        margins.append(m if m is not None else singleton(0))
    conditions.append(ConditionReport("interleaving", verdict, N, margins, witness))

    # condition: ratio liminf margins for adjacent pairs
    verdict, witness = PASS, None
    worst_series: list[DyadicInterval] = []
    per_j_verdicts = {}
    for j in range(1, cfg.M):
        ms = ratio_margin(cfg, j, N, precision)
        per_j_verdicts[j] = ms.verdict
        if ms.verdict == FAIL and verdict != FAIL:
            verdict, witness = FAIL, (j,)
        elif ms.verdict == INDET and verdict == PASS:
            verdict, witness = INDET, (j,)
        if not worst_series:
            worst_series = list(ms.values)
        else:
            worst_series = [a if a.lo < b.lo else b for a, b in zip(ms.values, worst_series)]
    if cfg.M == 1:
        worst_series = [singleton(0)] * N
    conditions.append(
        ConditionReport("ratio-liminf", verdict, N, worst_series, witness,
                        notes={"per_j": per_j_verdicts, "semantics": "prefix-consistent"})
    )

    # condition: growth limsup; passes when at least one j passes
    per_j = {}
    any_pass, all_fail = False, True
    best_series: list[DyadicInterval] | None = None
    for j in range(1, cfg.M + 1):
        ms = growth_margin(cfg, j, N, precision)
        per_j[j] = ms.verdict
        if ms.verdict == PASS:
            any_pass = True
        if ms.verdict != FAIL:
            all_fail = False
        if best_series is None or ms.verdict == PASS:
            best_series = ms.values
    g_verdict = PASS if any_pass else (FAIL if all_fail else INDET)
    conditions.append(
        ConditionReport("growth-limsup", g_verdict, N, best_series or [],
                        None if g_verdict == PASS else (1,),
                        notes={"per_j": per_j, "quantifier": "any-j",
                               "semantics": "prefix-consistent"})
    )

    if any(c.verdict == FAIL for c in conditions):
        overall = FAIL
    elif all(c.verdict == PASS for c in conditions):
        overall = PASS
    else:
        overall = INDET
    return HypothesisReport(overall, conditions, cfg.d, cfg.gamma, mode_used, cfg.name)


def _check_condition5(cfg: Thm1Config, N: int, precision: int):
    """Try house-half, fall back to the sign condition in auto mode."""
    modes = [cfg.condition5_mode] if cfg.condition5_mode != "auto" else ["house-half", "real-part-sign"]
    last_report = None
    for mode in modes:
        if mode == "house-half":
            verdict, witness = PASS, None
            margins = []
            half = from_fraction(Fraction(1, 2), 32)
            for n in range(1, N + 1):
                worst = None
                for j in range(1, cfg.M + 1):
                    v = _check_house_half(cfg, n, j, precision)
                    if v == FAIL and verdict != FAIL:
                        verdict, witness = FAIL, (n, j)
                    elif v == INDET and verdict == PASS:
                        verdict, witness = INDET, (n, j)
                    h = _house(_invert(cfg.quotient(n, j)), precision)
                    m = iv_sub(h, half, precision)
                    worst = m if worst is None or m.lo < worst.lo else worst
                margins.append(worst)
            report = ConditionReport("house-inverse-half", verdict, N, margins, witness)
        else:
            try:
                table = cfg.e_table or derive_sign_table(cfg, precision)
            except IndeterminateAtPrecision:
                report = ConditionReport("real-part-sign", INDET, N, [], (1,),
                                         notes={"reason": "sign table underivable"})
                last_report = ("real-part-sign", report)
                continue
            verdict, witness = PASS, None
            margins = []
            for n in range(1, N + 1):
                worst = None
                for j in range(1, cfg.M + 1):
                    v = check_condition10(cfg, n, j, precision, e_table=table)
                    if v == FAIL and verdict != FAIL:
                        verdict, witness = FAIL, (n, j)
                    elif v == INDET and verdict == PASS:
                        verdict, witness = INDET, (n, j)
                    m = _condition10_margin(cfg, n, j, table, precision)
                    if m is not None:
                        worst = m if worst is None or m.lo < worst.lo else worst
                margins.append(worst if worst is not None else singleton(0))
            report = ConditionReport(
                "real-part-sign", verdict, N, margins, witness,
                notes={"e_table": {f"{j},{i}": e for (j, i), e in sorted(table.items())}},
            )
        last_report = (mode, report)
        if report.verdict == PASS:
            return mode, report
    return last_report


def c2_config(K: int, base: CFSpec, gamma: Fraction = Fraction(1, 2), name: str | None = None) -> Thm1Config:
    """Convenience constructor: rational quotients a_n/j for j = 1..K."""
    seqs = [spec("div-by-j", base=base, j=j) for j in range(1, K + 1)]
    return Thm1Config(M=K, sequences=seqs, gamma=gamma, field=None, D=1,
                      condition5_mode="auto", name=name)
