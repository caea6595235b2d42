from fractions import Fraction

import pytest

from cfindep.bigreal.interval import ComplexInterval, DyadicInterval
from cfindep.bigreal.dyadic import Dyadic
from cfindep.errors import HypothesisViolated, QuotientBelowOne
from cfindep.lemmas import (
    TOLERANCE,
    lemma1_trace,
    lemma2_check,
    lemma3_check,
    remark_counterexample,
    run_lemma2_suite,
    run_lemma3_suite,
)
from cfindep.sequences import spec


def test_lemma1_pell_vs_fibonacci():
    tr = lemma1_trace(spec("constant", value=Fraction(2)),
                      spec("constant", value=Fraction(1)), 20)
    rs = tr.ratios_exact
    assert rs is not None
    # growth factor (1+sqrt2)/phi ~ 1.492 per step; crosses 1000 by n = 18
    assert rs[17] > 1000
    assert all(b > a for a, b in zip(rs[1:], rs[2:]))  # increasing from n=2
    # hypothesis margin sqrt(n)(2/1 - 1) = sqrt(n)
    assert tr.liminf_margin[3].contains(Fraction(2))


def test_lemma1_identical_sequences():
    s = spec("constant", value=Fraction(3))
    tr = lemma1_trace(s, s, 10)
    assert all(r == 1 for r in tr.ratios_exact)


def test_lemma1_slow_margin():
    a = spec("one-plus-over-sqrt", c=Fraction(2))
    b = spec("constant", value=Fraction(1))
    tr = lemma1_trace(a, b, 12, prec=128)
    # margin sqrt(n) * (a_n - 1) = 2 for every n
    for m in tr.liminf_margin:
        assert m.contains(Fraction(2))
    assert tr.ratios_exact is None  # interval path
    # ratios grow, slowly
    assert tr.ratios[-1].lo.as_fraction() > tr.ratios[0].hi.as_fraction() * Fraction(3, 2)


def test_lemma1_rejects_below_one():
    bad = spec("constant", value=Fraction(1, 2))
    with pytest.raises(QuotientBelowOne):
        lemma1_trace(bad, spec("constant", value=Fraction(1)), 5)


def test_remark_counterexample_small():
    rr = remark_counterexample(10)
    assert rr.monotone
    assert rr.max_ratio.hi.as_fraction() < Fraction(1352, 100)
    assert rr.bound.hi.as_fraction() < Fraction(1352, 100)
    # the enclosed infinite product is (sinh pi / pi)^2 ~ 13.5137
    assert Fraction(1351, 100) < rr.bound.lo.as_fraction()
    # hand recurrence: q_{2,a}/q_{2,b} = 11/5
    assert rr.ratios_exact[1] == Fraction(11, 5)
    assert Fraction(1) < rr.ratios_exact[1] < Fraction(1352, 100)


def test_lemma2_examples():
    z = [ComplexInterval.point(2), ComplexInterval.point(2), ComplexInterval.point(2)]
    chk = lemma2_check(z)
    assert chk.passed and chk.exact and chk.slack == 0
    assert chk.details["abs_squared"] == Fraction(144, 25)  # |12/5|^2
    chk2 = lemma2_check([ComplexInterval.point(-2), ComplexInterval.point(2)])
    assert chk2.passed  # |-3/2| = 1.5
    chk3 = lemma2_check([ComplexInterval.point(0, 2), ComplexInterval.point(0, -2)])
    assert chk3.passed and chk3.details["abs_squared"] == Fraction(25, 4)


def test_lemma2_hypothesis_enforced():
    with pytest.raises(HypothesisViolated):
        lemma2_check([ComplexInterval.point(1)])


def test_lemma3_examples():
    chk = lemma3_check([ComplexInterval.point(1), ComplexInterval.point(1)])
    assert chk.passed and chk.details["re_value"] == 2
    z = [ComplexInterval.from_rationals(Fraction(1), Fraction(1), 96),
         ComplexInterval.from_rationals(Fraction(1), Fraction(-1), 96)]
    chk2 = lemma3_check(z)
    assert chk2.passed and chk2.details["re_value"] == Fraction(3, 2)
    chk3 = lemma3_check([ComplexInterval.from_rationals(Fraction(1, 2), Fraction(0), 96),
                         ComplexInterval.point(3)])
    assert chk3.passed and chk3.details["re_value"] == Fraction(5, 6)


def test_lemma3_hypothesis_enforced():
    with pytest.raises(HypothesisViolated):
        lemma3_check([ComplexInterval.point(-1)])


def test_lemma2_interval_path():
    pad = Dyadic(1, -60)
    z = ComplexInterval(DyadicInterval(Dyadic(2), Dyadic(2) + pad),
                        DyadicInterval(Dyadic(0), pad))
    chk = lemma2_check([z, z])
    assert chk.passed and not chk.exact and chk.slack == TOLERANCE


def test_random_suites_small():
    s2 = run_lemma2_suite(trials=200, seed=42)
    assert s2.all_passed and s2.worst >= 1
    s3 = run_lemma3_suite(trials=200, seed=42)
    assert s3.all_passed and s3.worst >= -TOLERANCE
    # determinism: same seed gives identical outcome
    again = run_lemma2_suite(trials=200, seed=42)
    assert again.worst == s2.worst


def test_lemma3_negation_identity_randomized():
    from cfindep.cfcore import GaussianRational, complex_cf_eval_exact
    import random

    rng = random.Random(8)
    for _ in range(100):
        k = rng.randint(1, 6)
        pts = [GaussianRational(Fraction(rng.randint(1, 40), 8), Fraction(rng.randint(-40, 40), 8))
               for _ in range(k)]
        v = complex_cf_eval_exact(pts)
        w = complex_cf_eval_exact([-p for p in pts])
        assert abs(w.re) == v.re
        assert v.re >= pts[0].re


def test_lemma1_threshold_crossing_bound():
    # growth per step is about (1+sqrt2)/phi ~ 1.492, so the ratio exceeds any
    # threshold T by index ceil(log T / log 1.49) + 4
    import math

    tr = lemma1_trace(spec("constant", value=Fraction(2)),
                      spec("constant", value=Fraction(1)), 30)
    rs = tr.ratios_exact
    for T in (10, 100, 1000, 10_000):
        bound = math.ceil(math.log(T) / math.log(1.49)) + 4
        crossing = next(i + 1 for i, r in enumerate(rs) if r > T)
        assert crossing <= bound, (T, crossing, bound)
