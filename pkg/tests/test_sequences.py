from fractions import Fraction

import pytest

from cfindep.bigreal.interval import precision
from cfindep.bigreal.poly import IntPoly
from cfindep.cfcore import scalar_at_least_one
from cfindep.errors import BitBudgetExceeded, RootsNotRealDistinctGreaterOne, UnknownFamily
from cfindep.numfield import is_algebraic_integer
from cfindep.sequences import (
    divisor_count,
    gen_corollary_family,
    gen_doubly_exponential,
    gen_from_polynomial_roots,
    gen_hanluc,
    gen_prime_ratio,
    harmonic,
    nth_prime,
    phi_field,
    polynomial_root_family,
    prime_pi,
    primes_up_to,
    spec,
    sqrt2_field,
    sqrt_j_family,
)


def _trial_division_pi(n):
    count = 0
    for m in range(2, n + 1):
        if all(m % d for d in range(2, int(m ** 0.5) + 1)):
            count += 1
    return count


def _brute_divisors(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def test_sieve_against_trial_division():
    for n in (10, 100, 541, 1000, 10_000):
        assert prime_pi(n) == _trial_division_pi(n)
    assert prime_pi(10) == 4 and prime_pi(100) == 25
    assert nth_prime(4) == 7
    assert primes_up_to(13)[-1] == 13


def test_divisor_count_brute_force():
    for n in list(range(1, 500)) + [720, 5040, 9999, 10_000]:
        assert divisor_count(n) == _brute_divisors(n)
    assert divisor_count(6) == 4


def test_harmonic_exact():
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(10) == sum(Fraction(1, k) for k in range(1, 11))


def test_doubly_exponential_values():
    assert gen_doubly_exponential(3, 1) == 8
    assert gen_doubly_exponential(3, 2) == 2 ** 18
    assert gen_doubly_exponential(2, 3) == 2 ** 24
    assert gen_doubly_exponential(2, 1, c=3) == 2 ** 6


def test_bit_guard(monkeypatch):
    with pytest.raises(BitBudgetExceeded):
        gen_doubly_exponential(3, 14)
    monkeypatch.setenv("CFINDEP_MAX_BITS", "100")
    assert gen_doubly_exponential(2, 4) == 2 ** 64  # 65 bits, under the raised guard
    monkeypatch.setenv("CFINDEP_MAX_BITS", "50")
    with pytest.raises(BitBudgetExceeded):
        gen_doubly_exponential(2, 4)


def test_prime_ratio_and_hanluc():
    assert gen_prime_ratio(4) == Fraction(11, 4)
    g = gen_hanluc(1, 1)
    assert g.coords == (Fraction(0), Fraction(3))  # 3 sqrt2
    base = spec("doubly-exponential", d=3)
    h2 = gen_hanluc(2, 1, base)
    assert h2.coords == (Fraction(0), Fraction(16))  # 8 * 2 * sqrt2
    s = spec("hanluc", j=1, base=base, field=sqrt2_field())
    d = s.decomposition(4)
    assert d.S == 4 + 7 and d.d.as_fraction() == 4
    assert is_algebraic_integer(d.b)


def test_corollary_families():
    base = spec("constant", value=Fraction(4))
    assert gen_corollary_family("div-by-j", {"base": base}, 2, 2) == 2
    div = spec("div-by-j", base=spec("custom", fn=lambda n: Fraction([3, 4, 5][n - 1])), j=2)
    assert div.quotient(2) == 2
    f = sqrt2_field()
    base3 = spec("doubly-exponential", d=3)
    dv = spec("divisor-sqrt2", field=f, base=base3, variant="d")
    q6 = dv.quotient(6)
    assert q6.coords == (Fraction(0), gen_doubly_exponential(3, 6) * 4)
    ph = spec("phi-powers", field=phi_field(), base=base3, offset=1)
    q3 = ph.quotient(3)
    phi = phi_field().generator()
    assert ((phi ** 5) * gen_doubly_exponential(3, 3) - q3).is_zero()


def test_polynomial_root_family_ex1():
    base = spec("doubly-exponential", d=3)
    q, dec = gen_from_polynomial_roots(IntPoly.of(14, -8, 1), 2, 1, base)
    # j=2 ascending is 4 + sqrt2; a_1 = 8
    assert dec.S == 8 and dec.c.is_zero() and dec.d.as_fraction() == 1
    assert is_algebraic_integer(dec.b)
    assert q.enclosure(64).contains(Fraction(0)) is False
    assert abs(float(q.enclosure(64).midpoint()) - 8 * 5.41421356) < 1e-4


def test_polynomial_root_family_rejections():
    base = spec("constant", value=Fraction(2))
    with pytest.raises(RootsNotRealDistinctGreaterOne):
        polynomial_root_family(IntPoly.of(2, -3, 1), base)  # root 1 not > 1
    with pytest.raises(RootsNotRealDistinctGreaterOne):
        polynomial_root_family(IntPoly.of(-2, 0, 1), base)  # root -sqrt2 < 1
    with pytest.raises(RootsNotRealDistinctGreaterOne):
        polynomial_root_family(IntPoly.of(4, -4, 1), base)  # double root


def test_sqrt_j_family():
    base = spec("constant", value=Fraction(5))
    fam = sqrt_j_family(2, base)
    assert len(fam) == 2
    big = fam[0].quotient(3)
    small = fam[1].quotient(3)
    assert (big * big).as_fraction() == 50  # (5 sqrt2)^2
    assert small.as_fraction() == 5
    fam3 = sqrt_j_family(3, base)
    assert fam3[0].field.degree == 4
    v = fam3[0].quotient(1)
    assert (v * v).as_fraction() == 75  # (5 sqrt3)^2


def test_generated_quotients_at_least_one():
    base = spec("doubly-exponential", d=3)
    specs = {
        "hanluc1": spec("hanluc", j=1, base=base, field=sqrt2_field()),
        "hanluc2": spec("hanluc", j=2, base=base, field=sqrt2_field()),
        "divisor": spec("divisor-sqrt2", field=sqrt2_field(), base=base, variant="d"),
        "phi": spec("phi-powers", field=phi_field(), base=base, offset=1),
        "harm": spec("harmonic", base=base, j=1),
        "pi": spec("prime-pi-power", base=base, j=2),
        "div": spec("div-by-j", base=base, j=3),
    }
    for name, s in specs.items():
        for n in range(1, 6):
            assert scalar_at_least_one(s.quotient(n)), (name, n)


def test_determinism():
    base = spec("doubly-exponential", d=3)
    s1 = spec("divisor-sqrt2", field=sqrt2_field(), base=base, variant="1+d")
    s2 = spec("divisor-sqrt2", field=sqrt2_field(), base=base, variant="1+d")
    assert [s1.quotient(n).coords for n in range(1, 6)] == [s2.quotient(n).coords for n in range(1, 6)]


def test_interval_kind():
    s = spec("one-plus-over-sqrt", c=Fraction(2))
    with precision(96):
        q4 = s.quotient(4)
    assert q4.contains(Fraction(2))  # 1 + 2/2
    assert s.decomposition(4) is None
    assert not s.is_exact()


def test_unknown_kind_rejected():
    with pytest.raises(UnknownFamily):
        spec("no-such-kind", x=1)


def test_catalog_quotients_at_least_one():
    from cfindep.catalog import build_config, catalog

    for name in catalog():
        cfg = build_config(name)
        for j in range(1, cfg.M + 1):
            for n in range(1, 5):
                assert scalar_at_least_one(cfg.quotient(n, j)), (name, n, j)
