"""Exact arithmetic in a real algebraic number field Q(theta).

Elements are rational coordinate vectors in the power basis 1, theta, ...,
theta^(D-1).  Ring and field operations are exact; embeddings into the
complex numbers are rigorous dyadic enclosures (real roots via Sturm-guided
refinement, complex conjugate pairs via certified inclusion disks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigreal.dyadic import Dyadic
from .bigreal.interval import (
    ComplexInterval,
    DyadicInterval,
    iv_abs,
    iv_add,
    iv_max,
    iv_sqrt,
    singleton,
)
from .bigreal.poly import (
    IntPoly,
    isolate_real_roots,
    qpoly_eval_complex,
    qpoly_eval_interval,
    refine_root,
    resultant,
)
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    PrecisionInsufficient,
    Reducible,
    RootNotIsolated,
)

__all__ = [
    "NumberField",
    "FieldElement",
    "EmbeddingSet",
    "field_new",
    "embeddings",
    "sigma_eval",
    "house",
    "is_algebraic_integer",
    "minimal_polynomial",
    "norm_exact",
    "multiquadratic_field",
]

MAX_FIELD_DEGREE = 8


def _is_irreducible_over_q(p: IntPoly) -> bool:
    if p.degree() == 1:
        return True
    # exact integer factorization; lazy import keeps startup light
    from sympy import Poly, Symbol

    x = Symbol("x")
    poly = Poly(list(reversed(p.coeffs)), x, domain="ZZ")
    _, factors = poly.factor_list()
    return len(factors) == 1 and factors[0][1] == 1


class NumberField:
    """Q(theta) for theta the selected real root of a monic irreducible poly."""

    def __init__(self, minpoly: IntPoly, root_interval: DyadicInterval):
        self.minpoly = minpoly
        self.degree = minpoly.degree()
        self._root_iv = root_interval
        # theta^D, ..., theta^(2D-2) in the power basis
        self._reduction = self._build_reduction()
        self._embedding_cache: dict[int, "EmbeddingSet"] = {}

    def _build_reduction(self) -> list[tuple[Fraction, ...]]:
        d = self.degree
        base = [Fraction(-c) for c in self.minpoly.coeffs[:-1]]  # theta^D
        rows = [tuple(base)]
        for _ in range(d - 2):
            prev = rows[-1]
            shifted = [Fraction(0)] + list(prev[:-1])
            carry = prev[-1]
            nxt = [shifted[i] + carry * base[i] for i in range(d)]
            rows.append(tuple(nxt))
        return rows

    def element(self, coords) -> "FieldElement":
        c = list(coords)
        if len(c) > self.degree:
            raise ValueError("too many coordinates")
        c = [Fraction(v) for v in c] + [Fraction(0)] * (self.degree - len(c))
        return FieldElement(tuple(c), self)

    def from_rational(self, r) -> "FieldElement":
        return self.element([Fraction(r)])

    def generator(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.minpoly.coeffs[0])
        return self.element([0, 1])

    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def root_enclosure(self, prec: int) -> DyadicInterval:
        """The distinguished real root, refined to width <= 2**-prec."""
        target = Dyadic(1, -prec)
        if self._root_iv.width() <= target:
            return self._root_iv
        self._root_iv = refine_root(self.minpoly, self._root_iv, target)
        return self._root_iv

    def __repr__(self) -> str:
        return f"NumberField({self.minpoly!r}, root~{float(self._root_iv.midpoint()):.6g})"


def field_new(minpoly: IntPoly, root_hint: DyadicInterval) -> NumberField:
    """Construct a field, verifying irreducibility and root isolation."""
    if minpoly.degree() < 1:
        raise NotMonic("defining polynomial must have degree >= 1")
    if not minpoly.is_monic():
        raise NotMonic(f"{minpoly!r} is not monic")
    if minpoly.degree() > MAX_FIELD_DEGREE:
        raise ValueError(f"degree {minpoly.degree()} exceeds supported bound {MAX_FIELD_DEGREE}")
    if not _is_irreducible_over_q(minpoly):
        raise Reducible(f"{minpoly!r} factors over Q")
    from .bigreal.poly import sturm_count

    if sturm_count(minpoly, root_hint) != 1:
        raise RootNotIsolated(f"{root_hint!r} does not isolate exactly one root of {minpoly!r}")
    return NumberField(minpoly, root_hint)


@dataclass(frozen=True)
class FieldElement:
    """Element of a number field as exact power-basis coordinates."""

    coords: tuple[Fraction, ...]
    field: NumberField

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(tuple(a + b for a, b in zip(self.coords, o.coords)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(tuple(a - b for a, b in zip(self.coords, o.coords)), self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(tuple(-a for a in self.coords), self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    conv[i + j] += a * b
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self.field._reduction[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return FieldElement(tuple(out), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        if self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        # extended Euclid in Q[t] against the minimal polynomial
        f = [Fraction(c) for c in self.field.minpoly.coeffs]
        g = list(self.coords)
        r0, r1 = f, _trim(g)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _deg(r1) > 0:
            q, r = _divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_q(s0, _mul_q(q, s1))
        if _deg(r1) != 0 or r1[0] == 0:
            raise DivisionByZero("element is not invertible (degenerate field?)")
        inv = [c / r1[0] for c in s1]
        inv = inv[: self.field.degree] + [Fraction(0)] * max(0, self.field.degree - len(inv))
        # s1 may exceed degree bounds only transiently; reduce by one mul round-trip
        cand = FieldElement(tuple(inv[: self.field.degree]), self.field)
        return cand

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- numerics -------------------------------------------------------------

    def enclosure(self, prec: int) -> DyadicInterval:
        """Identity-embedding value, width <= 2**-prec relative to magnitude."""
        work = prec + 16
        for _ in range(64):
            theta = self.field.root_enclosure(work)
            val = qpoly_eval_interval(list(self.coords), theta, work)
            bound = max(Dyadic(1), val.mag())
            if val.width() <= Dyadic(1, -prec) * bound:
                return val
            work *= 2
        raise PrecisionInsufficient("element enclosure did not converge")  # pragma: no cover

    def sign_at_identity(self) -> int:
        """Exact sign of the distinguished-embedding value."""
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coords[0]
            return (c > 0) - (c < 0)
        work = 64
        for _ in range(64):
            val = qpoly_eval_interval(list(self.coords), self.field.root_enclosure(work), work)
            if val.lo.sign() > 0:
                return 1
            if val.hi.sign() < 0:
                return -1
            work *= 2
        raise PrecisionInsufficient("sign determination did not converge")  # pragma: no cover

    def __repr__(self) -> str:
        return f"FieldElement({[str(c) for c in self.coords]})"


# -- small exact polynomial helpers over Q (dense, constant first) ------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _deg(p: list[Fraction]) -> int:
    return -1 if (len(p) == 1 and p[0] == 0) else len(p) - 1


def _sub_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _mul_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db, lb = _deg(b), b[-1]
    while _deg(a) >= db and _deg(a) >= 0:
        shift = _deg(a) - db
        coef = a[-1] / lb
        q[shift] = coef
        for i in range(db + 1):
            a[shift + i] -= coef * b[i]
        a = _trim(a)
        if _deg(a) < db:
            break
    return _trim(q), _trim(a)


# ---------------------------------------------------------------------------
# embeddings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EmbeddingSet:
    """All D conjugate enclosures of the field generator.

    ``real_roots[0]`` is the distinguished (identity) embedding; remaining
    real roots follow in ascending order, then complex pairs with positive
    imaginary part.  Index i of :func:`sigma_eval` walks real embeddings
    first, then each pair as (upper, lower) conjugates.
    """

    field: NumberField
    real_roots: tuple[DyadicInterval, ...]
    complex_pairs: tuple[tuple[DyadicInterval, DyadicInterval], ...]
    precision: int

    @property
    def degree(self) -> int:
        return len(self.real_roots) + 2 * len(self.complex_pairs)


def _newton_polish_complex(p: IntPoly, z: tuple[Fraction, Fraction], steps: int, bits: int):
    dp = p.derivative()
    zr, zi = z
    for _ in range(steps):
        pr, pi = _ceval(p, zr, zi)
        dr, di = _ceval(dp, zr, zi)
        den = dr * dr + di * di
        if den == 0:
            break
        wr = (pr * dr + pi * di) / den
        wi = (pi * dr - pr * di) / den
        zr, zi = zr - wr, zi - wi
        zr = Fraction((zr.numerator << bits) // zr.denominator, 1 << bits)
        zi = Fraction((zi.numerator << bits) // zi.denominator, 1 << bits)
    return zr, zi


def _ceval(p: IntPoly, zr: Fraction, zi: Fraction) -> tuple[Fraction, Fraction]:
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
    return ar, ai


def _complex_seed_roots(p: IntPoly) -> list[complex]:
    import numpy as np

    scale = max(abs(c) for c in p.coeffs)
    coeffs = [float(Fraction(c, scale)) for c in reversed(p.coeffs)]
    return [complex(z) for z in np.roots(coeffs)]


def embeddings(field: NumberField, precision: int = 192) -> EmbeddingSet:
    """Enclosures of all D conjugates, pairwise disjoint, at the given precision."""
    cached = field._embedding_cache.get(precision)
    if cached is not None:
        return cached

    p = field.minpoly
    d = field.degree
    target = Dyadic(1, -precision)

    isolated = isolate_real_roots(p)
    refined = [refine_root(p, iv, target) for iv in isolated]
    dist_idx = None
    for i, iv in enumerate(refined):
        if iv.intersects(field._root_iv) or field._root_iv.contains_interval(iv):
            dist_idx = i
            break
    if dist_idx is None:  # pragma: no cover
        raise RootNotIsolated("distinguished root lost during refinement")
    ordered = [refined[dist_idx]] + refined[:dist_idx] + refined[dist_idx + 1 :]

    n_pairs = (d - len(refined)) // 2
    pairs: list[tuple[DyadicInterval, DyadicInterval]] = []
    if n_pairs:
        seeds = [z for z in _complex_seed_roots(p) if z.imag > 0]
        seeds.sort(key=lambda z: (z.real, z.imag))
        if len(seeds) != n_pairs:  # pragma: no cover
            raise PrecisionInsufficient("seed roots did not split into conjugate pairs")
        work = max(64, precision + 16)
        for attempt in range(8):
            pairs = []
            ok = True
            for z in seeds:
                zr = Fraction(z.real).limit_denominator(1 << 40)
                zi = Fraction(z.imag).limit_denominator(1 << 40)
                zr, zi = _newton_polish_complex(p, (zr, zi), steps=6 + attempt * 2, bits=2 * work)
                box = _certify_disk(p, zr, zi, d, work)
                if box is None:
                    ok = False
                    break
                pairs.append(box)
            if ok and _pairs_admissible(pairs, ordered, target):
                break
            work *= 2
        else:  # pragma: no cover
            raise PrecisionInsufficient("complex conjugate enclosures failed to certify")

    out = EmbeddingSet(field, tuple(ordered), tuple(pairs), precision)
    field._embedding_cache[precision] = out
    return out


def _certify_disk(p: IntPoly, zr: Fraction, zi: Fraction, d: int, work: int):
    """Inclusion box from the disk bound r = d*|p(z)/p'(z)|, or None."""
    z = ComplexInterval.from_rationals(zr, zi, work)
    pv = qpoly_eval_complex([Fraction(c) for c in p.coeffs], z, work)
    dv = qpoly_eval_complex([Fraction(c) for c in p.derivative().coeffs], z, work)
    num = pv.abs_interval(work)
    den = dv.abs_interval(work)
    if den.lo.sign() <= 0:
        return None
    r_frac = d * num.hi.as_fraction() / den.lo.as_fraction()
    from .bigreal.dyadic import rational_to_dyadic

    r = rational_to_dyadic(r_frac.numerator, r_frac.denominator, work, up=True)
    re = DyadicInterval((z.re.lo - r).round_down(work), (z.re.hi + r).round_up(work))
    im = DyadicInterval((z.im.lo - r).round_down(work), (z.im.hi + r).round_up(work))
    if im.lo.sign() <= 0:
        return None
    return re, im


def _pairs_admissible(pairs, real_roots, target: Dyadic) -> bool:
    for re, im in pairs:
        if re.width() > target or im.width() > target:
            return False
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if pairs[i][0].intersects(pairs[j][0]) and pairs[i][1].intersects(pairs[j][1]):
                return False
    return True


def sigma_eval(e: EmbeddingSet, x: FieldElement, i: int) -> tuple[DyadicInterval, DyadicInterval]:
    """Enclosure of the i-th embedding of x, as (re, im) with exact im=0 when real."""
    if x.field is not e.field:
        raise FieldMismatch("element does not belong to the embedded field")
    if not 0 <= i < e.degree:
        raise IndexError(f"embedding index {i} out of range")
    prec = e.precision
    coords = list(x.coords)
    nr = len(e.real_roots)
    if i < nr:
        re = qpoly_eval_interval(coords, e.real_roots[i], prec)
        return re, singleton(0)
    k, upper = divmod(i - nr, 2)
    re_box, im_box = e.complex_pairs[k]
    z = ComplexInterval(re_box, im_box if upper == 0 else DyadicInterval(-im_box.hi, -im_box.lo))
    v = qpoly_eval_complex(coords, z, prec)
    return v.re, v.im


def _conjugate_abs_intervals(x: FieldElement, prec: int) -> list[DyadicInterval]:
    e = embeddings(x.field, prec)
    out = []
    coords = list(x.coords)
    for iv in e.real_roots:
        out.append(iv_abs(qpoly_eval_interval(coords, iv, prec)))
    for re_box, im_box in e.complex_pairs:
        v = qpoly_eval_complex(coords, ComplexInterval(re_box, im_box), prec)
        m = v.abs_interval(prec)
        out.append(m)
        out.append(m)  # conjugate has the same modulus
    return out


def house(x: FieldElement, precision: int) -> DyadicInterval:
    """Enclosure of the maximal conjugate modulus of x."""
    if x.is_zero():
        return singleton(0)
    if x.is_rational():
        c = abs(x.coords[0])
        from .bigreal.interval import from_fraction

        return from_fraction(c, precision + 8)
    work = precision + 8
    for _ in range(10):
        vals = _conjugate_abs_intervals(x, work)
        m = vals[0]
        for v in vals[1:]:
            m = iv_max(m, v)
        if m.width() <= Dyadic(1, -precision + 4) * max(Dyadic(1), m.mag()):
            return m
        work *= 2
    raise PrecisionInsufficient("house enclosure did not converge")  # pragma: no cover


def minimal_polynomial(x: FieldElement) -> list[Fraction]:
    """Exact monic minimal polynomial of x over Q, constant term first."""
    d = x.field.degree
    powers: list[tuple[Fraction, ...]] = [tuple([Fraction(1)] + [Fraction(0)] * (d - 1))]
    cur = x.field.one()
    for _ in range(d):
        cur = cur * x
        powers.append(cur.coords)
    for k in range(1, d + 1):
        sol = _solve_exact(powers[:k], powers[k], d)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
    raise AssertionError("minimal polynomial search exhausted")  # pragma: no cover


def _solve_exact(cols, target, dim) -> list[Fraction] | None:
    """Solve sum c_j cols[j] = target over Q, or None if inconsistent."""
    k = len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(dim)]
    piv_cols: list[int] = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, dim):
        if rows[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][k]
    return sol


def is_algebraic_integer(x: FieldElement) -> bool:
    """True iff the exact minimal polynomial of x is monic with integer coefficients."""
    return all(c.denominator == 1 for c in minimal_polynomial(x))


def norm_exact(x: FieldElement) -> Fraction:
    """Product of all conjugates, computed exactly via a resultant."""
    if x.is_zero():
        return Fraction(0)
    f = [Fraction(c) for c in x.field.minpoly.coeffs]
    g = list(x.coords)
    return resultant(f, g)


# ---------------------------------------------------------------------------
# multiquadratic compositum Q(sqrt(p1), ..., sqrt(pr))
# ---------------------------------------------------------------------------

def _sqfree_mul(d1: int, d2: int) -> tuple[int, int]:
    from math import gcd

    g = gcd(d1, d2)
    return g, (d1 // g) * (d2 // g)


def _mq_mul(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            g, d3 = _sqfree_mul(d1, d2)
            out[d3] = out.get(d3, Fraction(0)) + c1 * c2 * g
    return {k: v for k, v in out.items() if v}


def multiquadratic_field(primes: tuple[int, ...]):
    """Field Q(sqrt p : p in primes) with exact sqrt coordinates.

    Returns (field, sqrt_of) where sqrt_of(j) is the element sqrt(j) for any
    positive integer j whose squarefree part divides the product of the primes.
    """
    primes = tuple(sorted(set(primes)))
    r = len(primes)
    dim = 1 << r
    if dim > MAX_FIELD_DEGREE:
        raise ValueError(f"compositum degree {dim} exceeds {MAX_FIELD_DEGREE}")
    # basis keyed by squarefree products of the primes
    keys = [1]
    for p in primes:
        keys += [k * p for k in keys]
    keys.sort()
    key_index = {k: i for i, k in enumerate(keys)}

    gamma = {p: Fraction(1) for p in primes} if primes else {1: Fraction(1)}

    def to_vec(el: dict[int, Fraction]) -> tuple[Fraction, ...]:
        v = [Fraction(0)] * dim
        for k, c in el.items():
            v[key_index[k]] = c
        return tuple(v)

    powers = [{1: Fraction(1)}]
    for _ in range(dim):
        powers.append(_mq_mul(powers[-1], gamma))
    vecs = [to_vec(p) for p in powers]
    sol = _solve_exact(vecs[:dim], vecs[dim], dim)
    if sol is None:  # pragma: no cover
        raise AssertionError("compositum generator has unexpected degree")
    coeffs = [-c for c in sol] + [Fraction(1)]
    if any(c.denominator != 1 for c in coeffs):  # pragma: no cover
        raise AssertionError("compositum minimal polynomial is not integral")
    minpoly = IntPoly(tuple(int(c) for c in coeffs))

    hint = singleton(0)
    for p in primes:
        hint = iv_add(hint, iv_sqrt(singleton(p), 48), 48)
    if not primes:
        hint = singleton(1)
    pad = Dyadic(1, -20)
    hint = DyadicInterval(hint.lo - pad, hint.hi + pad)
    field = field_new(minpoly, hint)

    def sqrt_of(j: int) -> FieldElement:
        if j <= 0:
            raise ValueError("sqrt_of needs a positive integer")
        m, j0 = 1, j
        for p in primes:
            while j0 % (p * p) == 0:
                j0 //= p * p
                m *= p
        import math

        s = math.isqrt(j0)
        if s * s == j0:
            return field.from_rational(m * s)
        if j0 not in key_index:
            raise ValueError(f"sqrt({j}) does not lie in this compositum")
        target = [Fraction(0)] * dim
        target[key_index[j0]] = Fraction(m)
        c = _solve_exact(vecs[:dim], tuple(target), dim)
        if c is None:  # pragma: no cover
            raise AssertionError("sqrt coordinates not solvable")
        return field.element(c)

    return field, sqrt_of
