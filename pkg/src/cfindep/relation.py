"""Integer-relation detection via exact-integer lattice reduction.

The reduction is the classical all-integer LLL (Gram determinants d_i and
scaled coefficients lambda_{i,j}; no floating-point Gram-Schmidt) with the
Lovasz parameter fixed at delta = 99/100.  A relation search builds the
standard scaled-value lattice, reduces it in stages of doubling scale, and
verifies any candidate against the input enclosures at doubled precision
before reporting it.

A ``none_below_height`` outcome is an empirical certificate relative to the
chosen height and precision; it is never a proof of linear independence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bigreal.dyadic import Dyadic
from .bigreal.interval import DyadicInterval, iv_add, iv_mul, singleton
from .errors import PrecisionTooLow, RankDeficient
from .numfield import NumberField

__all__ = [
    "RelationResult",
    "LLL_DELTA",
    "lll_reduce",
    "lattice_reduce",
    "find_relation",
    "find_relation_over_field",
    "none_wording",
]

LLL_DELTA = Fraction(99, 100)


def none_wording(height: int, precision: int) -> str:
    return (
        f"empirical certificate relative to (H={height}, P={precision}); "
        "not a proof of linear independence"
    )


# ---------------------------------------------------------------------------
# exact-integer LLL
# ---------------------------------------------------------------------------

def _init_gram(b: list[list[int]]):
    n = len(b)
    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = sum(x * y for x, y in zip(b[i], b[j]))
            for k in range(j):
                u = (d[k + 1] * u - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise RankDeficient("basis rows are linearly dependent")
                d[i + 1] = u
    return d, lam


def lll_reduce(basis: list[list[int]], delta: Fraction = LLL_DELTA,
               with_transform: bool = False):
    """Exact-integer LLL reduction of the given row basis.

    Returns the reduced rows, plus the unimodular transform U (rows_out = U *
    rows_in) when requested.  Raises RankDeficient for dependent rows.
    """
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n == 0:
        return ([], []) if with_transform else []
    width = len(b[0])
    if any(len(row) != width for row in b):
        raise ValueError("ragged basis")
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    d, lam = _init_gram(b)
    num, den = delta.numerator, delta.denominator

    def red(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            u[k] = [x - q * y for x, y in zip(u[k], u[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    k = 1
    while k < n:
        red(k, k - 1)
        lk = lam[k][k - 1]
        if den * (d[k + 1] * d[k - 1] + lk * lk) < num * d[k] * d[k]:
            # Lovasz condition fails: swap rows k-1 and k
            b[k], b[k - 1] = b[k - 1], b[k]
            u[k], u[k - 1] = u[k - 1], u[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            new_dk = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
                lam[i][k - 1] = (new_dk * t + lk * lam[i][k]) // d[k + 1]
            d[k] = new_dk
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    if with_transform:
        return b, u
    return b


def lattice_reduce(basis: list[list[int]]) -> list[list[int]]:
    """Reduced basis of the same lattice (delta = 0.99)."""
    return lll_reduce(basis)


# ---------------------------------------------------------------------------
# relation search
# ---------------------------------------------------------------------------

@dataclass
class RelationResult:
    status: str  # "found" | "none_below_height"
    coefficients: list[int] | None
    height_bound: int
    precision: int
    residual: DyadicInterval | None
    statement: str
    lattice_dim: tuple[int, int]
    k_coefficients: list | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"


def _scaled_midpoints(values: list[DyadicInterval], scale_bits: int) -> list[int]:
    out = []
    for v in values:
        f = v.midpoint().as_fraction() * (1 << scale_bits)
        out.append(round(f))
    return out


def _combination(values: list[DyadicInterval], coeffs: list[int], prec: int) -> DyadicInterval:
    acc = singleton(0)
    for c, v in zip(coeffs, values):
        if c:
            acc = iv_add(acc, iv_mul(singleton(c), v, prec), prec)
    return acc


def _normalize(coeffs: list[int]) -> list[int]:
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    if g > 1:
        coeffs = [c // g for c in coeffs]
    lead = next((c for c in coeffs if c), 1)
    if lead < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def find_relation(values: list[DyadicInterval], height: int, precision: int) -> RelationResult:
    """Search for integers c with sum c_i * values_i = 0 and max|c| <= height.

    Inputs must be enclosures of width <= 2**-precision.  Candidates from the
    reduced lattice are verified in interval arithmetic at doubled precision;
    ``found`` requires the verified residual to contain zero with width below
    2**(-precision/2).
    """
    m = len(values)
    if m < 2:
        raise ValueError("need at least two values")
    if height < 1:
        raise ValueError("height must be >= 1")
    wmax = Dyadic(1, -precision)
    for v in values:
        if v.width() > wmax:
            raise PrecisionTooLow("input enclosure wider than 2^-precision")

    # staged reduction: reuse the transform from smaller scales
    scales = []
    s = min(precision, 512)
    while s < precision:
        scales.append(s)
        s *= 2
    scales.append(precision)
    transform = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    reduced = None
    for s_bits in scales:
        x = _scaled_midpoints(values, s_bits)
        rows = []
        for i in range(m):
            row = [transform[i][j] for j in range(m)]
            row.append(sum(transform[i][j] * x[j] for j in range(m)))
            rows.append(row)
        reduced, u = lll_reduce(rows, with_transform=True)
        transform = [[sum(u[i][k] * transform[k][j] for k in range(m)) for j in range(m)]
                     for i in range(m)]

    # inspect candidates by ascending norm
    order = sorted(range(m), key=lambda i: sum(c * c for c in reduced[i]))
    verify_prec = 2 * precision + 16
    residual_cap = Dyadic(1, -(precision // 2))
    for idx in order:
        c = _normalize(reduced[idx][:m])
        if all(v == 0 for v in c):
            continue
        if max(abs(v) for v in c) > height:
            continue
        resid = _combination(values, c, verify_prec)
        if resid.contains_zero() and resid.width() < residual_cap:
            return RelationResult(
                "found", c, height, precision, resid,
                "verified integer relation; residual enclosure contains zero",
                (m, m + 1),
            )
    return RelationResult(
        "none_below_height", None, height, precision, None,
        none_wording(height, precision), (m, m + 1),
    )


def find_relation_over_field(values: list[DyadicInterval], field: NumberField,
                             height: int, precision: int,
                             basis=None) -> RelationResult:
    """Relation search over a number field via an expanded coefficient basis.

    Searches integer relations among {w_i * v_j} union {w_i} for the basis
    elements w_i (powers of the generator by default); a field relation with
    coefficients in the integer span of that basis exists exactly when such an
    expanded relation does.  Found coefficients map back to field elements
    (A_1, ..., A_M, A_0).  Pass ``basis`` (a list of D field elements, e.g. an
    integral basis) to widen the coefficient span beyond Z[theta].
    """
    d = field.degree
    m = len(values)
    work = precision + 16 + 8 * d
    if basis is None:
        theta = field.root_enclosure(work)
        basis_encs = [singleton(1)]
        for _ in range(d - 1):
            basis_encs.append(iv_mul(basis_encs[-1], theta, work))
        basis_elems = None
    else:
        if len(basis) != d:
            raise ValueError("coefficient basis must have D elements")
        basis_elems = list(basis)
        basis_encs = [b.enclosure(work) for b in basis_elems]
    expanded: list[DyadicInterval] = []
    for v in values:
        for be in basis_encs:
            expanded.append(iv_mul(v, be, work))
    expanded.extend(basis_encs)
    wmax = Dyadic(1, -precision)
    for v in expanded:
        if v.width() > wmax:
            raise PrecisionTooLow("expanded enclosure wider than 2^-precision; "
                                  "tighten the input values")
    res = find_relation(expanded, height, precision)
    if res.found:
        c = res.coefficients
        k_coeffs = []
        for j in range(m + 1):
            chunk = c[j * d:(j + 1) * d]
            if basis_elems is None:
                k_coeffs.append(field.element(chunk))
            else:
                acc = field.zero()
                for ci, w in zip(chunk, basis_elems):
                    acc = acc + ci * w
                k_coeffs.append(acc)
        res.k_coefficients = k_coeffs
    return res
