"""Exact evaluators for the bilateral sums, multi-sum sides and closed forms.

Bilateral sums are handled in a parity-split normal form: the sum over all
integers r is split into r = 2s and r = 2s + 1, and each branch carries an
integer quadratic exponent e(s) = A s^2 + B s + C, an affine binomial index
j(s) = u s + v (the binomial is [2n + a, n - j]), and a sign.  Every closed
form in the engine, proven or conjectural, is expressible this way; the
floor-indexed sums keep their literal floors in dedicated evaluators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .cylindric import Profile, UnsupportedProfile
from .qpoly import (
    ONE,
    ZERO,
    IntPoly,
    TruncatedSeries,
    mul_geometric,
    qbinom,
    qbinom_base,
    qbinom_primed,
    qq,
    series,
    series_inverse,
)

__all__ = [
    "BilateralBranch",
    "BilateralSum",
    "FamilyParams",
    "NonIntegerIndex",
    "InvalidParams",
    "InvalidAlpha",
    "rhs_bilateral",
    "spec_from_family",
    "profile_family",
    "p_formula",
    "p_formula_variant",
    "profile_variants",
    "lhs_fq_ag",
    "rhs_fq_ag",
    "lhs_fq_bressoud",
    "rhs_fq_bressoud",
    "lhs_conj_ag",
    "lhs_conj_bressoud",
    "andrews_finite_rr",
    "rogers_sum",
    "bressoud_k1_sum",
    "positivity_scan",
    "limit_product",
    "cp_closed_form",
    "SUPPORTED_PROFILES",
    "CONJECTURAL_PROFILES",
    "PROVEN_CONJ_K",
]


class NonIntegerIndex(ValueError):
    """A bilateral branch would produce a non-integer exponent or index."""


class InvalidParams(ValueError):
    """Family parameters outside the defined range."""


class InvalidAlpha(ValueError):
    """The finite Rogers-Ramanujan identity only allows alpha in {0, -1}."""


@dataclass(frozen=True)
class BilateralBranch:
    """sign * q^(A s^2 + B s + C) [2n+a, n - (u s + v)] summed over s in Z."""

    sign: int
    e2: int
    e1: int
    e0: int
    ju: int
    jv: int

    def exponent(self, s: int) -> int:
        return (self.e2 * s + self.e1) * s + self.e0

    def index(self, s: int) -> int:
        return self.ju * s + self.jv


@dataclass(frozen=True)
class BilateralSum:
    """Parity-split bilateral sum with top argument 2n + a."""

    a: int
    even: BilateralBranch
    odd: BilateralBranch

    def branches(self) -> tuple[BilateralBranch, BilateralBranch]:
        return (self.even, self.odd)

    def with_extra(self, p: int, a_step: int) -> "BilateralSum":
        """Add p*(j^2 + a_step*j) to each branch's exponent (Bailey steps)."""

        def bump(b: BilateralBranch) -> BilateralBranch:
            # (u s + v)^2 + a(u s + v) folded into the quadratic
            return BilateralBranch(
                sign=b.sign,
                e2=b.e2 + p * b.ju * b.ju,
                e1=b.e1 + p * (2 * b.ju * b.jv + a_step * b.ju),
                e0=b.e0 + p * (b.jv * b.jv + a_step * b.jv),
                ju=b.ju,
                jv=b.jv,
            )

        return BilateralSum(self.a, bump(self.even), bump(self.odd))


def rhs_bilateral(spec: BilateralSum, n: int) -> IntPoly:
    """Evaluate the finite bilateral sum exactly at top argument 2n + a."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = ZERO
    for br in spec.branches():
        if br.ju <= 0:
            raise NonIntegerIndex("branch index must have positive slope")
        # [2n+a, n-j] is nonzero only for -(n+a) <= j <= n
        lo, hi = -(n + spec.a), n
        s_lo = -((-(lo - br.jv)) // br.ju)  # ceil
        s_hi = (hi - br.jv) // br.ju  # floor
        for s in range(s_lo, s_hi + 1):
            b = qbinom(2 * n + spec.a, n - br.index(s))
            if b.is_zero():
                continue
            total = total + b.shift(br.exponent(s)) * br.sign
    return total


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    """tag 'ag' (odd modulus 2k+1) or 'b' (even modulus 2k), with k >= i >= 1."""

    tag: str
    k: int
    i: int

    def __post_init__(self) -> None:
        if self.tag not in ("ag", "b"):
            raise InvalidParams(f"unknown family tag {self.tag!r}")
        if not (self.k >= self.i >= 1):
            raise InvalidParams(f"need k >= i >= 1, got k={self.k}, i={self.i}")

    @property
    def profile(self) -> Profile:
        if self.tag == "ag":
            return Profile((2 * self.k - self.i, self.i - 1))
        return Profile((2 * self.k - self.i - 1, self.i - 1))

    def __str__(self) -> str:
        return f"{self.tag}:{self.k},{self.i}"


def spec_from_family(fam: FamilyParams) -> BilateralSum:
    """Parity-split spec of the family's alternating closed form."""
    k, i = fam.k, fam.i
    if fam.tag == "ag":
        # r = 2s:   q^(2(2k+1)s^2 + (2k-2i+1)s),        index (2k+1)s
        # r = 2s+1: q^(2(2k+1)s^2 + (6k-2i+3)s + 2k-i+1), index (2k+1)s + 2k-i+1
        m = 2 * k + 1
        even = BilateralBranch(+1, 2 * m, 2 * k - 2 * i + 1, 0, m, 0)
        odd = BilateralBranch(-1, 2 * m, 6 * k - 2 * i + 3, 2 * k - i + 1, m, 2 * k - i + 1)
        return BilateralSum(0, even, odd)
    # r = 2s:   q^(4k s^2 + 2(k-i)s),          index 2ks
    # r = 2s+1: q^(4k s^2 + (6k-2i)s + 2k-i),  index 2ks + 2k-i
    m = 2 * k
    even = BilateralBranch(+1, 2 * m, 2 * (k - i), 0, m, 0)
    odd = BilateralBranch(-1, 2 * m, 6 * k - 2 * i, 2 * k - i, m, 2 * k - i)
    return BilateralSum(0, even, odd)


SUPPORTED_PROFILES: dict[tuple[int, int], FamilyParams] = {}
for _k in (1, 2, 3):
    for _i in range(1, _k + 1):
        _f = FamilyParams("ag", _k, _i)
        SUPPORTED_PROFILES[_f.profile.parts] = _f  # type: ignore[index]
for _k in (1, 2, 3):
    for _i in range(1, _k + 1):
        _f = FamilyParams("b", _k, _i)
        if _f.profile.rank == 2:
            SUPPORTED_PROFILES[_f.profile.parts] = _f  # type: ignore[index]

# the ten profiles of interest (levels 2..5); drop the degenerate level-1 ones
SUPPORTED_PROFILES = {
    parts: fam
    for parts, fam in SUPPORTED_PROFILES.items()
    if sum(parts) in (2, 3, 4, 5)
}

# closed forms proven in the source material: AG k=2,3 at i<=2 plus k=i cases
# via the Foda-Quano match, B families via the k=2,3 theorems.  The (3,2)
# profile (AG k=i=3) is explicitly conjectural.
CONJECTURAL_PROFILES = {(3, 2)}

PROVEN_CONJ_K = {2, 3, 4}


def profile_family(profile: Profile) -> FamilyParams:
    fam = SUPPORTED_PROFILES.get(profile.parts)
    if fam is None:
        raise UnsupportedProfile(f"no closed form registered for profile ({profile})")
    return fam


def p_formula(profile: Profile, n: int) -> IntPoly:
    """Numerator polynomial of the profile's closed form (canonical variant)."""
    return rhs_bilateral(spec_from_family(profile_family(profile)), n)


# -- alternate printed conventions, adjudicated by the enumeration oracle ----


def _halved_offset_spec(fam: FamilyParams) -> BilateralSum:
    """AG variant with offset (2k-2i+1)((-1)^r - 1)/2 instead of /4.

    The odd branch's index is (2k+1)(2s+1)/2 + (2k-2i+1), which is never an
    integer; constructing it raises NonIntegerIndex.
    """
    raise NonIntegerIndex(
        "offset (2k-2i+1)((-1)^r-1)/2 gives index n - (2k+1)r/2 - (2k-2i+1) "
        "with half-integer (2k+1)r/2 at odd r"
    )


def _shift3_spec(fam: FamilyParams) -> BilateralSum:
    """(3,2) variant: exponent r(7r+3)/2 paired with the denominator-4 offset."""
    if (fam.k, fam.i, fam.tag) != (3, 3, "ag"):
        raise InvalidParams("shift3 variant only defined for the (3,2) profile")
    even = BilateralBranch(+1, 14, 3, 0, 7, 0)
    odd = BilateralBranch(-1, 14, 17, 5, 7, 4)
    return BilateralSum(0, even, odd)


@dataclass(frozen=True)
class Variant:
    name: str
    build: Callable[[FamilyParams], BilateralSum]


def profile_variants(profile: Profile) -> list[Variant]:
    """Candidate index/exponent conventions for the adjudicated profiles."""
    if profile.parts in ((5, 0), (4, 1)):
        return [
            Variant("quarter-offset", spec_from_family),
            Variant("half-offset", _halved_offset_spec),
        ]
    if profile.parts == (3, 2):
        return [
            Variant("exponent-r(7r+1)/2", spec_from_family),
            Variant("exponent-r(7r+3)/2", _shift3_spec),
        ]
    return [Variant("canonical", spec_from_family)]


def p_formula_variant(profile: Profile, n: int, variant: str) -> IntPoly:
    fam = profile_family(profile)
    for v in profile_variants(profile):
        if v.name == variant:
            return rhs_bilateral(v.build(fam), n)
    raise InvalidParams(f"unknown variant {variant!r} for profile ({profile})")


# ---------------------------------------------------------------------------
# Multi-sum left-hand sides
# ---------------------------------------------------------------------------


def _tuples_desc(count: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing non-negative tuples of the given length, first <= hi."""
    if count == 0:
        yield ()
        return
    cur = [0] * count

    def rec(pos: int, cap: int) -> Iterator[tuple[int, ...]]:
        if pos == count:
            yield tuple(cur)
            return
        for v in range(cap + 1):
            cur[pos] = v
            yield from rec(pos + 1, v)

    yield from rec(0, hi)


def _alpha(i: int, j: int) -> int:
    return max(j - i + 1, 0)


def _beta(k: int, i: int, j: int) -> int:
    return min(k - i, k - j - 1)


def lhs_fq_ag(k: int, i: int, n: int) -> IntPoly:
    """Odd-modulus multi-sum with single alpha shifts and ordinary binomials."""
    if not (k >= i >= 1) or n < 0:
        raise InvalidParams("need k >= i >= 1 and n >= 0")
    total = ZERO
    for tup in _tuples_desc(k - 1, n):
        ns = list(tup) + [0]  # n_k = 0
        term = ONE
        prefix = 0  # sum of n_l for l < j
        for j in range(1, k):
            top = 2 * n - 2 * prefix - ns[j - 1] - ns[j] - _alpha(i, j)
            term = term * qbinom(top, ns[j - 1] - ns[j])
            if term.is_zero():
                break
            prefix += ns[j - 1]
        if term.is_zero():
            continue
        expo = sum(v * v for v in tup) + sum(ns[j - 1] for j in range(i, k))
        total = total + term.shift(expo)
    return total


def rhs_fq_ag(k: int, i: int, n: int) -> IntPoly:
    """Bilateral sum with the literal floor index floor((i-k-(2k+1)r)/2)."""
    if not (k >= i >= 1) or n < 0:
        raise InvalidParams("need k >= i >= 1 and n >= 0")
    total = ZERO
    m = 2 * k + 1
    r_bound = (2 * n + 3 * k) // m + 2
    for r in range(-r_bound, r_bound + 1):
        j = (i - k - m * r) // 2  # Python // is the floor
        b = qbinom(2 * n, n - j)
        if b.is_zero():
            continue
        e = r * (m * r + 2 * k - 2 * i + 1) // 2
        total = total + b.shift(e) * (-1 if r % 2 else 1)
    return total


def lhs_fq_bressoud(k: int, i: int, n: int) -> IntPoly:
    """Even-modulus multi-sum with beta shifts and a q^2-binomial tail."""
    if not (k >= i >= 1) or k < 2 or n < 0:
        raise InvalidParams("need k >= 2, k >= i >= 1 and n >= 0")
    total = ZERO
    for tup in _tuples_desc(k - 1, n):
        ns = list(tup)
        head = sum(ns[: k - 2])
        term = qbinom_base(n - head, ns[k - 2], 2)
        if term.is_zero():
            continue
        prefix = 0
        for j in range(1, k - 1):
            top = 2 * n - 2 * prefix - ns[j - 1] - ns[j] + _beta(k, i, j)
            term = term * qbinom(top, ns[j - 1] - ns[j])
            if term.is_zero():
                break
            prefix += ns[j - 1]
        if term.is_zero():
            continue
        expo = sum(v * v for v in tup) + sum(ns[j - 1] for j in range(i, k))
        total = total + term.shift(expo)
    return total


def rhs_fq_bressoud(k: int, i: int, n: int) -> IntPoly:
    """sum_r (-1)^r q^(r(kr+k-i)) [2n+k-i, n-kr]."""
    if not (k >= i >= 1) or n < 0:
        raise InvalidParams("need k >= i >= 1 and n >= 0")
    total = ZERO
    r_bound = (2 * n + 2 * k) // k + 2
    for r in range(-r_bound, r_bound + 1):
        b = qbinom(2 * n + k - i, n - k * r)
        if b.is_zero():
            continue
        total = total + b.shift(r * (k * r + k - i)) * (-1 if r % 2 else 1)
    return total


def lhs_conj_ag(k: int, i: int, n: int) -> IntPoly:
    """Doubled-alpha multi-sum with primed binomials."""
    if not (k >= i >= 1) or n < 0:
        raise InvalidParams("need k >= i >= 1 and n >= 0")
    total = ZERO
    for tup in _tuples_desc(k - 1, n):
        ns = list(tup) + [0]
        term = ONE
        prefix = 0
        for j in range(1, k):
            top = 2 * n - 2 * prefix - ns[j - 1] - ns[j] - 2 * _alpha(i, j)
            term = term * qbinom_primed(top, ns[j - 1] - ns[j])
            if term.is_zero():
                break
            prefix += ns[j - 1]
        if term.is_zero():
            continue
        expo = sum(v * v for v in tup) + sum(ns[j - 1] for j in range(i, k))
        total = total + term.shift(expo)
    return total


def lhs_conj_bressoud(k: int, i: int, n: int) -> IntPoly:
    """Doubled-alpha even-modulus multi-sum, primed in both q and q^2 factors."""
    if not (k >= i >= 1) or k < 2 or n < 0:
        raise InvalidParams("need k >= 2, k >= i >= 1 and n >= 0")
    total = ZERO
    for tup in _tuples_desc(k - 1, n):
        ns = list(tup)
        head = sum(ns[: k - 2])
        term = qbinom_base(n - head - k + i, ns[k - 2], 2, primed=True)
        if term.is_zero():
            continue
        prefix = 0
        for j in range(1, k - 1):
            top = 2 * n - 2 * prefix - ns[j - 1] - ns[j] - 2 * _alpha(i, j)
            term = term * qbinom_primed(top, ns[j - 1] - ns[j])
            if term.is_zero():
                break
            prefix += ns[j - 1]
        if term.is_zero():
            continue
        expo = sum(v * v for v in tup) + sum(ns[j - 1] for j in range(i, k))
        total = total + term.shift(expo)
    return total


def andrews_finite_rr(alpha: int, n: int) -> tuple[IntPoly, IntPoly]:
    """Both sides of the finite Rogers-Ramanujan identity, alpha in {0, -1}.

    LHS: sum_j q^(j^2 - alpha j) [n+1+alpha-j, j]
    RHS: sum_j (-1)^j q^(j(5j+1)/2 + 2 alpha j) [n+1, floor((n+1-5j)/2) - alpha]
    """
    if alpha not in (0, -1):
        raise InvalidAlpha("alpha must be 0 or -1")
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = ZERO
    j = 0
    while True:
        b = qbinom(n + 1 + alpha - j, j)
        if b.is_zero() and j > n + 2:
            break
        if not b.is_zero():
            lhs = lhs + b.shift(j * j - alpha * j)
        j += 1
    rhs = ZERO
    r_bound = n + 4
    for j in range(-r_bound, r_bound + 1):
        bottom = (n + 1 - 5 * j) // 2 - alpha
        b = qbinom(n + 1, bottom)
        if b.is_zero():
            continue
        e = j * (5 * j + 1) // 2 + 2 * alpha * j
        rhs = rhs + b.shift(e) * (-1 if j % 2 else 1)
    return lhs, rhs


def rogers_sum(n: int) -> IntPoly:
    """The canonical-index Rogers bilateral sum; identically 1."""
    return rhs_bilateral(spec_from_family(FamilyParams("ag", 1, 1)), n)


def bressoud_k1_sum(n: int) -> IntPoly:
    """sum_r (-1)^r q^(r^2) [2n, n-r]; equals (q;q^2)_n."""
    return rhs_bilateral(spec_from_family(FamilyParams("b", 1, 1)), n)


# ---------------------------------------------------------------------------
# Positivity and limits
# ---------------------------------------------------------------------------


def positivity_scan(p: IntPoly) -> list[tuple[int, int]]:
    """All (exponent, coefficient) pairs with a negative coefficient."""
    return [(e, c) for e, c in p.items() if c < 0]


def limit_product(fam: FamilyParams, order: int) -> TruncatedSeries:
    """Truncated series of the closed form's n -> infinity limit.

    Jacobi triple product turns the bilateral theta into
    (q^i, q^(M-i), q^M; q^M)_inf / (q;q)_inf with M the family modulus
    (2k+1 resp. 2k); expanded here as an exact truncated quotient.
    """
    m = 2 * fam.k + 1 if fam.tag == "ag" else 2 * fam.k
    theta = series(ONE, order)
    for shift in (fam.i, m - fam.i, m):
        e = shift
        while e < order:
            theta = theta * IntPoly({0: 1, e: -1})
            e += m
    return theta * series_inverse(qq(order), order)


def cp_closed_form(profile: Profile, n: int, order: int) -> TruncatedSeries:
    """Closed form divided by (q;q)_{2n}, as a truncated series."""
    return series_inverse(qq(2 * n), order) * p_formula(profile, n)
