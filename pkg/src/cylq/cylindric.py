"""Ground-truth enumeration of cylindric partitions and Borodin's product.

A cylindric partition with profile (c_1,...,c_k) is a k-tuple of weakly
decreasing rows subject to the wrap-around dominance conditions

    row_i[j] >= row_{i+1}[j + c_{i+1}]      (i = 1..k-1)
    row_k[j] >= row_1[j + c_1]

with out-of-range entries read as zero.  Everything the closed-form modules
claim is validated against the streams produced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .qpoly import IntPoly, TruncatedSeries, mul_geometric, series
from .mvseries import MVSeries

__all__ = [
    "Profile",
    "CylindricPartition",
    "RowCountMismatch",
    "UnsupportedProfile",
    "is_valid",
    "enumerate_partitions",
    "cp_series",
    "cp_series_weighted",
    "borodin_product",
    "dump_line",
]


class RowCountMismatch(ValueError):
    """A candidate filling has the wrong number of rows for the profile."""


class UnsupportedProfile(ValueError):
    """The requested profile is outside this operation's supported set."""


@dataclass(frozen=True)
class Profile:
    """Composition (c_1,...,c_k); level is the sum, t = k + level."""

    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        object.__setattr__(self, "parts", tuple(int(c) for c in parts))
        if self.rank < 1:
            raise ValueError("profile needs at least one part")
        if any(c < 0 for c in self.parts):
            raise ValueError("profile parts must be >= 0")
        if self.rank + self.level < 2:
            raise ValueError("profile must have k + level >= 2")

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def level(self) -> int:
        return sum(self.parts)

    @property
    def modulus(self) -> int:
        return self.rank + self.level

    def rotated(self) -> "Profile":
        return Profile(self.parts[1:] + self.parts[:1])

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.parts)


@dataclass(frozen=True)
class CylindricPartition:
    """Rows padded with zeros to a common length."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(sum(r) for r in self.rows)


def _entry(row: Sequence[int], j: int) -> int:
    """1-based access with zero padding beyond the stored length."""
    return row[j - 1] if 1 <= j <= len(row) else 0


def is_valid(cp: CylindricPartition, profile: Profile) -> bool:
    """Check every defining inequality of the profile."""
    k = profile.rank
    if len(cp.rows) != k:
        raise RowCountMismatch(f"expected {k} rows, got {len(cp.rows)}")
    n = max((len(r) for r in cp.rows), default=0)
    for row in cp.rows:
        for j in range(1, n):
            if _entry(row, j) < _entry(row, j + 1):
                return False
    for i in range(1, k + 1):
        nxt = 1 if i == k else i + 1
        shift = profile.parts[nxt - 1]
        for j in range(1, n + 1):
            if _entry(cp.rows[i - 1], j) < _entry(cp.rows[nxt - 1], j + shift):
                return False
    return True


def enumerate_partitions(profile: Profile, n: int, size_bound: int) -> Iterator[CylindricPartition]:
    """All cylindric partitions with <= n nonzero parts per row and size <= size_bound.

    Deterministic order: lexicographic on the flattened row-major entries.
    Rows come out padded to length n.
    """
    if n < 0 or size_bound < 0:
        raise ValueError("n and size bound must be >= 0")
    k = profile.rank
    if n == 0:
        yield CylindricPartition(tuple(() for _ in range(k)))
        return
    rows: list[list[int]] = [[0] * n for _ in range(k)]
    yield from _fill_rows(profile, rows, 0, n, size_bound)


def _row_candidates(
    profile: Profile,
    rows: list[list[int]],
    i: int,
    n: int,
    budget: int,
) -> Iterator[list[int]]:
    """DFS over row i (0-based), already-filled rows 0..i-1 constrain it."""
    k = profile.rank
    shift_above = profile.parts[i]  # row_{i-1}[j] >= row_i[j + c_i] -> upper bound
    # The wrap row_k[j] >= row_1[j + c_1] lower-bounds the last row from row 1.
    wrap_shift = profile.parts[0]
    row = [0] * n

    def upper(j: int) -> int:
        ub = row[j - 2] if j >= 2 else budget
        if i > 0 and j - shift_above >= 1:
            ub = min(ub, rows[i - 1][j - shift_above - 1])
        return ub

    def lower(j: int) -> int:
        if i == k - 1:
            return _entry(rows[0], j + wrap_shift)
        return 0

    def min_tail(j: int) -> int:
        # cheapest admissible completion of positions j..n
        return sum(lower(t) for t in range(j, n + 1))

    def rec(j: int, used: int) -> Iterator[list[int]]:
        if j > n:
            yield list(row)
            return
        lo = lower(j)
        hi = min(upper(j), budget - used - (min_tail(j + 1)))
        if hi < lo:
            return
        for v in range(lo, hi + 1):
            row[j - 1] = v
            yield from rec(j + 1, used + v)
        row[j - 1] = 0

    yield from rec(1, 0)


def _fill_rows(
    profile: Profile,
    rows: list[list[int]],
    i: int,
    n: int,
    budget: int,
) -> Iterator[CylindricPartition]:
    k = profile.rank
    if i == k:
        cp = CylindricPartition(tuple(tuple(r) for r in rows))
        yield cp
        return
    for cand in _row_candidates(profile, rows, i, n, budget):
        rows[i] = cand
        used = sum(cand)
        # rows 2..k are each bounded above by their predecessor; the cheapest
        # completion of the remaining rows is forced by the wrap-around row.
        remaining = budget - used
        if remaining >= 0:
            yield from _fill_rows(profile, rows, i + 1, n, remaining)
    rows[i] = [0] * n


def cp_series(profile: Profile, n: int, order: int) -> TruncatedSeries:
    """Generating series of the enumerate stream by size, exact below `order`."""
    counts: dict[int, int] = {}
    for cp in enumerate_partitions(profile, n, max(order - 1, 0)):
        counts[cp.size] = counts.get(cp.size, 0) + 1
    return series(IntPoly(counts.items()), order)


def cp_series_weighted(profile: Profile, n: int, order: int) -> MVSeries:
    """Multivariate series sum_Lambda prod x_i^(a_i) y_i^(b_i), two-row profiles only.

    Truncation is by total degree; supported for the profiles whose weighted
    generating functions have product forms, (1,1) and (2,0), with n <= 4.
    """
    if profile.parts not in ((1, 1), (2, 0)):
        raise UnsupportedProfile(f"weighted series unsupported for profile ({profile})")
    if n > 4:
        raise ValueError("weighted series supported only for n <= 4")
    terms: dict[tuple[tuple[str, int], ...], int] = {}
    for cp in enumerate_partitions(profile, n, max(order - 1, 0)):
        a, b = cp.rows
        mono: dict[str, int] = {}
        for j, v in enumerate(a, start=1):
            if v:
                mono[f"x{j}"] = v
        for j, v in enumerate(b, start=1):
            if v:
                mono[f"y{j}"] = v
        key = tuple(sorted(mono.items()))
        terms[key] = terms.get(key, 0) + 1
    return MVSeries({k: v for k, v in terms.items() if v}, order)


def borodin_exponents(profile: Profile) -> list[int]:
    """Exponents e of the elementary factors 1/(q^e; q^t)_inf, multiplicity kept."""
    c = profile.parts
    k = profile.rank
    t = profile.modulus

    def s(i: int, j: int) -> int:
        if j < i:
            return 0
        return sum(c[i - 1 : j])

    exps: list[int] = [t]
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            for m in range(1, c[i - 1] + 1):
                exps.append(m + j - i + s(i + 1, j))
    for i in range(2, k + 1):
        for j in range(2, i + 1):
            for m in range(1, c[i - 1] + 1):
                exps.append(t - m + j - i - s(j, i - 1))
    return exps


def borodin_product(profile: Profile, order: int) -> TruncatedSeries:
    """Truncated expansion of Borodin's infinite product for the profile."""
    t = profile.modulus
    acc = series(IntPoly.one(), order)
    for e in borodin_exponents(profile):
        m = e
        while m < order:
            acc = mul_geometric(acc, m)
            m += t
    return acc


def dump_line(cp: CylindricPartition) -> str:
    """One-line dump: rows joined by '|', entries space separated."""
    return " | ".join(" ".join(str(v) for v in row) for row in cp.rows)


def specialize_weighted(ms: MVSeries) -> TruncatedSeries:
    """Substitute every x_i and y_i by q (size statistic)."""
    counts: dict[int, int] = {}
    for mono, coeff in ms.terms.items():
        d = sum(e for _, e in mono)
        counts[d] = counts.get(d, 0) + coeff
    return series(IntPoly(counts.items()), ms.order)
