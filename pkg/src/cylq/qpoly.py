"""Exact univariate polynomial and truncated-series arithmetic over the integers.

A polynomial in q is a sparse map {exponent: coefficient} with Python ints as
coefficients (arbitrary precision) and no zero coefficient ever stored.  A
truncated series is a polynomial together with an order D, meaning the
coefficients of q^0 .. q^(D-1) are exact and everything from q^D on is
unknown.  Mixing two series takes the minimum of the two orders.

Everything q-flavoured that the rest of the engine needs lives here too:
q-Pochhammer products, Gaussian binomials (Pascal recurrence with a memo),
series inversion, and the canonical text rendering used by reports.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class NotDivisible(ArithmeticError):
    """Exact polynomial division has a nonzero remainder."""


class InfiniteWithoutTruncation(ValueError):
    """An infinite Pochhammer product was requested without a truncation order."""


class NonUnitConstantTerm(ValueError):
    """Series inversion needs a constant term of +1 or -1."""


class IntPoly:
    """Immutable sparse polynomial in q with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, v in items:
            if v == 0:
                continue
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c[e] = c.get(e, 0) + v
            if c[e] == 0:
                del c[e]
        self._c = c

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly({0: 1})

    @staticmethod
    def const(v: int) -> "IntPoly":
        return IntPoly({0: v})

    @staticmethod
    def monomial(coeff: int, exp: int) -> "IntPoly":
        return IntPoly({exp: coeff})

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial (the -infinity sentinel)."""
        return max(self._c) if self._c else -1

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({} if other == 0 else {0: other})
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        if not self._c:
            return other
        if not other._c:
            return self
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            else:
                c.pop(e, None)
        return _raw(c)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return _raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly()
        if len(a) == 1:
            ((e, v),) = a.items()
            return _raw({e + f: v * w for f, w in b.items()})
        if len(b) == 1:
            ((e, v),) = b.items()
            return _raw({e + f: v * w for f, w in a.items()})
        # Dense convolution pays off once both operands are reasonably full.
        if _fill(a) > 0.5 and _fill(b) > 0.5:
            return _dense_mul(a, b)
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e, v in a.items():
            for f, w in b.items():
                g = e + f
                nv = c.get(g, 0) + v * w
                if nv:
                    c[g] = nv
                else:
                    c.pop(g, None)
        return _raw(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if not self._c:
            return self
        return _raw({e + k: v for e, v in self._c.items()})

    def exact_div(self, d: "IntPoly") -> "IntPoly":
        """Return c with c*d == self, or raise NotDivisible."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPoly()
        rem = dict(self._c)
        dd = d.degree
        dl = d.coeff(dd)
        out: dict[int, int] = {}
        while rem:
            e = max(rem)
            if e < dd:
                raise NotDivisible(f"remainder of degree {e}")
            v = rem[e]
            if v % dl:
                raise NotDivisible(f"leading coefficient {v} not divisible by {dl}")
            k = v // dl
            out[e - dd] = k
            for f, w in d._c.items():
                g = e - dd + f
                nv = rem.get(g, 0) - k * w
                if nv:
                    rem[g] = nv
                else:
                    rem.pop(g, None)
        return _raw(out)

    def truncate(self, order: int) -> "IntPoly":
        """Drop all terms of exponent >= order."""
        return _raw({e: v for e, v in self._c.items() if e < order})

    def subs_exp(self, m: int) -> "IntPoly":
        """Substitute q -> q^m (exponent inflation)."""
        if m <= 0:
            raise ValueError("inflation factor must be positive")
        return _raw({e * m: v for e, v in self._c.items()})

    def at_one(self) -> int:
        """Value at q=1, i.e. the coefficient sum."""
        return sum(self._c.values())

    # -- rendering ------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: ascending exponents, zero terms omitted."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, v in sorted(self._c.items()):
            a = abs(v)
            if e == 0:
                body = str(a)
            elif e == 1:
                body = "q" if a == 1 else f"{a}*q"
            else:
                body = f"q^{e}" if a == 1 else f"{a}*q^{e}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"IntPoly({self.render()})"


def _raw(c: dict[int, int]) -> IntPoly:
    p = IntPoly.__new__(IntPoly)
    p._c = c
    return p


def _coerce(v: "IntPoly | int") -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly.const(v)
    raise TypeError(f"cannot coerce {type(v)!r} to IntPoly")


def _fill(c: dict[int, int]) -> float:
    return len(c) / (max(c) + 1)


def _dense_mul(a: dict[int, int], b: dict[int, int]) -> IntPoly:
    da, db = max(a), max(b)
    va = [0] * (da + 1)
    for e, v in a.items():
        va[e] = v
    vb = [0] * (db + 1)
    for e, v in b.items():
        vb[e] = v
    out = [0] * (da + db + 1)
    for e, v in enumerate(va):
        if v:
            for f, w in enumerate(vb):
                if w:
                    out[e + f] += v * w
    return _raw({e: v for e, v in enumerate(out) if v})


ZERO = IntPoly.zero()
ONE = IntPoly.one()
Q = IntPoly.monomial(1, 1)


# ---------------------------------------------------------------------------
# Truncated series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """A polynomial exact modulo q^order."""

    body: IntPoly
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.body.degree >= self.order:
            object.__setattr__(self, "body", self.body.truncate(self.order))

    def coeff(self, exp: int) -> int:
        if exp >= self.order:
            raise IndexError(f"coefficient q^{exp} is beyond order {self.order}")
        return self.body.coeff(exp)

    def __add__(self, other: "TruncatedSeries | IntPoly | int") -> "TruncatedSeries":
        other = _coerce_series(other, self.order)
        d = min(self.order, other.order)
        return TruncatedSeries((self.body + other.body).truncate(d), d)

    def __sub__(self, other: "TruncatedSeries | IntPoly | int") -> "TruncatedSeries":
        other = _coerce_series(other, self.order)
        d = min(self.order, other.order)
        return TruncatedSeries((self.body - other.body).truncate(d), d)

    def __mul__(self, other: "TruncatedSeries | IntPoly | int") -> "TruncatedSeries":
        other = _coerce_series(other, self.order)
        d = min(self.order, other.order)
        return TruncatedSeries((self.body * other.body).truncate(d), d)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.body, self.order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            d = min(self.order, other.order)
            return self.body.truncate(d) == other.body.truncate(d)
        if isinstance(other, (IntPoly, int)):
            return self.body == _coerce(other).truncate(self.order)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.body, self.order))

    def render(self) -> str:
        return f"{self.body.render()} (mod q^{self.order})"


def _coerce_series(v: "TruncatedSeries | IntPoly | int", order: int) -> TruncatedSeries:
    if isinstance(v, TruncatedSeries):
        return v
    return TruncatedSeries(_coerce(v), order)


def series(p: IntPoly | int, order: int) -> TruncatedSeries:
    return TruncatedSeries(_coerce(p), order)


def series_inverse(p: IntPoly, order: int) -> TruncatedSeries:
    """Multiplicative inverse of p modulo q^order (constant term must be +-1)."""
    c0 = p.coeff(0)
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
    inv = [0] * order
    inv[0] = c0  # 1/c0 == c0 for units of Z
    for m in range(1, order):
        acc = 0
        for e, v in p._c.items():  # noqa: SLF001 - same module
            if 0 < e <= m:
                acc += v * inv[m - e]
        inv[m] = -c0 * acc
    return TruncatedSeries(IntPoly({e: v for e, v in enumerate(inv) if v}), order)


def mul_geometric(s: TruncatedSeries, step: int) -> TruncatedSeries:
    """Multiply by 1/(1-q^step) in O(order) time."""
    if step < 1:
        raise ValueError("geometric step must be positive")
    d = s.order
    out = [0] * d
    for e, v in s.body._c.items():  # noqa: SLF001
        out[e] = v
    for e in range(step, d):
        out[e] += out[e - step]
    return TruncatedSeries(IntPoly({e: v for e, v in enumerate(out) if v}), d)


# ---------------------------------------------------------------------------
# Pochhammer products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PochhammerSpec:
    """(a; q^step)_length with a = sign * q^shift.

    length None means the infinite product, legal only with a truncation
    order.  A finite spec expands to a polynomial of degree
    sum_{j<length}(shift + j*step).
    """

    shift: int
    sign: int = 1
    step: int = 1
    length: int | None = None

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise ValueError("shift must be >= 0")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be >= 0")


def pochhammer(spec: PochhammerSpec, trunc: int | None = None) -> IntPoly | TruncatedSeries:
    """Expand prod_j (1 - sign*q^(shift + j*step)).

    Finite specs return an IntPoly; infinite specs need `trunc` and return a
    TruncatedSeries (factors with exponent >= trunc are congruent to 1).
    """
    if spec.length is None:
        if trunc is None:
            raise InfiniteWithoutTruncation("infinite product needs a truncation order")
        acc = series(ONE, trunc)
        j = 0
        while spec.shift + j * spec.step < trunc:
            acc = acc * IntPoly({0: 1, spec.shift + j * spec.step: -spec.sign})
            j += 1
        return acc
    acc_p = ONE
    for j in range(spec.length):
        acc_p = acc_p * IntPoly({0: 1, spec.shift + j * spec.step: -spec.sign})
        if trunc is not None:
            acc_p = acc_p.truncate(trunc)
    return series(acc_p, trunc) if trunc is not None else acc_p


def qq(n: int) -> IntPoly:
    """(q;q)_n for n >= 0."""
    if n < 0:
        raise ValueError("(q;q)_n needs n >= 0")
    return _qq_memo(n)


_QQ_CACHE: dict[int, IntPoly] = {0: ONE}
_QQ_LOCK = threading.Lock()


def _qq_memo(n: int) -> IntPoly:
    p = _QQ_CACHE.get(n)
    if p is not None:
        return p
    with _QQ_LOCK:
        m = max(_QQ_CACHE)
        acc = _QQ_CACHE[m]
        for j in range(m + 1, n + 1):
            acc = acc * IntPoly({0: 1, j: -1})
            _QQ_CACHE[j] = acc
    return _QQ_CACHE[n]


def qq_inf(trunc: int) -> TruncatedSeries:
    """(q;q)_infinity as a truncated series."""
    return pochhammer(PochhammerSpec(1, 1, 1, None), trunc)  # type: ignore[return-value]


def odd_poch(n: int) -> IntPoly:
    """(q;q^2)_n."""
    return pochhammer(PochhammerSpec(1, 1, 2, n))  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

_QBINOM_CACHE: dict[tuple[int, int], IntPoly] = {}
_QBINOM_LOCK = threading.Lock()


def qbinom(a: int, b: int) -> IntPoly:
    """Gaussian binomial [a, b]_q.

    Zero whenever b < 0, a-b < 0 or a < 0 (1/(q;q)_m vanishes for m < 0);
    otherwise computed by the Pascal recurrence
    [a,b] = [a-1,b] + q^(a-b) [a-1,b-1] with memoization.
    """
    if b < 0 or a < 0 or a - b < 0:
        return ZERO
    b = min(b, a - b)  # symmetry halves the table
    if b == 0:
        return ONE
    key = (a, b)
    got = _QBINOM_CACHE.get(key)
    if got is not None:
        return got
    with _QBINOM_LOCK:
        return _qbinom_locked(a, b)


def _qbinom_locked(a: int, b: int) -> IntPoly:
    # Iterative Pascal fill; rows only as long as actually needed.
    stack = [(a, b)]
    while stack:
        aa, bb = stack[-1]
        bb = min(bb, aa - bb)
        if bb <= 0 or (aa, bb) in _QBINOM_CACHE:
            stack.pop()
            continue
        left = (aa - 1, min(bb, aa - 1 - bb))
        right = (aa - 1, min(bb - 1, aa - bb))
        missing = [k for k in (left, right) if k[1] > 0 and k not in _QBINOM_CACHE]
        if missing:
            stack.extend(missing)
            continue
        lp = _QBINOM_CACHE.get(left, ONE) if left[1] >= 0 else ZERO
        rp = _QBINOM_CACHE.get(right, ONE) if right[1] >= 0 else ZERO
        _QBINOM_CACHE[(aa, bb)] = lp + rp.shift(aa - bb)
        stack.pop()
    return _QBINOM_CACHE[(a, b)]


def qbinom_primed(a: int, b: int) -> IntPoly:
    """[a, b]'_q: ordinary Gaussian binomial except [a<0, 0]' = 1."""
    if a < 0 and b == 0:
        return ONE
    return qbinom(a, b)


def qbinom_base(a: int, b: int, base: int, primed: bool = False) -> IntPoly:
    """[a, b] in q^base (base 2 gives the q^2-binomials)."""
    p = qbinom_primed(a, b) if primed else qbinom(a, b)
    return p if base == 1 else p.subs_exp(base)


def qbinom_div(a: int, b: int) -> IntPoly:
    """[a, b]_q by exact Pochhammer division; cross-check for qbinom."""
    if b < 0 or a < 0 or a - b < 0:
        return ZERO
    return qq(a).exact_div(qq(b)).exact_div(qq(a - b))


# ---------------------------------------------------------------------------
# Parsing of the canonical text form
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*(?P<qc>q(?:\^(?P<expc>\d+))?))?
          | (?P<q>q(?:\^(?P<exp>\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> IntPoly:
    """Parse the canonical rendering (e.g. '1 + 2*q^2 - q^5')."""
    s = text.strip()
    if s == "0":
        return ZERO
    pos = 0
    terms: list[tuple[int, int]] = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at: {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            coeff = int(m.group("coeff"))
            if m.group("qc") is not None:
                exp = int(m.group("expc")) if m.group("expc") else 1
            else:
                exp = 0
        else:
            coeff = 1
            exp = int(m.group("exp")) if m.group("exp") else 1
        terms.append((exp, sign * coeff))
        pos = m.end()
    return IntPoly(terms)
