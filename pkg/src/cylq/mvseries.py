"""Sparse multivariate (Laurent) series truncated by total base-variable degree.

Variables are plain strings.  Base variables (x<i>, y<i>) carry the degree
used for truncation and must appear with exponents >= 0; elimination
variables (l<r><i>, m<r><i>) may carry any integer exponent and do not count
toward the truncation degree.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Mono = tuple[tuple[str, int], ...]  # sorted (variable, exponent) pairs


def is_base_var(name: str) -> bool:
    return name.startswith(("x", "y"))


def mv_monomial(pairs: Mapping[str, int] | Iterable[tuple[str, int]]) -> Mono:
    items = pairs.items() if isinstance(pairs, Mapping) else pairs
    merged: dict[str, int] = {}
    for v, e in items:
        merged[v] = merged.get(v, 0) + e
        if merged[v] == 0:
            del merged[v]
    return tuple(sorted(merged.items()))


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        ne = merged.get(v, 0) + e
        if ne:
            merged[v] = ne
        else:
            del merged[v]
    return tuple(sorted(merged.items()))


def mono_base_degree(m: Mono) -> int:
    return sum(e for v, e in m if is_base_var(v))


def mono_vars(m: Mono) -> set[str]:
    return {v for v, _ in m}


def mono_render(m: Mono) -> str:
    if not m:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class MVPoly:
    """Finite integer combination of monomials (no truncation)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | Iterable[tuple[Mono, int]] = ()):
        t: dict[Mono, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if c == 0:
                continue
            t[m] = t.get(m, 0) + c
            if t[m] == 0:
                del t[m]
        self.terms = t

    @staticmethod
    def one() -> "MVPoly":
        return MVPoly({(): 1})

    @staticmethod
    def one_minus(m: Mono) -> "MVPoly":
        return MVPoly({(): 1, m: -1})

    def __mul__(self, other: "MVPoly") -> "MVPoly":
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return MVPoly(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MVPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self.terms:
            out |= mono_vars(m)
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            body = mono_render(m)
            if body == "1":
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + body)
        first = parts[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([first] + parts[1:])


class MVSeries:
    """Sparse truncated series: exact for total base degree < order."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Mapping[Mono, int] | Iterable[tuple[Mono, int]], order: int):
        if order < 1:
            raise ValueError("order must be positive")
        t: dict[Mono, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if c == 0 or mono_base_degree(m) >= order:
                continue
            t[m] = t.get(m, 0) + c
            if t[m] == 0:
                del t[m]
        self.terms = t
        self.order = order

    @staticmethod
    def one(order: int) -> "MVSeries":
        return MVSeries({(): 1}, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MVSeries):
            return NotImplemented
        d = min(self.order, other.order)

        def cut(s: "MVSeries") -> dict[Mono, int]:
            return {m: c for m, c in s.terms.items() if mono_base_degree(m) < d}

        return cut(self) == cut(other)

    def __hash__(self) -> int:
        return hash((frozenset(self.terms.items()), self.order))

    def mul_poly(self, p: MVPoly) -> "MVSeries":
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in p.terms.items():
                m = mono_mul(m1, m2)
                if mono_base_degree(m) >= self.order:
                    continue
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return MVSeries(out, self.order)

    def mul_geometric(self, factor: Mono) -> "MVSeries":
        """Multiply by 1/(1 - factor); factor must have positive base degree."""
        d = mono_base_degree(factor)
        if d < 1:
            raise ValueError("geometric factor needs positive base degree")
        out = dict(self.terms)
        frontier = dict(self.terms)
        while frontier:
            nxt: dict[Mono, int] = {}
            for m, c in frontier.items():
                nm = mono_mul(m, factor)
                if mono_base_degree(nm) >= self.order:
                    continue
                nxt[nm] = nxt.get(nm, 0) + c
                out[nm] = out.get(nm, 0) + c
            frontier = nxt
        return MVSeries(out, self.order)
