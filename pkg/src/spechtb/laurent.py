"""Sparse Laurent polynomials in one variable v with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable mapping exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        """v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __call__(self, v):
        return sum(c * v**e for e, c in self._terms.items())

    def at_one(self) -> int:
        return sum(self._terms.values())

    def min_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def in_positive_part(self) -> bool:
        """True when the polynomial lies in v*Z_{>=0}[v]."""
        return all(e >= 1 and c >= 0 for e, c in self._terms.items())

    def in_v_z_v(self) -> bool:
        return all(e >= 1 for e in self._terms)

    def bar_invariant_head(self) -> "LaurentPoly":
        """The bar-invariant a with self - a in v*Z[v]."""
        out = {}
        for e, c in self._terms.items():
            if e <= 0:
                out[e] = c
                if e < 0:
                    out[-e] = c
        return LaurentPoly(out)

    def __repr__(self):
        return f"LaurentPoly({self._terms})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                var = "v" if e == 1 else f"v^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, mono))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in pieces[1:]:
            text += f" {sign} {mono}"
        return text


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)


def qint(k: int) -> LaurentPoly:
    """Balanced quantum integer [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}."""
    return LaurentPoly({k - 1 - 2 * j: 1 for j in range(k)})


def qfactorial(k: int) -> LaurentPoly:
    out = ONE
    for j in range(1, k + 1):
        out = out * qint(j)
    return out
