"""Composition factors and irreducibility when q is not a root of unity."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .combinatorics import Bipartition, conjugate
from .signatures import (
    apply_involution,
    compatible_involutions,
    is_dominant,
    signature,
    suitable_pairs,
)
from .verdict import Verdict

PLUS_MINUS_PLUS = "plus-minus-plus"
MINUS_PLUS_MINUS = "minus-plus-minus"


class NotRegular(ValueError):
    pass


@dataclass(frozen=True)
class ShapeReport:
    """Whether a sign sequence reads x^a y^b x^c with a + c <= b."""

    signs: str
    matches: bool
    a: int = 0
    b: int = 0
    c: int = 0
    orientation: str | None = None

    def __str__(self):
        if not self.matches:
            return f"{self.signs or 'empty'}: no +^a-^b+^c or -^a+^b-^c form with a+c<=b"
        outer, inner = ("+", "-") if self.orientation == PLUS_MINUS_PLUS else ("-", "+")
        return f"{self.signs or 'empty'} = {outer}^{self.a} {inner}^{self.b} {outer}^{self.c}"


def _read(t: str, outer: str, inner: str):
    runs = [(ch, len(list(g))) for ch, g in groupby(t)]
    counts = {"a": 0, "b": 0, "c": 0}
    slots = [("a", outer), ("b", inner), ("c", outer)]
    k = 0
    for ch, length in runs:
        while k < 3 and slots[k][1] != ch:
            k += 1
        if k == 3:
            return None
        counts[slots[k][0]] = length
        k += 1
    return counts["a"], counts["b"], counts["c"]


def shape_predicate(t: str) -> ShapeReport:
    """Test for +^a -^b +^c or -^a +^b -^c with a + c <= b.

    When both readings work the one with the longer middle run is reported.
    """
    best = None
    for orientation, outer, inner in ((PLUS_MINUS_PLUS, "+", "-"), (MINUS_PLUS_MINUS, "-", "+")):
        abc = _read(t, outer, inner)
        if abc is None:
            continue
        a, b, c = abc
        if a + c <= b and (best is None or b > best.b):
            best = ShapeReport(t, True, a, b, c, orientation)
    return best if best is not None else ShapeReport(t, False)


def is_irreducible_inf(b: Bipartition, r: int) -> Verdict:
    report = shape_predicate(signature(b, r).signs)
    return Verdict.of(report.matches, witness=report)


@dataclass(frozen=True)
class DecompRow:
    """Regular labels of the composition factors of one Specht module, each once."""

    subject: Bipartition
    r: int
    factors: tuple[Bipartition, ...]

    def __contains__(self, b):
        return b in self.factors

    def __len__(self):
        return len(self.factors)


def specht_constituents_inf(b: Bipartition, r: int) -> DecompRow:
    """Composition factors of S^b: one per pair (s, iota) suitable for the signature of b."""
    ctx = signature(b, r)
    factors = tuple(ctx.with_signs(pair.s) for pair in suitable_pairs(ctx.signs))
    return DecompRow(b, r, factors)


def simples_spechts_inf(reg: Bipartition, r: int) -> list[Bipartition]:
    """Labels of the Specht modules having D^reg as a composition factor."""
    ctx = signature(reg, r)
    if not is_dominant(ctx.signs):
        raise NotRegular(f"{reg} is not regular for r={r}")
    return [apply_involution(ctx, inv) for inv in compatible_involutions(ctx.signs)]


# --------------------------------------------------------------------------
# irreducibility for every r of one parity

def default_window(b: Bipartition) -> tuple[int, int]:
    lam, mu = b.first, b.second
    return -(lam[0] + len(mu)), len(lam) + mu[0]


def _separated_above(b: Bipartition, t: int) -> bool:
    # B^t(first) contains everything up to the top of B^0(second), for t and all larger t
    return t - len(b.first) > b.second[0] - 1


def _separated_below(b: Bipartition, t: int) -> bool:
    # B^t(first) lies entirely below the gaps of B^0(second), for t and all smaller t
    return b.first[0] + t - 1 < -len(b.second)


def parity_window(b: Bipartition, override: int | None = None) -> tuple[int, int]:
    """Range of t outside which the t-signature is a single run of one sign.

    ``override`` sets a symmetric starting window [-override, override]; the
    window is widened until both edges pass the separation check.
    """
    lo, hi = (-override, override) if override is not None else default_window(b)
    while not _separated_below(b, lo):
        lo -= 1
    while not _separated_above(b, hi):
        hi += 1
    for t in (lo, hi):
        signs = signature(b, t).signs
        assert len(set(signs)) <= 1, (b, t, signs)
    return lo, hi


def inf_reducible_parameter(b: Bipartition, parity: int, override: int | None = None) -> int | None:
    """Smallest t of the given parity at which b is reducible for e=infinity, or None."""
    lo, hi = parity_window(b, override)
    for t in range(lo, hi + 1):
        if (t - parity) % 2 == 0 and not shape_predicate(signature(b, t).signs).matches:
            return t
    return None


def is_inf_irreducible_all_parity(b: Bipartition, parity: int, override: int | None = None) -> bool:
    return inf_reducible_parameter(b, parity, override) is None


def swap(b: Bipartition) -> Bipartition:
    return Bipartition(b.second, b.first)


def conjugate_both(b: Bipartition) -> Bipartition:
    return Bipartition(conjugate(b.first), conjugate(b.second))
