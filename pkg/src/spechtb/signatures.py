"""Sign sequences, the canonical involution, and r-signatures of bipartitions.

A sign sequence is a plain string over ``"+-"``.  Kernels work on bitmasks
(bit k set when position k+1 is ``+``); see :mod:`spechtb.kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .combinatorics import BetaSet, Bipartition, beta_from_elements, beta_set


class NotDominant(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


def check_signs(s: str) -> str:
    if any(c not in "+-" for c in s):
        raise ValueError(f"sign sequence may contain only '+' and '-': {s!r}")
    return s


def to_mask(s: str) -> int:
    mask = 0
    for k, c in enumerate(s):
        if c == "+":
            mask |= 1 << k
        elif c != "-":
            raise ValueError(f"sign sequence may contain only '+' and '-': {s!r}")
    return mask


def from_mask(mask: int, n: int) -> str:
    return "".join("+" if (mask >> k) & 1 else "-" for k in range(n))


@dataclass(frozen=True)
class Involution:
    """A self-inverse permutation of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {imgs}")
        if any(imgs[imgs[k] - 1] != k + 1 for k in range(n)):
            raise ValueError(f"not an involution: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[tuple[int, int]]) -> "Involution":
        imgs = list(range(1, n + 1))
        for a, b in cycles:
            imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, n: int, text: str) -> "Involution":
        """Parse cycle notation such as ``"(1,4)(2,3)"``; ``""`` or ``"()"`` is the identity."""
        body = text.replace(" ", "")
        cycles = []
        for chunk in body.split(")"):
            if not chunk:
                continue
            if not chunk.startswith("("):
                raise ValueError(f"bad cycle notation: {text!r}")
            inner = chunk[1:]
            if not inner:
                continue
            a, b = (int(x) for x in inner.split(","))
            cycles.append((a, b))
        return cls.from_cycles(n, cycles)

    def __len__(self):
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def cycles(self) -> list[tuple[int, int]]:
        return [(k, m) for k, m in enumerate(self.images, start=1) if k < m]

    def __str__(self):
        cyc = self.cycles()
        return "".join(f"({a},{b})" for a, b in cyc) if cyc else "()"


def is_dominant(s: str) -> bool:
    return kernels.is_dominant(to_mask(s), len(s))


def iota_s(s: str) -> Involution:
    """The canonical involution of a dominant sign sequence.

    Each '+' is matched with the nearest unmatched '-' to its left; whatever
    remains unmatched is fixed.
    """
    mask = to_mask(s)
    if not kernels.is_dominant(mask, len(s)):
        raise NotDominant(s)
    inv = Involution(tuple(k + 1 for k in kernels.iota(mask, len(s))))
    if __debug__:
        _check_iota_properties(s, inv)
    return inv


def _check_iota_properties(s: str, inv: Involution) -> None:
    n = len(s)
    img = [inv(k) for k in range(1, n + 1)]
    fixed = [k for k in range(1, n + 1) if img[k - 1] == k]
    assert len({s[k - 1] for k in fixed}) <= 1, (s, inv)
    for i in range(1, n + 1):
        k = img[i - 1]
        if k > i:
            assert s[i - 1] == "-" and s[k - 1] == "+", (s, inv)
            assert not any(i < j < k for j in fixed), (s, inv)
            for j in range(i + 1, k):
                assert i < img[j - 1] < k, (s, inv)


def compatible_involutions(s: str) -> list[Involution]:
    """All involutions moving each point either nowhere or to its partner under iota_s."""
    base = iota_s(s)
    cyc = base.cycles()  # bit j of the subset index toggles the j-th cycle from the left
    n = len(s)
    out = []
    for subset in range(1 << len(cyc)):
        chosen = [c for j, c in enumerate(cyc) if (subset >> j) & 1]
        out.append(Involution.from_cycles(n, chosen))
    return out


def apply_perm(s: str, inv: Involution) -> str:
    """The sequence whose k-th sign is s at position inv(k)."""
    if len(s) != len(inv):
        raise LengthMismatch(f"sequence of length {len(s)} vs involution of length {len(inv)}")
    return "".join(s[inv(k) - 1] for k in range(1, len(s) + 1))


# --------------------------------------------------------------------------
# signatures of bipartitions

@dataclass(frozen=True)
class SignatureContext:
    """Symmetric difference of B^{r+charge}(first) and B^{charge}(second)."""

    bipartition: Bipartition
    r: int
    charge: int
    points: tuple[int, ...]
    signs: str
    first: BetaSet
    second: BetaSet

    def __len__(self):
        return len(self.points)

    @property
    def floor(self) -> int:
        # below this both beta-sets contain everything
        return min(self.first.floor, self.second.floor)

    def common(self) -> list[int]:
        """Elements of the intersection that are >= floor."""
        lo = self.floor
        return sorted(set(self.first.elements_from(lo)) & set(self.second.elements_from(lo)))

    def rebuild(self, first_points: Iterable[int], second_points: Iterable[int]) -> Bipartition:
        lo = self.floor
        common = self.common()
        b1 = beta_from_elements(list(common) + list(first_points), lo)
        b2 = beta_from_elements(list(common) + list(second_points), lo)
        if b1.charge != self.first.charge or b2.charge != self.second.charge:
            raise ValueError("point assignment changes a charge")
        return Bipartition(b1.shape, b2.shape)

    def with_signs(self, s: str) -> Bipartition:
        """Bipartition whose signature points carry the signs ``s`` instead."""
        if len(s) != len(self.points):
            raise LengthMismatch(f"{len(s)} signs for {len(self.points)} points")
        return self.rebuild(
            [b for b, c in zip(self.points, s) if c == "+"],
            [b for b, c in zip(self.points, s) if c == "-"],
        )


def signature(b: Bipartition, r: int, charge: int = 0) -> SignatureContext:
    B1 = beta_set(b.first, r + charge)
    B2 = beta_set(b.second, charge)
    lo = min(B1.floor, B2.floor)
    e1 = set(B1.elements_from(lo))
    e2 = set(B2.elements_from(lo))
    points = tuple(sorted(e1 ^ e2))
    signs = "".join("+" if p in e1 else "-" for p in points)
    return SignatureContext(b, r, charge, points, signs, B1, B2)


def apply_involution(ctx: SignatureContext, inv: Involution) -> Bipartition:
    """Move each signature point b_k to b_{inv(k)}, keeping its beta-set."""
    if len(inv) != len(ctx):
        raise LengthMismatch(f"involution of length {len(inv)} for signature of length {len(ctx)}")
    pts = ctx.points
    first = [pts[inv(k) - 1] for k in range(1, len(pts) + 1) if ctx.signs[k - 1] == "+"]
    second = [pts[inv(k) - 1] for k in range(1, len(pts) + 1) if ctx.signs[k - 1] == "-"]
    return ctx.rebuild(first, second)


def is_regular_inf(b: Bipartition, r: int) -> bool:
    """Regularity at e=infinity, -Q = q^r, read off the signature."""
    return is_dominant(signature(b, r).signs)


def is_regular_inf_direct(b: Bipartition, r: int | None) -> bool:
    """Row-by-row regularity test at e=infinity; ``r=None`` means -Q is not a power of q."""
    if r is None:
        return True
    lam, mu = b.first, b.second
    rows = max(len(lam), len(mu)) + abs(r) + 1
    if r >= 0:
        return all(lam[i] >= mu[i] - r for i in range(rows))
    # r < 0: compare row i of the first component with row i - r of the second
    return all(lam[i] >= mu[i - r] for i in range(rows))


# --------------------------------------------------------------------------
# suitable pairs (brute-force oracle)

@dataclass(frozen=True)
class SuitablePair:
    s: str
    iota: Involution


def _involution_from_swap(s: str, swapped: int) -> Involution:
    base = kernels.iota(to_mask(s), len(s))
    imgs = [(base[k] if (swapped >> k) & 1 else k) + 1 for k in range(len(s))]
    return Involution(tuple(imgs))


def suitable_pairs(t: str) -> list[SuitablePair]:
    """Every dominant s and compatible involution iota with s permuted by iota equal to t.

    Exhaustive over the sequences with the same sign counts as t, so
    exponential in len(t); ordered by s (ASCII, '+' before '-').
    """
    check_signs(t)
    n = len(t)
    found = kernels.suitable(to_mask(t), n)
    pairs = [SuitablePair(from_mask(s, n), _involution_from_swap(from_mask(s, n), d)) for s, d in found]
    pairs.sort(key=lambda p: p.s)
    return pairs


def count_suitable_pairs(t: str) -> int:
    check_signs(t)
    return kernels.count_suitable(to_mask(t), len(t))


def pm_sequences(n: int) -> Iterable[str]:
    """All sign sequences of length n."""
    for mask in range(1 << n):
        yield from_mask(mask, n)

