"""Partitions, bipartitions, nodes, residues, beta-sets and blocks.

Everything here is an immutable value; operations are pure functions.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence, Union


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p} in {parts}")
            if p == 0:
                raise ValueError(f"zero part inside {parts}")
            if k and p > parts[k - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_hash", hash(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> int:
        """0-based part access; returns 0 past the end."""
        if k < 0:
            raise IndexError(k)
        return self.parts[k] if k < len(self.parts) else 0

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Nodes (row, col), 1-based, in row-major order."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)


EMPTY = Partition()


@dataclass(frozen=True, order=True)
class Bipartition:
    first: Partition
    second: Partition

    def __post_init__(self):
        if not isinstance(self.first, Partition):
            object.__setattr__(self, "first", Partition(self.first))
        if not isinstance(self.second, Partition):
            object.__setattr__(self, "second", Partition(self.second))

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def __iter__(self):
        yield self.first
        yield self.second

    def __str__(self):
        return format_bipartition(self)

    def component(self, k: int) -> Partition:
        if k == 1:
            return self.first
        if k == 2:
            return self.second
        raise ValueError(f"component must be 1 or 2, got {k}")


def bip(first: Sequence[int] = (), second: Sequence[int] = ()) -> Bipartition:
    """Shorthand constructor: ``bip((4, 3, 3, 1), (2, 1))``."""
    return Bipartition(Partition(first), Partition(second))


@dataclass(frozen=True, order=True)
class Node:
    component: int
    row: int
    col: int

    def __post_init__(self):
        if self.component not in (1, 2):
            raise ValueError(f"component must be 1 or 2, got {self.component}")
        if self.row < 1 or self.col < 1:
            raise ValueError(f"row and col must be positive: {self}")

    def __str__(self):
        return f"({self.row},{self.col})_{self.component}"


# --------------------------------------------------------------------------
# text format

def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam.parts)) if lam.parts else "-"


def format_bipartition(b: Bipartition) -> str:
    return f"{format_partition(b.first)}|{format_partition(b.second)}"


# --------------------------------------------------------------------------
# basic operations

def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1))


def remove_first_row(lam: Partition) -> Partition:
    return Partition(lam.parts[1:])


class Comparison(enum.Enum):
    DOMINATES = "Dominates"
    DOMINATED_BY = "DominatedBy"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def _prefix_geq(a: Sequence[int], b: Sequence[int], offset_a: int = 0, offset_b: int = 0) -> bool:
    m = max(len(a), len(b))
    sa, sb = offset_a, offset_b
    if sa < sb:
        return False
    for k in range(m):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa < sb:
            return False
    return True


def _dominates_or_equal(a, b) -> bool:
    if isinstance(a, Partition):
        return _prefix_geq(a.parts, b.parts)
    # (la, mu) >= (xi, nu): la >= xi, and |la| + mu_1..i >= |xi| + nu_1..i for all i
    return _prefix_geq(a.first.parts, b.first.parts) and _prefix_geq(
        a.second.parts, b.second.parts, a.first.size, b.first.size
    )


def dominance(a: Union[Partition, Bipartition], b: Union[Partition, Bipartition]) -> Comparison:
    """Compare two partitions, or two bipartitions, in the dominance order.

    Sizes need not agree; a larger prefix sum at every index (including the
    tail, i.e. the total) is what domination means.
    """
    if type(a) is not type(b):
        raise TypeError("dominance compares two partitions or two bipartitions")
    if a == b:
        return Comparison.EQUAL
    ge = _dominates_or_equal(a, b)
    le = _dominates_or_equal(b, a)
    if ge and not le:
        return Comparison.DOMINATES
    if le and not ge:
        return Comparison.DOMINATED_BY
    if ge and le:  # pragma: no cover - antisymmetry
        return Comparison.EQUAL
    return Comparison.INCOMPARABLE


def dominates(a, b) -> bool:
    """True when ``a`` dominates or equals ``b``."""
    return _dominates_or_equal(a, b)


def _addable_rows(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts
    out = []
    for i in range(len(parts) + 1):
        cur = parts[i] if i < len(parts) else 0
        above = parts[i - 1] if i > 0 else None
        if above is None or above > cur:
            out.append((i + 1, cur + 1))
    return out


def _removable_rows(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts
    out = []
    for i, p in enumerate(parts):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if p > below:
            out.append((i + 1, p))
    return out


def addable_nodes(b: Bipartition) -> list[Node]:
    """Addable nodes ordered by (component, row)."""
    return [Node(k, i, j) for k in (1, 2) for i, j in _addable_rows(b.component(k))]


def removable_nodes(b: Bipartition) -> list[Node]:
    """Removable nodes ordered by (component, row)."""
    return [Node(k, i, j) for k in (1, 2) for i, j in _removable_rows(b.component(k))]


def add_node(b: Bipartition, nd: Node) -> Bipartition:
    lam = b.component(nd.component)
    parts = list(lam.parts) + [0]
    if parts[nd.row - 1] != nd.col - 1 or (nd.row > 1 and parts[nd.row - 2] < nd.col):
        raise ValueError(f"{nd} is not addable to {b}")
    parts[nd.row - 1] += 1
    new = Partition(parts)
    return Bipartition(new, b.second) if nd.component == 1 else Bipartition(b.first, new)


def remove_nodes(b: Bipartition, nodes: Iterable[Node]) -> Bipartition:
    """Remove a set of nodes, each removable from the current diagram."""
    comps = [list(b.first.parts), list(b.second.parts)]
    for nd in nodes:
        parts = comps[nd.component - 1]
        if nd.row > len(parts) or parts[nd.row - 1] != nd.col:
            raise ValueError(f"{nd} is not a node at the end of its row in {b}")
        parts[nd.row - 1] -= 1
    try:
        return Bipartition(Partition(comps[0]), Partition(comps[1]))
    except ValueError as exc:
        raise ValueError(f"removing nodes from {b} does not leave a bipartition") from exc


def dual(b: Bipartition) -> Bipartition:
    """(la, mu) -> (mu', la'): the label of the twisted dual Specht module."""
    return Bipartition(conjugate(b.second), conjugate(b.first))


# --------------------------------------------------------------------------
# parameters and residues

@dataclass(frozen=True)
class HeckeParams:
    """Parameter regime for the type B Hecke algebra.

    ``e`` is the multiplicative order of q (``None`` for infinity); ``r`` is
    the exponent in -Q = q^r, or ``None`` when -Q is not a power of q.
    ``char`` matters only to the type A oracle.
    """

    e: int | None
    r: int | None
    char: int = 0

    def __post_init__(self):
        if self.e is not None and self.e < 2:
            raise ValueError(f"e must be >= 2 or infinite, got {self.e}")
        if self.e == 2 and self.r is not None and self.r not in (0, 1):
            raise ValueError(f"for e=2 the exponent r must be 0 or 1, got {self.r}")
        if self.char < 0 or self.char == 1:
            raise ValueError(f"bad characteristic {self.char}")
        if self.char and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")
        if self.e == 2 and self.char == 2:
            raise ValueError("q = -1 equals 1 in characteristic 2; e=2 is impossible there")

    @classmethod
    def inf_generic(cls, char: int = 0) -> "HeckeParams":
        return cls(None, None, char)

    @classmethod
    def inf_power(cls, r: int, char: int = 0) -> "HeckeParams":
        return cls(None, r, char)

    @classmethod
    def two_generic(cls, char: int = 0) -> "HeckeParams":
        return cls(2, None, char)

    @classmethod
    def two_power(cls, r: int, char: int = 0) -> "HeckeParams":
        return cls(2, r, char)

    @property
    def generic(self) -> bool:
        return self.r is None

    @property
    def supported(self) -> bool:
        return self.e is None or self.e == 2

    def __str__(self):
        if self.e is None:
            head = "inf"
        elif self.e == 2:
            head = "two"
        else:
            head = f"e={self.e}"
        return f"{head}-generic" if self.r is None else f"{head}:r={self.r}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def residue(nd: Node, p: HeckeParams) -> int:
    """Residue of a node when -Q is a power of q.

    For e=infinity this is the exponent a with residue q^a; for e=2 it is the
    sign +1 or -1 (the residue itself, as q = -1).
    """
    if p.r is None:
        raise ValueError(f"per-node residues need -Q to be a power of q; regime is {p}")
    content = nd.col - nd.row + (p.r if nd.component == 1 else 0)
    if p.e is None:
        return content
    if p.e == 2:
        return -1 if content % 2 else 1
    raise ValueError(f"unsupported regime {p}")


def _tagged_residue(nd: Node, p: HeckeParams):
    if p.r is not None:
        return residue(nd, p)
    content = nd.col - nd.row
    if p.e is None:
        return (nd.component, content)
    if p.e == 2:
        return (nd.component, -1 if content % 2 else 1)
    raise ValueError(f"unsupported regime {p}")


def nodes(b: Bipartition) -> Iterator[Node]:
    for k in (1, 2):
        for i, j in b.component(k).cells():
            yield Node(k, i, j)


def residue_multiset(b: Bipartition, p: HeckeParams) -> Counter:
    """Multiset of node residues; generic regimes tag each residue with its component."""
    return Counter(_tagged_residue(nd, p) for nd in nodes(b))


def same_block(b1: Bipartition, b2: Bipartition, p: HeckeParams) -> bool:
    return b1.size == b2.size and residue_multiset(b1, p) == residue_multiset(b2, p)


def format_residue_multiset(c: Counter) -> str:
    def key(item):
        res = item[0]
        return res if isinstance(res, tuple) else (0, res)

    def fmt(res):
        if isinstance(res, tuple):
            comp, v = res
            return f"{v:+d}@{comp}"
        return f"{res:+d}"

    return "{" + ", ".join(f"{fmt(res)}^{m}" if m > 1 else fmt(res) for res, m in sorted(c.items(), key=key)) + "}"


# --------------------------------------------------------------------------
# beta-sets

@dataclass(frozen=True)
class BetaSet:
    """The co-finite set {shape_j + charge - j : j >= 1}, stored by its label."""

    charge: int
    shape: Partition

    @property
    def floor(self) -> int:
        """Every integer below this is in the set."""
        return self.charge - len(self.shape.parts)

    @property
    def top(self) -> int:
        """Largest element."""
        return self.shape[0] + self.charge - 1

    def __contains__(self, m: int) -> bool:
        if m < self.floor:
            return True
        parts = self.shape.parts
        # elements at or above the floor: parts_j + charge - j for j = 1..len
        for j, p in enumerate(parts, start=1):
            v = p + self.charge - j
            if v == m:
                return True
            if v < m:
                return False
        return False

    def elements_from(self, lo: int) -> list[int]:
        """Elements >= lo, in decreasing order."""
        out = []
        j = 1
        while True:
            v = self.shape[j - 1] + self.charge - j
            if v < lo:
                return out
            out.append(v)
            j += 1

    def shift(self, k: int) -> "BetaSet":
        return BetaSet(self.charge + k, self.shape)

    def __str__(self):
        beads = self.elements_from(self.floor)
        head = ",".join(map(str, beads))
        return f"{{{head}{',' if head else ''}m<{self.floor}}}"


def beta_set(lam: Partition, charge: int) -> BetaSet:
    return BetaSet(charge, lam)


def beta_from_elements(finite: Iterable[int], lo: int) -> BetaSet:
    """Beta-set equal to ``finite`` (all >= lo) together with every integer < lo."""
    beads = sorted(set(finite), reverse=True)
    if beads and beads[-1] < lo:
        raise ValueError("finite part must lie at or above lo")
    charge = lo + len(beads)
    parts = [b + j - charge for j, b in enumerate(beads, start=1)]
    return BetaSet(charge, Partition(parts))


def partition_from_beta(B: BetaSet) -> tuple[Partition, int]:
    return B.shape, B.charge


# --------------------------------------------------------------------------
# abacus text

def abacus_render(rows: Sequence[BetaSet], window: tuple[int, int], labels: Sequence[str] | None = None) -> str:
    """One-runner abacus text: ruler line, then one line per beta-set ('o' bead, '.' gap)."""
    lo, hi = window
    if hi < lo:
        raise ValueError(f"empty window {window}")
    positions = range(lo, hi + 1)
    width = max(len(str(m)) for m in positions)
    labels = list(labels) if labels is not None else [""] * len(rows)
    lw = max((len(s) for s in labels), default=0)
    pad = " " * (lw + 1) if lw else ""
    lines = [pad + " ".join(str(m).rjust(width) for m in positions)]
    for lab, B in zip(labels, rows):
        head = lab.ljust(lw) + " " if lw else ""
        lines.append(head + " ".join(("o" if m in B else ".").rjust(width) for m in positions))
    return "\n".join(lines)


# --------------------------------------------------------------------------
# enumeration

def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def bipartitions(n: int) -> list[Bipartition]:
    """All bipartitions of n, in lexicographic order of (first parts, second parts)."""
    out = [Bipartition(a, b) for k in range(n + 1) for a in partitions(k) for b in partitions(n - k)]
    out.sort(key=lambda x: (x.first.parts, x.second.parts))
    return out
