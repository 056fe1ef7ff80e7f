"""Irreducibility of type A Specht modules at q = -1.

In characteristic 0 the decomposition numbers come from the canonical basis
of the level-1 Fock space for the affine quantum group at e=2, computed with
the ladder-plus-correction algorithm of Lascoux, Leclerc and Thibon.  In
characteristic p nothing is computed: answers come from a user table, and
anything missing is ``Unknown``.
"""
from __future__ import annotations

import threading
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Protocol

from .combinatorics import Partition, conjugate, partitions
from .laurent import ONE, ZERO, LaurentPoly
from .verdict import IRREDUCIBLE, REDUCIBLE, Outcome, Verdict

E = 2


class FockVector:
    """Sparse linear combination of partitions with Laurent polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Partition, LaurentPoly] | None = None):
        self.coeffs = {lam: c for lam, c in (coeffs or {}).items() if c}

    @classmethod
    def basis(cls, lam: Partition) -> "FockVector":
        return cls({lam: ONE})

    def __getitem__(self, lam: Partition) -> LaurentPoly:
        return self.coeffs.get(lam, ZERO)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.coeffs == other.coeffs

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, ZERO) + c
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c: LaurentPoly) -> "FockVector":
        return FockVector({lam: c * x for lam, x in self.coeffs.items()})

    def degree(self) -> int | None:
        sizes = {lam.size for lam in self.coeffs}
        if len(sizes) > 1:
            raise ValueError("inhomogeneous Fock vector")
        return sizes.pop() if sizes else None

    def __repr__(self):
        inner = " + ".join(f"({c})*{lam}" for lam, c in sorted(self.coeffs.items(), reverse=True))
        return f"FockVector({inner or '0'})"


def node_residue(row: int, col: int) -> int:
    return (col - row) % E


def _addable(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts
    out = []
    for i in range(len(parts) + 1):
        cur = parts[i] if i < len(parts) else 0
        if i == 0 or parts[i - 1] > cur:
            out.append((i + 1, cur + 1))
    return out


def _removable(lam: Partition) -> list[tuple[int, int]]:
    parts = lam.parts
    return [
        (i + 1, p)
        for i, p in enumerate(parts)
        if p > (parts[i + 1] if i + 1 < len(parts) else 0)
    ]


def _f_divided_basis(lam: Partition, i: int, k: int) -> dict[Partition, LaurentPoly]:
    addable = [nd for nd in _addable(lam) if node_residue(*nd) == i]
    removable = [nd for nd in _removable(lam) if node_residue(*nd) == i]
    out: dict[Partition, LaurentPoly] = {}
    # addable nodes of one partition occupy distinct rows, so adding any subset is legal
    for chosen in combinations(addable, k):
        parts = list(lam.parts) + [0]
        for row, _ in chosen:
            parts[row - 1] += 1
        mu = Partition(parts)
        chosen_set = set(chosen)
        exponent = 0
        for _, col in chosen:
            exponent += sum(1 for nd in addable if nd[1] > col and nd not in chosen_set)
            exponent -= sum(1 for nd in removable if nd[1] > col)
        out[mu] = out.get(mu, ZERO) + LaurentPoly.monomial(exponent)
    return out


def f_divided(x: FockVector, i: int, k: int) -> FockVector:
    """Divided power f_i^(k): add k nodes of residue i, weighted by v-powers.

    The weight of adding a set of nodes counts, for each added node, the
    addable i-nodes (not added) minus the removable i-nodes strictly to its
    right.
    """
    if i not in range(E):
        raise ValueError(f"residue must be in 0..{E - 1}")
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return x
    out: dict[Partition, LaurentPoly] = {}
    for lam, c in x.items():
        for mu, w in _f_divided_basis(lam, i, k).items():
            out[mu] = out.get(mu, ZERO) + c * w
    return FockVector(out)


def is_2regular(nu: Partition) -> bool:
    parts = nu.parts
    return all(parts[k] != parts[k + 1] for k in range(len(parts) - 1))


def ladder_sequence(mu: Partition) -> list[tuple[int, int]]:
    """(residue, count) for each nonempty ladder of mu, innermost ladder first."""
    counts: dict[int, int] = {}
    for row, length in enumerate(mu.parts, start=1):
        for col in range(1, length + 1):
            ladder = col + (E - 1) * (row - 1)
            counts[ladder] = counts.get(ladder, 0) + 1
    return [(node_residue(1, ladder), counts[ladder]) for ladder in sorted(counts)]


def ladder_vector(mu: Partition) -> FockVector:
    x = FockVector.basis(Partition())
    for res, k in ladder_sequence(mu):
        x = f_divided(x, res, k)
    return x


class NormalFormError(AssertionError):
    pass


def _compute_canonical_basis(n: int) -> dict[Partition, FockVector]:
    basis: dict[Partition, FockVector] = {}
    regular = sorted(p for p in partitions(n) if is_2regular(p))
    for mu in regular:  # increasing lexicographic order
        x = ladder_vector(mu)
        if x[mu] != ONE:
            raise NormalFormError(f"ladder vector of {mu} has leading coefficient {x[mu]}")
        for lam in sorted(x, reverse=True):
            if lam == mu:
                continue
            c = x[lam]
            if c.in_v_z_v():
                continue
            if lam > mu or lam not in basis:
                raise NormalFormError(f"cannot correct coefficient {c} of {lam} in G({mu})")
            alpha = c.bar_invariant_head()
            x = x - basis[lam].scale(alpha)
        basis[mu] = x
    return basis


_cache: dict[int, dict[Partition, FockVector]] = {}
_lock = threading.Lock()


def canonical_basis(n: int) -> dict[Partition, FockVector]:
    """G(mu) for every 2-regular partition mu of n (memoized per n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with _lock:
        if n not in _cache:
            _cache[n] = _compute_canonical_basis(n)
        return _cache[n]


def decomposition_matrix(n: int) -> dict[tuple[Partition, Partition], LaurentPoly]:
    """Nonzero entries d_{lam,mu}(v), keyed by (row lam, 2-regular column mu)."""
    out = {}
    for mu, g in canonical_basis(n).items():
        for lam, c in g.items():
            out[(lam, mu)] = c
    return out


def row_sum_at_one(nu: Partition) -> int:
    """Composition length of S^nu at q=-1 in characteristic 0."""
    return sum(g[nu].at_one() for g in canonical_basis(nu.size).values())


def check_normal_form(n: int) -> None:
    """Raise NormalFormError unless the columns for n are unitriangular with v-positive entries."""
    from .combinatorics import dominates

    for mu, g in canonical_basis(n).items():
        if g[mu] != ONE:
            raise NormalFormError(f"d[{mu},{mu}] = {g[mu]}")
        for lam, c in g.items():
            if lam == mu:
                continue
            if not dominates(mu, lam):
                raise NormalFormError(f"d[{lam},{mu}] = {c} but {mu} does not dominate {lam}")
            if not c.in_positive_part():
                raise NormalFormError(f"d[{lam},{mu}] = {c} is not in vN[v]")


# --------------------------------------------------------------------------
# oracles

class TypeA2Oracle(Protocol):
    def query(self, nu: Partition, char: int) -> Verdict: ...


def _one_dimensional(nu: Partition) -> bool:
    return len(nu.parts) <= 1 or nu.parts[0] == 1


def parse_table(lines: Iterable[str]) -> dict[tuple[int, Partition], bool]:
    """Parse ``p;PARTITION;irr|red`` lines; '#' starts a comment."""
    from .parsing import ParseError, parse_partition

    table = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(";")]
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'p;PARTITION;irr|red', got {raw.strip()!r}")
        p_text, nu_text, flag = fields
        try:
            p = int(p_text)
        except ValueError:
            raise ParseError(f"line {lineno}: bad characteristic {p_text!r}") from None
        if flag not in ("irr", "red"):
            raise ParseError(f"line {lineno}: verdict must be 'irr' or 'red', got {flag!r}")
        nu = parse_partition(nu_text)
        key = (p, nu)
        if key in table and table[key] != (flag == "irr"):
            raise ParseError(f"line {lineno}: conflicting entry for {nu_text} in characteristic {p}")
        table[key] = flag == "irr"
    return table


class CanonicalBasisOracle:
    """Characteristic 0 by canonical bases; characteristic p by lookup table only."""

    def __init__(self, table: Mapping[tuple[int, Partition], bool] | None = None):
        self.table = dict(table or {})

    @classmethod
    def from_file(cls, path: str | Path) -> "CanonicalBasisOracle":
        with open(path, encoding="utf-8") as fh:
            return cls(parse_table(fh))

    def query(self, nu: Partition, char: int = 0) -> Verdict:
        if _one_dimensional(nu):
            return IRREDUCIBLE
        if char == 0:
            return IRREDUCIBLE if row_sum_at_one(nu) == 1 else REDUCIBLE
        if (char, nu) in self.table:
            return IRREDUCIBLE if self.table[(char, nu)] else REDUCIBLE
        if (char, conjugate(nu)) in self.table:
            return IRREDUCIBLE if self.table[(char, conjugate(nu))] else REDUCIBLE
        return Verdict(Outcome.UNKNOWN, reason=f"no table entry for {nu} in characteristic {char}")


def is_2irreducible(nu: Partition, char: int = 0, oracle: TypeA2Oracle | None = None) -> Verdict:
    return (oracle or CanonicalBasisOracle()).query(nu, char)
