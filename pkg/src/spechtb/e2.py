"""Irreducibility at q = -1, the split (Morita) case, and the regime dispatcher."""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    Bipartition,
    HeckeParams,
    Partition,
    addable_nodes,
    remove_nodes,
    removable_nodes,
    residue,
)
from .decomp_inf import is_irreducible_inf
from .typea import CanonicalBasisOracle, TypeA2Oracle
from .verdict import IRREDUCIBLE, REDUCIBLE, Outcome, Verdict


class NotRestrictable(ValueError):
    pass


def _params(r: int) -> HeckeParams:
    return HeckeParams.two_power(r)


def is_i_restrictable(b: Bipartition, i: int, r: int) -> bool:
    """At least one removable i-node and no addable i-node (q = -1, Q = (-1)^(r+1))."""
    p = _params(r)
    if any(residue(nd, p) == i for nd in addable_nodes(b)):
        return False
    return any(residue(nd, p) == i for nd in removable_nodes(b))


def restrict_all(b: Bipartition, i: int, r: int) -> Bipartition:
    """Remove every removable i-node at once."""
    if not is_i_restrictable(b, i, r):
        raise NotRestrictable(f"{b} is not {i:+d}-restrictable for r={r}")
    p = _params(r)
    return remove_nodes(b, [nd for nd in removable_nodes(b) if residue(nd, p) == i])


@dataclass(frozen=True)
class ChainOutcome:
    """Alternating restriction chain.

    ``steps`` lists (bipartition, residue removed from it).  The chain ends
    either at a bipartition with an empty component (``terminal``/``side``)
    or gets stuck at ``stuck``.
    """

    start: Bipartition
    first_residue: int
    steps: tuple[tuple[Bipartition, int], ...] = ()
    terminal: Partition | None = None
    side: int | None = None
    stuck: Bipartition | None = None

    @property
    def reached_terminal(self) -> bool:
        return self.terminal is not None

    @property
    def path(self) -> list[Bipartition]:
        last = self.stuck if self.stuck is not None else self._last()
        return [b for b, _ in self.steps] + [last]

    def _last(self) -> Bipartition:
        if self.side == 1:
            return Bipartition(self.terminal, Partition())
        return Bipartition(Partition(), self.terminal)

    def describe(self) -> str:
        pieces = [str(self.start)]
        for (_, res), nxt in zip(self.steps, self.path[1:]):
            pieces.append(f"-[{res:+d}]-> {nxt}")
        tail = f"terminal {self.terminal or '-'} (component {self.side})" if self.reached_terminal else "stuck"
        return " ".join(pieces) + f"; {tail}"


def reduction_chain(b: Bipartition, i0: int, r: int) -> ChainOutcome:
    if i0 not in (1, -1):
        raise ValueError(f"residue must be +1 or -1, got {i0}")
    steps = []
    cur, i = b, i0
    while True:
        if not cur.first:
            return ChainOutcome(b, i0, tuple(steps), terminal=cur.second, side=2)
        if not cur.second:
            return ChainOutcome(b, i0, tuple(steps), terminal=cur.first, side=1)
        if not is_i_restrictable(cur, i, r):
            return ChainOutcome(b, i0, tuple(steps), stuck=cur)
        steps.append((cur, i))
        cur = restrict_all(cur, i, r)
        i = -i


@dataclass(frozen=True)
class E2Witness:
    chains: tuple[ChainOutcome, ...]
    oracle_verdict: Verdict | None = None
    terminal_chain: ChainOutcome | None = None


def is_irreducible_e2(
    b: Bipartition, r: int, oracle: TypeA2Oracle | None = None, char: int = 0
) -> Verdict:
    """Run both alternating chains; a terminal partition is handed to the type A oracle.

    Every step preserves irreducibility in both directions, so the first
    chain that reaches an empty component decides the answer.  If both get
    stuck with two nonempty components the module is reducible.
    """
    oracle = oracle or CanonicalBasisOracle()
    chains = []
    for i0 in (1, -1):
        chain = reduction_chain(b, i0, r)
        chains.append(chain)
        if chain.reached_terminal:
            answer = oracle.query(chain.terminal, char)
            witness = E2Witness(tuple(chains), answer, chain)
            return Verdict(answer.outcome, answer.reason, witness)
    return Verdict(Outcome.REDUCIBLE, witness=E2Witness(tuple(chains)))


@dataclass(frozen=True)
class SplitWitness:
    first: Verdict
    second: Verdict


def is_irreducible_split(
    b: Bipartition, oracle: TypeA2Oracle | None = None, e: int | None = 2, char: int = 0
) -> Verdict:
    """-Q not a power of q: the module is irreducible iff both type A factors are."""
    if e is None:
        return Verdict(Outcome.IRREDUCIBLE, witness=SplitWitness(IRREDUCIBLE, IRREDUCIBLE))
    if e != 2:
        return Verdict(Outcome.UNSUPPORTED, reason=f"e={e}")
    oracle = oracle or CanonicalBasisOracle()
    v1 = oracle.query(b.first, char)
    v2 = oracle.query(b.second, char)
    witness = SplitWitness(v1, v2)
    if REDUCIBLE in (v1, v2):
        return Verdict(Outcome.REDUCIBLE, witness=witness)
    for v in (v1, v2):
        if v.outcome is not Outcome.IRREDUCIBLE:
            return Verdict(v.outcome, v.reason, witness)
    return Verdict(Outcome.IRREDUCIBLE, witness=witness)


def classify(b: Bipartition, p: HeckeParams, oracle: TypeA2Oracle | None = None) -> Verdict:
    """Irreducibility of S^b in any supported regime."""
    if p.e is None:
        if p.r is None:
            return Verdict(Outcome.IRREDUCIBLE, witness=SplitWitness(IRREDUCIBLE, IRREDUCIBLE))
        return is_irreducible_inf(b, p.r)
    if p.e == 2:
        if p.r is None:
            return is_irreducible_split(b, oracle, 2, p.char)
        return is_irreducible_e2(b, p.r, oracle, p.char)
    return Verdict(Outcome.UNSUPPORTED, reason=f"e={p.e} is not covered (only e=2 and e=infinity)")
