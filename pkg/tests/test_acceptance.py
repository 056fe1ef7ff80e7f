"""Acceptance criteria, one test each, exact equality throughout.

Every test records PASS/FAIL and its runtime; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
"""
import contextlib
import functools
import io
import time

from conftest import ACCEPTANCE
from spechtb.cli import main
from spechtb.combinatorics import (
    Bipartition,
    HeckeParams,
    Partition,
    bip,
    bipartitions,
    conjugate,
    dominates,
    dual,
    partitions,
)
from spechtb.decomp_inf import (
    conjugate_both,
    is_inf_irreducible_all_parity,
    is_irreducible_inf,
    shape_predicate,
    simples_spechts_inf,
    specht_constituents_inf,
    swap,
)
from spechtb.e2 import classify, is_i_restrictable, restrict_all
from spechtb.signatures import count_suitable_pairs, iota_s, is_regular_inf, pm_sequences, signature
from spechtb.typea import CanonicalBasisOracle, check_normal_form
from spechtb.verdict import IRREDUCIBLE, REDUCIBLE, Outcome


def criterion(number, title, budget):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            ok = False
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
                ok = True
            finally:
                ACCEPTANCE[number] = (ok, time.perf_counter() - start, title)

        return run

    return wrap


EXAMPLE = bip((4, 4, 3, 3, 3), (4, 4, 1))
EXAMPLE_LIST = {
    bip((4, 4, 3, 3, 3), (4, 4, 1)),
    bip((4, 4, 3, 2), (4, 4, 3, 2)),
    bip((4, 4, 3, 3, 2), (4, 4, 2)),
    bip((4, 4, 3, 1), (4, 4, 3, 3)),
    bip((3, 3, 3, 3, 3), (5, 5, 1)),
    bip((3, 3, 3, 2), (5, 5, 3, 2)),
    bip((3, 3, 3, 3, 2), (5, 5, 2)),
    bip((3, 3, 3, 1), (5, 5, 3, 3)),
}
WORKED = bip((4, 3, 3, 1), (2, 1))


@criterion(1, "e=infinity worked example: signature, canonical involution, eight Specht modules", 1)
def test_criterion_1_signature_example():
    assert signature(EXAMPLE, 1).signs == "--+++-+"
    assert str(iota_s("--+++-+")) == "(1,4)(2,3)(6,7)"
    got = simples_spechts_inf(EXAMPLE, 1)
    assert len(got) == 8 and set(got) == EXAMPLE_LIST


@criterion(2, "q=-1 worked example: chain to (3,3,2) and oracle verdict", 1)
def test_criterion_2_chain_example():
    v = classify(WORKED, HeckeParams.two_power(0, char=0))
    assert v == IRREDUCIBLE
    chain = v.witness.terminal_chain
    assert chain.path == [WORKED, bip((3, 3, 3), (1,)), bip((3, 3, 2), ())]
    assert chain.terminal == Partition((3, 3, 2))
    assert v.witness.oracle_verdict == IRREDUCIBLE
    assert CanonicalBasisOracle().query(Partition((3, 3, 2)), 0) == IRREDUCIBLE


@criterion(3, "one suitable pair exactly when the shape test matches, all sequences of length <= 11", 60)
def test_criterion_3_suitable_vs_shape():
    checked = 0
    for n in range(12):
        for t in pm_sequences(n):
            assert (count_suitable_pairs(t) == 1) == shape_predicate(t).matches, t
            checked += 1
    assert checked == 2**12 - 1


@criterion(4, "row/column duality, dominance and self-appearance, n <= 8, r in -2..2", 120)
def test_criterion_4_duality():
    for n in range(9):
        items = bipartitions(n)
        for r in range(-2, 3):
            rows = {}
            for b in items:
                factors = specht_constituents_inf(b, r).factors
                assert len(set(factors)) == len(factors)
                assert all(dominates(f, b) for f in factors)
                if is_regular_inf(b, r):
                    assert factors.count(b) == 1
                rows[b] = set(factors)
            for reg in items:
                if is_regular_inf(reg, r):
                    column = simples_spechts_inf(reg, r)
                    assert len(set(column)) == len(column)
                    assert set(column) == {b for b in items if reg in rows[b]}


@criterion(5, "conjugation and swap laws at e=infinity, n <= 8, r in -2..2", 60)
def test_criterion_5_conjugation_swap():
    for n in range(9):
        for b in bipartitions(n):
            for r in range(-2, 3):
                v = is_irreducible_inf(b, r)
                assert v == is_irreducible_inf(swap(conjugate_both(b)), r)
                assert v == is_irreducible_inf(swap(b), -r)


@criterion(6, "q=-1 laws (a)-(e) in characteristic 0, n <= 8, r in {0,1}", 600)
def test_criterion_6_e2_laws():
    verdicts = {}
    for n in range(9):
        for b in bipartitions(n):
            for r in (0, 1):
                verdicts[(b, r)] = classify(b, HeckeParams.two_power(r))
    oracle = CanonicalBasisOracle()
    violations = []
    for (b, r), v in verdicts.items():
        if not v.decided:
            violations.append(("undecided", b, r))
        restrictable = False
        for i in (1, -1):
            if is_i_restrictable(b, i, r):
                restrictable = True
                if verdicts[(restrict_all(b, i, r), r)] != v:
                    violations.append(("a", b, r, i))
        if not b.second and v != oracle.query(b.first, 0):
            violations.append(("b", b, r))
        if not b.first and v != oracle.query(b.second, 0):
            violations.append(("b", b, r))
        if b.first and b.second and not restrictable and v != REDUCIBLE:
            violations.append(("c", b, r))
        if verdicts[(Bipartition(conjugate(b.first), b.second), r)] != v:
            violations.append(("d", b, r))
        if verdicts[(Bipartition(b.first, conjugate(b.second)), r)] != v:
            violations.append(("d", b, r))
        if verdicts[(dual(b), r)] != v:
            violations.append(("d", b, r))
        if v == IRREDUCIBLE and not is_inf_irreducible_all_parity(b, r):
            violations.append(("e", b, r))
    assert violations == []


@criterion(7, "type A oracle: normal form n <= 10, (3,3,2), one-dimensional shapes, conjugation n <= 8", 60)
def test_criterion_7_typea():
    for n in range(11):
        check_normal_form(n)
    oracle = CanonicalBasisOracle()
    assert oracle.query(Partition((3, 3, 2)), 0) == IRREDUCIBLE
    for n in range(13):
        row, column = Partition([n] if n else []), Partition([1] * n)
        for char in (0, 3, 5, 7):
            assert oracle.query(row, char) == IRREDUCIBLE
            assert oracle.query(column, char) == IRREDUCIBLE
    for n in range(9):
        for lam in partitions(n):
            assert oracle.query(lam, 0) == oracle.query(conjugate(lam), 0)


@criterion(8, "degenerate inputs: empty bipartition in every regime; e=5 unsupported with exit 2", 5)
def test_criterion_8_degenerate():
    regimes = [HeckeParams.inf_generic(), HeckeParams.two_generic(), HeckeParams.two_power(0), HeckeParams.two_power(1)]
    regimes += [HeckeParams.inf_power(r) for r in range(-5, 6)]
    for p in regimes:
        assert classify(bip(), p) == IRREDUCIBLE
    assert classify(bip(), HeckeParams(5, 0)).outcome is Outcome.UNSUPPORTED
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(["classify", "--regime", "e=5:r=0", "-|-"])
    assert code == 2 and out.getvalue().startswith("Unsupported")


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for number in sorted(ACCEPTANCE):
        ok, seconds, title = ACCEPTANCE[number]
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  ({seconds:.2f}s)  {title}")
    sys.exit(0 if all(ok for ok, _, _ in ACCEPTANCE.values()) else 1)
