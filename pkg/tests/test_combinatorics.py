from itertools import product

import pytest
from hypothesis import given, strategies as st

from spechtb.combinatorics import (
    EMPTY,
    BetaSet,
    Bipartition,
    Comparison,
    HeckeParams,
    Node,
    Partition,
    abacus_render,
    add_node,
    addable_nodes,
    beta_from_elements,
    beta_set,
    bip,
    bipartitions,
    conjugate,
    dominance,
    dominates,
    dual,
    format_bipartition,
    partition_from_beta,
    partitions,
    remove_first_row,
    remove_nodes,
    removable_nodes,
    residue,
    residue_multiset,
    same_block,
)


def P(*parts):
    return Partition(parts)


partition_st = st.lists(st.integers(1, 7), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))
bipartition_st = st.builds(Bipartition, partition_st, partition_st)


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((2, 0, -1))

    def test_indexing_past_end(self):
        lam = P(3, 1)
        assert (lam[0], lam[1], lam[5]) == (3, 1, 0)
        assert lam.size == 4

    def test_empty_is_unique_partition_of_zero(self):
        assert list(partitions(0)) == [EMPTY]

    def test_partition_counts(self):
        assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_bipartition_counts(self):
        # sum_k p(k) p(n-k)
        assert [len(bipartitions(n)) for n in range(6)] == [1, 2, 5, 10, 20, 36]

    def test_bipartitions_sorted_lexicographically(self):
        seq = bipartitions(4)
        keys = [(b.first.parts, b.second.parts) for b in seq]
        assert keys == sorted(keys)


class TestConjugate:
    @pytest.mark.parametrize(
        "lam, expected",
        [((4, 4, 2), (3, 3, 2, 2)), ((), ()), ((1, 1, 1), (3,))],
    )
    def test_examples(self, lam, expected):
        assert conjugate(Partition(lam)) == Partition(expected)

    @given(partition_st)
    def test_involution_and_size(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).size == lam.size


@pytest.mark.parametrize("lam, expected", [((4, 3, 3, 1), (3, 3, 1)), ((5,), ()), ((), ())])
def test_remove_first_row(lam, expected):
    assert remove_first_row(Partition(lam)) == Partition(expected)


class TestDominance:
    def test_partition_dominates(self):
        assert dominance(P(3, 1), P(2, 2)) is Comparison.DOMINATES
        assert dominance(P(2, 2), P(3, 1)) is Comparison.DOMINATED_BY

    def test_partition_incomparable(self):
        assert dominance(P(2, 2, 2), P(3, 1, 1, 1)) is Comparison.INCOMPARABLE

    def test_bipartition_crossed_components_incomparable(self):
        # first components give (2) > (1,1); second condition: 2+1 = 3 < 2+2 = 4
        a, b = bip((2,), (1, 1)), bip((1, 1), (2,))
        assert dominance(a, b) is Comparison.INCOMPARABLE

    def test_bipartition_size_shift(self):
        assert dominance(bip((1,), ()), bip((), (1,))) is Comparison.DOMINATES
        assert dominates(bip((2, 1), (1,)), bip((1, 1, 1), (1,)))

    def test_equal(self):
        assert dominance(bip((2,), (1,)), bip((2,), (1,))) is Comparison.EQUAL

    @pytest.mark.parametrize("n", range(6))
    def test_partial_order_exhaustive(self, n):
        items = bipartitions(n)
        for a in items:
            assert dominates(a, a)
        for a, b in product(items, repeat=2):
            if a != b and dominates(a, b):
                assert not dominates(b, a)
        for a, b, c in product(items, repeat=3):
            if dominates(a, b) and dominates(b, c):
                assert dominates(a, c)


class TestNodes:
    def test_removable_figure(self):
        assert removable_nodes(bip((4, 4, 2), ())) == [Node(1, 2, 4), Node(1, 3, 2)]

    def test_addable_figure(self):
        first = [nd for nd in addable_nodes(bip((4, 4, 2), ())) if nd.component == 1]
        assert first == [Node(1, 1, 5), Node(1, 3, 3), Node(1, 4, 1)]

    def test_empty(self):
        assert removable_nodes(bip()) == []
        assert addable_nodes(bip()) == [Node(1, 1, 1), Node(2, 1, 1)]

    @staticmethod
    def _valid(cells) -> bool:
        return all((r - 1, c) in cells or r == 1 for r, c in cells) and all(
            (r, c - 1) in cells or c == 1 for r, c in cells
        )

    @pytest.mark.parametrize("n", range(7))
    def test_against_diagram_mutation(self, n):
        for b in bipartitions(n):
            for k in (1, 2):
                cells = set(b.component(k).cells())
                grid = {(r, c) for r in range(1, n + 3) for c in range(1, n + 3)}
                adds = sorted((r, c) for r, c in grid - cells if self._valid(cells | {(r, c)}))
                rems = sorted((r, c) for r, c in cells if self._valid(cells - {(r, c)}))
                assert [(nd.row, nd.col) for nd in addable_nodes(b) if nd.component == k] == adds
                assert [(nd.row, nd.col) for nd in removable_nodes(b) if nd.component == k] == rems

    def test_add_then_remove(self):
        b = bip((2,), (1,))
        for nd in addable_nodes(b):
            assert remove_nodes(add_node(b, nd), [nd]) == b

    def test_node_validation(self):
        with pytest.raises(ValueError):
            Node(3, 1, 1)
        with pytest.raises(ValueError):
            Node(1, 0, 1)


class TestResidues:
    def test_two_power_first_row(self):
        assert residue(Node(1, 1, 4), HeckeParams.two_power(0)) == -1

    def test_inf_power(self):
        assert residue(Node(2, 1, 1), HeckeParams.inf_power(5)) == 0
        assert residue(Node(1, 2, 1), HeckeParams.inf_power(3)) == 2

    def test_generic_rejected(self):
        with pytest.raises(ValueError):
            residue(Node(1, 1, 1), HeckeParams.two_generic())

    def test_multisets(self):
        p = HeckeParams.two_power(0)
        assert residue_multiset(bip((1,), (1,)), p) == {1: 2}
        assert same_block(bip((2,), ()), bip((1, 1), ()), p)
        assert not same_block(bip((2,), ()), bip((1,), (1,)), p)

    def test_generic_tags_components(self):
        p = HeckeParams.two_generic()
        assert not same_block(bip((1,), ()), bip((), (1,)), p)

    @pytest.mark.parametrize(
        "params",
        [HeckeParams.two_power(0), HeckeParams.two_power(1), HeckeParams.inf_power(-1), HeckeParams.inf_generic()],
        ids=str,
    )
    def test_block_relation_is_equivalence(self, params):
        items = bipartitions(5)
        classes = {}
        for b in items:
            classes.setdefault(frozenset(residue_multiset(b, params).items()), []).append(b)
        for members in classes.values():
            for a, b in product(members, repeat=2):
                assert same_block(a, b, params)
        reps = [m[0] for m in classes.values()]
        for a, b in product(reps, repeat=2):
            assert same_block(a, b, params) == (a is b)


class TestHeckeParams:
    def test_two_power_restricted(self):
        with pytest.raises(ValueError):
            HeckeParams.two_power(2)

    def test_char_two_rejected_at_q_minus_one(self):
        with pytest.raises(ValueError):
            HeckeParams.two_power(0, char=2)

    def test_char_must_be_prime(self):
        with pytest.raises(ValueError):
            HeckeParams.inf_power(0, char=4)

    def test_names(self):
        assert str(HeckeParams.inf_power(-2)) == "inf:r=-2"
        assert str(HeckeParams.two_generic()) == "two-generic"
        assert not HeckeParams(5, 0).supported


class TestBetaSets:
    def test_figure_example(self):
        B = beta_set(P(4, 4, 2), 1)
        assert B.elements_from(-5) == [4, 3, 0, -3, -4, -5]
        assert all(m in B for m in range(-40, -2))
        assert -2 not in B and 5 not in B

    def test_empty_shape(self):
        B = beta_set(EMPTY, 0)
        assert [m for m in range(-5, 5) if m in B] == [-5, -4, -3, -2, -1]

    def test_single_box(self):
        B = beta_set(P(1), 2)
        assert [m for m in range(-3, 5) if m in B] == [-3, -2, -1, 0, 2]

    def test_bounds(self):
        B = beta_set(P(3, 1), 4)
        assert B.floor == 4 - 2 and B.floor not in B
        assert B.top == 4 + 3 - 1

    @pytest.mark.parametrize("n", range(13))
    def test_round_trip(self, n):
        for lam in partitions(n):
            for i in range(-12, 13):
                assert partition_from_beta(beta_set(lam, i)) == (lam, i)

    def test_from_elements(self):
        # every integer below -2 is a bead
        assert beta_from_elements([4, 3, 0], -2) == BetaSet(1, P(4, 4, 2))

    @given(partition_st, st.integers(-10, 10), st.integers(-5, 5))
    def test_shift(self, lam, i, k):
        assert beta_set(lam, i).shift(k) == beta_set(lam, i + k)


class TestAbacus:
    def test_figure(self):
        ruler, row = abacus_render([beta_set(P(4, 4, 2), 1)], (-5, 7)).splitlines()
        glyphs = row.split()
        beads = [m for m, g in zip(range(-5, 8), glyphs) if g == "o"]
        assert beads == [-5, -4, -3, 0, 3, 4]
        assert ruler.split() == [str(m) for m in range(-5, 8)]

    def test_empty_window_all_gaps(self):
        assert abacus_render([beta_set(EMPTY, 0)], (0, 3)).splitlines()[1].split() == ["."] * 4

    def test_two_rows(self):
        nu, xi = P(4, 4, 3, 3, 3), P(4, 4, 1)
        text = abacus_render([beta_set(nu, 1), beta_set(xi, 0)], (-6, 5), ["B1", "B0"])
        _, top, bottom = text.splitlines()
        on = lambda line: [m for m, g in zip(range(-6, 6), line.split()[1:]) if g == "o"]
        assert on(top) == [-6, -5, -1, 0, 1, 3, 4]
        assert on(bottom) == [-6, -5, -4, -2, 2, 3]
        diff = sorted(set(on(top)) ^ set(on(bottom)))
        assert diff == [-4, -2, -1, 0, 1, 2, 4]


class TestDual:
    def test_examples(self):
        assert dual(bip((2,), (1, 1))) == bip((2,), (1, 1))
        assert dual(bip((), (3,))) == bip((1, 1, 1), ())
        b = bip((4, 3, 3, 1), (2, 1))
        assert dual(dual(b)) == b

    @given(bipartition_st)
    def test_involution(self, b):
        assert dual(dual(b)) == b


def test_format():
    assert format_bipartition(bip((4, 3, 3, 1), (2, 1))) == "4,3,3,1|2,1"
    assert format_bipartition(bip((), (3,))) == "-|3"
