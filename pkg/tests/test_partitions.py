import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacore.partitions import (
    BetaSet,
    ChargedMultiPartition,
    ChargedPartition,
    Partition,
    core_exponents,
    e_core,
    e_quotient_charged,
    from_beta,
    hook_lengths,
    is_e_core,
    join_beta,
    join_charged,
    multipartitions_of,
    parse_charges,
    parse_multipartition,
    parse_partition,
    partitions_of,
    render_multipartition,
    render_partition,
    split_beta,
    split_charged,
    to_beta,
)
from oracles import PARTITION_COUNTS, hooks_by_cells, rim_hook_core

P = Partition
CP = ChargedPartition


def all_partitions_up_to(n):
    for k in range(n + 1):
        yield from partitions_of(k)


partition_strategy = st.lists(st.integers(1, 8), max_size=8).map(
    lambda xs: P(tuple(sorted(xs, reverse=True)))
)


class TestPartitionBasics:
    def test_validation(self):
        with pytest.raises(ValueError):
            P((1, 2))
        with pytest.raises(ValueError):
            P((2, 0))

    def test_size_and_length(self):
        assert P((3, 1, 1)).size == 5
        assert P((3, 1, 1)).length == 3
        assert P(()).size == 0

    def test_conjugate(self):
        assert P((3, 1)).conjugate() == P((2, 1, 1))
        assert P(()).conjugate() == P(())

    def test_hook_lengths_examples(self):
        assert hook_lengths(P((3,))) == (3, 2, 1)
        assert hook_lengths(P((2, 1))) == (3, 1, 1)
        assert hook_lengths(P((2, 2))) == (3, 2, 2, 1)

    def test_hook_lengths_against_cell_count(self):
        for p in all_partitions_up_to(9):
            assert list(hook_lengths(p)) == hooks_by_cells(p.parts)

    def test_partition_counts(self):
        for n, expected in enumerate(PARTITION_COUNTS):
            assert len(partitions_of(n)) == expected

    def test_multipartition_counts(self):
        assert len(multipartitions_of(1, 4)) == 5
        assert len(multipartitions_of(2, 2)) == 5
        assert len(multipartitions_of(3, 2)) == 9
        assert len(multipartitions_of(2, 6)) == 65


class TestBetaSets:
    def test_canonical_form_enforced(self):
        with pytest.raises(ValueError):
            BetaSet(0, (0,))
        with pytest.raises(ValueError):
            BetaSet(0, (2, 3))

    def test_from_floor_and_beads_normalizes(self):
        assert BetaSet.from_floor_and_beads(0, {0, 1, 5}) == BetaSet(2, (5,))
        assert BetaSet.from_floor_and_beads(3, {1, 2}) == BetaSet(3, ())

    def test_to_beta_examples(self):
        assert to_beta(CP(P(()), 0)) == BetaSet(0, ())
        assert to_beta(CP(P((2, 1)), 0)) == BetaSet(-2, (1, -1))
        assert to_beta(CP(P((3,)), 3)) == BetaSet(2, (5,))

    def test_from_beta_examples(self):
        assert from_beta(BetaSet(0, ())) == CP(P(()), 0)
        assert from_beta(BetaSet(-2, (1, -1))) == CP(P((2, 1)), 0)
        assert from_beta(BetaSet(2, (5,))) == CP(P((3,)), 3)

    def test_charge_equals_floor_plus_tail(self):
        assert BetaSet(-2, (1, -1)).charge == 0
        assert BetaSet(2, (5,)).charge == 3

    def test_round_trip_exhaustive(self):
        for p in all_partitions_up_to(12):
            for s in range(-6, 7):
                cp = CP(p, s)
                beta = to_beta(cp)
                assert beta.charge == s
                assert from_beta(beta) == cp

    @settings(max_examples=200)
    @given(partition_strategy, st.integers(-20, 20))
    def test_round_trip_hypothesis(self, p, s):
        assert from_beta(to_beta(CP(p, s))) == CP(p, s)


class TestSplitJoin:
    def test_split_beta_examples(self):
        assert split_beta(BetaSet(0), 2) == (BetaSet(0), BetaSet(0))
        assert split_beta(BetaSet(2, (5,)), 3) == (
            BetaSet(1),
            BetaSet(1),
            BetaSet(0, (1,)),
        )
        assert split_beta(BetaSet(-1, (1,)), 2) == (BetaSet(0), BetaSet(-1, (0,)))

    def test_join_beta_examples(self):
        assert join_beta((BetaSet(0), BetaSet(0))) == BetaSet(0)
        assert join_beta((BetaSet(1), BetaSet(1), BetaSet(0, (1,)))) == BetaSet(2, (5,))
        assert join_beta((BetaSet(0), BetaSet(-1, (0,)))) == BetaSet(-1, (1,))

    def test_split_rejects_bad_level(self):
        with pytest.raises(ValueError):
            split_beta(BetaSet(0), 0)
        with pytest.raises(ValueError):
            join_beta(())

    def test_factorization_exhaustive(self):
        for p in all_partitions_up_to(12):
            for s in (-6, -2, 0, 1, 5, 6):
                beta = to_beta(CP(p, s))
                for e in range(1, 7):
                    comps = split_beta(beta, e)
                    assert join_beta(comps) == beta
                    assert sum(c.charge for c in comps) == beta.charge


class TestChargedSplit:
    def test_examples(self):
        for e in (1, 2, 5):
            empty = split_charged(CP(P(()), 0), e)
            assert empty.components == (P(()),) * e
            assert empty.charges == (0,) * e
        assert split_charged(CP(P((3,)), 3), 3) == ChargedMultiPartition(
            (P(()), P(()), P((1,))), (1, 1, 1)
        )
        assert split_charged(CP(P((2,)), 0), 2) == ChargedMultiPartition(
            (P(()), P((1,))), (0, 0)
        )

    def test_join_inverts(self):
        assert join_charged(
            ChargedMultiPartition((P(()),) * 3, (0, 0, 0))
        ) == CP(P(()), 0)
        for p in all_partitions_up_to(10):
            for s in (-4, 0, 3):
                for e in (1, 2, 3, 5):
                    cmp = split_charged(CP(p, s), e)
                    assert cmp.total_charge == s
                    assert join_charged(cmp) == CP(p, s)


class TestCoreQuotient:
    def test_e_core_examples(self):
        assert e_core(P((3,)), 3) == P(())
        assert e_core(P((2, 1)), 2) == P((2, 1))
        assert e_core(P((2, 1, 1)), 2) == P(())

    def test_quotient_examples(self):
        assert e_quotient_charged(P(()), 2, 0) == ChargedMultiPartition(
            (P(()), P(())), (1, 1)
        )
        assert e_quotient_charged(P((3,)), 3, 0) == ChargedMultiPartition(
            (P(()), P(()), P((1,))), (1, 1, 1)
        )
        assert e_quotient_charged(P((2, 1)), 3, 0) == ChargedMultiPartition(
            (P(()), P((1,)), P(())), (1, 1, 1)
        )

    def test_is_e_core_examples(self):
        assert is_e_core(P((2, 1)), 2)
        assert not is_e_core(P((3,)), 3)
        assert is_e_core(P(()), 1)
        assert is_e_core(P(()), 7)

    def test_core_against_rim_hook_oracle(self):
        for p in all_partitions_up_to(10):
            for e in range(1, 7):
                assert e_core(p, e).parts == rim_hook_core(p.parts, e)

    def test_core_criterion_three_ways(self):
        for p in all_partitions_up_to(12):
            for e in range(1, 7):
                no_div_hook = all(h % e != 0 for h in hook_lengths(p))
                quotient_empty = all(
                    q.size == 0 for q in e_quotient_charged(p, e, 0).components
                )
                assert is_e_core(p, e) == no_div_hook == quotient_empty
                assert is_e_core(p, e) == (e_core(p, e) == p)

    def test_size_law(self):
        for p in all_partitions_up_to(12):
            for e in range(1, 7):
                for s in (-3, 0, 4):
                    quotient = e_quotient_charged(p, e, s)
                    total = sum(q.size for q in quotient.components)
                    assert p.size == e_core(p, e).size + e * total

    def test_idempotence(self):
        for p in all_partitions_up_to(10):
            for e in range(1, 7):
                core = e_core(p, e)
                assert e_core(core, e) == core

    def test_charge_independence(self):
        for p in all_partitions_up_to(8):
            for e in (2, 3, 5):
                sizes = None
                for s in range(-6, 7):
                    cmp = split_charged(CP(p, s), e)
                    multiset = tuple(sorted(q.size for q in cmp.components))
                    if sizes is None:
                        sizes = multiset
                    assert multiset == sizes
                    emptied = ChargedMultiPartition(
                        (P(()),) * e, cmp.charges
                    )
                    assert join_charged(emptied).partition == e_core(p, e)


class TestCoreExponents:
    def test_examples(self):
        assert core_exponents(P(()), 1) == (1,)
        assert core_exponents(P(()), 2) == (2, 3)
        assert core_exponents(P((1,)), 2) == (2, 5)

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            core_exponents(P((3,)), 3)

    def test_residues_cover_all_classes(self):
        # the exponent vector always hits each residue class mod e once
        for core in all_partitions_up_to(7):
            for e in range(1, 6):
                if not is_e_core(core, e):
                    continue
                exps = core_exponents(core, e)
                assert sorted(a % e for a in exps) == list(range(e))


class TestTextFormats:
    def test_partition_round_trip(self):
        for text in ("", "3,1,1", "5"):
            assert render_partition(parse_partition(text)) == text

    def test_multipartition_round_trip(self):
        for text in (";1", "", ";;", "2,1;;3"):
            assert render_multipartition(parse_multipartition(text)) == text
        assert parse_multipartition(";1") == (P(()), P((1,)))

    def test_charges(self):
        assert parse_charges("1,0,-2") == (1, 0, -2)
        with pytest.raises(ValueError):
            parse_charges("")
        with pytest.raises(ValueError):
            parse_charges("1,x")

    def test_bad_partition_text(self):
        with pytest.raises(ValueError):
            parse_partition("1,3")
        with pytest.raises(ValueError):
            parse_partition("a,b")
        with pytest.raises(ValueError):
            parse_partition("3,0")
