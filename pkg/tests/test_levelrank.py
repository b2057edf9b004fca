from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abacore.levelrank import (
    AffinePerm,
    affine_perm,
    apply_affine,
    check_bead_square,
    check_core_matched_diagram,
    check_uglov_diagram,
    qr,
    qr_em,
    qr_em_inv,
    residue_perm,
    uglov,
)
from abacore.partitions import (
    ChargedMultiPartition,
    ChargedPartition,
    Partition,
    join_charged,
    partitions_of,
    split_charged,
    to_beta,
)
from oracles import apply_affine_on_beads

P = Partition


class TestQuotientRemainder:
    def test_qr_examples(self):
        assert qr(5, 3) == (1, 2)
        assert qr(-1, 3) == (-1, 2)
        assert qr(0, 7) == (0, 0)

    def test_qr_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            qr(5, 0)

    def test_qr_em_examples(self):
        for x in range(-9, 10):
            assert qr_em(x, 0, 1, 4) == qr(x, 4)
        assert qr_em(1, 0, 2, 3) == (0, 1)
        assert qr_em(-1, 1, 2, 3) == (-1, 2)

    def test_qr_em_rejects_bad_component(self):
        with pytest.raises(ValueError):
            qr_em(0, 2, 2, 3)
        with pytest.raises(ValueError):
            qr_em_inv(0, 3, 2, 3)

    def test_qr_em_inv_examples(self):
        assert qr_em_inv(0, 1, 2, 3) == (1, 0)
        assert qr_em_inv(-1, 2, 2, 3) == (-1, 1)

    def test_index_bijection_window(self):
        for e in range(1, 9):
            for m in range(1, 9):
                for x in range(-50, 51):
                    for y in range(e):
                        q, r = qr_em(x, y, e, m)
                        assert 0 <= r < m
                        assert e * x + m * y == m * q + e * r
                        assert qr_em_inv(q, r, e, m) == (x, y)

    def test_coprime_converse(self):
        # if e*a + m*b = m*c + e*d then (c, d) is the image of (a, b)
        for e in range(1, 9):
            for m in range(1, 9):
                if gcd(e, m) != 1:
                    continue
                for a in range(-10, 11):
                    for b in range(e):
                        for d in range(m):
                            lhs = e * a + m * b - e * d
                            if lhs % m:
                                continue
                            assert qr_em(a, b, e, m) == (lhs // m, d)


class TestResiduePerm:
    def test_examples(self):
        assert residue_perm(2, 3, 0) == (0, 1)
        assert residue_perm(3, 2, 0) == (0, 2, 1)
        # maps 1 -> 0, 2 -> 1, 0 -> 2
        assert residue_perm(3, 1, 1) == (2, 0, 1)

    def test_defining_relation(self):
        for e in range(1, 7):
            for m in range(1, 7):
                if gcd(e, m) != 1:
                    continue
                for s in range(-5, 6):
                    w = residue_perm(e, m, s)
                    for b in range(e):
                        assert w[(m * b + s) % e] == b

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            residue_perm(4, 2, 0)


class TestAffinePerm:
    def test_examples(self):
        assert affine_perm(2, 3, 0) == AffinePerm(2, (0, 1), (0, -1))
        assert affine_perm(3, 2, 0) == AffinePerm(3, (0, 2, 1), (0, 0, -1))
        for s in range(-4, 5):
            assert affine_perm(1, 5, s) == AffinePerm(1, (0,), (-s,))

    def test_bead_action_definition(self):
        for e, m in ((2, 3), (3, 4), (5, 2)):
            for s in (-3, 0, 2):
                ap = affine_perm(e, m, s)
                for b in range(e):
                    for a in (-3, 0, 7):
                        assert ap.bead(a, (m * b + s) % e) == (
                            a - (m * b + s) // e,
                            b,
                        )

    def test_apply_affine_charge_shifts(self):
        ap = affine_perm(2, 3, 0)
        cmp0 = ChargedMultiPartition((P(()), P(())), (4, 7))
        assert apply_affine(ap, cmp0) == ChargedMultiPartition(
            (P(()), P(())), (4, 6)
        )
        identity = affine_perm(1, 1, 0)
        one = ChargedMultiPartition((P((2, 1)),), (3,))
        assert apply_affine(identity, one) == one

    def test_apply_affine_permutes_and_shifts(self):
        # bead (a, i) goes to component perm[i] shifted by shifts[perm[i]]:
        # for (3, 2, 0) the empty triple at charges (0,0,0) lands on (0,0,-1)
        ap = affine_perm(3, 2, 0)
        cmp0 = ChargedMultiPartition((P(()),) * 3, (0, 0, 0))
        assert apply_affine(ap, cmp0) == ChargedMultiPartition(
            (P(()),) * 3, (0, 0, -1)
        )

    def test_apply_affine_against_bead_oracle(self):
        # compare with the action on explicit bead sets, window far below 0
        cases = [
            ((3, 2, 0), ((P(()),) * 3, (0, 0, 0))),
            ((2, 3, 1), ((P((2,)), P((1, 1))), (1, -2))),
            ((3, 4, -2), ((P((1,)), P(()), P((3, 1))), (0, 2, -1))),
        ]
        low = -40
        for (e, m, s), (comps, charges) in cases:
            ap = affine_perm(e, m, s)
            cmp0 = ChargedMultiPartition(comps, charges)
            expected_sets = apply_affine_on_beads(
                ap.perm,
                ap.shifts,
                [
                    {x for x in range(low, 20) if x in to_beta(ChargedPartition(p, c))}
                    for p, c in zip(comps, charges)
                ],
            )
            result = apply_affine(ap, cmp0)
            for j in range(e):
                beta = to_beta(
                    ChargedPartition(result.components[j], result.charges[j])
                )
                got = {x for x in range(low + 10, 20) if x in beta}
                assert got == {x for x in expected_sets[j] if x >= low + 10}

    def test_component_count_mismatch(self):
        with pytest.raises(ValueError):
            apply_affine(affine_perm(3, 2, 0), ChargedMultiPartition((P(()),), (0,)))


class TestUglov:
    def test_fixes_trivial(self):
        for e, m in ((1, 1), (2, 3), (3, 5)):
            cmp0 = ChargedMultiPartition((P(()),) * e, (0,) * e)
            image = uglov(cmp0, m)
            assert image == ChargedMultiPartition((P(()),) * m, (0,) * m)

    def test_example_2_to_3(self):
        cmp0 = ChargedMultiPartition((P(()), P(())), (1, 0))
        assert uglov(cmp0, 3) == ChargedMultiPartition(
            (P(()), P(()), P(())), (1, 0, 0)
        )

    def test_level_one_is_abacus_split(self):
        for p in partitions_of(6):
            for s in (-2, 0, 3):
                for m in (1, 2, 3, 5):
                    lifted = ChargedMultiPartition((p,), (s,))
                    assert uglov(lifted, m) == split_charged(
                        ChargedPartition(p, s), m
                    )

    def test_target_level_one_is_abacus_join(self):
        cases = [
            ((P((2,)), P((1, 1))), (0, -1)),
            ((P(()), P((3,)), P((1,))), (2, 0, -3)),
        ]
        for comps, charges in cases:
            cmp0 = ChargedMultiPartition(comps, charges)
            image = uglov(cmp0, 1)
            joined = join_charged(cmp0)
            assert image == ChargedMultiPartition(
                (joined.partition,), (joined.charge,)
            )

    @settings(max_examples=150, deadline=None)
    @given(
        st.lists(
            st.tuples(
                st.lists(st.integers(1, 4), max_size=4).map(
                    lambda xs: P(tuple(sorted(xs, reverse=True)))
                ),
                st.integers(-5, 5),
            ),
            min_size=1,
            max_size=4,
        ),
        st.integers(1, 6),
    )
    def test_round_trip_and_charge(self, comps, m):
        cmp0 = ChargedMultiPartition(
            tuple(p for p, _ in comps), tuple(c for _, c in comps)
        )
        image = uglov(cmp0, m)
        assert image.total_charge == cmp0.total_charge
        assert uglov(image, cmp0.level) == cmp0

    def test_bead_level_definition(self):
        # every bead (x, i) of the source maps to qr_em(x, i, e, m)
        cmp0 = ChargedMultiPartition((P((3, 1)), P((2,))), (0, -1))
        e, m = 2, 5
        image = uglov(cmp0, m)
        image_abaci = [
            to_beta(ChargedPartition(p, c))
            for p, c in zip(image.components, image.charges)
        ]
        for i, (p, c) in enumerate(zip(cmp0.components, cmp0.charges)):
            beta = to_beta(ChargedPartition(p, c))
            for x in range(-30, 15):
                if x in beta:
                    q, r = qr_em(x, i, e, m)
                    assert q in image_abaci[r]


class TestDiagrams:
    def test_bead_square_windows(self):
        for e in range(1, 7):
            for m in range(1, 7):
                if gcd(e, m) != 1:
                    continue
                for s, t in ((0, 0), (2, -1), (-3, 4)):
                    assert all(
                        check_bead_square(x, e, m, s, t) for x in range(-20, 21)
                    )

    def test_bead_square_spec_cases(self):
        assert all(check_bead_square(x, 2, 3, 0, 0) for x in range(-20, 21))
        assert all(check_bead_square(x, 1, 1, 0, 0) for x in range(-20, 21))
        assert all(check_bead_square(x, 3, 4, 2, -1) for x in range(-20, 21))

    def test_uglov_diagram_cases(self):
        assert check_uglov_diagram(P((3,)), 2, 3, 2, 3)
        for n in range(11):
            for p in partitions_of(n):
                assert check_uglov_diagram(p, 3, 4, 0, 0)

    def test_uglov_diagram_all_coprime_levels(self):
        for e in range(1, 7):
            for m in range(1, 7):
                if gcd(e, m) != 1:
                    continue
                for s, t in ((0, 0), (2, -1)):
                    for n in range(7):
                        for p in partitions_of(n):
                            assert check_uglov_diagram(p, e, m, s, t)

    def test_uglov_diagram_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            check_uglov_diagram(P((1,)), 2, 4, 0, 0)

    def test_core_matched_diagram_sample(self):
        for n in range(9):
            for p in partitions_of(n):
                for e, m in ((2, 3), (3, 5), (4, 3)):
                    assert check_core_matched_diagram(p, e, m)
