import json

import pytest

from serp.ed2 import (
    Ed2Witness,
    NormalizedEd2,
    ed2_backtest,
    ed2_case_a,
    ed2_normalize,
    ed2_reconstruct,
    ed2_search,
    ed2_witness_row,
)
from serp.errors import WrongResidue
from serp.solution import SolutionClass, classify_solution


class TestSearch:
    def test_p11_delta1(self):
        assert ed2_search(11, 1) == [Ed2Witness(11, 1, 1, 3, 4, 14, 3)]

    def test_p73_reproduces_published_rows(self):
        ws = ed2_search(73, 64)
        assert [(w.delta, w.b, w.c, w.A) for w in ws] == [
            (16, 12, 20, 15),
            (20, 10, 30, 15),
            (27, 9, 45, 15),
            (64, 8, 120, 15),
        ]

    def test_p3511_delta1(self):
        ws = ed2_search(3511, 1)
        assert [(w.b, w.c) for w in ws] == [
            (1, 878), (3, 251), (4, 185), (9, 80), (17, 42), (23, 31),
        ]
        assert [w.A for w in ws] == [878, 753, 740, 720, 714, 713]

    def test_rejects_multiple_of_five(self):
        with pytest.raises(WrongResidue):
            ed2_search(5, 3)

    def test_repeated_pair_excluded(self):
        # delta = 15 for P = 73 factors as 74 * 74, forcing b = c = 15
        assert all(w.b != w.c for w in ed2_search(73, 15))
        assert not [w for w in ed2_search(73, 15) if w.delta == 15]

    def test_witness_invariants(self):
        for P in (11, 31, 41, 73, 97):
            for w in ed2_search(P, 80):
                assert w.r == 5 * w.b - 1 and w.s == 5 * w.c - 1
                assert w.r % 5 == 4 and w.s % 5 == 4
                assert w.r * w.s == 5 * P * w.delta + 1
                assert 5 * w.b * w.c - w.b - w.c == P * w.delta
                assert (w.b * w.c) % w.delta == 0
                assert w.A == w.b * w.c // w.delta
                assert w.A <= w.b * P <= w.c * P and w.b != w.c

    def test_two_multiples_classification(self):
        for w in ed2_search(31, 10):
            mult = classify_solution(ed2_reconstruct(w))
            assert mult.count == 2 and mult.positions == ("B", "C")


class TestCaseA:
    def test_p97(self):
        sol = ed2_case_a(97, 1, [9])
        assert sol.triple() == (22, 194, 1067)

    def test_p11(self):
        assert ed2_case_a(11, 1, [4]).triple() == (3, 11, 33)

    def test_non_divisor_gives_none(self):
        assert ed2_case_a(11, 1, [3]) is None

    def test_swap_branch(self):
        # r = 54 pairs with s = 9, so b > c before the swap
        sol = ed2_case_a(97, 1, [54])
        assert sol.triple() == (22, 194, 1067)

    def test_first_hit_wins(self):
        assert ed2_case_a(11, 1, [3, 4, 14]).triple() == (3, 11, 33)

    def test_equal_pair_skipped(self):
        # 74 * 74 = 5*73*15 + 1 would force B = C
        assert ed2_case_a(73, 15, [74]) is None


class TestNormalize:
    @pytest.mark.parametrize(
        "witness,expected",
        [
            (Ed2Witness(73, 64, 8, 120, 39, 599, 15), NormalizedEd2(8, 1, 15, 1, 8, 2, True)),
            (Ed2Witness(73, 27, 9, 45, 44, 224, 15), NormalizedEd2(9, 1, 5, 3, 3, 2, True)),
            (Ed2Witness(11, 1, 1, 3, 4, 14, 3), NormalizedEd2(1, 1, 3, 1, 1, 4, True)),
        ],
    )
    def test_examples(self, witness, expected):
        assert ed2_normalize(witness) == expected

    def test_canonical_on_all_published_consistent_rows(self):
        rows = [
            (73, 64, 8, 120, 15), (73, 27, 9, 45, 15), (73, 20, 10, 30, 15),
            (73, 16, 12, 20, 15), (97, 1, 2, 11, 22), (31, 1, 1, 8, 8),
            (31, 4, 2, 14, 7), (41, 3, 3, 9, 9), (2521, 25, 110, 115, 506),
            (2521, 39, 39, 507, 507), (2521, 3, 6, 261, 522),
            (2521, 27, 18, 765, 510),
            (3511, 1, 1, 878, 878), (3511, 1, 3, 251, 753), (3511, 1, 4, 185, 740),
            (3511, 1, 9, 80, 720), (3511, 1, 17, 42, 714), (3511, 1, 23, 31, 713),
        ]
        for P, delta, b, c, A in rows:
            w = Ed2Witness(P, delta, b, c, 5 * b - 1, 5 * c - 1, A)
            assert ed2_normalize(w).canonical, (P, delta, b, c)


class TestBacktest:
    def test_published_row_passes(self):
        n = ed2_normalize(Ed2Witness(73, 64, 8, 120, 39, 599, 15))
        assert ed2_backtest(n, 73)

    def test_tampered_c_fails(self):
        n = ed2_normalize(Ed2Witness(73, 64, 8, 121, 39, 604, 15))
        assert not ed2_backtest(n, 73)  # 64 does not divide 8*121

    def test_forced_a_fails(self):
        n = ed2_normalize(Ed2Witness(73, 64, 8, 120, 39, 599, 44))
        assert not ed2_backtest(n, 73)

    def test_out_of_bounds_a_fails(self):
        # m chosen so that A = (m+P)/5 >= 3P/5
        n = NormalizedEd2(1, 1, 44, 44, 1, 147, False)
        assert not ed2_backtest(n, 73)

    def test_agrees_with_canonical_flag_on_search_output(self):
        # for kernel-valid witnesses the linear-system back-test holds
        # exactly when the normalization is canonical
        for P in (11, 31, 73, 97, 2521):
            for w in ed2_search(P, 64):
                n = ed2_normalize(w)
                assert ed2_backtest(n, P) == n.canonical

    def test_non_canonical_witness_exists(self):
        # canonicity is not universal: here g = 8 but alpha*dprime = 4
        w = Ed2Witness(97, 16, 8, 40, 39, 199, 20)
        assert w in ed2_search(97, 16)
        n = ed2_normalize(w)
        assert not n.canonical
        assert not ed2_backtest(n, 97)
        assert ed2_reconstruct(w).triple() == (20, 776, 3880)


def test_witness_row_wire_form():
    row = ed2_witness_row(Ed2Witness(73, 64, 8, 120, 39, 599, 15))
    assert row == {
        "P": 73, "delta": 64, "b": 8, "c": 120, "r": 39, "s": 599, "A": 15,
        "g": 8, "bprime": 1, "cprime": 15, "alpha": 1, "dprime": 8, "m": 2,
        "canonical": True,
    }
    assert json.loads(json.dumps(row)) == row


def test_completeness_against_oracle_small(oracle, primes_up_to):
    # round-trip: engine output equals the two-multiple oracle partition
    for P in primes_up_to(200, residue_mod5=1):
        expected = set()
        delta_needed = 1
        for sol in oracle(P).solutions:
            if sol.cls is SolutionClass.ED2:
                b, c = sol.B // P, sol.C // P
                delta = b * c // sol.A
                delta_needed = max(delta_needed, delta)
                expected.add(sol.triple())
        got = {ed2_reconstruct(w).triple() for w in ed2_search(P, delta_needed)}
        assert got == expected, P
