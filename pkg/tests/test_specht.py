from math import comb

import pytest

from spechtstat import (
    ColumnOperator,
    DomainError,
    Tableau,
    act,
    decompose,
    dimension,
    enumerate_subsets,
    indicator,
    inner_product,
    lift_to_hoeffding,
    polytabloid,
    project,
    rank_of_span,
    specht_basis,
    standard_tableaux,
)
from spechtstat.verify import Lcg64


class TestPolytabloid:
    def test_four_term_expansion_shape_4_2(self):
        t = Tableau((1, 2, 3, 4), (5, 6))
        expected = (
            indicator(6, (5, 6))
            - indicator(6, (1, 6))
            - indicator(6, (2, 5))
            + indicator(6, (1, 2))
        )
        assert polytabloid(t) == expected

    def test_single_column(self):
        t = Tableau((1,), (2,))
        assert polytabloid(t) == indicator(2, (2,)) - indicator(2, (1,))

    def test_term_count_before_cancellation(self):
        # disjoint swaps produce 2^m distinct signed indicators
        t = Tableau((1, 2, 3), (4, 5, 6))
        values = [v for v in polytabloid(t).values if v != 0]
        assert len(values) == 8
        assert sorted(values) == [-1, -1, -1, -1, 1, 1, 1, 1]

    def test_equivariance_random_n5(self):
        gen = Lcg64(99)
        for _ in range(10):
            arrangement = gen.shuffle(list(range(1, 6)))
            t = Tableau(tuple(arrangement[:3]), tuple(arrangement[3:]))
            x = gen.permutation(5)
            assert polytabloid(t.apply(x)) == act(x, polytabloid(t))

    def test_mean_zero(self):
        for t in standard_tableaux(6, 2):
            assert polytabloid(t).mean() == 0


class TestColumnOperator:
    def test_of_tableau_pairs(self):
        t = Tableau((2, 1, 3), (5, 4))
        op = ColumnOperator.of_tableau(t)
        assert op.pairs == ((2, 5), (1, 4))

    def test_overlapping_pairs_rejected(self):
        with pytest.raises(DomainError):
            ColumnOperator(((1, 2), (2, 3)))

    def test_apply_matches_signed_expansion(self):
        op = ColumnOperator(((1, 4), (2, 5)))
        base = indicator(6, (4, 5))
        out = op.apply(base)
        expected = (
            indicator(6, (4, 5))
            - indicator(6, (1, 5))
            - indicator(6, (4, 2))
            + indicator(6, (1, 2))
        )
        assert out == expected


class TestSpechtBasis:
    def test_order_one_differences(self):
        basis = specht_basis(5, 1)
        assert len(basis) == 4
        for v in basis:
            nonzero = sorted(x for x in v.values if x != 0)
            assert nonzero == [-1, 1]

    def test_rank_6_2(self):
        assert rank_of_span(specht_basis(6, 2)) == 9

    def test_rank_4_2(self):
        assert rank_of_span(specht_basis(4, 2)) == 2

    def test_rank_equals_dimension_up_to_n10(self):
        for n in range(2, 11):
            for l in range(1, n // 2 + 1):
                basis = specht_basis(n, l)
                assert len(basis) == comb(n, l) - comb(n, l - 1)
                assert rank_of_span(basis) == dimension(n, l)

    def test_shape_out_of_range(self):
        with pytest.raises(DomainError):
            specht_basis(5, 3)


class TestLiftToHoeffding:
    def test_same_order_identity(self):
        v = specht_basis(6, 3)[0]
        assert lift_to_hoeffding(v, 3) == v

    def test_lifted_basis_lands_in_single_order(self):
        for v in specht_basis(6, 2):
            lifted = lift_to_hoeffding(v, 3)
            assert lifted.mean() == 0
            assert project(lifted, 2) == lifted
            assert project(lifted, 1).is_zero()
            assert project(lifted, 3).is_zero()

    def test_lift_injective_on_basis(self):
        for l in (1, 2):
            lifted = [lift_to_hoeffding(v, 3) for v in specht_basis(6, l)]
            assert rank_of_span(lifted) == dimension(6, l)

    def test_lift_equivariance(self):
        gen = Lcg64(7)
        v = specht_basis(5, 1)[2]
        for _ in range(6):
            x = gen.permutation(5)
            assert lift_to_hoeffding(act(x, v), 2) == act(x, lift_to_hoeffding(v, 2))

    def test_order_too_large(self):
        with pytest.raises(DomainError):
            lift_to_hoeffding(specht_basis(6, 3)[0], 2)


class TestSpanIdentity:
    @pytest.mark.parametrize("n,m", [(5, 2), (6, 3)])
    def test_lifted_specht_equals_projection_image(self, n, m):
        comps = [decompose(indicator(n, K)).components for K in enumerate_subsets(n, m)]
        for l in range(1, m + 1):
            lifted = [lift_to_hoeffding(v, m) for v in specht_basis(n, l)]
            image = [c[l] for c in comps]
            want = dimension(n, l)
            assert rank_of_span(lifted) == want
            assert rank_of_span(image) == want
            assert rank_of_span(lifted + image) == want

    def test_lifted_spans_are_mutually_orthogonal(self):
        for i in (1, 2):
            for j in (1, 2):
                if i == j:
                    continue
                for u in specht_basis(6, i):
                    for v in specht_basis(6, j):
                        assert inner_product(
                            lift_to_hoeffding(u, 3), lift_to_hoeffding(v, 3)
                        ) == 0
