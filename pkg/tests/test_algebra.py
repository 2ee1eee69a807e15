from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import perm_average_inner_product, rank_reversed_pivots
from spechtstat import (
    DomainError,
    GramMatrix,
    ModuleVector,
    Permutation,
    act,
    enumerate_permutations,
    enumerate_subsets,
    indicator,
    inner_product,
    random_module_vector,
    rank_of_span,
)


@st.composite
def module_vectors(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    l = draw(st.integers(1, n // 2))
    k = comb(n, l)
    nums = draw(st.lists(st.integers(-9, 9), min_size=k, max_size=k))
    dens = draw(st.lists(st.integers(1, 9), min_size=k, max_size=k))
    return ModuleVector(n, l, [Fraction(a, b) for a, b in zip(nums, dens)])


class TestModuleVector:
    def test_indicator_single_unit_entry(self):
        f = indicator(4, (1, 2))
        assert f[(1, 2)] == 1
        assert sum(1 for v in f.values if v != 0) == 1

    def test_indicators_sum_to_ones(self):
        total = ModuleVector.zero(4, 2)
        for s in enumerate_subsets(4, 2):
            total = total + indicator(4, s)
        assert total == ModuleVector.constant(4, 2, 1)

    def test_from_mapping_sparse(self):
        f = ModuleVector.from_mapping(4, 2, {(1, 3): Fraction(-7, 3)})
        assert f[(1, 3)] == Fraction(-7, 3)
        assert f[(1, 2)] == 0

    def test_getitem_unsorted_key(self):
        f = indicator(5, (2, 5))
        assert f[(5, 2)] == 1

    def test_getitem_bad_key(self):
        f = indicator(5, (2, 5))
        with pytest.raises(DomainError):
            f[(1, 2, 3)]

    def test_wrong_value_count(self):
        with pytest.raises(DomainError):
            ModuleVector(4, 2, [1, 2, 3])

    def test_shape_mismatch_add(self):
        with pytest.raises(DomainError):
            indicator(4, (1, 2)) + indicator(5, (1, 2))

    def test_add_scale_zero(self):
        f = random_module_vector(5, 2, 11)
        assert (f + (-1) * f).is_zero()
        assert (0 * f).is_zero()
        assert (f - f).is_zero()
        assert 2 * f == f + f

    def test_mean(self):
        f = indicator(4, (1, 2))
        assert f.mean() == Fraction(1, 6)


class TestAct:
    def test_identity(self):
        f = random_module_vector(5, 2, 3)
        assert act(Permutation.identity(5), f) == f

    def test_indicator_transport(self):
        # the swap 1 <-> 5 carries the {5,6} indicator to the {1,6} indicator
        x = Permutation.from_cycles(6, (1, 5))
        assert act(x, indicator(6, (5, 6))) == indicator(6, (1, 6))

    def test_action_law_random(self):
        f = random_module_vector(5, 2, 9)
        perms = list(enumerate_permutations(5))
        for x, y in zip(perms[::7], perms[::11]):
            assert act(x, act(y, f)) == act(x * y, f)

    def test_linearity(self):
        f = random_module_vector(5, 2, 1)
        g = random_module_vector(5, 2, 2)
        x = Permutation.from_cycles(5, (1, 2, 3), (4, 5))
        assert act(x, f + g) == act(x, f) + act(x, g)

    def test_degree_mismatch(self):
        with pytest.raises(DomainError):
            act(Permutation.identity(4), indicator(5, (1, 2)))


class TestInnerProduct:
    def test_indicator_overlap(self):
        a = indicator(5, (1, 2))
        b = indicator(5, (1, 3))
        assert inner_product(a, a) == Fraction(1, 10)
        assert inner_product(a, b) == 0

    def test_ones_normalized(self):
        ones = ModuleVector.constant(6, 2, 1)
        assert inner_product(ones, ones) == 1

    def test_equals_permutation_average(self):
        f = random_module_vector(5, 2, 21)
        g = random_module_vector(5, 2, 22)
        assert inner_product(f, g) == perm_average_inner_product(f, g)

    def test_invariance_exhaustive_n5(self):
        f = random_module_vector(5, 2, 31)
        g = random_module_vector(5, 2, 32)
        expected = inner_product(f, g)
        for x in enumerate_permutations(5):
            assert inner_product(act(x, f), act(x, g)) == expected

    def test_invariance_sampled_n8(self):
        f = random_module_vector(8, 3, 41)
        g = random_module_vector(8, 3, 42)
        expected = inner_product(f, g)
        xs = [
            Permutation.from_cycles(8, (1, 2)),
            Permutation.from_cycles(8, (1, 2, 3, 4, 5, 6, 7, 8)),
            Permutation.from_cycles(8, (1, 3, 5), (2, 4), (6, 8)),
            Permutation((5, 3, 8, 1, 7, 2, 6, 4)),
        ]
        for x in xs:
            assert inner_product(act(x, f), act(x, g)) == expected

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            inner_product(indicator(5, (1,)), indicator(5, (1, 2)))


class TestRank:
    def test_scalar_multiple(self):
        f = random_module_vector(5, 2, 5)
        assert rank_of_span([f, 2 * f]) == 1

    def test_full_indicator_basis(self):
        vecs = [indicator(4, s) for s in enumerate_subsets(4, 2)]
        assert rank_of_span(vecs) == 6

    def test_empty(self):
        assert rank_of_span([]) == 0

    def test_zero_vector_only(self):
        assert rank_of_span([ModuleVector.zero(4, 2)]) == 0

    def test_agrees_with_reversed_pivot_elimination(self):
        for seed in range(8):
            vecs = [random_module_vector(6, 2, 100 * seed + i) for i in range(seed % 5 + 2)]
            if seed % 3 == 0:
                vecs.append(vecs[0] + vecs[-1])  # force dependence sometimes
            assert rank_of_span(vecs) == rank_reversed_pivots(vecs)

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            rank_of_span([indicator(4, (1, 2)), indicator(5, (1, 2))])


class TestGramMatrix:
    def test_symmetric_with_inner_product_entries(self):
        vecs = [random_module_vector(5, 2, s) for s in (1, 2, 3)]
        g = GramMatrix.of(vecs)
        assert g.size == 3
        for i in range(3):
            for j in range(3):
                assert g.entries[i][j] == g.entries[j][i]
                assert g.entries[i][j] == inner_product(vecs[i], vecs[j])


@given(module_vectors(), st.data())
@settings(max_examples=30, deadline=None)
def test_vector_space_axioms(f, data):
    k = comb(f.n, f.l)
    nums = data.draw(st.lists(st.integers(-9, 9), min_size=k, max_size=k))
    g = ModuleVector(f.n, f.l, nums)
    h = data.draw(st.sampled_from([f, g, f + g]))
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f + ModuleVector.zero(f.n, f.l) == f
    c = Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 5)))
    assert c * (f + g) == c * f + c * g


@given(module_vectors(max_n=5), st.data())
@settings(max_examples=25, deadline=None)
def test_act_is_linear_and_invariant(f, data):
    x = Permutation(data.draw(st.permutations(list(range(1, f.n + 1)))))
    g_vals = data.draw(
        st.lists(st.integers(-4, 4), min_size=len(f.values), max_size=len(f.values))
    )
    g = ModuleVector(f.n, f.l, g_vals)
    assert act(x, f + g) == act(x, f) + act(x, g)
    assert inner_product(act(x, f), act(x, g)) == inner_product(f, g)
