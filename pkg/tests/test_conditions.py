import pytest
from hypothesis import given

from unambig.conditions import (
    billaud_instance,
    candidate_pairs,
    fixed_point_by_neighbourhoods,
    has_unique_2_factors,
    image_is_fixed_point,
    pair_condition,
)
from unambig.errors import BudgetError, DomainError
from unambig.morphisms import merge_morphism
from unambig.solver import FixedPoint, NoWitness, Witness, is_ambiguous, is_fixed_point
from unambig.words import Pattern, parse_pattern

from conftest import naive_canonical_patterns, pattern_strategy

A0 = parse_pattern("1 2 3 1 3 2")
A1 = parse_pattern("1 2 3 4 1 4 3 2")


class TestNeighbourhoodLemma:
    def test_square_pattern_fires(self):
        assert fixed_point_by_neighbourhoods(parse_pattern("1 2 1 2")) == (2, 1)

    def test_two_symbol_pattern_fires(self):
        assert fixed_point_by_neighbourhoods(parse_pattern("1 2")) == (2, 1)

    def test_non_fixed_point_is_silent(self):
        assert fixed_point_by_neighbourhoods(A0) is None

    def test_empty_pattern_rejected(self):
        with pytest.raises(DomainError):
            fixed_point_by_neighbourhoods(Pattern(()))

    @pytest.mark.parametrize("length", range(1, 9))
    def test_sound_for_every_short_pattern(self, length):
        # Firing must imply fixed-point status; the converse need not hold.
        for pattern in naive_canonical_patterns(length):
            if fixed_point_by_neighbourhoods(pattern) is not None:
                assert isinstance(is_fixed_point(pattern), FixedPoint)


class TestPairCondition:
    def test_passing_pair(self):
        report = pair_condition(A1, 1, 4)
        assert report.passes
        assert report.uniform_multiplicity == 2
        assert report.covered_by_left is None
        assert report.covered_by_right is None
        assert not report.has_ij_then_ji

    def test_adjacent_factors_block(self):
        report = pair_condition(A1, 2, 3)
        assert not report.passes
        assert report.has_ij_then_ji

    def test_covering_variable_blocks(self):
        report = pair_condition(parse_pattern("1 1 2 2"), 1, 2)
        assert not report.passes
        assert report.covered_by_left == 2

    def test_factor_test_ignores_overlaps(self):
        # 4·1·4 puts 4·1 and 1·4 on top of each other; that is not the
        # disjoint factorization the condition is about.
        report = pair_condition(A1, 1, 4)
        assert not report.has_ij_then_ji

    def test_factor_test_is_symmetric(self):
        # Disjoint occurrences in either temporal order block the pair; the
        # merged images re-parse the same way whichever orientation is first.
        alpha = parse_pattern("1 2 3 3 2 1")
        assert pair_condition(alpha, 2, 1).has_ij_then_ji
        assert pair_condition(alpha, 1, 2).has_ij_then_ji
        sigma = merge_morphism(alpha.variables, 2, 1)
        assert isinstance(is_ambiguous(sigma, alpha), Witness)

    def test_nonuniform_multiplicity_blocks(self):
        report = pair_condition(parse_pattern("1 1 2 2 2 3 3"), 1, 2)
        assert report.uniform_multiplicity is None
        assert not report.passes

    def test_preconditions(self):
        with pytest.raises(DomainError):
            pair_condition(A1, 1, 1)
        with pytest.raises(DomainError):
            pair_condition(A1, 1, 9)

    @given(pattern_strategy(min_len=2, max_len=8, max_vars=4))
    def test_order_of_arguments_is_immaterial(self, pattern):
        variables = sorted(pattern.variables)
        if len(variables) < 2:
            return
        i, j = variables[0], variables[1]
        assert pair_condition(pattern, i, j).passes == pair_condition(pattern, j, i).passes


class TestCandidatePairs:
    def test_eight_symbol_example(self):
        assert candidate_pairs(A1) == [(1, 2), (1, 4)]

    def test_pairs_are_ordered_and_pass(self):
        for i, j in candidate_pairs(parse_pattern("1 1 2 3 3 2 4 4")):
            assert i < j
            assert pair_condition(parse_pattern("1 1 2 3 3 2 4 4"), i, j).passes

    def test_empty_pattern_has_no_pairs(self):
        assert candidate_pairs(Pattern(())) == []

    def test_passing_pairs_verify_as_unambiguous(self):
        # The point of the condition: off fixed points, passing pairs give
        # unambiguous merged morphisms.  Exhaustive at length 8, m = 2.
        from unambig.explorer import enumerate_canonical_patterns

        checked = 0
        for pattern in enumerate_canonical_patterns(8, min_vars=4, uniform_multiplicity=2):
            if isinstance(is_fixed_point(pattern), FixedPoint):
                continue
            for i, j in candidate_pairs(pattern):
                sigma = merge_morphism(pattern.variables, i, j)
                assert isinstance(is_ambiguous(sigma, pattern), NoWitness), (pattern, i, j)
                checked += 1
        assert checked > 0


class TestImageFixedPoint:
    def test_detects_fixed_point_image(self):
        # Merging 4 onto 2 lands on abcbabcb, fixed by a -> abcb, b,c -> empty.
        assert image_is_fixed_point(A1, 2, 4)

    def test_rejects_non_fixed_point_image(self):
        assert not image_is_fixed_point(A1, 2, 3)

    def test_filter_is_not_characteristic(self):
        a2 = parse_pattern("1 2 3 3 4 4 1 2 3 3 4 4 2")
        assert not image_is_fixed_point(a2, 2, 4)
        assert isinstance(is_ambiguous(merge_morphism(a2.variables, 2, 4), a2), Witness)

    def test_budget_propagates(self):
        with pytest.raises(BudgetError):
            image_is_fixed_point(A1, 2, 4, budget=1)

    @pytest.mark.parametrize("length", range(2, 9))
    def test_true_implies_ambiguous(self, length):
        for pattern in naive_canonical_patterns(length):
            variables = sorted(pattern.variables)
            for i in variables:
                for j in variables:
                    if i == j:
                        continue
                    if image_is_fixed_point(pattern, i, j):
                        sigma = merge_morphism(pattern.variables, i, j)
                        assert isinstance(is_ambiguous(sigma, pattern), Witness)


class TestUnique2Factors:
    def test_de_bruijn_word(self):
        assert has_unique_2_factors("aabacbbcca")

    def test_repeated_factor(self):
        assert not has_unique_2_factors("abab")

    def test_minimal_word(self):
        assert has_unique_2_factors("ab")

    def test_short_words_rejected(self):
        with pytest.raises(DomainError):
            has_unique_2_factors("a")


class TestBillaudInstance:
    def test_running_example_report(self):
        report = billaud_instance(A0)
        assert report.delta_fixed_point == {1: False, 2: True, 3: True}
        assert not report.hypothesis_holds
        assert not report.alpha_is_fixed_point
        assert report.conjecture_instance_ok

    def test_fixed_point_with_fixed_point_deletions(self):
        square = parse_pattern("1 2 3 1 2 3")
        report = billaud_instance(square)
        assert report.hypothesis_holds
        assert report.alpha_is_fixed_point
        assert report.conjecture_instance_ok

    def test_small_variable_counts_rejected(self):
        with pytest.raises(DomainError):
            billaud_instance(parse_pattern("1 2 1 2"))

    def test_budget_propagates(self):
        with pytest.raises(BudgetError):
            billaud_instance(parse_pattern("1 2 3 1 2 3"), budget=1)

    @pytest.mark.parametrize("length", range(3, 9))
    def test_no_counterexamples_among_short_patterns(self, length):
        for pattern in naive_canonical_patterns(length):
            if len(pattern.variables) < 3:
                continue
            assert billaud_instance(pattern).conjecture_instance_ok, pattern
