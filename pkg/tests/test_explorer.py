import itertools
import json

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from unambig.errors import BudgetError, DomainError, ResourceError
from unambig.explorer import (
    ScanRecord,
    canonical_colorings,
    conjecture_scan,
    enumerate_canonical_patterns,
    search_1uniform,
    search_sigma_ij,
)
from unambig.generators import squares_pattern
from unambig.morphisms import Morphism
from unambig.solver import FixedPoint, NoWitness, is_ambiguous, is_fixed_point
from unambig.words import Pattern, canonical_form, parse_pattern

from conftest import naive_canonical_patterns

A0 = parse_pattern("1 2 3 1 3 2")
A1 = parse_pattern("1 2 3 4 1 4 3 2")


class TestCanonicalColorings:
    def test_two_items_two_colors(self):
        assert list(canonical_colorings(2, 2)) == [(0, 0), (0, 1)]

    def test_counts_follow_capped_bell_numbers(self):
        # Colorings up to color permutation = set partitions into <= k blocks.
        assert len(list(canonical_colorings(4, 2))) == 8
        assert len(list(canonical_colorings(4, 4))) == 15
        assert len(list(canonical_colorings(5, 3))) == 41

    def test_every_coloring_is_canonical(self):
        for coloring in canonical_colorings(5, 3):
            seen: list[int] = []
            for color in coloring:
                if color not in seen:
                    seen.append(color)
            assert seen == sorted(seen)


class TestSearchSigmaIj:
    def test_eight_symbol_example(self):
        found = search_sigma_ij(A1)
        assert found is not None
        i, j, sigma = found
        assert (i, j) == (1, 2)
        assert isinstance(is_ambiguous(sigma, A1), NoWitness)

    def test_three_variables_have_no_pair(self):
        assert search_sigma_ij(A0) is None

    def test_fixed_points_short_circuit(self):
        assert search_sigma_ij(parse_pattern("1 2 1 2")) is None

    def test_single_variable_rejected(self):
        with pytest.raises(DomainError):
            search_sigma_ij(parse_pattern("1 1 1"))

    def test_budget_surfaces_as_error(self):
        with pytest.raises(BudgetError):
            search_sigma_ij(A1, budget=1)

    @pytest.mark.parametrize("length", range(4, 9))
    def test_results_reverify(self, length):
        for pattern in naive_canonical_patterns(length):
            if len(pattern.variables) < 2:
                continue
            found = search_sigma_ij(pattern)
            if found is not None:
                i, j, sigma = found
                assert isinstance(is_ambiguous(sigma, pattern), NoWitness)
            if isinstance(is_fixed_point(pattern), FixedPoint):
                assert found is None


class TestSearch1Uniform:
    def test_thue_thresholds(self):
        a4 = squares_pattern(4)
        assert search_1uniform(a4, 2) is None
        assert search_1uniform(a4, 3) is not None

    def test_running_example_thresholds(self):
        assert search_1uniform(A0, 2) is None
        sigma = search_1uniform(A0, 3)
        assert sigma is not None
        assert isinstance(is_ambiguous(sigma, A0), NoWitness)

    def test_alphabet_size_validated(self):
        with pytest.raises(DomainError):
            search_1uniform(A0, 0)
        with pytest.raises(DomainError):
            search_1uniform(A0, 27)

    def test_budget_surfaces_as_error(self):
        with pytest.raises(BudgetError):
            search_1uniform(A1, 3, budget=1)

    @pytest.mark.parametrize("length", range(1, 9))
    def test_full_alphabet_succeeds_exactly_off_fixed_points(self, length):
        for pattern in naive_canonical_patterns(length):
            found = search_1uniform(pattern, len(pattern.variables))
            if isinstance(is_fixed_point(pattern), FixedPoint):
                assert found is None
            else:
                assert found is not None

    @pytest.mark.parametrize("length,stride", [(9, 101), (10, 997)])
    def test_full_alphabet_criterion_sampled_longer(self, length, stride):
        # Exhausting every coloring of the many-variable fixed points gets
        # expensive past length 8; a deterministic stride keeps coverage.
        for pos, pattern in enumerate(enumerate_canonical_patterns(length)):
            if pos % stride:
                continue
            found = search_1uniform(pattern, len(pattern.variables))
            assert (found is None) == isinstance(is_fixed_point(pattern), FixedPoint)

    @pytest.mark.parametrize("length", range(1, 7))
    def test_coloring_reduction_is_lossless(self, length):
        # The canonical-coloring sweep must agree with trying every raw
        # assignment of letters to variables.
        for pattern in naive_canonical_patterns(length):
            variables = sorted(pattern.variables)
            for k in range(1, 4):
                reduced = search_1uniform(pattern, k)
                naive_hit = None
                for letters in itertools.product("abc"[:k], repeat=len(variables)):
                    sigma = Morphism.of(dict(zip(variables, letters)))
                    if isinstance(is_ambiguous(sigma, pattern), NoWitness):
                        naive_hit = sigma
                        break
                assert (reduced is None) == (naive_hit is None)
                if reduced is not None:
                    assert isinstance(is_ambiguous(reduced, pattern), NoWitness)

    @pytest.mark.parametrize("length", range(1, 9))
    def test_monotone_in_alphabet_size(self, length):
        for pattern in naive_canonical_patterns(length):
            n = len(pattern.variables)
            hits = [search_1uniform(pattern, k) is not None for k in range(1, n + 1)]
            assert hits == sorted(hits)


class TestEnumerateCanonicalPatterns:
    def test_perfect_matchings_of_four_positions(self):
        assert list(enumerate_canonical_patterns(4, uniform_multiplicity=2)) == [
            parse_pattern("1 1 2 2"),
            parse_pattern("1 2 1 2"),
            parse_pattern("1 2 2 1"),
        ]

    def test_length_two(self):
        assert list(enumerate_canonical_patterns(2)) == [
            parse_pattern("1 1"),
            parse_pattern("1 2"),
        ]

    def test_length_zero(self):
        assert list(enumerate_canonical_patterns(0)) == [Pattern(())]
        assert list(enumerate_canonical_patterns(0, min_vars=1)) == []

    @pytest.mark.parametrize("length", range(0, 8))
    def test_agrees_with_brute_force(self, length):
        assert list(enumerate_canonical_patterns(length)) == naive_canonical_patterns(length)

    def test_emits_canonical_without_duplicates_in_lex_order(self):
        out = list(enumerate_canonical_patterns(7, min_vars=2, min_multiplicity=2))
        assert out == sorted(set(out), key=lambda p: p.symbols)
        assert all(canonical_form(p) == p for p in out)

    def test_constraints(self):
        patterns = list(
            enumerate_canonical_patterns(6, min_vars=2, max_vars=3, uniform_multiplicity=2)
        )
        assert patterns
        for p in patterns:
            assert 2 <= len(p.variables) <= 3
            assert set(p.multiplicities.values()) == {2}
        filtered = [
            p
            for p in naive_canonical_patterns(6)
            if 2 <= len(p.variables) <= 3 and set(p.multiplicities.values()) == {2}
        ]
        assert patterns == filtered

    def test_min_multiplicity(self):
        for p in enumerate_canonical_patterns(6, min_multiplicity=3):
            assert all(count >= 3 for count in p.multiplicities.values())

    def test_pairing_count_at_length_ten(self):
        count = sum(
            1 for _ in enumerate_canonical_patterns(10, min_vars=5, uniform_multiplicity=2)
        )
        assert count == 945

    def test_guard(self):
        with pytest.raises(ResourceError):
            list(enumerate_canonical_patterns(17))


class TestScanRecord:
    def test_json_round_trip(self):
        record = ScanRecord(
            pattern=A1,
            is_fixed_point=False,
            var_count=4,
            best_sigma_ij=(1, 2),
            best_uniform_k=None,
            budget_hit=False,
            finding=False,
        )
        line = record.to_json()
        parsed = json.loads(line)
        assert parsed["pattern"] == "1 2 3 4 1 4 3 2"
        assert parsed["best_sigma_ij"] == [1, 2]
        assert parsed["best_uniform_k"] is None
        assert ScanRecord.from_json(line) == record


class TestConjectureScan:
    def test_theorem7_smallest_length(self):
        records = list(conjecture_scan(8, "theorem7"))
        assert len(records) == 105
        for record in records:
            assert record.var_count == 4
            assert not record.finding
            if record.is_fixed_point:
                assert record.best_sigma_ij is None
            else:
                assert record.best_sigma_ij is not None

    def test_conjecture2_no_findings_small(self):
        records = list(conjecture_scan(8, "conjecture2"))
        assert len(records) == 3651
        assert not any(r.finding for r in records)
        assert not any(r.budget_hit for r in records)
        # Patterns with a variable occurring once are always fixed points.
        for record in records:
            if len(record.pattern) < 2 * record.var_count:
                assert record.is_fixed_point

    def test_conjecture1_records_least_alphabet(self):
        records = list(conjecture_scan(6, "conjecture1"))
        assert len(records) == 93
        for record in records:
            assert record.is_fixed_point
            assert record.best_uniform_k is None

    def test_conjecture3_embeds_billaud_reports(self):
        records = list(conjecture_scan(6, "conjecture3"))
        assert len(records) == 215
        for record in records:
            assert record.billaud is not None
            assert record.billaud.conjecture_instance_ok
            assert not record.finding

    def test_scope_guards(self):
        with pytest.raises(DomainError):
            list(conjecture_scan(8, "conjecture9"))
        with pytest.raises(ResourceError):
            list(conjecture_scan(15, "conjecture2"))
        with pytest.raises(DomainError):
            list(conjecture_scan(8, "conjecture2", workers=0))

    def test_worker_pool_preserves_order(self):
        serial = list(conjecture_scan(8, "theorem7"))
        parallel = list(conjecture_scan(8, "theorem7", workers=2))
        assert serial == parallel

    @settings(max_examples=5, deadline=None)
    @given(st.integers(4, 7))
    def test_records_serialize_losslessly(self, max_len):
        for record in conjecture_scan(max_len, "conjecture2"):
            assert ScanRecord.from_json(record.to_json()) == record
