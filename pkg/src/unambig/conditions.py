"""Structural conditions that certify fixed points or unambiguity cheaply.

Each check here is a sound shortcut for a question the solver could settle by
exhaustive search: a neighbourhood shape that forces a pattern to be a fixed
point, a pair condition that forces the pair-merging morphism to be
unambiguous, and a filter that rules a pair out because its image word is
itself a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, DomainError
from .morphisms import erase_variable, merge_morphism
from .solver import DEFAULT_BUDGET, BudgetExhausted, FixedPoint, is_fixed_point
from .words import BOUNDARY, Pattern, factor_multiplicity, neighbourhoods, word_to_pattern


def fixed_point_by_neighbourhoods(pattern: Pattern) -> tuple[int, int] | None:
    """A variable certifying fixed-point-ness by its neighbourhoods, if any.

    Returns ``(i, 1)`` for the least i whose every left neighbour k satisfies
    R_k = {i} with the boundary absent from L_i, else ``(i, 2)`` for the least
    i satisfying the mirrored condition, else None.  Presence implies the
    pattern is a fixed point of a nontrivial morphism; absence proves nothing.
    """
    nbh = neighbourhoods(pattern)
    ordered = sorted(pattern.variables)
    for i in ordered:
        left = nbh.left[i]
        if BOUNDARY not in left and all(nbh.right[k] == {i} for k in left):
            return (i, 1)
    for i in ordered:
        right = nbh.right[i]
        if BOUNDARY not in right and all(nbh.left[k] == {i} for k in right):
            return (i, 2)
    return None


@dataclass(frozen=True)
class PairConditionReport:
    """Outcome of the pair condition for an ordered variable pair (i, j).

    ``passes`` is true iff all variables share one multiplicity m >= 2, no
    variable sees both i and j on the same side, and the pattern does not
    contain disjoint occurrences of the factors i j and j i (in either
    order).  All three clauses are symmetric in i and j.
    """

    uniform_multiplicity: int | None
    covered_by_left: int | None
    covered_by_right: int | None
    has_ij_then_ji: bool
    passes: bool


def _ij_then_ji(symbols: tuple[int, ...], i: int, j: int) -> bool:
    # Disjoint occurrences only; overlapping ones like i j i share the middle
    # symbol and do not count.  Erasing j and doubling i (or vice versa)
    # re-parses the merged image exactly when both orientations occur apart,
    # so the test must be blind to which orientation comes first.
    ij = [p for p in range(len(symbols) - 1) if symbols[p] == i and symbols[p + 1] == j]
    ji = [p for p in range(len(symbols) - 1) if symbols[p] == j and symbols[p + 1] == i]
    if not ij or not ji:
        return False
    return ji[-1] >= ij[0] + 2 or ij[-1] >= ji[0] + 2


def pair_condition(pattern: Pattern, i: int, j: int) -> PairConditionReport:
    if i not in pattern.variables or j not in pattern.variables:
        raise DomainError(f"variables {i}, {j} must both occur in the pattern")
    if i == j:
        raise DomainError("the pair must consist of two distinct variables")
    counts = set(pattern.multiplicities.values())
    uniform = counts.pop() if len(counts) == 1 else None
    nbh = neighbourhoods(pattern)
    pair = {i, j}
    covered_left = next((k for k in sorted(pattern.variables) if pair <= nbh.left[k]), None)
    covered_right = next((k for k in sorted(pattern.variables) if pair <= nbh.right[k]), None)
    ordered = _ij_then_ji(pattern.symbols, i, j)
    passes = (
        uniform is not None
        and uniform >= 2
        and covered_left is None
        and covered_right is None
        and not ordered
    )
    return PairConditionReport(
        uniform_multiplicity=uniform,
        covered_by_left=covered_left,
        covered_by_right=covered_right,
        has_ij_then_ji=ordered,
        passes=passes,
    )


def candidate_pairs(pattern: Pattern) -> list[tuple[int, int]]:
    """All pairs (i, j) with i < j passing the pair condition, lexicographically.

    The condition is symmetric, so the i < j representatives lose nothing.
    """
    counts = set(pattern.multiplicities.values())
    uniform = counts.pop() if len(counts) == 1 else None
    if uniform is None or uniform < 2:
        return []
    nbh = neighbourhoods(pattern)
    ordered = sorted(pattern.variables)
    sides = list(nbh.left.values()) + list(nbh.right.values())
    out = []
    for a in range(len(ordered)):
        for b in range(a + 1, len(ordered)):
            i, j = ordered[a], ordered[b]
            pair = {i, j}
            if any(pair <= side for side in sides):
                continue
            if _ij_then_ji(pattern.symbols, i, j):
                continue
            out.append((i, j))
    return out


def image_is_fixed_point(pattern: Pattern, i: int, j: int, *, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the pair-merged image word, read as a pattern, is a fixed point.

    A true result means the pair-merging morphism for (i, j) is certainly
    ambiguous, so searches can skip it without running the solver.
    """
    word = merge_morphism(pattern.variables, i, j).apply(pattern)
    verdict = is_fixed_point(word_to_pattern(word), budget=budget)
    if isinstance(verdict, BudgetExhausted):
        raise BudgetError(f"fixed-point check of the merged image exceeded {budget} nodes")
    return isinstance(verdict, FixedPoint)


def has_unique_2_factors(word: str) -> bool:
    """True iff every length-2 factor of the word occurs exactly once."""
    if len(word) < 2:
        raise DomainError("the word must have length at least 2")
    return all(count == 1 for count in factor_multiplicity(word, 2).values())


@dataclass(frozen=True)
class BillaudReport:
    """Fixed-point statuses of a pattern and its single-variable deletions.

    The conjecture under test: if deleting any one variable always leaves a
    fixed point, the pattern itself is one.  ``conjecture_instance_ok`` is
    false exactly on counterexamples.
    """

    delta_fixed_point: dict[int, bool]
    hypothesis_holds: bool
    alpha_is_fixed_point: bool
    conjecture_instance_ok: bool


def billaud_instance(pattern: Pattern, *, budget: int = DEFAULT_BUDGET) -> BillaudReport:
    if len(pattern.variables) < 3:
        raise DomainError("the conjecture instance needs at least 3 distinct variables")
    delta_status: dict[int, bool] = {}
    for var in sorted(pattern.variables):
        verdict = is_fixed_point(erase_variable(pattern, var), budget=budget)
        if isinstance(verdict, BudgetExhausted):
            raise BudgetError(f"fixed-point check after deleting {var} exceeded {budget} nodes")
        delta_status[var] = isinstance(verdict, FixedPoint)
    own = is_fixed_point(pattern, budget=budget)
    if isinstance(own, BudgetExhausted):
        raise BudgetError(f"fixed-point check of the pattern exceeded {budget} nodes")
    alpha_fp = isinstance(own, FixedPoint)
    hypothesis = all(delta_status.values())
    return BillaudReport(
        delta_fixed_point=delta_status,
        hypothesis_holds=hypothesis,
        alpha_is_fixed_point=alpha_fp,
        conjecture_instance_ok=(not hypothesis) or alpha_fp,
    )
