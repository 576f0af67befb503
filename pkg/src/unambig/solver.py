"""Exhaustive search for alternative preimages of a word under a pattern.

A morphism sigma is ambiguous with respect to a pattern alpha iff some
morphism tau agrees with sigma on alpha's image but not on alpha's variables;
deciding that is a bounded search over all factorizations of the image word.
The same search, run on a pattern read as a word over its own variables and
excluding the identity, decides whether the pattern is a fixed point of a
nontrivial morphism.

The search is deterministic: variables are assigned in order of first
occurrence, candidate image lengths ascend from 0 (or 1 when erasing images
are disallowed), and pruning never changes the order in which solutions
appear.  One node is one candidate image tried for an unassigned variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import DomainError
from .morphisms import Morphism, Substitution
from .words import Pattern, canonical_form, validate_word

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Witness:
    """An alternative morphism mapping the pattern onto the word."""

    tau: Morphism
    differing_variable: int | None
    nodes_explored: int


@dataclass(frozen=True)
class NoWitness:
    """The search space was exhausted without finding an alternative."""

    nodes_explored: int


@dataclass(frozen=True)
class BudgetExhausted:
    """The node budget ran out before the search reached a verdict."""

    nodes_explored: int


@dataclass(frozen=True)
class FixedPoint:
    """A nontrivial substitution phi with phi(pattern) = pattern."""

    phi: Substitution
    differing_variable: int
    nodes_explored: int


@dataclass(frozen=True)
class NotFixedPoint:
    nodes_explored: int


class _BudgetHit(Exception):
    pass


def _make_ticker(counter: list[int], budget: int | None) -> Callable[[], None]:
    if budget is None:

        def tick() -> None:
            counter[0] += 1

    else:

        def tick() -> None:
            if counter[0] >= budget:
                raise _BudgetHit
            counter[0] += 1

    return tick


def _validate_budget(budget: int) -> None:
    if not isinstance(budget, int) or budget < 1:
        raise DomainError(f"budget must be a positive node count, got {budget!r}")


def _iter_assignments(
    symbols: tuple[int, ...], word: Sequence, min_len: int, tick: Callable[[], None]
) -> Iterator[dict]:
    """Yield every variable assignment whose pointwise image equals ``word``.

    ``word`` may be a str or a tuple; images are slices of it.  Candidates are
    pruned by remaining-length feasibility: the unassigned occurrences in the
    suffix must be able to stretch (or shrink) to exactly the remaining word.
    """
    n = len(symbols)
    total = len(word)
    order: list[int] = []
    index: dict[int, int] = {}
    for s in symbols:
        if s not in index:
            index[s] = len(order)
            order.append(s)
    idx = [index[s] for s in symbols]
    # suffix[p][x]: occurrences of variable slot x within symbols[p:]
    suffix = [[0] * len(order) for _ in range(n + 1)]
    for p in range(n - 1, -1, -1):
        row = suffix[p + 1][:]
        row[idx[p]] += 1
        suffix[p] = row
    images: list = [None] * len(order)

    def rec(p: int, q: int, pending: int, free: int) -> Iterator[dict]:
        # pending: minimal total image length of symbols[p:] under the current
        # assignment; free: occurrences in symbols[p:] of unassigned variables
        if q + pending > total:
            return
        if p == n:
            if q == total:
                yield {order[x]: images[x] for x in range(len(order))}
            return
        if free == 0 and q + pending != total:
            return
        x = idx[p]
        img = images[x]
        if img is not None:
            ln = len(img)
            if word[q : q + ln] == img:
                yield from rec(p + 1, q + ln, pending - ln, free)
            return
        occ = suffix[p][x]
        rest_min = pending - occ * min_len
        hi = (total - q - rest_min) // occ
        for ln in range(min_len, hi + 1):
            tick()
            images[x] = word[q : q + ln]
            yield from rec(p + 1, q + ln, rest_min + (occ - 1) * ln, free - occ)
            images[x] = None

    yield from rec(0, 0, min_len * n, n)


def find_alternative(
    pattern: Pattern,
    word: str,
    excluded: Morphism | None = None,
    *,
    allow_erasing: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> Witness | NoWitness | BudgetExhausted:
    """Search for a morphism tau with tau(pattern) = word, differing from
    ``excluded`` on at least one of the pattern's variables.

    With no excluded morphism, any preimage counts and the witness carries no
    differing variable.  Identical queries return identical results, witness
    and node count included.
    """
    if not pattern:
        raise DomainError("the pattern must be non-empty")
    validate_word(word)
    _validate_budget(budget)
    if excluded is not None:
        missing = pattern.variables - excluded.domain
        if missing:
            raise DomainError(f"excluded morphism does not cover variables {sorted(missing)}")
        if excluded.apply(pattern) != word:
            raise DomainError("excluded morphism does not map the pattern onto the word")
    counter = [0]
    tick = _make_ticker(counter, budget)
    min_len = 0 if allow_erasing else 1
    try:
        for assignment in _iter_assignments(pattern.symbols, word, min_len, tick):
            differing = None
            if excluded is not None:
                for var in sorted(assignment):
                    if assignment[var] != excluded[var]:
                        differing = var
                        break
                if differing is None:
                    continue
            return Witness(
                tau=Morphism.of(assignment),
                differing_variable=differing,
                nodes_explored=counter[0],
            )
    except _BudgetHit:
        return BudgetExhausted(nodes_explored=counter[0])
    return NoWitness(nodes_explored=counter[0])


def is_ambiguous(
    sigma: Morphism,
    pattern: Pattern,
    *,
    allow_erasing: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> Witness | NoWitness | BudgetExhausted:
    """Decide ambiguity of sigma with respect to the pattern.

    A Witness result means ambiguous; NoWitness means unambiguous (weakly so
    when erasing alternatives are disallowed).
    """
    if not pattern:
        raise DomainError("the pattern must be non-empty")
    missing = pattern.variables - sigma.domain
    if missing:
        raise DomainError(f"morphism does not cover variables {sorted(missing)}")
    return find_alternative(
        pattern, sigma.apply(pattern), excluded=sigma, allow_erasing=allow_erasing, budget=budget
    )


def enumerate_preimages(
    pattern: Pattern, word: str, limit: int | None = None, *, allow_erasing: bool = True
) -> list[Morphism]:
    """All morphisms mapping the pattern onto the word, in search order."""
    if not pattern:
        raise DomainError("the pattern must be non-empty")
    validate_word(word)
    if limit is not None and limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit!r}")
    counter = [0]
    tick = _make_ticker(counter, None)
    min_len = 0 if allow_erasing else 1
    out: list[Morphism] = []
    for assignment in _iter_assignments(pattern.symbols, word, min_len, tick):
        out.append(Morphism.of(assignment))
        if limit is not None and len(out) >= limit:
            break
    return out


# Fixed-point verdicts are memoized by canonical form: scans ask about the
# same short patterns (deleted-variable images in particular) over and over.
_FP_CACHE: dict[tuple[int, ...], tuple[tuple | None, int]] = {}
_FP_CACHE_LIMIT = 1 << 20


def _first_occurrence_order(pattern: Pattern) -> list[int]:
    seen: set[int] = set()
    out: list[int] = []
    for s in pattern.symbols:
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def _fp_result(
    pattern: Pattern, phi_items: tuple | None, nodes: int
) -> FixedPoint | NotFixedPoint:
    if phi_items is None:
        return NotFixedPoint(nodes_explored=nodes)
    orig = _first_occurrence_order(pattern)
    mapping = {
        orig[var - 1]: Pattern(tuple(orig[s - 1] for s in image)) for var, image in phi_items
    }
    differing = min(var for var, image in mapping.items() if image.symbols != (var,))
    return FixedPoint(
        phi=Substitution.of(mapping), differing_variable=differing, nodes_explored=nodes
    )


def is_fixed_point(
    pattern: Pattern, *, budget: int = DEFAULT_BUDGET
) -> FixedPoint | NotFixedPoint | BudgetExhausted:
    """Decide whether the pattern is the fixed point of a nontrivial morphism.

    Runs the preimage search on the pattern read as a word over its own
    variables, excluding the identity substitution.
    """
    if not pattern:
        raise DomainError("the pattern must be non-empty")
    _validate_budget(budget)
    key = canonical_form(pattern).symbols
    cached = _FP_CACHE.get(key)
    if cached is not None and cached[1] <= budget:
        return _fp_result(pattern, cached[0], cached[1])
    counter = [0]
    tick = _make_ticker(counter, budget)
    found: tuple | None = None
    try:
        for assignment in _iter_assignments(key, key, 0, tick):
            if all(image == (var,) for var, image in assignment.items()):
                continue
            found = tuple(sorted(assignment.items()))
            break
    except _BudgetHit:
        return BudgetExhausted(nodes_explored=counter[0])
    entry = (found, counter[0])
    if len(_FP_CACHE) < _FP_CACHE_LIMIT:
        _FP_CACHE[key] = entry
    return _fp_result(pattern, entry[0], entry[1])
