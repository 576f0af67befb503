"""Pattern-space searches: per-pattern morphism hunts and bulk scans.

The per-pattern searches look for an unambiguous 1-uniform morphism, either
among the pair-merging morphisms or among all letter assignments up to
symmetry.  The bulk scans sweep every canonical pattern up to a length bound
and emit one JSON-serializable record per pattern; they are the desk-scale
evidence gatherers for the open conjectures, and they abort loudly if a
result ever contradicts a proven statement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import partial
from multiprocessing import Pool
from typing import Iterator

from .conditions import BillaudReport, billaud_instance, image_is_fixed_point, pair_condition
from .errors import BudgetError, DomainError, InconsistencyError, ResourceError
from .morphisms import Morphism, merge_morphism
from .solver import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    FixedPoint,
    NoWitness,
    is_ambiguous,
    is_fixed_point,
)
from .words import ALPHABET, Pattern, parse_pattern

MAX_ENUMERATION_LENGTH = 16
MAX_SCAN_LENGTH = 14

SCAN_TARGETS = ("conjecture1", "conjecture2", "conjecture3", "theorem7")


def search_sigma_ij(
    pattern: Pattern, *, budget: int = DEFAULT_BUDGET
) -> tuple[int, int, Morphism] | None:
    """The first ordered pair (i, j) whose pair-merging morphism is
    unambiguous with respect to the pattern, or None.

    Fixed points are rejected outright (every nonerasing morphism is
    ambiguous there).  Pairs iterate lexicographically; each is first run
    through the merged-image fixed-point filter (certainly ambiguous), then
    fast-accepted when the pair condition certifies unambiguity, and only
    otherwise decided by the solver.  A solver verdict is reused for the
    mirrored pair, whose merged image is the same word up to renaming.
    """
    variables = sorted(pattern.variables)
    if len(variables) < 2:
        raise DomainError("the pattern needs at least 2 distinct variables")
    own = is_fixed_point(pattern, budget=budget)
    if isinstance(own, BudgetExhausted):
        raise BudgetError(f"fixed-point check of the pattern exceeded {budget} nodes")
    if isinstance(own, FixedPoint):
        return None
    settled: set[tuple[int, int]] = set()
    for i in variables:
        for j in variables:
            if i == j or (j, i) in settled:
                continue
            if image_is_fixed_point(pattern, i, j, budget=budget):
                settled.add((i, j))
                continue
            sigma = merge_morphism(variables, i, j)
            if pair_condition(pattern, i, j).passes:
                return (i, j, sigma)
            verdict = is_ambiguous(sigma, pattern, budget=budget)
            if isinstance(verdict, BudgetExhausted):
                raise BudgetError(f"solver run for the pair ({i}, {j}) exceeded {budget} nodes")
            if isinstance(verdict, NoWitness):
                return (i, j, sigma)
            settled.add((i, j))
    return None


def canonical_colorings(items: int, colors: int) -> Iterator[tuple[int, ...]]:
    """Assignments of ``items`` slots to at most ``colors`` colors, one per
    symmetry class: each new color first appears in increasing order."""
    if items == 0:
        yield ()
        return

    def rec(prefix: list[int], used: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == items:
            yield tuple(prefix)
            return
        for c in range(min(used + 1, colors)):
            prefix.append(c)
            yield from rec(prefix, max(used, c + 1))
            prefix.pop()

    yield from rec([], 0)


def search_1uniform(
    pattern: Pattern, alphabet_size: int, *, budget: int = DEFAULT_BUDGET
) -> Morphism | None:
    """The first 1-uniform morphism over at most ``alphabet_size`` letters
    that is unambiguous with respect to the pattern, or None.

    Colorings of the variables (ordered by first occurrence) are enumerated
    up to letter-renaming symmetry, which is lossless: ambiguity depends only
    on the image word, which a renaming does not change in substance.
    """
    if not pattern:
        raise DomainError("the pattern must be non-empty")
    if not 1 <= alphabet_size <= len(ALPHABET):
        raise DomainError(f"alphabet size must be between 1 and {len(ALPHABET)}, got {alphabet_size}")
    ordered: list[int] = []
    seen: set[int] = set()
    for s in pattern.symbols:
        if s not in seen:
            seen.add(s)
            ordered.append(s)
    for coloring in canonical_colorings(len(ordered), alphabet_size):
        sigma = Morphism.of({var: ALPHABET[c] for var, c in zip(ordered, coloring)})
        verdict = is_ambiguous(sigma, pattern, budget=budget)
        if isinstance(verdict, BudgetExhausted):
            raise BudgetError(f"solver run for coloring {coloring} exceeded {budget} nodes")
        if isinstance(verdict, NoWitness):
            return sigma
    return None


def enumerate_canonical_patterns(
    length: int,
    *,
    min_vars: int | None = None,
    max_vars: int | None = None,
    uniform_multiplicity: int | None = None,
    min_multiplicity: int | None = None,
) -> Iterator[Pattern]:
    """All canonical patterns of the given length, lexicographically.

    Canonical means variables are numbered 1, 2, 3, ... by first occurrence,
    so the stream contains exactly one representative per renaming class.
    """
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    if length > MAX_ENUMERATION_LENGTH:
        raise ResourceError(
            f"pattern enumeration supports length <= {MAX_ENUMERATION_LENGTH}, got {length}"
        )
    for bound, name in ((min_vars, "min_vars"), (max_vars, "max_vars")):
        if bound is not None and bound < 1:
            raise DomainError(f"{name} must be >= 1, got {bound}")
    if uniform_multiplicity is not None and uniform_multiplicity < 1:
        raise DomainError(f"uniform_multiplicity must be >= 1, got {uniform_multiplicity}")
    if min_multiplicity is not None and min_multiplicity < 1:
        raise DomainError(f"min_multiplicity must be >= 1, got {min_multiplicity}")
    if length == 0:
        if not min_vars:
            yield Pattern(())
        return
    floor = uniform_multiplicity or min_multiplicity or 1
    cap = uniform_multiplicity
    counts: list[int] = []
    prefix: list[int] = []

    def rec(pos: int) -> Iterator[Pattern]:
        if pos == length:
            if min_vars is not None and len(counts) < min_vars:
                return
            if cap is not None and any(c != cap for c in counts):
                return
            if cap is None and min_multiplicity is not None:
                if any(c < min_multiplicity for c in counts):
                    return
            yield Pattern(tuple(prefix))
            return
        remaining = length - pos
        # every open variable still needs to reach the multiplicity floor
        need = sum(floor - c for c in counts if c < floor)
        if need > remaining:
            return
        limit = len(counts) + 1
        if max_vars is not None:
            limit = min(limit, max_vars)
        for var in range(1, len(counts) + 2):
            if var > limit:
                break
            if var <= len(counts):
                if cap is not None and counts[var - 1] >= cap:
                    continue
                counts[var - 1] += 1
                prefix.append(var)
                yield from rec(pos + 1)
                prefix.pop()
                counts[var - 1] -= 1
            else:
                counts.append(1)
                prefix.append(var)
                yield from rec(pos + 1)
                prefix.pop()
                counts.pop()

    yield from rec(0)


@dataclass(frozen=True)
class ScanRecord:
    """One scanned pattern: its verdicts and whether it is a finding.

    ``finding`` flags a counterexample to the scanned conjecture; scans of
    proven statements never set it (they raise instead).  ``is_fixed_point``
    is None only when the budget ran out before the verdict.
    """

    pattern: Pattern
    is_fixed_point: bool | None
    var_count: int
    best_sigma_ij: tuple[int, int] | None
    best_uniform_k: int | None
    budget_hit: bool
    finding: bool
    billaud: BillaudReport | None = None

    def to_json(self) -> str:
        record: dict = {
            "pattern": str(self.pattern),
            "is_fixed_point": self.is_fixed_point,
            "var_count": self.var_count,
            "best_sigma_ij": list(self.best_sigma_ij) if self.best_sigma_ij else None,
            "best_uniform_k": self.best_uniform_k,
            "budget_hit": self.budget_hit,
            "finding": self.finding,
        }
        if self.billaud is not None:
            record["billaud"] = {
                "delta_fixed_point": {str(v): fp for v, fp in sorted(self.billaud.delta_fixed_point.items())},
                "hypothesis_holds": self.billaud.hypothesis_holds,
                "alpha_is_fixed_point": self.billaud.alpha_is_fixed_point,
                "conjecture_instance_ok": self.billaud.conjecture_instance_ok,
            }
        return json.dumps(record)

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        data = json.loads(line)
        billaud = None
        if "billaud" in data:
            raw = data["billaud"]
            billaud = BillaudReport(
                delta_fixed_point={int(v): fp for v, fp in raw["delta_fixed_point"].items()},
                hypothesis_holds=raw["hypothesis_holds"],
                alpha_is_fixed_point=raw["alpha_is_fixed_point"],
                conjecture_instance_ok=raw["conjecture_instance_ok"],
            )
        return cls(
            pattern=parse_pattern(data["pattern"]),
            is_fixed_point=data["is_fixed_point"],
            var_count=data["var_count"],
            best_sigma_ij=tuple(data["best_sigma_ij"]) if data["best_sigma_ij"] else None,
            best_uniform_k=data["best_uniform_k"],
            budget_hit=data["budget_hit"],
            finding=data["finding"],
            billaud=billaud,
        )


def _scan_pattern(pattern: Pattern, target: str, budget: int) -> ScanRecord:
    var_count = len(pattern.variables)
    fp = is_fixed_point(pattern, budget=budget)
    if isinstance(fp, BudgetExhausted):
        return ScanRecord(pattern, None, var_count, None, None, True, False)
    alpha_fp = isinstance(fp, FixedPoint)

    if target == "conjecture3":
        try:
            report = billaud_instance(pattern, budget=budget)
        except BudgetError:
            return ScanRecord(pattern, alpha_fp, var_count, None, None, True, False)
        return ScanRecord(
            pattern,
            alpha_fp,
            var_count,
            None,
            None,
            False,
            not report.conjecture_instance_ok,
            billaud=report,
        )

    if alpha_fp:
        # every nonerasing morphism is ambiguous on a fixed point, so there
        # is nothing to search and nothing to flag
        return ScanRecord(pattern, True, var_count, None, None, False, False)

    if target == "conjecture1":
        # ascending alphabet sizes; the first success is the least size,
        # since a smaller witness would already have shown up earlier
        for k in range(1, var_count):
            try:
                sigma = search_1uniform(pattern, k, budget=budget)
            except BudgetError:
                return ScanRecord(pattern, False, var_count, None, None, True, False)
            if sigma is not None:
                return ScanRecord(pattern, False, var_count, None, k, False, False)
        return ScanRecord(pattern, False, var_count, None, None, False, True)

    try:
        found = search_sigma_ij(pattern, budget=budget)
    except BudgetError:
        return ScanRecord(pattern, False, var_count, None, None, True, False)
    pair = (found[0], found[1]) if found else None

    if target == "theorem7":
        if pair is None:
            raise InconsistencyError(
                f"no unambiguous pair-merging morphism for the non-fixed-point pattern {pattern}"
            )
        return ScanRecord(pattern, False, var_count, pair, None, False, False)

    return ScanRecord(pattern, False, var_count, pair, None, False, pair is None)


def _scan_scope(max_len: int, target: str) -> Iterator[Pattern]:
    if target == "theorem7":
        for length in range(8, max_len + 1, 2):
            yield from enumerate_canonical_patterns(length, min_vars=4, uniform_multiplicity=2)
        return
    min_vars = 3 if target == "conjecture3" else 4
    for length in range(min_vars, max_len + 1):
        yield from enumerate_canonical_patterns(length, min_vars=min_vars)


def conjecture_scan(
    max_len: int, target: str, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> Iterator[ScanRecord]:
    """Scan every canonical pattern in the target's scope up to ``max_len``.

    Scopes: conjectures 1 and 2 take patterns with at least 4 distinct
    variables, conjecture 3 at least 3, and theorem7 takes patterns with more
    than 3 variables all of multiplicity 2.  Records stream in enumeration
    order regardless of the worker count.
    """
    if target not in SCAN_TARGETS:
        raise DomainError(f"unknown scan target {target!r}; expected one of {', '.join(SCAN_TARGETS)}")
    if max_len > MAX_SCAN_LENGTH:
        raise ResourceError(f"scans support max_len <= {MAX_SCAN_LENGTH}, got {max_len}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")
    patterns = _scan_scope(max_len, target)
    if workers == 1:
        for pattern in patterns:
            yield _scan_pattern(pattern, target, budget)
        return
    job = partial(_scan_pattern, target=target, budget=budget)
    with Pool(workers) as pool:
        yield from pool.imap(job, patterns, chunksize=64)
