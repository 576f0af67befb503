"""Morphisms from variables to words, and pattern-to-pattern substitutions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DomainError, ParseError
from .words import ALPHABET, Pattern, parse_pattern, validate_word


@dataclass(frozen=True, order=True)
class Morphism:
    """A finite map from variables to words, applied pointwise to patterns.

    Stored as a variable-sorted tuple of ``(variable, image)`` pairs so that
    instances are hashable and compare deterministically.
    """

    images: tuple[tuple[int, str], ...]

    @classmethod
    def of(cls, mapping: Mapping[int, str]) -> "Morphism":
        items = []
        for var in sorted(mapping):
            if not isinstance(var, int) or var < 1:
                raise DomainError(f"morphism domain must be positive integers, got {var!r}")
            items.append((var, validate_word(mapping[var])))
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse the ``1=,2=a,3=ab`` format; an empty image means the empty word."""
        mapping: dict[int, str] = {}
        if text.strip():
            for entry in text.split(","):
                var_text, sep, image = entry.strip().partition("=")
                if not sep:
                    raise ParseError(f"morphism entry {entry!r} is missing '='")
                try:
                    var = int(var_text)
                except ValueError:
                    raise ParseError(f"invalid morphism variable {var_text!r}") from None
                if var < 1:
                    raise ParseError(f"morphism variables must be >= 1, got {var_text!r}")
                if var in mapping:
                    raise ParseError(f"duplicate morphism variable {var}")
                for ch in image:
                    if ch not in ALPHABET:
                        raise ParseError(f"invalid letter {ch!r} in image of variable {var}")
                mapping[var] = image
        return cls.of(mapping)

    @cached_property
    def _map(self) -> dict[int, str]:
        return dict(self.images)

    def __getitem__(self, var: int) -> str:
        try:
            return self._map[var]
        except KeyError:
            raise DomainError(f"variable {var} outside morphism domain") from None

    def get(self, var: int, default: str | None = None) -> str | None:
        return self._map.get(var, default)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(ch for _, image in self.images for ch in image)

    def apply(self, pattern: Pattern) -> str:
        images = self._map
        try:
            return "".join(images[s] for s in pattern.symbols)
        except KeyError as exc:
            raise DomainError(f"variable {exc.args[0]} outside morphism domain") from None

    def classify(self) -> "MorphismClass":
        values = [image for _, image in self.images]
        one_uniform = all(len(image) == 1 for image in values)
        nonerasing = all(image for image in values)
        renaming = one_uniform and len(set(values)) == len(values)
        return MorphismClass(one_uniform=one_uniform, nonerasing=nonerasing, renaming=renaming)

    def __str__(self) -> str:
        return ",".join(f"{var}={image}" for var, image in self.images)


@dataclass(frozen=True)
class MorphismClass:
    one_uniform: bool
    nonerasing: bool
    renaming: bool


@dataclass(frozen=True, order=True)
class Substitution:
    """A finite map from variables to patterns (an endomorphism on patterns)."""

    images: tuple[tuple[int, Pattern], ...]

    @classmethod
    def of(cls, mapping: Mapping[int, Pattern]) -> "Substitution":
        items = []
        for var in sorted(mapping):
            if not isinstance(var, int) or var < 1:
                raise DomainError(f"substitution domain must be positive integers, got {var!r}")
            items.append((var, mapping[var]))
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> "Substitution":
        mapping: dict[int, Pattern] = {}
        if text.strip():
            for entry in text.split(","):
                var_text, sep, image = entry.strip().partition("=")
                if not sep:
                    raise ParseError(f"substitution entry {entry!r} is missing '='")
                try:
                    var = int(var_text)
                except ValueError:
                    raise ParseError(f"invalid substitution variable {var_text!r}") from None
                if var < 1 or var in mapping:
                    raise ParseError(f"bad or duplicate substitution variable {var_text!r}")
                mapping[var] = parse_pattern(image)
        return cls.of(mapping)

    @cached_property
    def _map(self) -> dict[int, Pattern]:
        return dict(self.images)

    def __getitem__(self, var: int) -> Pattern:
        try:
            return self._map[var]
        except KeyError:
            raise DomainError(f"variable {var} outside substitution domain") from None

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._map)

    def apply(self, pattern: Pattern) -> Pattern:
        images = self._map
        out: list[int] = []
        try:
            for s in pattern.symbols:
                out.extend(images[s].symbols)
        except KeyError as exc:
            raise DomainError(f"variable {exc.args[0]} outside substitution domain") from None
        return Pattern(tuple(out))

    def __str__(self) -> str:
        return ",".join(f"{var}={image}" for var, image in self.images)


def renaming(variables: Iterable[int]) -> Morphism:
    """The injective 1-uniform morphism sending the n-th smallest variable to the n-th letter."""
    ordered = sorted(set(variables))
    if not ordered:
        return Morphism(())
    if len(ordered) > len(ALPHABET):
        raise DomainError(f"at most {len(ALPHABET)} variables can be renamed to letters, got {len(ordered)}")
    return Morphism.of({var: ALPHABET[rank] for rank, var in enumerate(ordered)})


def merge_morphism(
    variables: Iterable[int], i: int, j: int, alphabet_size: int | None = None
) -> Morphism:
    """The 1-uniform morphism renaming every variable injectively except that
    variable j is sent to the same letter as variable i.

    The underlying renaming maps the n-th smallest variable to the n-th
    letter, so the images over any pattern using all of ``variables`` show
    exactly ``len(variables) - 1`` distinct letters.
    """
    ordered = sorted(set(variables))
    if i not in ordered:
        raise DomainError(f"variable {i} not among the given variables")
    if j not in ordered:
        raise DomainError(f"variable {j} not among the given variables")
    if i == j:
        raise DomainError("the merged variables must be distinct")
    rank = {var: pos for pos, var in enumerate(ordered)}
    used = max(pos for var, pos in rank.items() if var != j) + 1
    if used > len(ALPHABET):
        raise DomainError(f"alphabet too small: construction needs {used} letters")
    if alphabet_size is not None and alphabet_size < used:
        raise DomainError(f"alphabet too small: construction needs {used} letters, got {alphabet_size}")
    images = {var: ALPHABET[rank[var]] for var in ordered}
    images[j] = ALPHABET[rank[i]]
    return Morphism.of(images)


def erase_variable(pattern: Pattern, var: int) -> Pattern:
    """The pattern with every occurrence of ``var`` deleted."""
    return Pattern(tuple(s for s in pattern.symbols if s != var))
