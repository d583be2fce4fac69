"""Descendant sets.

A word d is a descendant of a coalition X when each of its coordinates
appears in that coordinate of some member of X. Everything here works on the
coordinatewise symbol profile of X, so a descendant set is never stored
unless it is explicitly enumerated.
"""
from __future__ import annotations

import dataclasses
import itertools
import logging
from collections.abc import Collection, Iterable, Iterator
from math import prod
from typing import Self

from . import Codeword
from .base_classes import WordSet
from .budget import DEFAULT_CANDIDATE_CEILING
from .errors import CapacityError, DimensionError, DomainError, ParameterError


__all__ = [
    "SymbolProfile",
    "ParentIndex",
    "is_descendant",
    "enumerate_descendants",
    "profiles_intersect",
    "enumerate_desc_t_candidates",
    "parent_sets",
]

logger = logging.getLogger(__name__)


def _coalition(words: Iterable[Codeword]) -> tuple[Codeword, ...]:
    words = tuple(sorted(set(words)))
    if not words:
        raise DomainError("a coalition has at least one member")
    length = len(words[0])
    for word in words:
        if len(word) != length:
            raise DimensionError("coalition members differ in length")
    return words


@dataclasses.dataclass(slots=True, frozen=True)
class SymbolProfile:
    """For each coordinate, the set of symbols some member of X has there."""

    sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, words: Iterable[Codeword]) -> Self:
        words = _coalition(words)
        return cls(tuple(
            frozenset(column) for column in zip(*(w.symbols for w in words))
        ))

    def __str__(self):
        return " × ".join(
            "{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets
        )

    def __len__(self):
        return len(self.sets)

    def __contains__(self, word: Codeword) -> bool:
        if len(word) != len(self.sets):
            raise DimensionError(
                f"word of length {len(word)} against a profile of length "
                f"{len(self.sets)}"
            )
        return all(
            symbol in column for symbol, column in zip(word.symbols, self.sets)
        )

    def __iter__(self) -> Iterator[Codeword]:
        """Every word of the product, in lexicographic order."""
        columns = [sorted(column) for column in self.sets]
        for symbols in itertools.product(*columns):
            yield Codeword(symbols)

    def size(self) -> int:
        return prod(len(column) for column in self.sets)

    def intersects(self, other: SymbolProfile) -> bool:
        if len(other) != len(self):
            raise DimensionError("profiles differ in length")
        return all(not a.isdisjoint(b) for a, b in zip(self.sets, other.sets))


def is_descendant(words: Iterable[Codeword], d: Codeword) -> bool:
    return d in SymbolProfile.of(words)


def enumerate_descendants(
    words: Iterable[Codeword],
    ceiling: int = DEFAULT_CANDIDATE_CEILING,
) -> tuple[Codeword, ...]:
    """desc(X), in lexicographic order."""
    profile = SymbolProfile.of(words)
    size = profile.size()
    if size > ceiling:
        raise CapacityError("descendant set", size, ceiling)
    return tuple(profile)


def profiles_intersect(
    first: Iterable[Codeword],
    second: Iterable[Codeword],
) -> bool:
    """Whether the descendant sets of two coalitions share a word.

    The product of the coordinatewise intersections is exactly
    desc(X0) ∩ desc(X1), so it is non-empty iff no intersection is empty.
    """
    return SymbolProfile.of(first).intersects(SymbolProfile.of(second))


def enumerate_desc_t_candidates(
    code: WordSet,
    t: int,
    ceiling: int = DEFAULT_CANDIDATE_CEILING,
) -> Iterator[Codeword]:
    """Every word that could be a descendant of some coalition of the code.

    This is the product of the code's own symbol profile, which contains
    desc_t(C) for every t. Words yielded here still have to be checked for
    an actual parent set of size at most t.
    """
    if t < 1:
        raise ParameterError(f"coalition size bound must be positive, got {t}")
    if not len(code):
        return iter(())
    profile = SymbolProfile.of(code.words)
    size = profile.size()
    if size > ceiling:
        raise CapacityError("candidate product", size, ceiling)
    logger.debug("enumerating %d candidates over %s", size, profile)
    return iter(profile)


class ParentIndex:
    """The words of a code indexed by (coordinate, symbol).

    Used to search for the minimal parent sets of a word: coalitions of
    which the word is a descendant, none of whose members can be dropped.
    """

    __slots__ = ("words", "length", "_position", "_by_symbol")

    def __init__(self, words: Iterable[Codeword]):
        self.words = tuple(sorted(words))
        self.length = len(self.words[0]) if self.words else 0
        self._position = {word: j for j, word in enumerate(self.words)}
        self._by_symbol: list[dict[int, list[int]]] = [
            {} for _ in range(self.length)
        ]
        for j, word in enumerate(self.words):
            for i, symbol in enumerate(word.symbols):
                self._by_symbol[i].setdefault(symbol, []).append(j)

    def __getstate__(self):
        return self.words

    def __setstate__(self, state):
        self.__init__(state)

    def parent_sets(
        self,
        x: Codeword,
        max_size: int,
        exclude: Collection[Codeword] = (),
    ) -> list[tuple[Codeword, ...]]:
        """All minimal parent sets of x with at most max_size members,
        none of them in ``exclude``. Smaller sets come first, sets of equal
        size are in lexicographic order."""
        if not self.words:
            return []
        if len(x) != self.length:
            raise DimensionError(
                f"word of length {len(x)} against words of length "
                f"{self.length}"
            )
        xs = x.symbols
        full = (1 << self.length) - 1
        excluded = {self._position[w] for w in exclude if w in self._position}
        masks: dict[int, int] = {}

        def mask(j: int) -> int:
            m = masks.get(j)
            if m is None:
                ws = self.words[j].symbols
                m = 0
                for i in range(self.length):
                    if ws[i] == xs[i]:
                        m |= 1 << i
                masks[j] = m
            return m

        found: dict[frozenset[int], None] = {}

        def search(chosen: tuple[int, ...], covered: int):
            if covered == full:
                found.setdefault(frozenset(chosen))
                return
            if len(chosen) == max_size:
                return
            # Branch on the lowest coordinate nobody covers yet.
            i = ((covered + 1) & ~covered).bit_length() - 1
            for j in self._by_symbol[i].get(xs[i], ()):
                if j not in excluded:
                    search(chosen + (j,), covered | mask(j))

        search((), 0)

        minimal = []
        for members in found:
            if all(
                _union(mask(k) for k in members if k != j) != full
                for j in members
            ):
                minimal.append(tuple(sorted(members)))
        minimal.sort(key=lambda members: (len(members), members))
        return [tuple(self.words[j] for j in members) for members in minimal]


def _union(masks: Iterable[int]) -> int:
    result = 0
    for m in masks:
        result |= m
    return result


def parent_sets(
    code: WordSet,
    x: Codeword,
    max_size: int,
    exclude: Collection[Codeword] = (),
) -> list[tuple[Codeword, ...]]:
    """Minimal parent sets of x of size at most max_size drawn from a code.

    For repeated searches against the same code build a ParentIndex once.
    """
    if max_size < 1:
        raise ParameterError(f"size bound must be positive, got {max_size}")
    return ParentIndex(code.words).parent_sets(x, max_size, exclude)
