"""The free choices of the two-level construction.

The construction leaves four things open: which words of a large class are
split off, which extra symbols are reserved for relabelling, how small
classes are merged, and which words of a merged set survive truncation.
A PickPolicy decides them; the construction checks every answer.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from collections.abc import Sequence

from . import Codeword


__all__ = [
    "PickPolicy",
    "DeterministicPicks",
    "SeededPicks",
    "ScriptedPicks",
]


class PickPolicy(ABC):
    name: str = "custom"

    @abstractmethod
    def split(self, symbol: int, words: Sequence[Codeword], count: int) \
            -> Sequence[Codeword]:
        """Choose ``count`` words of the class of ``symbol``. Consecutive
        runs of p chosen words form the split sets."""
        pass

    @abstractmethod
    def extra_symbols(self, candidates: Sequence[int], sizes: Sequence[int],
                      count: int) -> Sequence[int]:
        """Choose ``count`` symbols whose classes are given up so their
        symbols can relabel split sets."""
        pass

    @abstractmethod
    def amalgamation_order(self, candidates: Sequence[int],
                           sizes: Sequence[int]) -> Sequence[int]:
        pass

    @abstractmethod
    def survivors(self, words: Sequence[Codeword], p: int) \
            -> Sequence[Codeword]:
        pass

    def amalgamate(self, candidates: Sequence[int], sizes: Sequence[int],
                   p: int, needed: int) -> list[tuple[int, ...]]:
        """Merge whole classes greedily, in amalgamation order, closing a
        set as soon as it holds p words. Every class has fewer than p
        words, so a closed set never exceeds 2p - 2."""
        merged: list[tuple[int, ...]] = []
        current: list[int] = []
        total = 0
        for symbol in self.amalgamation_order(candidates, sizes):
            if len(merged) == needed:
                break
            if not sizes[symbol]:
                continue
            current.append(symbol)
            total += sizes[symbol]
            if total >= p:
                merged.append(tuple(current))
                current, total = [], 0
        return merged


class DeterministicPicks(PickPolicy):
    """Lexicographically first words; smallest classes given up first;
    largest classes merged first. Ties go to the smaller symbol."""

    name = "det"

    def split(self, symbol, words, count):
        return sorted(words)[:count]

    def extra_symbols(self, candidates, sizes, count):
        return sorted(candidates, key=lambda a: (sizes[a], a))[:count]

    def amalgamation_order(self, candidates, sizes):
        return sorted(candidates, key=lambda a: (-sizes[a], a))

    def survivors(self, words, p):
        return sorted(words)[:p]


class SeededPicks(PickPolicy):
    """Uniformly random choices from a seeded generator.

    One instance drives one construction; make a new one to repeat a run.
    """

    name = "random"

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self._rng = random.Random(seed)

    def __repr__(self):
        return f"{self.__class__.__name__}(seed={self.seed!r})"

    def split(self, symbol, words, count):
        return self._rng.sample(sorted(words), count)

    def extra_symbols(self, candidates, sizes, count):
        return self._rng.sample(sorted(candidates), count)

    def amalgamation_order(self, candidates, sizes):
        order = sorted(candidates)
        self._rng.shuffle(order)
        return order

    def survivors(self, words, p):
        return self._rng.sample(sorted(words), p)


class ScriptedPicks(DeterministicPicks):
    """Fixed extra symbols and, optionally, fixed merged sets.

    Reproduces hand-worked constructions where these choices are given.
    """

    name = "scripted"

    def __init__(
        self,
        extras: Sequence[int] = (),
        amalgamations: Sequence[Sequence[int]] | None = None,
    ):
        self.extras = tuple(extras)
        self.amalgamations = None if amalgamations is None \
            else tuple(tuple(symbols) for symbols in amalgamations)

    def __repr__(self):
        return (f"{self.__class__.__name__}(extras={self.extras!r}, "
                f"amalgamations={self.amalgamations!r})")

    def extra_symbols(self, candidates, sizes, count):
        return self.extras

    def amalgamate(self, candidates, sizes, p, needed):
        if self.amalgamations is None:
            return super().amalgamate(candidates, sizes, p, needed)
        return list(self.amalgamations)
