from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from . import Alphabet, Codeword


class WordSet(ABC):
    """A finite set of equal-length words over an alphabet.

    Both one-level codes and their grouped (two-level) counterparts are word
    sets, so every operation that only looks at the words accepts either.
    Subclasses provide ``alphabet``, ``length`` and ``words`` (in
    lexicographic order), as dataclass fields or as properties.
    """

    alphabet: Alphabet
    length: int
    words: tuple[Codeword, ...]

    @abstractmethod
    def __contains__(self, item: Any) -> bool:
        pass

    @property
    def q(self) -> int:
        return self.alphabet.size

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.words)

    def issuperset(self, words) -> bool:
        return all(word in self for word in words)


class Witness(ABC):
    """A concrete counterexample to a fingerprinting property."""

    @abstractmethod
    def replay(self, code: WordSet) -> bool:
        """Check this witness against the definition, from scratch.

        Returns True when the witness really does show a violation in
        ``code``.
        """
        pass

    @abstractmethod
    def to_dict(self) -> dict[str, Any]:
        pass


__all__ = [
    "WordSet",
    "Witness",
]
