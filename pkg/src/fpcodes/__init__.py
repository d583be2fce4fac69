from __future__ import annotations

import dataclasses
from collections.abc import Hashable, Iterable, Mapping, Sequence
from types import MappingProxyType
from typing import Any, ClassVar, Self

from .base_classes import WordSet
from .errors import AlphabetError, DimensionError, DomainError


__all__ = [
    "Alphabet",
    "Codeword",
    "Code",
    "TwoLevelCode",
    "canonicalize_symbols",
    "hamming_distance",
    "min_distance_to_code",
]

__version__ = "0.1.0"


@dataclasses.dataclass(slots=True, frozen=True)
class Alphabet:
    """The symbols 0 .. size-1."""

    size: int

    MAX_SIZE: ClassVar[int] = 2 ** 16

    def __post_init__(self):
        if not isinstance(self.size, int):
            raise TypeError("alphabet size must be an integer")
        if not 2 <= self.size <= self.MAX_SIZE:
            raise AlphabetError(
                f"alphabet size must be between 2 and {self.MAX_SIZE}, "
                f"got {self.size}"
            )

    def __str__(self):
        return f"{{0..{self.size - 1}}}"

    def __contains__(self, symbol: Any) -> bool:
        return isinstance(symbol, int) and 0 <= symbol < self.size

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size

    def validate(self, word: Codeword) -> None:
        for position, symbol in enumerate(word.symbols, start=1):
            if symbol >= self.size:
                raise AlphabetError(
                    f"symbol {symbol} at position {position} of {word} "
                    f"is outside {self}"
                )


@dataclasses.dataclass(slots=True, frozen=True, order=True)
class Codeword:
    """A word of fixed length over the integers 0, 1, 2, ..."""

    symbols: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise DimensionError("a codeword has at least one symbol")
        for symbol in self.symbols:
            if not isinstance(symbol, int) or isinstance(symbol, bool):
                raise TypeError(f"symbols must be integers, got {symbol!r}")
            if symbol < 0:
                raise AlphabetError(f"symbols are non-negative, got {symbol}")

    @classmethod
    def parse(cls, text: str) -> Self:
        """Read ``"1100"`` (one digit per symbol) or ``"1 10 0"``."""
        text = text.strip()
        if " " in text:
            return cls(tuple(int(part) for part in text.split()))
        if not text.isdigit():
            raise ValueError(f"cannot read a codeword from {text!r}")
        return cls(tuple(int(char) for char in text))

    def __str__(self):
        if all(symbol < 10 for symbol in self.symbols):
            return "".join(map(str, self.symbols))
        return " ".join(map(str, self.symbols))

    def __repr__(self):
        return f"<{self.__class__.__name__} {self}>"

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    @property
    def length(self) -> int:
        return len(self.symbols)

    def with_first(self, symbol: int) -> Codeword:
        """This word with its first coordinate replaced."""
        return Codeword((symbol,) + self.symbols[1:])


def _as_codeword(word: Codeword | str | Sequence[int]) -> Codeword:
    if isinstance(word, Codeword):
        return word
    if isinstance(word, str):
        return Codeword.parse(word)
    return Codeword(tuple(word))


def canonicalize_symbols(
    rows: Iterable[Sequence[Hashable]],
    alphabet: Sequence[Hashable] | None = None,
) -> tuple[Alphabet, list[tuple[int, ...]], dict[Hashable, int]]:
    """Relabel arbitrary symbols onto 0 .. q-1, preserving their order.

    Without ``alphabet`` the alphabet is the sorted set of symbols in use,
    so ``{1, ..., 11}`` becomes ``{0, ..., 10}``. An explicit alphabet fixes
    both the order and the size (symbols that never occur still count).
    """
    rows = [tuple(row) for row in rows]
    if alphabet is None:
        alphabet = sorted({symbol for row in rows for symbol in row})
    mapping = {symbol: index for index, symbol in enumerate(alphabet)}
    if len(mapping) != len(alphabet):
        raise AlphabetError("alphabet symbols must be distinct")
    try:
        relabelled = [tuple(mapping[symbol] for symbol in row) for row in rows]
    except KeyError as e:
        raise AlphabetError(f"symbol {e.args[0]!r} is not in the alphabet") \
            from None
    return Alphabet(max(len(mapping), 2)), relabelled, mapping


def hamming_distance(x: Codeword, y: Codeword) -> int:
    """Number of coordinates in which x and y differ."""
    if len(x.symbols) != len(y.symbols):
        raise DimensionError(
            f"cannot compare words of lengths {len(x)} and {len(y)}"
        )
    return sum(a != b for a, b in zip(x.symbols, y.symbols))


def min_distance_to_code(code: WordSet, y: Codeword) \
        -> tuple[int, frozenset[Codeword]]:
    """The distance from y to the nearest word of the code, together with
    every word of the code at that distance."""
    if not len(code):
        raise DomainError("the distance to an empty code is undefined")
    if len(y) != code.length:
        raise DimensionError(
            f"word of length {len(y)} against a code of length {code.length}"
        )
    best = len(y) + 1
    nearest: list[Codeword] = []
    for word in code.words:
        distance = hamming_distance(word, y)
        if distance < best:
            best = distance
            nearest = [word]
        elif distance == best:
            nearest.append(word)
    return best, frozenset(nearest)


@dataclasses.dataclass(slots=True, frozen=True)
class Code(WordSet):
    """A set of distinct words of one length over an alphabet."""

    alphabet: Alphabet
    length: int
    words: tuple[Codeword, ...]
    _members: frozenset[Codeword] = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.length < 1:
            raise DimensionError("codes have a positive length")
        words = tuple(sorted(self.words))
        members = frozenset(words)
        if len(members) != len(words):
            raise DomainError("the words of a code must be distinct")
        for word in words:
            if len(word) != self.length:
                raise DimensionError(
                    f"{word} has length {len(word)}, "
                    f"the code has length {self.length}"
                )
            self.alphabet.validate(word)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "_members", members)

    def __reduce__(self):
        return self.__class__, (self.alphabet, self.length, self.words)

    @classmethod
    def from_words(
        cls,
        q: int | Alphabet,
        words: Iterable[Codeword | str | Sequence[int]],
        length: int | None = None,
    ) -> Self:
        alphabet = q if isinstance(q, Alphabet) else Alphabet(q)
        words = [_as_codeword(word) for word in words]
        if length is None:
            if not words:
                raise DomainError("the length of an empty code must be given")
            length = len(words[0])
        return cls(alphabet, length, tuple(words))

    @classmethod
    def from_symbols(
        cls,
        rows: Iterable[Sequence[Hashable]],
        alphabet: Sequence[Hashable] | None = None,
    ) -> Self:
        """Build a code from rows of arbitrary symbols, relabelled onto
        0 .. q-1 by :func:`canonicalize_symbols`."""
        relabelled_alphabet, rows, _ = canonicalize_symbols(rows, alphabet)
        if not rows:
            raise DomainError("the length of an empty code must be given")
        return cls(relabelled_alphabet, len(rows[0]),
                   tuple(Codeword(row) for row in rows))

    @classmethod
    def parse(cls, q: int | Alphabet, text: str) -> Self:
        """Build a code from comma or whitespace separated digit strings,
        e.g. ``Code.parse(3, "1100, 2102, 1122")``."""
        return cls.from_words(q, text.replace(",", " ").split())

    def __str__(self):
        return "{" + ", ".join(map(str, self.words)) + "}"

    def __repr__(self):
        return (f"<{self.__class__.__name__} q={self.q} "
                f"length={self.length} size={len(self)}>")

    def __contains__(self, item: Any) -> bool:
        return item in self._members

    def subcode(self, words: Iterable[Codeword]) -> Code:
        words = tuple(words)
        if not self.issuperset(words):
            raise DomainError("a subcode only contains words of the code")
        return Code(self.alphabet, self.length, words)


@dataclasses.dataclass(slots=True, frozen=True)
class TwoLevelCode(WordSet):
    """A code partitioned into ``g`` groups of ``p`` words each.

    Groups are numbered from 1, so ``group(1)`` is the first group.
    """

    base: Code
    groups: tuple[tuple[Codeword, ...], ...]
    _assignment: Mapping[Codeword, int] = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        groups = tuple(tuple(sorted(group)) for group in self.groups)
        if not groups:
            raise DomainError("a two-level code has at least one group")
        sizes = {len(group) for group in groups}
        if len(sizes) != 1 or 0 in sizes:
            raise DomainError(
                f"groups must be non-empty and of equal size, "
                f"got sizes {[len(group) for group in groups]}"
            )
        assignment: dict[Codeword, int] = {}
        for index, group in enumerate(groups, start=1):
            for word in group:
                if word not in self.base:
                    raise DomainError(f"{word} is not a word of the code")
                if word in assignment:
                    raise DomainError(f"{word} belongs to more than one group")
                assignment[word] = index
        if len(assignment) != len(self.base):
            missing = [w for w in self.base.words if w not in assignment]
            raise DomainError(
                f"every word must be in a group, "
                f"missing {', '.join(map(str, missing))}"
            )
        object.__setattr__(self, "groups", groups)
        object.__setattr__(self, "_assignment", MappingProxyType(assignment))

    def __reduce__(self):
        return self.__class__, (self.base, self.groups)

    @classmethod
    def from_groups(
        cls,
        q: int | Alphabet,
        groups: Iterable[Iterable[Codeword | str | Sequence[int]]],
        length: int | None = None,
    ) -> Self:
        groups = [[_as_codeword(word) for word in group] for group in groups]
        base = Code.from_words(
            q, [word for group in groups for word in group], length
        )
        return cls(base, tuple(tuple(group) for group in groups))

    @classmethod
    def single_group(cls, code: Code) -> Self:
        return cls(code, (code.words,))

    def __str__(self):
        return " | ".join(
            "{" + ", ".join(map(str, group)) + "}" for group in self.groups
        )

    def __repr__(self):
        return (f"<{self.__class__.__name__} q={self.q} "
                f"length={self.length} g={self.g} p={self.p}>")

    @property
    def alphabet(self) -> Alphabet:
        return self.base.alphabet

    @property
    def length(self) -> int:
        return self.base.length

    @property
    def words(self) -> tuple[Codeword, ...]:
        return self.base.words

    def __contains__(self, item: Any) -> bool:
        return item in self.base

    @property
    def g(self) -> int:
        return len(self.groups)

    @property
    def p(self) -> int:
        return len(self.groups[0])

    @property
    def assignment(self) -> Mapping[Codeword, int]:
        return self._assignment

    def group(self, index: int) -> tuple[Codeword, ...]:
        if not 1 <= index <= self.g:
            raise IndexError(f"group indices run from 1 to {self.g}")
        return self.groups[index - 1]

    def group_of(self, word: Codeword) -> int:
        try:
            return self._assignment[word]
        except KeyError:
            raise DomainError(f"{word} is not a word of the code") from None

    def group_indices(self, words: Iterable[Codeword]) -> tuple[int, ...]:
        """The sorted group indices met by a set of words."""
        return tuple(sorted({self.group_of(word) for word in words}))
