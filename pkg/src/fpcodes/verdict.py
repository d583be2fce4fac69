from __future__ import annotations

import dataclasses
import enum
from typing import Any

from . import Codeword, TwoLevelCode, min_distance_to_code
from .base_classes import WordSet, Witness
from .descendant import is_descendant, profiles_intersect


__all__ = [
    "Level",
    "Verdict",
    "FramingWitness",
    "SeparationWitness",
    "ParentWitness",
    "TracingWitness",
]


class Level(enum.Enum):
    """Which clause of a property a witness breaks.

    USER is the one-level condition (coalitions of at most t users),
    GROUP is the group condition of a two-level code (at most T users,
    traced to groups).
    """

    USER = "user"
    GROUP = "group"


def _words(words) -> list[str]:
    return [str(word) for word in words]


def _fits(code: WordSet, coalition, bound: int) -> bool:
    return 0 < len(coalition) <= bound and code.issuperset(coalition)


def _labels(code: WordSet, level: Level, words) -> frozenset:
    if level is Level.USER:
        return frozenset(words)
    if not isinstance(code, TwoLevelCode):
        return frozenset()
    return frozenset(code.group_indices(words))


def _label(code: WordSet, level: Level, word: Codeword):
    if level is Level.USER:
        return word
    return code.group_of(word)


@dataclasses.dataclass(slots=True, frozen=True)
class FramingWitness(Witness):
    coalition: tuple[Codeword, ...]
    framed: Codeword
    level: Level
    bound: int

    def __str__(self):
        return (f"coalition {{{', '.join(_words(self.coalition))}}} "
                f"frames {self.framed}")

    def replay(self, code: WordSet) -> bool:
        if self.level is Level.GROUP and not isinstance(code, TwoLevelCode):
            return False
        if not _fits(code, self.coalition, self.bound):
            return False
        if self.framed not in code:
            return False
        if not is_descendant(self.coalition, self.framed):
            return False
        labels = _labels(code, self.level, self.coalition)
        return _label(code, self.level, self.framed) not in labels

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level.value,
            "coalition": _words(self.coalition),
            "framed": str(self.framed),
        }


@dataclasses.dataclass(slots=True, frozen=True)
class SeparationWitness(Witness):
    first: tuple[Codeword, ...]
    second: tuple[Codeword, ...]
    descendant: Codeword
    level: Level
    bound: int

    def __str__(self):
        return (f"{{{', '.join(_words(self.first))}}} and "
                f"{{{', '.join(_words(self.second))}}} both produce "
                f"{self.descendant}")

    def replay(self, code: WordSet) -> bool:
        if self.level is Level.GROUP and not isinstance(code, TwoLevelCode):
            return False
        if not (_fits(code, self.first, self.bound)
                and _fits(code, self.second, self.bound)):
            return False
        if not profiles_intersect(self.first, self.second):
            return False
        if not (is_descendant(self.first, self.descendant)
                and is_descendant(self.second, self.descendant)):
            return False
        first = _labels(code, self.level, self.first)
        second = _labels(code, self.level, self.second)
        return first.isdisjoint(second)

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level.value,
            "first": _words(self.first),
            "second": _words(self.second),
            "descendant": str(self.descendant),
        }


@dataclasses.dataclass(slots=True, frozen=True)
class ParentWitness(Witness):
    """A word whose parent sets have nothing (USER) or no group (GROUP)
    in common. The listed parent sets alone already have an empty
    intersection."""

    descendant: Codeword
    parent_sets: tuple[tuple[Codeword, ...], ...]
    level: Level
    bound: int

    def __str__(self):
        sets = "; ".join(
            "{" + ", ".join(_words(parents)) + "}"
            for parents in self.parent_sets
        )
        return f"{self.descendant} has parent sets {sets} with no common " \
               f"{'member' if self.level is Level.USER else 'group'}"

    def replay(self, code: WordSet) -> bool:
        if self.level is Level.GROUP and not isinstance(code, TwoLevelCode):
            return False
        if not self.parent_sets:
            return False
        common = None
        for parents in self.parent_sets:
            if not _fits(code, parents, self.bound):
                return False
            if not is_descendant(parents, self.descendant):
                return False
            labels = _labels(code, self.level, parents)
            common = labels if common is None else common & labels
        return not common

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level.value,
            "descendant": str(self.descendant),
            "parent_sets": [_words(parents) for parents in self.parent_sets],
        }


@dataclasses.dataclass(slots=True, frozen=True)
class TracingWitness(Witness):
    """A coalition, one of its descendants and a nearest codeword that
    lies outside the coalition (USER) or outside its groups (GROUP)."""

    coalition: tuple[Codeword, ...]
    descendant: Codeword
    nearest: Codeword
    level: Level
    bound: int
    nearest_group: int | None = None
    coalition_groups: tuple[int, ...] | None = None

    def __str__(self):
        text = (f"{self.descendant} descends from "
                f"{{{', '.join(_words(self.coalition))}}} but {self.nearest} "
                f"is among its nearest codewords")
        if self.level is Level.GROUP:
            groups = ", ".join(map(str, self.coalition_groups or ()))
            text += f" (group {self.nearest_group} not in {{{groups}}})"
        return text

    def replay(self, code: WordSet) -> bool:
        if self.level is Level.GROUP and not isinstance(code, TwoLevelCode):
            return False
        if not _fits(code, self.coalition, self.bound):
            return False
        if not is_descendant(self.coalition, self.descendant):
            return False
        _, nearest = min_distance_to_code(code, self.descendant)
        if self.nearest not in nearest:
            return False
        labels = _labels(code, self.level, self.coalition)
        return _label(code, self.level, self.nearest) not in labels

    def to_dict(self) -> dict[str, Any]:
        result = {
            "level": self.level.value,
            "coalition": _words(self.coalition),
            "descendant": str(self.descendant),
            "nearest": str(self.nearest),
        }
        if self.level is Level.GROUP:
            result["nearest_group"] = self.nearest_group
            result["coalition_groups"] = list(self.coalition_groups or ())
        return result


@dataclasses.dataclass(slots=True, frozen=True)
class Verdict:
    """Outcome of checking one property.

    ``t`` is the user-level coalition bound, ``T`` the group-level bound of
    a two-level check (None for one-level checks).
    """

    kind: str
    holds: bool
    t: int
    T: int | None = None
    witness: Witness | None = None

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        if self.holds and self.witness is not None:
            raise ValueError("a holding verdict has no witness")

    def __bool__(self):
        return self.holds

    def __str__(self):
        name = self.name
        if self.holds:
            return f"{name}: holds"
        return f"{name}: fails ({self.witness})"

    @property
    def name(self) -> str:
        if self.T is None:
            return f"{self.t}-{self.kind.upper()}"
        return f"({self.T},{self.t})-{self.kind.upper()}"

    def replay(self, code: WordSet) -> bool:
        """For a failing verdict, confirm the witness against ``code``."""
        if self.holds:
            return True
        return self.witness.replay(code)

    def to_dict(self) -> dict[str, Any]:
        return {
            "property": self.kind,
            "name": self.name,
            "t": self.t,
            "T": self.T,
            "holds": self.holds,
            "witness": None if self.witness is None
            else self.witness.to_dict(),
        }
