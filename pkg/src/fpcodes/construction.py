"""Building a two-level code from a one-level code.

Given a code C over q symbols and a number of groups g <= q, the
construction returns a grouped code C' of g groups of
p = ceil(|C| / 2g) words each, in which

1. every word of C' comes from a distinct word of C by changing at most
   its first coordinate,
2. all groups have the same size, and
3. no first symbol is shared by two groups,

keeping at least half of C. Words are classified by first symbol. Classes
with at least p words are split into sets of p (splitting); classes too
small for that are merged into sets of p to 2p - 2 words (amalgamating);
split sets that share a symbol get fresh first symbols and merged sets are
cut down to p (replacing).
"""
from __future__ import annotations

import dataclasses
import logging
from collections.abc import Iterable, Mapping
from types import MappingProxyType
from typing import Any, Self

from . import Alphabet, Code, Codeword, TwoLevelCode
from .budget import DEFAULT_CANDIDATE_CEILING
from .descendant import SymbolProfile, enumerate_descendants
from .errors import (
    AlphabetError,
    DomainError,
    InfeasibleConstructionError,
    ParameterError,
)
from .picks import DeterministicPicks, PickPolicy, SeededPicks


__all__ = [
    "FirstSymbolClasses",
    "SplitSet",
    "AmalgamatedSet",
    "SymbolRemap",
    "ConstructionReport",
    "construct_two_level",
    "apply_psi",
    "check_lemma_containment",
    "check_phi_compatibility",
    "check_construction",
]

logger = logging.getLogger(__name__)


def _words(words: Iterable[Codeword]) -> list[str]:
    return [str(word) for word in words]


@dataclasses.dataclass(slots=True, frozen=True)
class FirstSymbolClasses:
    """Words by first symbol. q2_symbols equals q1_symbols on the shortcut."""

    p: int
    classes: tuple[tuple[Codeword, ...], ...]
    q1_symbols: tuple[int, ...]
    q2_symbols: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(words) for words in self.classes)

    @property
    def alpha(self) -> tuple[int, ...]:
        return tuple(size // self.p for size in self.sizes)

    @property
    def beta(self) -> tuple[int, ...]:
        return tuple(size % self.p for size in self.sizes)

    @property
    def v(self) -> int:
        return sum(self.alpha)

    @property
    def q1(self) -> int:
        return len(self.q1_symbols)

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "sizes": list(self.sizes),
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "Q1": list(self.q1_symbols),
            "Q2": list(self.q2_symbols),
            "q1": self.q1,
            "v": self.v,
        }


@dataclasses.dataclass(slots=True, frozen=True)
class SplitSet:
    source: int
    words: tuple[Codeword, ...]
    symbol: int | None  # None if the set was dropped

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "symbol": self.symbol,
            "words": _words(self.words),
        }


@dataclasses.dataclass(slots=True, frozen=True)
class AmalgamatedSet:
    symbols: tuple[int, ...]
    words: tuple[Codeword, ...]
    survivors: tuple[Codeword, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    def to_dict(self) -> dict[str, Any]:
        return {
            "symbols": list(self.symbols),
            "size": self.size,
            "survivors": _words(self.survivors),
        }


@dataclasses.dataclass(slots=True, frozen=True)
class SymbolRemap:
    """The first-symbol relabelling of a construction.

    ``pi[a]`` is the original first symbol of the words that carry a in the
    constructed code (a itself for symbols the constructed code does not
    start with). ``psi`` applies ``pi`` to the first coordinate of any word
    and ``phi`` is psi restricted to the constructed code, which maps it
    one-to-one into the original code.
    """

    alphabet: Alphabet
    pi: tuple[int, ...]
    preimages: Mapping[Codeword, Codeword]

    @classmethod
    def identity(cls, alphabet: Alphabet,
                 words: Iterable[Codeword] = ()) -> Self:
        return cls(
            alphabet,
            tuple(range(alphabet.size)),
            MappingProxyType({word: word for word in words}),
        )

    def psi(self, x: Codeword) -> Codeword:
        first = x.symbols[0]
        if first >= len(self.pi):
            raise AlphabetError(f"{x} is not a word over {self.alphabet}")
        return x.with_first(self.pi[first])

    def phi(self, word: Codeword) -> Codeword:
        try:
            return self.preimages[word]
        except KeyError:
            raise DomainError(
                f"{word} is not a word of the constructed code"
            ) from None

    def to_dict(self) -> dict[str, Any]:
        return {
            "pi": {
                str(a): b for a, b in enumerate(self.pi) if a != b
            },
            "phi": {
                str(word): str(original)
                for word, original in sorted(self.preimages.items())
                if word != original
            },
        }


@dataclasses.dataclass(slots=True, frozen=True)
class ConstructionReport:
    """Everything a construction run decided, in order.

    A report attached to an InfeasibleConstructionError is partial: the
    fields of the steps that did not run are empty and ``result`` is None.
    """

    code_size: int
    groups: int
    picks: str
    classes: FirstSymbolClasses | None = None
    split_sets: tuple[SplitSet, ...] = ()
    shortcut: bool = False
    discarded_classes: tuple[int, ...] = ()
    amalgamated_sets: tuple[AmalgamatedSet, ...] = ()
    steps: tuple[str, ...] = ()
    eliminated_count: int | None = None
    result: TwoLevelCode | None = None
    remap: SymbolRemap | None = None

    @property
    def complete(self) -> bool:
        return self.result is not None

    @property
    def replacements(self) -> tuple[tuple[int, int], ...]:
        """(original symbol, new symbol) for every relabelled split set."""
        return tuple(
            (split.source, split.symbol) for split in self.split_sets
            if split.symbol is not None
        )

    def to_dict(self) -> dict[str, Any]:
        result = {
            "code_size": self.code_size,
            "groups": self.groups,
            "picks": self.picks,
            "complete": self.complete,
            "classes": None if self.classes is None
            else self.classes.to_dict(),
            "split_sets": [split.to_dict() for split in self.split_sets],
            "shortcut": self.shortcut,
            "discarded_classes": list(self.discarded_classes),
            "amalgamated_sets": [
                merged.to_dict() for merged in self.amalgamated_sets
            ],
            "replacements": [list(pair) for pair in self.replacements],
            "steps": list(self.steps),
            "eliminated_count": self.eliminated_count,
        }
        if self.result is not None:
            result["group_size"] = self.result.p
            result["result"] = [_words(group) for group in self.result.groups]
        if self.remap is not None:
            result["remap"] = self.remap.to_dict()
        return result


class _Run:
    """Mutable bookkeeping of one construction; frozen into a report."""

    def __init__(self, code: Code, g: int, picks: PickPolicy):
        self.fields: dict[str, Any] = {
            "code_size": len(code),
            "groups": g,
            "picks": picks.name,
        }
        self.steps: list[str] = []

    def log(self, message: str, *args):
        text = message % args if args else message
        logger.info(text)
        self.steps.append(text)

    def report(self, **fields) -> ConstructionReport:
        self.fields.update(fields)
        return ConstructionReport(steps=tuple(self.steps), **self.fields)

    def fail(self, message: str) -> InfeasibleConstructionError:
        self.log("infeasible: %s", message)
        return InfeasibleConstructionError(message, self.report())


def _chosen(chosen: Iterable[Codeword], pool: Iterable[Codeword],
            count: int, what: str) -> tuple[Codeword, ...]:
    chosen = tuple(chosen)
    if len(chosen) != count or len(set(chosen)) != count \
            or not set(chosen) <= set(pool):
        raise ParameterError(
            f"{what}: expected {count} distinct words of the class"
        )
    return chosen


def construct_two_level(
    code: Code,
    g: int,
    *,
    picks: PickPolicy | None = None,
    seed: int | None = None,
) -> tuple[TwoLevelCode, SymbolRemap, ConstructionReport]:
    """Group ``code`` into ``g`` groups with pairwise distinct first symbols.

    The open choices are made by ``picks``; without one, a seed selects
    random picks and no seed selects the deterministic rules.
    """
    if not isinstance(code, Code):
        raise TypeError(f"expected a Code, got {type(code).__name__}")
    q = code.q
    if not 2 <= g <= q:
        raise ParameterError(
            f"the number of groups must be between 2 and q = {q}, got {g}"
        )
    if picks is None:
        picks = DeterministicPicks() if seed is None else SeededPicks(seed)

    run = _Run(code, g, picks)
    n = len(code)
    if n == 0:
        raise run.fail("the code is empty")

    p = -(-n // (2 * g))
    classes = [[] for _ in range(q)]
    for word in code.words:
        classes[word.symbols[0]].append(word)
    q1 = tuple(a for a in range(q) if len(classes[a]) >= p)
    table = FirstSymbolClasses(p, tuple(map(tuple, classes)), q1, q1)
    sizes = table.sizes
    run.fields["classes"] = table
    run.log("p = %d, class sizes %s, Q1 = %s, v = %d",
            p, list(sizes), list(q1), table.v)

    # Splitting
    split: list[tuple[int, tuple[Codeword, ...]]] = []
    for a in q1:
        count = table.alpha[a] * p
        chosen = _chosen(picks.split(a, table.classes[a], count),
                         table.classes[a], count, f"split of class {a}")
        for k in range(table.alpha[a]):
            split.append((a, chosen[k * p:(k + 1) * p]))
    v = len(split)
    run.log("split %d sets of %d", v, p)

    pi = list(range(q))
    preimages: dict[Codeword, Codeword] = {}
    groups: list[tuple[Codeword, ...]] = []
    split_sets: list[SplitSet] = []
    merged_sets: list[AmalgamatedSet] = []
    discarded: tuple[int, ...] = ()

    def relabel(source: int, words: tuple[Codeword, ...], symbol: int):
        pi[symbol] = source
        group = []
        for word in words:
            new = word.with_first(symbol)
            preimages[new] = word
            group.append(new)
        groups.append(tuple(group))
        split_sets.append(SplitSet(source, words, symbol))
        run.log("split set from class %d gets first symbol %d",
                source, symbol)

    if v >= g:
        # Enough split sets: relabel the first g with symbols 0 .. g-1.
        for i, (source, words) in enumerate(split[:g]):
            relabel(source, words, i)
        for source, words in split[g:]:
            split_sets.append(SplitSet(source, words, None))
        run.fields["shortcut"] = True
    else:
        outside = [a for a in range(q) if a not in q1]
        extras = tuple(picks.extra_symbols(outside, sizes, v - len(q1)))
        if len(set(extras)) != v - len(q1) or not set(extras) <= set(outside):
            raise ParameterError(
                f"expected {v - len(q1)} extra symbols outside Q1, "
                f"got {list(extras)}"
            )
        q2 = tuple(sorted(q1 + extras))
        table = dataclasses.replace(table, q2_symbols=q2)
        discarded = tuple(sorted(extras))
        run.fields["classes"] = table
        run.fields["discarded_classes"] = discarded
        run.log("Q2 = %s, classes %s given up", list(q2), list(discarded))

        # Amalgamating
        leftover = [a for a in range(q) if a not in q2]
        needed = g - v
        merged = picks.amalgamate(leftover, sizes, p, needed)
        used: set[int] = set()
        for symbols in merged:
            size = sum(sizes[a] for a in symbols)
            if not set(symbols) <= set(leftover) or used & set(symbols):
                raise ParameterError(
                    f"merged classes {list(symbols)} must be distinct "
                    f"classes outside Q2"
                )
            if not p <= size <= 2 * p - 2:
                raise ParameterError(
                    f"merged classes {list(symbols)} hold {size} words, "
                    f"outside [{p}, {2 * p - 2}]"
                )
            used.update(symbols)
        if len(merged) < needed:
            raise run.fail(
                f"only {len(merged)} of the {needed} merged sets can be "
                f"formed from classes {leftover}"
            )
        if len(merged) > needed:
            raise ParameterError(
                f"expected {needed} merged sets, got {len(merged)}"
            )

        # Replacing
        for (source, words), symbol in zip(split, q2):
            relabel(source, words, symbol)
        for symbols in merged:
            words = tuple(sorted(
                word for a in symbols for word in table.classes[a]
            ))
            survivors = _chosen(picks.survivors(words, p), words, p,
                                f"truncation of classes {list(symbols)}")
            for word in survivors:
                preimages[word] = word
            groups.append(tuple(sorted(survivors)))
            merged_sets.append(AmalgamatedSet(symbols, words, survivors))
            run.log("classes %s merged into %d words, cut to %d",
                    list(symbols), len(words), p)

    result = TwoLevelCode(
        Code(code.alphabet, code.length,
             tuple(word for group in groups for word in group)),
        tuple(groups),
    )
    remap = SymbolRemap(code.alphabet, tuple(pi),
                        MappingProxyType(preimages))
    eliminated = n - g * p
    run.log("%d groups of %d, %d of %d words eliminated",
            g, p, eliminated, n)
    report = run.report(
        split_sets=tuple(split_sets),
        amalgamated_sets=tuple(merged_sets),
        eliminated_count=eliminated,
        result=result,
        remap=remap,
    )
    return result, remap, report


def apply_psi(remap: SymbolRemap, x: Codeword) -> Codeword:
    return remap.psi(x)


def check_lemma_containment(
    remap: SymbolRemap,
    words: Iterable[Codeword],
    ceiling: int = DEFAULT_CANDIDATE_CEILING,
) -> bool:
    """Whether psi(desc(X)) is contained in desc(psi(X)).

    This always holds for a remap produced by the construction; a False
    result is logged as an error.
    """
    words = tuple(words)
    image = SymbolProfile.of(remap.psi(word) for word in words)
    for d in enumerate_descendants(words, ceiling):
        if remap.psi(d) not in image:
            logger.error(
                "psi(%s) = %s escapes desc(psi(X)) for X = {%s}",
                d, remap.psi(d), ", ".join(_words(words)),
            )
            return False
    return True


def check_phi_compatibility(remap: SymbolRemap, code: Iterable[Codeword]) \
        -> bool:
    """Whether y_i = z_i implies phi(y)_i = phi(z)_i on the given words."""
    seen: dict[tuple[int, int], int] = {}
    for word in code:
        original = remap.phi(word)
        for i, (symbol, mapped) in enumerate(zip(word.symbols,
                                                 original.symbols)):
            if seen.setdefault((i, symbol), mapped) != mapped:
                return False
    return True


def check_construction(original: Code, result: TwoLevelCode,
                       remap: SymbolRemap) -> list[str]:
    """The guarantees of the construction that ``result`` breaks.

    An empty list means the constructed code keeps at least half of the
    original, phi maps it one-to-one into the original changing at most the
    first coordinate, the groups have equal size and no two groups share a
    first symbol.
    """
    problems = []
    if 2 * len(result) < len(original):
        problems.append(
            f"kept {len(result)} of {len(original)} words, less than half"
        )
    images = set()
    for word in result.words:
        try:
            image = remap.phi(word)
        except DomainError:
            problems.append(f"{word} has no preimage")
            continue
        if image not in original:
            problems.append(f"{word} maps to {image}, not an original word")
        if image.symbols[1:] != word.symbols[1:]:
            problems.append(f"{word} and {image} differ after coordinate 1")
        if remap.psi(word) != image:
            problems.append(f"phi and psi disagree on {word}")
        images.add(image)
    if len(images) != len(result):
        problems.append("phi is not one-to-one")
    if len({len(group) for group in result.groups}) != 1:
        problems.append("groups differ in size")
    owner: dict[int, int] = {}
    for index, group in enumerate(result.groups, start=1):
        for word in group:
            first = word.symbols[0]
            if owner.setdefault(first, index) != index:
                problems.append(
                    f"first symbol {first} is shared by groups "
                    f"{owner[first]} and {index}"
                )
    return problems
