"""Per-word violation finders shared by the one- and two-level deciders.

Each finder looks at a single word (a codeword for frameproofness, a
candidate descendant otherwise) and returns a witness or None. Only minimal
parent sets are examined: whenever a parent set X violates a property, so
does every minimal parent set contained in X, because shrinking X can only
shrink its member set and its group set.
"""
from __future__ import annotations

import dataclasses

from . import Code, Codeword, TwoLevelCode, min_distance_to_code
from .descendant import ParentIndex
from .verdict import (
    FramingWitness,
    Level,
    ParentWitness,
    SeparationWitness,
    TracingWitness,
)


__all__ = [
    "SearchContext",
    "framing_violation",
    "separation_violation",
    "parent_violation",
    "tracing_violation",
]


@dataclasses.dataclass(slots=True, frozen=True)
class SearchContext:
    code: Code | TwoLevelCode
    index: ParentIndex
    bound: int
    level: Level

    @classmethod
    def user(cls, code: Code, bound: int) -> SearchContext:
        return cls(code, ParentIndex(code.words), min(bound, len(code)),
                   Level.USER)

    @classmethod
    def group(cls, code: TwoLevelCode, bound: int) -> SearchContext:
        return cls(code, ParentIndex(code.words), min(bound, len(code)),
                   Level.GROUP)

    def labels(self, words) -> frozenset:
        if self.level is Level.USER:
            return frozenset(words)
        return frozenset(self.code.group_indices(words))

    def label(self, word: Codeword):
        if self.level is Level.USER:
            return word
        return self.code.group_of(word)

    def parents(self, x: Codeword, exclude=()) -> list[tuple[Codeword, ...]]:
        return self.index.parent_sets(x, self.bound, exclude)


def framing_violation(ctx: SearchContext, z: Codeword) \
        -> FramingWitness | None:
    if ctx.level is Level.USER:
        outsiders = (z,)
    else:
        outsiders = ctx.code.group(ctx.code.group_of(z))
    parents = ctx.parents(z, exclude=outsiders)
    if not parents:
        return None
    return FramingWitness(parents[0], z, ctx.level, ctx.bound)


def separation_violation(ctx: SearchContext, x: Codeword) \
        -> SeparationWitness | None:
    parents = ctx.parents(x)
    labelled = [(members, ctx.labels(members)) for members in parents]
    for a, (first, first_labels) in enumerate(labelled):
        for second, second_labels in labelled[a + 1:]:
            if first_labels.isdisjoint(second_labels):
                return SeparationWitness(first, second, x, ctx.level,
                                         ctx.bound)
    return None


def parent_violation(ctx: SearchContext, x: Codeword) \
        -> ParentWitness | None:
    common = None
    used = []
    for members in ctx.parents(x):
        labels = ctx.labels(members)
        common = labels if common is None else common & labels
        used.append(members)
        if not common:
            return ParentWitness(x, tuple(used), ctx.level, ctx.bound)
    return None


def tracing_violation(ctx: SearchContext, x: Codeword) \
        -> TracingWitness | None:
    parents = ctx.parents(x)
    if not parents:
        return None
    _, nearest = min_distance_to_code(ctx.code, x)
    nearest = sorted(nearest)
    for members in parents:
        labels = ctx.labels(members)
        for z in nearest:
            if ctx.label(z) in labels:
                continue
            if ctx.level is Level.USER:
                return TracingWitness(members, x, z, ctx.level, ctx.bound)
            return TracingWitness(
                members, x, z, ctx.level, ctx.bound,
                nearest_group=ctx.code.group_of(z),
                coalition_groups=ctx.code.group_indices(members),
            )
    return None
