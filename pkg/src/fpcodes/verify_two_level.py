"""Deciders for the two-level properties of a grouped code.

A two-level code with group bound T and user bound t must satisfy the
one-level property for coalitions of at most t users, and the group
version of it for coalitions of at most T users: a coalition may only
frame, collide with, or be traced to groups it has a member in.
The one-level clause is checked first and decides the verdict on failure.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from functools import partial

from . import TwoLevelCode
from .budget import DEFAULT_BUDGET, Budget
from .descendant import enumerate_desc_t_candidates
from .errors import ParameterError
from .kernels import (
    SearchContext,
    framing_violation,
    parent_violation,
    separation_violation,
    tracing_violation,
)
from ._scan import first_violation
from .verdict import Verdict
from .verify_one_level import is_t_fp, is_t_ipp, is_t_sfp, is_t_ta


__all__ = ["is_Tt_fp", "is_Tt_sfp", "is_Tt_ipp", "is_Tt_ta"]

logger = logging.getLogger(__name__)


def _decide(
    kind: str,
    code: TwoLevelCode,
    T: int,
    t: int,
    one_level: Callable[..., Verdict],
    finder: Callable,
    over_codewords: bool,
    budget: Budget,
    jobs: int,
) -> Verdict:
    if not isinstance(code, TwoLevelCode):
        raise TypeError(f"expected a TwoLevelCode, got {type(code).__name__}")
    if t < 1:
        raise ParameterError(f"user bound must be positive, got {t}")
    if T < t:
        raise ParameterError(f"group bound {T} is below user bound {t}")
    budget.check(len(code), code.length, min(T, len(code)))

    users = one_level(code.base, t, budget=budget, jobs=jobs)
    if not users.holds:
        verdict = Verdict(kind, False, t, T, users.witness)
        logger.info("%s (user clause)", verdict)
        return verdict

    ctx = SearchContext.group(code, T)
    if over_codewords:
        items = code.words
    else:
        items = enumerate_desc_t_candidates(
            code, ctx.bound, budget.max_candidates
        )
    witness = first_violation(partial(finder, ctx), items, jobs)
    verdict = Verdict(kind, witness is None, t, T, witness)
    logger.info("%s", verdict)
    return verdict


def is_Tt_fp(code: TwoLevelCode, T: int, t: int, *,
             budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> Verdict:
    return _decide("fp", code, T, t, is_t_fp, framing_violation, True,
                   budget, jobs)


def is_Tt_sfp(code: TwoLevelCode, T: int, t: int, *,
              budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> Verdict:
    return _decide("sfp", code, T, t, is_t_sfp, separation_violation, False,
                   budget, jobs)


def is_Tt_ipp(code: TwoLevelCode, T: int, t: int, *,
              budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> Verdict:
    return _decide("ipp", code, T, t, is_t_ipp, parent_violation, False,
                   budget, jobs)


def is_Tt_ta(code: TwoLevelCode, T: int, t: int, *,
             budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> Verdict:
    return _decide("ta", code, T, t, is_t_ta, tracing_violation, False,
                   budget, jobs)
