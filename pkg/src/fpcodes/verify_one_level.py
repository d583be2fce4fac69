"""Exhaustive deciders for the one-level properties of a code.

For a coalition bound t a code C is

* t-FP (frameproof) if no coalition of at most t words has a codeword
  outside the coalition among its descendants;
* t-SFP (secure frameproof) if coalitions of at most t words with a common
  descendant always share a member;
* t-IPP (identifiable parent property) if all coalitions of at most t words
  able to produce a word share a member;
* t-TA (traceability) if every codeword nearest to a descendant of a
  coalition of at most t words belongs to the coalition.

Every decider returns a Verdict, carrying a replayable witness when the
property fails.
"""
from __future__ import annotations

import logging
from functools import partial

from . import Code
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


__all__ = ["is_t_fp", "is_t_sfp", "is_t_ipp", "is_t_ta"]

logger = logging.getLogger(__name__)


def _context(code: Code, t: int, budget: Budget) -> SearchContext:
    if not isinstance(code, Code):
        raise TypeError(f"expected a Code, got {type(code).__name__}")
    if t < 1:
        raise ParameterError(f"coalition size bound must be positive, got {t}")
    budget.check(len(code), code.length, min(t, len(code)))
    return SearchContext.user(code, t)


def _candidates(ctx: SearchContext, budget: Budget):
    return enumerate_desc_t_candidates(
        ctx.code, ctx.bound or 1, budget.max_candidates
    )


def _verdict(kind: str, t: int, witness) -> Verdict:
    verdict = Verdict(kind, witness is None, t, witness=witness)
    logger.info("%s", verdict)
    return verdict


def is_t_fp(code: Code, t: int, *, budget: Budget = DEFAULT_BUDGET,
            jobs: int = 1) -> Verdict:
    ctx = _context(code, t, budget)
    witness = first_violation(
        partial(framing_violation, ctx), code.words, jobs
    )
    return _verdict("fp", t, witness)


def is_t_sfp(code: Code, t: int, *, budget: Budget = DEFAULT_BUDGET,
             jobs: int = 1) -> Verdict:
    ctx = _context(code, t, budget)
    witness = first_violation(
        partial(separation_violation, ctx), _candidates(ctx, budget), jobs
    )
    return _verdict("sfp", t, witness)


def is_t_ipp(code: Code, t: int, *, budget: Budget = DEFAULT_BUDGET,
             jobs: int = 1) -> Verdict:
    ctx = _context(code, t, budget)
    witness = first_violation(
        partial(parent_violation, ctx), _candidates(ctx, budget), jobs
    )
    return _verdict("ipp", t, witness)


def is_t_ta(code: Code, t: int, *, budget: Budget = DEFAULT_BUDGET,
            jobs: int = 1) -> Verdict:
    ctx = _context(code, t, budget)
    witness = first_violation(
        partial(tracing_violation, ctx), _candidates(ctx, budget), jobs
    )
    return _verdict("ta", t, witness)
