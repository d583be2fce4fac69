from __future__ import annotations

import dataclasses
import logging
import os
from math import comb
from typing import Self

from .errors import CapacityError, ParameterError


__all__ = [
    "Budget",
    "DEFAULT_BUDGET",
    "DEFAULT_CANDIDATE_CEILING",
    "BUDGET_ENV_VAR",
    "subset_count",
]

logger = logging.getLogger(__name__)

DEFAULT_CANDIDATE_CEILING = 2 ** 24
BUDGET_ENV_VAR = "FPCODES_BUDGET"


def subset_count(n: int, max_size: int) -> int:
    """Number of subsets of an n-set with at most max_size elements
    (the empty set excluded)."""
    return sum(comb(n, k) for k in range(1, min(n, max_size) + 1))


@dataclasses.dataclass(slots=True, frozen=True)
class Budget:
    """Guardrails for the exhaustive verifiers.

    Every verifier enumerates subsets of a code and words of a symbol
    profile product, both of which grow explosively. A budget refuses work
    that would not finish on a desk.
    """

    max_code_size: int | None = 64
    max_threshold: int | None = 3
    max_length: int | None = 8
    max_candidates: int = DEFAULT_CANDIDATE_CEILING

    @property
    def max_subsets(self) -> int | None:
        if self.max_code_size is None or self.max_threshold is None:
            return None
        return subset_count(self.max_code_size, self.max_threshold)

    @classmethod
    def unlimited(cls, max_candidates: int = DEFAULT_CANDIDATE_CEILING) \
            -> Self:
        return cls(None, None, None, max_candidates)

    @classmethod
    def from_env(cls, base: Budget | None = None) -> Self:
        """Apply the ``FPCODES_BUDGET`` candidate ceiling override, if set."""
        base = base if base is not None else cls()
        raw = os.environ.get(BUDGET_ENV_VAR)
        if not raw:
            return base
        try:
            ceiling = int(raw)
        except ValueError:
            raise ParameterError(
                f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}"
            ) from None
        logger.debug("candidate ceiling overridden to %d from env", ceiling)
        return base.with_candidates(ceiling)

    def with_candidates(self, ceiling: int) -> Self:
        if ceiling < 1:
            raise ParameterError("candidate ceiling must be positive")
        return dataclasses.replace(self, max_candidates=ceiling)

    def check(self, code_size: int, length: int, threshold: int) -> None:
        """Raise CapacityError if a verification over subsets of size at most
        ``threshold`` of a code would exceed this budget."""
        if self.max_code_size is not None and code_size > self.max_code_size:
            raise CapacityError("code", code_size, self.max_code_size)
        if self.max_length is not None and length > self.max_length:
            raise CapacityError("word length", length, self.max_length)
        if self.max_threshold is not None and threshold > self.max_threshold:
            raise CapacityError(
                "coalition size bound", threshold, self.max_threshold
            )
        limit = self.max_subsets
        if limit is not None:
            subsets = subset_count(code_size, threshold)
            if subsets > limit:
                raise CapacityError("coalition family", subsets, limit)

    def check_candidates(self, what: str, size: int) -> None:
        if size > self.max_candidates:
            raise CapacityError(what, size, self.max_candidates)


DEFAULT_BUDGET = Budget()
