from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from .. import Code, Codeword, TwoLevelCode
from ..errors import ParameterError, PreconditionError


__all__ = [
    "first_coordinate_counts",
    "partition_by_first_coordinate",
    "permute_coordinates",
]


def first_coordinate_counts(code: Code) -> tuple[int, ...]:
    """How many words start with each symbol of the alphabet."""
    counts = Counter(word.symbols[0] for word in code.words)
    return tuple(counts[a] for a in range(code.q))


def permute_coordinates(code: Code, permutation: Sequence[int]) -> Code:
    """The code whose i-th coordinate is coordinate ``permutation[i]`` of
    the original. Moves any coordinate to the front before partitioning."""
    permutation = tuple(permutation)
    if sorted(permutation) != list(range(code.length)):
        raise ParameterError(
            f"{list(permutation)} is not a permutation of "
            f"0 .. {code.length - 1}"
        )
    return Code(code.alphabet, code.length, tuple(
        Codeword(tuple(word.symbols[i] for i in permutation))
        for word in code.words
    ))


def partition_by_first_coordinate(code: Code) -> TwoLevelCode:
    """One group per first symbol in use, in ascending symbol order.

    Every used symbol must start the same number of words; codes without
    that property are grouped by :func:`fpcodes.construction.construct_two_level`.
    """
    counts = first_coordinate_counts(code)
    used = [a for a, count in enumerate(counts) if count]
    if not used:
        raise PreconditionError("cannot partition an empty code")
    if len({counts[a] for a in used}) != 1:
        raise PreconditionError(
            "first symbols are not uniformly distributed "
            f"(class sizes {[counts[a] for a in used]}); "
            "use construct_two_level instead"
        )
    groups = tuple(
        tuple(word for word in code.words if word.symbols[0] == a)
        for a in used
    )
    return TwoLevelCode(code, groups)
