from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

from .. import Alphabet, Code, Codeword
from ..errors import ParameterError, PreconditionError
from .field import PrimeField


__all__ = ["gen_polynomial_fp_code"]

logger = logging.getLogger(__name__)


def gen_polynomial_fp_code(
    field: PrimeField,
    length: int,
    t: int,
    eval_points: Sequence[int] | None = None,
) -> Code:
    """The evaluations of every polynomial of degree below ceil(length/t)
    at ``length`` distinct points of the field.

    The result is a t-frameproof code of q^ceil(length/t) words: two
    distinct such polynomials agree on fewer than ceil(length/t) points.
    Points default to 0 .. length-1. Polynomials are enumerated by
    coefficient vector, highest degree first, so the constant term varies
    fastest.
    """
    if not isinstance(field, PrimeField):
        raise TypeError(f"expected a PrimeField, got {type(field).__name__}")
    if t < 1:
        raise ParameterError(f"coalition size bound must be positive, got {t}")
    if length < 3:
        raise PreconditionError(f"the length must be at least 3, got {length}")
    q = field.modulus
    if length > q:
        raise PreconditionError(
            f"a field of {q} elements has no {length} distinct points"
        )
    if eval_points is None:
        eval_points = tuple(range(length))
    eval_points = tuple(eval_points)
    if len(eval_points) != length:
        raise PreconditionError(
            f"expected {length} evaluation points, got {len(eval_points)}"
        )
    if any(a not in field for a in eval_points):
        raise PreconditionError(f"evaluation points must lie in {field}")
    if len(set(eval_points)) != length:
        raise PreconditionError("evaluation points must be distinct")

    k = -(-length // t)
    words = []
    for high_first in itertools.product(range(q), repeat=k):
        coefficients = high_first[::-1]
        words.append(Codeword(tuple(
            field.evaluate(coefficients, a) for a in eval_points
        )))
    logger.debug("%d polynomials of degree < %d over %s", len(words), k, field)
    return Code(Alphabet(q), length, tuple(words))
