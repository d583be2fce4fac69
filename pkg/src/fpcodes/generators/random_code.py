from __future__ import annotations

import random

from .. import Alphabet, Code, Codeword, TwoLevelCode
from ..errors import ParameterError


__all__ = ["gen_random_code", "gen_random_grouping"]


def _decode(index: int, q: int, length: int) -> Codeword:
    symbols = []
    for _ in range(length):
        index, symbol = divmod(index, q)
        symbols.append(symbol)
    return Codeword(tuple(reversed(symbols)))


def gen_random_code(q: int, length: int, n: int,
                    seed: int | None = None) -> Code:
    """n distinct words drawn uniformly from all q^length words."""
    alphabet = Alphabet(q)
    if length < 1:
        raise ParameterError(f"the length must be positive, got {length}")
    total = q ** length
    if not 0 <= n <= total:
        raise ParameterError(
            f"cannot draw {n} distinct words out of {total}"
        )
    indices = random.Random(seed).sample(range(total), n)
    return Code(alphabet, length,
                tuple(_decode(i, q, length) for i in indices))


def gen_random_grouping(code: Code, g: int,
                        seed: int | None = None) -> TwoLevelCode:
    """A uniformly random partition of the code into g equal groups."""
    if g < 1 or len(code) % g:
        raise ParameterError(
            f"{len(code)} words do not split into {g} equal groups"
        )
    if not len(code):
        raise ParameterError("cannot group an empty code")
    words = list(code.words)
    random.Random(seed).shuffle(words)
    p = len(words) // g
    return TwoLevelCode(code, tuple(
        tuple(words[i * p:(i + 1) * p]) for i in range(g)
    ))
