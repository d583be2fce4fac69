"""Constructed codes keep the properties of the codes they come from."""
import random

import pytest

from fpcodes import TwoLevelCode
from fpcodes.construction import construct_two_level
from fpcodes.errors import InfeasibleConstructionError
from fpcodes.fixtures import example3_code, example3_picks
from fpcodes.generators import (
    PrimeField,
    gen_polynomial_fp_code,
    gen_random_code,
    gen_random_grouping,
)
from fpcodes.picks import DeterministicPicks, SeededPicks
from fpcodes.verify_one_level import is_t_fp, is_t_ipp, is_t_sfp, is_t_ta
from fpcodes.verify_two_level import is_Tt_fp, is_Tt_ipp, is_Tt_sfp, is_Tt_ta


pytestmark = pytest.mark.slow

one_level = {"fp": is_t_fp, "sfp": is_t_sfp, "ipp": is_t_ipp, "ta": is_t_ta}
two_level = {"fp": is_Tt_fp, "sfp": is_Tt_sfp, "ipp": is_Tt_ipp, "ta": is_Tt_ta}


def _bases(seed, count):
    rng = random.Random(seed)
    polynomial = gen_polynomial_fp_code(PrimeField(5), 4, 2)
    for index in range(count):
        if index % 3:
            yield polynomial.subcode(
                rng.sample(polynomial.words, rng.randint(4, 10))
            )
        else:
            yield gen_random_code(
                rng.randint(5, 6), 4, rng.randint(4, 8),
                seed=rng.randrange(2 ** 32),
            )


@pytest.mark.parametrize("kind", ["fp", "sfp", "ipp"])
def test_construction_preserves_the_property(kind):
    rng = random.Random(kind)
    bases = 0
    for base in _bases(len(kind), 400):
        if not one_level[kind](base, 2).holds:
            continue
        g = rng.randint(2, min(base.q, len(base) // 2))
        built = 0
        for picks in (DeterministicPicks(), SeededPicks(rng.randrange(2 ** 32))):
            try:
                result, _, _ = construct_two_level(base, g, picks=picks)
            except InfeasibleConstructionError:
                continue
            verdict = two_level[kind](result, 3, 2)
            assert verdict.holds, (str(base), g, picks.name, verdict.witness)
            built += 1
        if built == 2:
            bases += 1
    assert bases >= 50


def test_traceability_is_not_preserved():
    # The grouping of a 2-TA code can leave a coalition closer to a group
    # it has no member in.
    assert is_t_ta(example3_code, 2).holds
    result, _, _ = construct_two_level(example3_code, 4, picks=example3_picks)
    assert not is_Tt_ta(result, 3, 2).holds
    assert is_Tt_ipp(result, 3, 2).holds


def _groupings(seed, count):
    rng = random.Random(seed)
    while count:
        q = rng.randint(2, 4)
        g = rng.choice([2, 3])
        p = rng.randint(1, 3)
        if g * p > q ** 3:
            continue
        code = gen_random_code(q, 3, g * p, seed=rng.randrange(2 ** 32))
        yield gen_random_grouping(code, g, seed=rng.randrange(2 ** 32))
        count -= 1


@pytest.mark.parametrize("kind", list(two_level))
def test_one_level_group_bound_implies_two_level(kind):
    for grouped in _groupings(29, 80):
        assert isinstance(grouped, TwoLevelCode)
        if one_level[kind](grouped.base, 3).holds:
            assert two_level[kind](grouped, 3, 2).holds, str(grouped)
