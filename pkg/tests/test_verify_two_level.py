import random

import pytest

import oracles
from fpcodes import Code, Codeword, TwoLevelCode
from fpcodes.errors import ParameterError
from fpcodes.fixtures import example3_code, example3_grouping, example3_witness
from fpcodes.generators import (
    PrimeField,
    gen_polynomial_fp_code,
    gen_random_code,
    gen_random_grouping,
    partition_by_first_coordinate,
)
from fpcodes.verdict import Level, ParentWitness, SeparationWitness
from fpcodes.verify_one_level import is_t_fp, is_t_ipp, is_t_sfp, is_t_ta
from fpcodes.verify_two_level import is_Tt_fp, is_Tt_ipp, is_Tt_sfp, is_Tt_ta


w = Codeword.parse

deciders = {"fp": is_Tt_fp, "sfp": is_Tt_sfp, "ipp": is_Tt_ipp, "ta": is_Tt_ta}
one_level = {"fp": is_t_fp, "sfp": is_t_sfp, "ipp": is_t_ipp, "ta": is_t_ta}

crossed_square = TwoLevelCode.from_groups(2, [["00", "11"], ["01", "10"]])


def test_example3_grouping_is_not_traceable():
    verdict = is_Tt_ta(example3_grouping, 3, 2)
    assert not verdict
    assert verdict.name == "(3,2)-TA"
    witness = verdict.witness
    assert witness.level is Level.GROUP
    assert witness.coalition == (w("011"), w("105"), w("550"))
    assert witness.descendant == w("000")
    assert witness.nearest == w("206")
    assert witness.nearest_group == 4
    assert witness.coalition_groups == (1, 3)
    assert witness.to_dict() == example3_witness
    assert verdict.replay(example3_grouping)


def test_example3_grouping_keeps_user_traceability():
    assert is_t_ta(example3_grouping.base, 2).holds


def test_single_group_is_trivially_two_level():
    single = TwoLevelCode.single_group(example3_code)
    for decide in deciders.values():
        assert decide(single, 3, 2).holds


def test_crossed_square_is_not_secure_frameproof_for_groups():
    verdict = is_Tt_sfp(crossed_square, 2, 1)
    assert not verdict
    witness = verdict.witness
    assert isinstance(witness, SeparationWitness)
    assert witness.level is Level.GROUP
    assert witness.descendant == w("00")
    assert set(crossed_square.group_indices(witness.first)).isdisjoint(
        crossed_square.group_indices(witness.second)
    )
    assert verdict.replay(crossed_square)


def test_crossed_square_has_no_identifiable_parent_group():
    verdict = is_Tt_ipp(crossed_square, 2, 1)
    assert not verdict
    assert isinstance(verdict.witness, ParentWitness)
    assert verdict.witness.descendant == w("00")
    assert verdict.witness.level is Level.GROUP
    assert verdict.replay(crossed_square)


def test_user_clause_decides_first():
    square = TwoLevelCode.from_groups(2, [["00", "01"], ["10", "11"]])
    verdict = is_Tt_fp(square, 3, 2)
    assert not verdict
    assert verdict.T == 3
    assert verdict.witness.level is Level.USER
    assert verdict.replay(square.base)


def test_partitioned_polynomial_code_is_two_level_frameproof():
    grouped = partition_by_first_coordinate(
        gen_polynomial_fp_code(PrimeField(5), 4, 2)
    )
    assert (grouped.g, grouped.p) == (5, 5)
    assert is_Tt_fp(grouped, 3, 2).holds


def test_parameter_checks():
    with pytest.raises(ParameterError):
        is_Tt_fp(crossed_square, 1, 2)
    with pytest.raises(ParameterError):
        is_Tt_ta(crossed_square, 2, 0)
    with pytest.raises(TypeError):
        is_Tt_ipp(crossed_square.base, 2, 1)


def test_parallel_scan_finds_the_same_witness():
    assert is_Tt_ta(example3_grouping, 3, 2, jobs=2) == \
        is_Tt_ta(example3_grouping, 3, 2, jobs=1)


def _random_groupings(seed, count):
    rng = random.Random(seed)
    while count:
        q = rng.randint(2, 4)
        length = rng.randint(2, 4)
        g = rng.choice([2, 3, 4])
        p = rng.randint(1, 3)
        if g * p > q ** length:
            continue
        code = gen_random_code(q, length, g * p, seed=rng.randrange(2 ** 32))
        yield gen_random_grouping(code, g, seed=rng.randrange(2 ** 32))
        count -= 1


@pytest.mark.slow
def test_deciders_agree_with_definitions():
    for grouped in _random_groupings(3, 60):
        words = oracles.words_of(grouped)
        group = oracles.groups_of(grouped)
        for kind, decide in deciders.items():
            verdict = decide(grouped, 3, 2)
            assert verdict.holds == oracles.two_level(
                kind, words, grouped.q, group, 3, 2
            ), (kind, str(grouped))
            assert verdict.replay(grouped if verdict.witness is None
                                  or verdict.witness.level is Level.GROUP
                                  else grouped.base)


@pytest.mark.slow
def test_implication_lattice():
    for grouped in _random_groupings(17, 100):
        held = {kind: decide(grouped, 3, 2).holds
                for kind, decide in deciders.items()}
        assert not held["ta"] or held["ipp"]
        assert not held["ipp"] or held["sfp"]
        assert not held["sfp"] or held["fp"]
        for kind in deciders:
            if held[kind]:
                assert one_level[kind](grouped.base, 2).holds
