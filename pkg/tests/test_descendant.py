import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from fpcodes import Code, Codeword
from fpcodes.descendant import (
    ParentIndex,
    SymbolProfile,
    enumerate_desc_t_candidates,
    enumerate_descendants,
    is_descendant,
    parent_sets,
    profiles_intersect,
)
from fpcodes.errors import (
    CapacityError,
    DimensionError,
    DomainError,
    ParameterError,
)
from fpcodes.fixtures import desc_example_coalition, desc_example_descendants


w = Codeword.parse

example3 = Code.parse(9, "011 022 033 044 105 206 307 408 550 660 770 880")


def test_desc_of_the_worked_coalition():
    descendants = enumerate_descendants(desc_example_coalition)
    assert [str(d) for d in descendants] == list(desc_example_descendants)
    assert len(descendants) == 8


def test_desc_small_cases():
    assert enumerate_descendants([w("011"), w("022")]) == \
        (w("011"), w("012"), w("021"), w("022"))
    assert enumerate_descendants([w("105")]) == (w("105"),)

    with pytest.raises(DomainError):
        enumerate_descendants([])
    with pytest.raises(DimensionError):
        enumerate_descendants([w("01"), w("011")])
    with pytest.raises(CapacityError) as info:
        enumerate_descendants(desc_example_coalition, ceiling=7)
    assert info.value.size == 8
    assert info.value.what == "descendant set"


def test_is_descendant():
    assert is_descendant(desc_example_coalition, w("2120"))
    assert not is_descendant(desc_example_coalition, w("1000"))
    assert is_descendant([w("011")], w("011"))
    with pytest.raises(DimensionError):
        is_descendant([w("011")], w("01"))


def test_symbol_profile():
    profile = SymbolProfile.of([w("011"), w("105"), w("550")])
    assert profile.sets == (
        frozenset({0, 1, 5}), frozenset({0, 1, 5}), frozenset({0, 1, 5}),
    )
    assert profile.size() == 27
    assert w("000") in profile
    assert w("206") not in profile


def test_profiles_intersect():
    assert profiles_intersect([w("00"), w("11")], [w("01"), w("10")])
    assert not profiles_intersect([w("011")], [w("022")])
    assert profiles_intersect([w("011")], [w("011")])


@pytest.mark.slow
def test_profiles_intersect_matches_enumeration():
    rng = random.Random(2024)
    for _ in range(1000):
        q = rng.randint(2, 5)
        length = rng.randint(1, 5)

        def coalition():
            size = rng.randint(1, 3)
            return [tuple(rng.randrange(q) for _ in range(length))
                    for _ in range(size)]

        first, second = coalition(), coalition()
        expected = bool(oracles.desc(first, q) & oracles.desc(second, q))
        assert profiles_intersect(
            [Codeword(x) for x in first], [Codeword(x) for x in second]
        ) == expected


def test_candidates_cover_every_descendant():
    code = Code.parse(3, "1100 2102 1122 0021")
    candidates = set(enumerate_desc_t_candidates(code, 2))
    words = oracles.words_of(code)
    for coalition in oracles.coalitions(words, 2):
        for x in oracles.desc(coalition, 3):
            assert Codeword(x) in candidates


def test_candidates_of_example3():
    candidates = list(enumerate_desc_t_candidates(example3, 2))
    assert len(candidates) == 9 * 9 * 9
    assert candidates[0] == w("000")
    assert candidates == sorted(candidates)


def test_candidates_errors():
    with pytest.raises(ParameterError):
        enumerate_desc_t_candidates(example3, 0)
    with pytest.raises(CapacityError) as info:
        enumerate_desc_t_candidates(example3, 2, ceiling=100)
    assert info.value.what == "candidate product"
    assert list(enumerate_desc_t_candidates(
        Code.from_words(3, [], length=2), 2
    )) == []


def test_parent_sets_are_minimal_and_ordered():
    found = parent_sets(example3, w("000"), 3)
    assert found[0] == (w("011"), w("105"), w("550"))
    for members in found:
        assert len(members) <= 3
        assert is_descendant(members, w("000"))
        for i in range(len(members)):
            rest = members[:i] + members[i + 1:]
            assert not rest or not is_descendant(rest, w("000"))
    assert found == sorted(found, key=lambda m: (len(m), m))

    assert parent_sets(example3, w("105"), 2) == [(w("105"),)]
    assert parent_sets(example3, w("105"), 2, exclude=[w("105")]) == []


def test_parent_sets_errors():
    with pytest.raises(ParameterError):
        parent_sets(example3, w("000"), 0)
    with pytest.raises(DimensionError):
        ParentIndex(example3.words).parent_sets(w("00"), 2)


small_codes = st.sets(
    st.tuples(*[st.integers(0, 2)] * 3), min_size=1, max_size=7
)


@settings(derandomize=True, max_examples=60, deadline=None)
@given(small_codes, st.tuples(*[st.integers(0, 2)] * 3))
def test_parent_sets_match_enumeration(words, x):
    words = sorted(words)
    code = Code.from_words(3, [Codeword(word) for word in words])
    found = {frozenset(m) for m in parent_sets(code, Codeword(x), 3)}
    expected = set()
    for coalition in oracles.coalitions(words, 3):
        if x not in oracles.desc(coalition, 3):
            continue
        if any(x in oracles.desc(coalition[:i] + coalition[i + 1:], 3)
               for i in range(len(coalition)) if len(coalition) > 1):
            continue
        expected.add(frozenset(Codeword(word) for word in coalition))
    assert found == expected


coalitions = st.sets(
    st.tuples(*[st.integers(0, 3)] * 4), min_size=1, max_size=5
)


@settings(derandomize=True, max_examples=80, deadline=None)
@given(coalitions)
def test_desc_size_is_the_profile_product(words):
    coalition = [Codeword(word) for word in words]
    descendants = enumerate_descendants(coalition)
    assert len(descendants) == \
        math.prod(len(s) for s in SymbolProfile.of(coalition).sets)
    assert len(set(descendants)) == len(descendants)
    assert set(coalition) <= set(descendants)


@settings(derandomize=True, max_examples=80, deadline=None)
@given(coalitions, st.integers(1, 5))
def test_desc_is_monotone(words, keep):
    larger = sorted(Codeword(word) for word in words)
    smaller = larger[:keep]
    assert set(enumerate_descendants(smaller)) <= \
        set(enumerate_descendants(larger))
