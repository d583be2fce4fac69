import itertools

import pytest

from fpcodes import Code, Codeword
from fpcodes.errors import ParameterError, PreconditionError
from fpcodes.generators import (
    PrimeField,
    first_coordinate_counts,
    gen_polynomial_fp_code,
    gen_random_code,
    gen_random_grouping,
    is_prime,
    partition_by_first_coordinate,
    permute_coordinates,
)


w = Codeword.parse


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_prime_field_rejects_composites():
    for modulus in (0, 1, 4, 9, 15):
        with pytest.raises(PreconditionError):
            PrimeField(modulus)
    with pytest.raises(TypeError):
        PrimeField(5.0)


@pytest.mark.parametrize("modulus", [2, 3, 5, 7, 11, 13])
def test_field_operations_match_modular_arithmetic(modulus):
    field = PrimeField(modulus)
    for a, b in itertools.product(range(modulus), repeat=2):
        assert field.add(a, b) == (a + b) % modulus
        assert field.sub(a, b) == (a - b) % modulus
        assert field.mul(a, b) == (a * b) % modulus
        if b:
            assert field.mul(field.div(a, b), b) == a
    for a in range(1, modulus):
        assert field.mul(a, field.inv(a)) == 1
        assert field.add(a, field.neg(a)) == 0
    with pytest.raises(ZeroDivisionError):
        field.inv(0)


def test_field_evaluate():
    field = PrimeField(7)
    # 3 + 2x + x^2
    assert field.evaluate((3, 2, 1), 0) == 3
    assert field.evaluate((3, 2, 1), 2) == (3 + 4 + 4) % 7
    assert field.evaluate((), 5) == 0


def test_polynomial_code_sizes():
    assert len(gen_polynomial_fp_code(PrimeField(5), 4, 2)) == 25
    assert len(gen_polynomial_fp_code(PrimeField(5), 4, 1)) == 625
    constants = gen_polynomial_fp_code(PrimeField(3), 3, 3)
    assert constants.words == (w("000"), w("111"), w("222"))


def test_polynomial_code_agreement_bound():
    code = gen_polynomial_fp_code(PrimeField(5), 4, 2)
    for x, y in itertools.combinations(code.words, 2):
        agreements = sum(a == b for a, b in zip(x, y))
        assert agreements <= 1


def test_polynomial_code_custom_points():
    code = gen_polynomial_fp_code(PrimeField(7), 3, 2, eval_points=[6, 2, 4])
    assert len(code) == 49
    assert w("000") in code


def test_polynomial_code_preconditions():
    with pytest.raises(PreconditionError):
        gen_polynomial_fp_code(PrimeField(3), 4, 2)
    with pytest.raises(PreconditionError):
        gen_polynomial_fp_code(PrimeField(5), 2, 1)
    with pytest.raises(PreconditionError):
        gen_polynomial_fp_code(PrimeField(5), 3, 2, eval_points=[0, 1, 1])
    with pytest.raises(PreconditionError):
        gen_polynomial_fp_code(PrimeField(5), 3, 2, eval_points=[0, 1])
    with pytest.raises(PreconditionError):
        gen_polynomial_fp_code(PrimeField(5), 3, 2, eval_points=[0, 1, 5])
    with pytest.raises(ParameterError):
        gen_polynomial_fp_code(PrimeField(5), 3, 0)


def test_partition_of_the_polynomial_code():
    grouped = partition_by_first_coordinate(
        gen_polynomial_fp_code(PrimeField(5), 4, 2)
    )
    assert grouped.g == 5
    assert grouped.p == 5
    assert len(grouped) == 25
    for index, group in enumerate(grouped.groups, start=1):
        assert {word[0] for word in group} == {index - 1}


def test_partition_edge_cases():
    single = partition_by_first_coordinate(Code.parse(3, "012 021"))
    assert single.g == 1 and single.p == 2

    with pytest.raises(PreconditionError):
        partition_by_first_coordinate(Code.parse(3, "012 021 101 110 122"))
    with pytest.raises(PreconditionError):
        partition_by_first_coordinate(Code.from_words(3, [], length=3))


def test_first_coordinate_counts():
    assert first_coordinate_counts(Code.parse(4, "012 021 301")) == (2, 0, 0, 1)


def test_permute_coordinates():
    code = Code.parse(3, "012 120")
    assert permute_coordinates(code, (2, 0, 1)).words == (w("012"), w("201"))
    with pytest.raises(ParameterError):
        permute_coordinates(code, (0, 0, 1))


def test_random_code():
    assert gen_random_code(2, 2, 4, seed=1).words == \
        (w("00"), w("01"), w("10"), w("11"))
    first = gen_random_code(3, 3, 5, seed=7)
    assert len(first) == 5
    assert gen_random_code(3, 3, 5, seed=7) == first
    with pytest.raises(ParameterError):
        gen_random_code(2, 2, 5, seed=1)


def test_random_grouping():
    code = gen_random_code(3, 3, 6, seed=2)
    grouped = gen_random_grouping(code, 3, seed=4)
    assert grouped.g == 3 and grouped.p == 2
    assert grouped == gen_random_grouping(code, 3, seed=4)
    with pytest.raises(ParameterError):
        gen_random_grouping(code, 4)
