import pytest

from fpcodes import Code, TwoLevelCode
from fpcodes.errors import ParameterError
from fpcodes.fixtures import example3_code, example3_grouping
from fpcodes.properties import (
    FingerprintProperty,
    PropertyRegistry,
    properties,
    verify_all,
)
from fpcodes.verify_one_level import is_t_fp
from fpcodes.verify_two_level import is_Tt_fp


def test_registered_properties():
    assert list(properties) == ["ta", "ipp", "sfp", "fp"]
    assert str(properties["sfp"]) == "sfp"
    assert properties["fp"].title == "frameproof"


def test_registry_rules():
    frameproof = FingerprintProperty("fp", "frameproof", is_t_fp, is_Tt_fp)
    registry = PropertyRegistry([frameproof])
    assert registry.register(
        FingerprintProperty("ta", "tracing", is_t_fp, is_Tt_fp)
    ).name == "ta"
    with pytest.raises(ValueError):
        registry.register(frameproof)
    with pytest.raises(ValueError):
        registry["other"] = frameproof
    with pytest.raises(TypeError):
        del registry["fp"]
    with pytest.raises(TypeError):
        registry.register("fp")
    with pytest.raises(KeyError):
        registry["sfp"]
    with pytest.raises(ParameterError):
        registry.lookup("sfp")
    assert list(registry) == ["fp", "ta"]
    with pytest.raises(ValueError):
        PropertyRegistry([frameproof, frameproof])


def test_check_picks_the_level():
    fp = properties["fp"]
    assert fp.check(example3_code, 2).T is None
    assert fp.check(example3_grouping, 2).T is None
    assert fp.check(example3_grouping, 2, 3).T == 3
    with pytest.raises(ParameterError):
        fp.check(example3_code, 2, 3)


def test_verify_all_strongest_first():
    verdicts = verify_all(example3_grouping, 2, 3, jobs=1)
    assert list(verdicts) == ["ta", "ipp", "sfp", "fp"]
    assert [v.holds for v in verdicts.values()] == [False, True, True, True]

    square = Code.parse(2, "00 01 10 11")
    assert not any(verify_all(square, 2).values())
    single = TwoLevelCode.single_group(Code.parse(3, "012"))
    assert all(verify_all(single, 1, 1).values())
