"""Worked examples with known answers, runnable end to end.

``run_repro(name)`` recomputes one example and compares it against the
values recorded here.
"""
from typing import Any as _Any

from . import Code as _Code
from . import Codeword as _Codeword
from . import TwoLevelCode as _TwoLevelCode
from .construction import check_lemma_containment as _check_lemma_containment
from .construction import construct_two_level as _construct_two_level
from .descendant import enumerate_descendants as _enumerate_descendants
from .errors import ParameterError as _ParameterError
from .picks import ScriptedPicks as _ScriptedPicks
from .verify_one_level import is_t_ta as _is_t_ta
from .verify_two_level import is_Tt_ta as _is_Tt_ta


def synthesize_from_class_sizes(q: int, length: int, sizes) -> _Code:
    """A code with ``sizes[a]`` words starting with symbol a.

    The words of class a are a followed by 0, 1, 2, ... written in base q
    over the remaining length - 1 coordinates.
    """
    sizes = tuple(sizes)
    if len(sizes) > q:
        raise _ParameterError(f"{len(sizes)} class sizes for {q} symbols")
    room = q ** (length - 1)
    if any(not 0 <= size <= room for size in sizes):
        raise _ParameterError(
            f"classes hold between 0 and {room} words of length {length}"
        )
    words = []
    for a, size in enumerate(sizes):
        for counter in range(size):
            tail = []
            for _ in range(length - 1):
                counter, digit = divmod(counter, q)
                tail.append(digit)
            words.append(_Codeword((a, *reversed(tail))))
    return _Code.from_words(q, words, length)


# A coalition over {0, 1, 2} and its descendants.
desc_example_q = 3
desc_example_coalition = tuple(
    _Codeword.parse(word) for word in ("1100", "2102", "1122")
)
desc_example_descendants = (
    "1100", "1102", "1120", "1122", "2100", "2102", "2120", "2122",
)

# 91 words over 11 symbols grouped into 9 groups.
example2_q = 11
example2_length = 3
example2_groups = 9
example2_class_sizes = (4, 5, 10, 11, 17, 5, 2, 4, 18, 10, 5)
example2_code = synthesize_from_class_sizes(
    example2_q, example2_length, example2_class_sizes
)
example2_picks = _ScriptedPicks(extras=(1, 5, 10), amalgamations=((0, 6, 7),))
example2_expected = {
    "p": 6,
    "v": 8,
    "q1": 5,
    "Q1": [2, 3, 4, 8, 9],
    "discarded_classes": [1, 5, 10],
    "amalgamated_symbols": [[0, 6, 7]],
    "amalgamated_sizes": [10],
    "groups": 9,
    "group_size": 6,
    "eliminated_count": 37,
}

# A 2-traceability code whose grouping is not (3, 2)-traceable.
example3_q = 9
example3_code = _Code.parse(
    example3_q, "011 022 033 044 105 206 307 408 550 660 770 880"
)
example3_groups = 4
example3_picks = _ScriptedPicks(extras=(8,), amalgamations=((1, 5), (2, 6)))
example3_grouping = _TwoLevelCode.from_groups(example3_q, [
    ["011", "022"],
    ["833", "844"],
    ["105", "550"],
    ["206", "660"],
])
example3_witness = {
    "level": "group",
    "coalition": ["011", "105", "550"],
    "descendant": "000",
    "nearest": "206",
    "nearest_group": 4,
    "coalition_groups": [1, 3],
}
example3_expected = {
    "one_level_ta": True,
    "grouping": [[str(w) for w in group] for group in example3_grouping.groups],
    "pi": {"8": 0},
    "lemma_containment": True,
    "two_level_ta": False,
    "witness": example3_witness,
}


def _desc_example() -> dict[str, _Any]:
    return {
        "descendants": [
            str(word) for word in _enumerate_descendants(desc_example_coalition)
        ],
    }


def _example2() -> dict[str, _Any]:
    result, _, report = _construct_two_level(
        example2_code, example2_groups, picks=example2_picks
    )
    classes = report.classes
    return {
        "p": classes.p,
        "v": classes.v,
        "q1": classes.q1,
        "Q1": list(classes.q1_symbols),
        "discarded_classes": list(report.discarded_classes),
        "amalgamated_symbols": [
            list(merged.symbols) for merged in report.amalgamated_sets
        ],
        "amalgamated_sizes": [
            merged.size for merged in report.amalgamated_sets
        ],
        "groups": result.g,
        "group_size": result.p,
        "eliminated_count": report.eliminated_count,
    }


def _example3() -> dict[str, _Any]:
    result, remap, _ = _construct_two_level(
        example3_code, example3_groups, picks=example3_picks
    )
    verdict = _is_Tt_ta(result, 3, 2, jobs=1)
    return {
        "one_level_ta": _is_t_ta(example3_code, 2, jobs=1).holds,
        "grouping": [[str(w) for w in group] for group in result.groups],
        "pi": remap.to_dict()["pi"],
        "lemma_containment": _check_lemma_containment(
            remap, [_Codeword.parse("833"), _Codeword.parse("105")]
        ),
        "two_level_ta": verdict.holds,
        "witness": None if verdict.witness is None
        else verdict.witness.to_dict(),
    }


reproductions = {
    "desc-example": (_desc_example, {"descendants": list(desc_example_descendants)}),
    "example2": (_example2, example2_expected),
    "example3": (_example3, example3_expected),
}


def run_repro(name: str) -> tuple[bool, dict[str, _Any], dict[str, _Any]]:
    """Recompute an example; returns (matched, expected, actual)."""
    try:
        compute, expected = reproductions[name]
    except KeyError:
        raise _ParameterError(
            f"unknown example {name!r}, "
            f"expected one of {', '.join(reproductions)}"
        ) from None
    actual = compute()
    return actual == expected, expected, actual
