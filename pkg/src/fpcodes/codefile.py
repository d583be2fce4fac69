"""Line-oriented text files for codes and grouped codes.

A code file starts with the header ``q length`` and lists one word per
line as space-separated integer symbols. A grouped code file has the header
``q length g p`` and prefixes every word with its group index (from 1).
Blank lines and everything after a ``#`` are ignored.
"""
from __future__ import annotations

import logging
from os import PathLike
from pathlib import Path

from . import Alphabet, Code, Codeword, TwoLevelCode
from .errors import CodeFileError, FingerprintCodeError


__all__ = ["loads", "dumps", "read_code", "write_code"]

logger = logging.getLogger(__name__)


def _lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield number, line


def _integers(number: int, line: str) -> list[int]:
    try:
        return [int(part) for part in line.split()]
    except ValueError:
        raise CodeFileError(f"line {number}: expected integers, got {line!r}") \
            from None


def loads(text: str) -> Code | TwoLevelCode:
    lines = _lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise CodeFileError("missing header") from None
    fields = _integers(number, header)
    if len(fields) not in (2, 4):
        raise CodeFileError(
            f"line {number}: the header is 'q length' or 'q length g p'"
        )
    grouped = len(fields) == 4
    q, length = fields[:2]
    width = length + 1 if grouped else length

    words = []
    groups: dict[int, list[Codeword]] = {}
    try:
        alphabet = Alphabet(q)
        for number, line in lines:
            values = _integers(number, line)
            if len(values) != width:
                raise CodeFileError(
                    f"line {number}: expected {width} integers, "
                    f"got {len(values)}"
                )
            try:
                word = Codeword(tuple(values[-length:]))
                alphabet.validate(word)
            except FingerprintCodeError as e:
                raise CodeFileError(f"line {number}: {e}") from None
            words.append(word)
            if grouped:
                groups.setdefault(values[0], []).append(word)
        code = Code(alphabet, length, tuple(words))
        if not grouped:
            return code
        g, p = fields[2:]
        if sorted(groups) != list(range(1, g + 1)):
            raise CodeFileError(
                f"expected group indices 1 .. {g}, got {sorted(groups)}"
            )
        result = TwoLevelCode(code, tuple(groups[i] for i in range(1, g + 1)))
        if result.p != p:
            raise CodeFileError(
                f"the header declares groups of {p}, found {result.p}"
            )
        return result
    except CodeFileError:
        raise
    except FingerprintCodeError as e:
        raise CodeFileError(str(e)) from e


def dumps(code: Code | TwoLevelCode) -> str:
    if isinstance(code, TwoLevelCode):
        lines = [f"{code.q} {code.length} {code.g} {code.p}"]
        for index, group in enumerate(code.groups, start=1):
            for word in group:
                lines.append(" ".join(map(str, (index, *word.symbols))))
    elif isinstance(code, Code):
        lines = [f"{code.q} {code.length}"]
        for word in code.words:
            lines.append(" ".join(map(str, word.symbols)))
    else:
        raise TypeError(f"cannot write a {type(code).__name__}")
    return "\n".join(lines) + "\n"


def read_code(path: str | PathLike) -> Code | TwoLevelCode:
    path = Path(path)
    logger.info("reading %s", path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CodeFileError(f"cannot read {path}: {e.strerror}") from e
    try:
        return loads(text)
    except CodeFileError as e:
        raise CodeFileError(f"{path}: {e}") from None


def write_code(path: str | PathLike, code: Code | TwoLevelCode) -> None:
    path = Path(path)
    logger.info("writing %s", path)
    path.write_text(dumps(code), encoding="utf-8")
