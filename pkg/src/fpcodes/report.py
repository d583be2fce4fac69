"""Text and JSON renderings of verdicts and construction reports."""
from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Any

from .construction import ConstructionReport
from .verdict import Verdict


__all__ = ["FORMATS", "render_verdicts", "render_construction", "to_json"]

FORMATS = ("text", "json")


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _value(value: Any) -> str:
    if isinstance(value, list):
        return " ".join(_value(item) for item in value) or "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_value(v)}" for k, v in value.items()) or "-"
    return str(value)


def _verdict_text(verdict: Verdict) -> list[str]:
    lines = [f"{verdict.name}: {'holds' if verdict.holds else 'fails'}"]
    if verdict.witness is not None:
        for key, value in verdict.witness.to_dict().items():
            if key == "parent_sets":
                value = ["{" + " ".join(parents) + "}" for parents in value]
            lines.append(f"  {key.replace('_', ' ')}: {_value(value)}")
    return lines


def render_verdicts(verdicts: Verdict | Mapping[str, Verdict],
                    fmt: str = "text") -> str:
    if isinstance(verdicts, Verdict):
        verdicts = {verdicts.kind: verdicts}
    if fmt == "json":
        items = [verdict.to_dict() for verdict in verdicts.values()]
        return to_json(items[0] if len(items) == 1 else items)
    lines = []
    for verdict in verdicts.values():
        lines.extend(_verdict_text(verdict))
    return "\n".join(lines) + "\n"


def render_construction(report: ConstructionReport,
                        fmt: str = "text") -> str:
    if fmt == "json":
        return to_json(report.to_dict())
    lines = [
        f"code of {report.code_size} words into {report.groups} groups "
        f"({report.picks} picks)",
    ]
    if report.classes is not None:
        classes = report.classes
        lines.append(f"p = {classes.p}, v = {classes.v}, q1 = {classes.q1}")
        lines.append("symbol  size  alpha  beta")
        for a, (size, alpha, beta) in enumerate(
                zip(classes.sizes, classes.alpha, classes.beta)):
            lines.append(f"{a:>6}  {size:>4}  {alpha:>5}  {beta:>4}")
        lines.append(f"Q1 = {_value(list(classes.q1_symbols))}")
        lines.append(f"Q2 = {_value(list(classes.q2_symbols))}")
    for source, symbol in report.replacements:
        lines.append(f"split set from class {source} -> symbol {symbol}")
    if report.discarded_classes:
        lines.append(
            f"discarded classes: {_value(list(report.discarded_classes))}"
        )
    for merged in report.amalgamated_sets:
        lines.append(
            f"merged classes {_value(list(merged.symbols))}: "
            f"{merged.size} words, kept {_value([str(w) for w in merged.survivors])}"
        )
    if report.eliminated_count is not None:
        lines.append(f"eliminated: {report.eliminated_count}")
    if report.result is not None:
        for index, group in enumerate(report.result.groups, start=1):
            lines.append(f"group {index}: {_value([str(w) for w in group])}")
    return "\n".join(lines) + "\n"
