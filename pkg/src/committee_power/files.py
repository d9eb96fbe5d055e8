"""Committee spec files: JSON documents consumed by the CLI.

Fields: ``alternatives`` (array of single-char labels) or ``m`` (count,
default labels), ``weights`` (array of nonnegative integers), ``rule``
(one of the five rule names).
"""

import json
from pathlib import Path

from .core import RULES, Committee
from .errors import ValidationError


def committee_from_dict(data: dict) -> Committee:
    if not isinstance(data, dict):
        raise ValidationError("committee spec must be a JSON object")
    unknown = set(data) - {"alternatives", "m", "weights", "rule"}
    if unknown:
        raise ValidationError(f"unknown committee spec fields: {sorted(unknown)}")
    if "weights" not in data:
        raise ValidationError("committee spec is missing 'weights'")
    if "rule" not in data:
        raise ValidationError("committee spec is missing 'rule'")
    rule = data["rule"]
    if rule not in RULES:
        raise ValidationError(
            f"unknown rule {rule!r}; valid rules: {', '.join(RULES)}"
        )
    labels = ()
    if "alternatives" in data:
        labels = tuple(str(x) for x in data["alternatives"])
        m = len(labels)
    elif "m" in data:
        m = int(data["m"])
    else:
        raise ValidationError("committee spec needs 'alternatives' or 'm'")
    weights = data["weights"]
    if not isinstance(weights, (list, tuple)):
        raise ValidationError("'weights' must be an array of integers")
    return Committee(m, tuple(int(w) for w in weights), rule, labels)


def committee_to_dict(committee: Committee) -> dict:
    return {
        "alternatives": list(committee.labels),
        "weights": list(committee.weights),
        "rule": committee.rule,
    }


def load_committee(path) -> Committee:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read committee file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"committee file {path} is not valid JSON: {exc}") from exc
    return committee_from_dict(data)


def save_committee(committee: Committee, path) -> None:
    Path(path).write_text(
        json.dumps(committee_to_dict(committee), indent=2) + "\n",
        encoding="utf-8",
    )
