"""Problem-spec files: JSON with all rationals written as strings."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .classify import HighestWeightInput
from .errors import SpecError, WeightFamError
from .rootsys import AlgebraType, Weight

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(value, where: str = "value") -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or an integer; floats are rejected."""
    if isinstance(value, bool):
        raise SpecError(f"{where}: expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.match(value):
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise SpecError(f"{where}: zero denominator in {value!r}") from None
    raise SpecError(f"{where}: expected an integer or a rational string like \"-3/2\", got {value!r}")


@dataclass(frozen=True)
class ProblemSpec:
    algebra: AlgebraType
    level: Fraction
    highest_weights: tuple[HighestWeightInput, ...]
    orbit_cap: int | None = None


def problem_from_dict(data) -> ProblemSpec:
    if not isinstance(data, dict):
        raise SpecError("top level: expected a JSON object")
    unknown = set(data) - {"algebra", "level", "highest_weights", "orbit_cap", "description"}
    if unknown:
        raise SpecError(f"top level: unknown field(s) {sorted(unknown)}")

    alg = data.get("algebra")
    if not isinstance(alg, dict):
        raise SpecError("algebra: expected an object {\"series\": ..., \"rank\": ...}")
    if set(alg) - {"series", "rank"}:
        raise SpecError(f"algebra: unknown field(s) {sorted(set(alg) - {'series', 'rank'})}")
    series, rank = alg.get("series"), alg.get("rank")
    if not isinstance(series, str):
        raise SpecError(f"algebra.series: expected a string, got {series!r}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise SpecError(f"algebra.rank: expected an integer, got {rank!r}")
    try:
        algebra = AlgebraType(series.upper(), rank)
    except WeightFamError as exc:
        raise SpecError(f"algebra: {exc}") from None

    if "level" not in data:
        raise SpecError("level: missing")
    level = parse_rational(data["level"], "level")

    hws = data.get("highest_weights")
    if not isinstance(hws, list) or not hws:
        raise SpecError("highest_weights: expected a non-empty list")
    inputs = []
    for n, entry in enumerate(hws):
        where = f"highest_weights[{n}]"
        if not isinstance(entry, dict):
            raise SpecError(f"{where}: expected an object with 'weight' and optional 'label'")
        extra = set(entry) - {"label", "weight"}
        if extra:
            raise SpecError(f"{where}: unknown field(s) {sorted(extra)}")
        label = entry.get("label")
        if label is not None and not isinstance(label, str):
            raise SpecError(f"{where}.label: expected a string")
        weight = entry.get("weight")
        if not isinstance(weight, list):
            raise SpecError(f"{where}.weight: expected a list of rationals")
        if len(weight) != algebra.rank:
            raise SpecError(f"{where}.weight: has {len(weight)} entries, {algebra} needs {algebra.rank}")
        labels = tuple(parse_rational(x, f"{where}.weight[{j}]") for j, x in enumerate(weight))
        inputs.append(HighestWeightInput(Weight(labels), label))

    cap = data.get("orbit_cap")
    if cap is not None and (not isinstance(cap, int) or isinstance(cap, bool) or cap < 1):
        raise SpecError(f"orbit_cap: expected a positive integer, got {cap!r}")
    return ProblemSpec(algebra, level, tuple(inputs), cap)


def schema_path() -> Path:
    """Location of the JSON Schema describing problem-spec files."""
    return Path(__file__).with_name("problem_spec.schema.json")


def load_problem(path) -> ProblemSpec:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return problem_from_dict(data)
