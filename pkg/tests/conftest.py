import json
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from weightfam import AlgebraType, HighestWeightInput, Weight, build_root_system
from weightfam.problem import load_problem

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
EXPECTED = FIXTURES / "expected"

# every type of rank <= 4 (A4, B2..B4, C2..C4, D4, F4, G2 included)
SMALL_TYPES = [
    AlgebraType(s, n)
    for s, n in [
        ("A", 1), ("A", 2), ("A", 3), ("A", 4),
        ("B", 2), ("B", 3), ("B", 4),
        ("C", 2), ("C", 3), ("C", 4),
        ("D", 4), ("F", 4), ("G", 2),
    ]
]


def rs_of(text: str):
    return build_root_system(AlgebraType.parse(text))


def W(*labels) -> Weight:
    return Weight.of(*labels)


def hw(label, *labels) -> HighestWeightInput:
    return HighestWeightInput(Weight.of(*labels), label)


def fixture_files():
    return sorted(FIXTURES.glob("*.json"))


def load_fixture(name):
    return load_problem(FIXTURES / name)


def read_json(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)


def weights(rank: int):
    return st.lists(rationals, min_size=rank, max_size=rank).map(lambda xs: Weight(tuple(map(Fraction, xs))))


@pytest.fixture(scope="session")
def sl3():
    return rs_of("A2")


@pytest.fixture(scope="session")
def sp4():
    return rs_of("C2")


@pytest.fixture(scope="session")
def so8():
    return rs_of("D4")


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}")
