"""Exact classification of coherent and parabolic families of weight modules.

Given a simple Lie algebra, a level and the highest weights of the simple
highest-weight modules over a quotient of the enveloping algebra, list every
irreducible semisimple standard parabolic and coherent family, together with
their invariants and W-twist counts.
"""

from .classify import (
    ClassificationReport,
    FamilyRecord,
    HighestWeightInput,
    classify,
    family_key,
    sl2_admissible,
)
from .errors import (
    CriticalLevel,
    EmptyInput,
    InvalidParameters,
    InvalidRank,
    NotBounded,
    OrbitCapExceeded,
    SpecError,
    WeightFamError,
    WrongType,
)
from .rootsys import AlgebraType, RootSystem, Weight, build_root_system

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "ClassificationReport",
    "CriticalLevel",
    "EmptyInput",
    "FamilyRecord",
    "HighestWeightInput",
    "InvalidParameters",
    "InvalidRank",
    "NotBounded",
    "OrbitCapExceeded",
    "RootSystem",
    "SpecError",
    "Weight",
    "WeightFamError",
    "WrongType",
    "build_root_system",
    "classify",
    "family_key",
    "sl2_admissible",
]
