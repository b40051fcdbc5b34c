"""Classification of irreducible semisimple parabolic and coherent families.

Input: a simple Lie algebra, a level, and the highest weights of the simple
highest-weight modules over some quotient of the enveloping algebra (for
example the Zhu algebra of a simple affine vertex algebra).  For every
non-empty node subset ``S`` whose Levi factor is of AC-type, each
infinite-dimensional highest weight is projected onto the simple ideals of the
Levi factor.  If every projection is bounded, the weight generates a standard
parabolic family, identified by ``S``, the central weight and the arrow
components of the projections.  Families with ``S`` the full node set are the
coherent families.  Non-standard families are counted as W-twists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .bounded import ComponentClass, connected_component, is_bounded
from .errors import EmptyInput, InvalidParameters
from .parabolic import LeviDecomposition, SimpleIdeal, central_weight, is_ac_type, levi, project
from .rootsys import (
    AlgebraType,
    LevelDiagnostic,
    RootSystem,
    Weight,
    WeightClass,
    build_root_system,
    casimir,
    conformal_weight,
    level_diagnostic,
    shifted_reflection,
    weight_class,
)
from .smallweyl import SmallWeylGroup, small_weyl_family, small_weyl_hw, twist_count


@dataclass(frozen=True)
class HighestWeightInput:
    weight: Weight
    label: str | None = None

    @property
    def name(self) -> str:
        return self.label if self.label is not None else str(self.weight)


@dataclass(frozen=True)
class HighestWeightSummary:
    input: HighestWeightInput
    finite_dimensional: bool
    weight_class: WeightClass
    small_weyl: SmallWeylGroup
    twist_count: int
    casimir: Fraction
    conformal_weight: Fraction | None


@dataclass(frozen=True)
class FindimConstituent:
    ideal: SimpleIdeal
    local_weight: Weight


@dataclass
class FamilyRecord:
    levi: LeviDecomposition
    component_classes: tuple[ComponentClass, ...]
    central_weight: Weight
    casimirs: tuple[Fraction, ...]
    conformal_weight: Fraction | None
    small_weyl: SmallWeylGroup
    twist_count: int
    generators: list[HighestWeightInput]
    findim_constituents: list[FindimConstituent] = field(default_factory=list)
    extra_hw_contained: list[HighestWeightInput] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    coherent: bool = False

    @property
    def subset(self) -> frozenset[int]:
        return self.levi.subset

    @property
    def key(self) -> str:
        return family_key(self)


@dataclass(frozen=True)
class LeviSummary:
    levi: LeviDecomposition
    ac_type: bool
    standard_families: int
    twist_total: int


@dataclass
class ClassificationReport:
    algebra: AlgebraType
    level: Fraction
    level_diag: LevelDiagnostic
    weyl_order: int
    hw_summary: list[HighestWeightSummary]
    levis: list[LeviSummary]
    families: list[FamilyRecord]

    @property
    def finite_dimensional_count(self) -> int:
        return sum(h.twist_count for h in self.hw_summary if h.finite_dimensional)

    @property
    def highest_weight_count(self) -> int:
        """Infinite-dimensional highest-weight modules, counted with W-twists."""
        return sum(h.twist_count for h in self.hw_summary if not h.finite_dimensional)

    @property
    def parabolic_count(self) -> int:
        return sum(f.twist_count for f in self.families if not f.coherent)

    @property
    def coherent_count(self) -> int:
        return sum(f.twist_count for f in self.families if f.coherent)

    def parabolic_by_shape(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for f in self.families:
            if not f.coherent:
                out[f.levi.shape] = out.get(f.levi.shape, 0) + f.twist_count
        return dict(sorted(out.items(), key=lambda kv: (_shape_size(kv[0]), kv[0])))

    def families_at(self, subset) -> list[FamilyRecord]:
        s = frozenset(subset)
        return [f for f in self.families if f.subset == s]

    def summary_for(self, label: str) -> HighestWeightSummary:
        return next(h for h in self.hw_summary if h.input.name == label)


def _shape_size(shape: str) -> int:
    return sum(int(part[1:]) for part in shape.split("+") if part)


def subset_order(subset) -> tuple[int, tuple[int, ...]]:
    return (len(subset), tuple(sorted(subset)))


def family_key(record: FamilyRecord) -> str:
    s = ",".join(map(str, sorted(record.subset)))
    comps = ";".join(
        f"{ideal.local_type}{{{','.join(map(str, ideal.nodes))}}}:{cc.canonical}"
        for ideal, cc in zip(record.levi.ideals, record.component_classes)
    )
    return f"S={{{s}}}|mu={record.central_weight}|{comps}"


def _dominant_in_orbit(rs: RootSystem, lam: Weight) -> Weight:
    # walk toward the dominant chamber; terminates for integral weights
    cur = lam
    while True:
        bad = next((i for i in rs.nodes if cur.label(i) + 1 < 0), None)
        if bad is None:
            return cur
        cur = shifted_reflection(rs, bad, cur)


def _validate_inputs(rs: RootSystem, inputs: Sequence[HighestWeightInput]) -> None:
    if not inputs:
        raise EmptyInput("at least one highest weight is required")
    weights = set()
    names = set()
    for inp in inputs:
        if len(inp.weight) != rs.rank:
            raise InvalidParameters(
                f"highest weight {inp.name} has {len(inp.weight)} labels, expected {rs.rank}"
            )
        if inp.weight in weights:
            raise InvalidParameters(f"highest weight {inp.weight} listed twice")
        if inp.name in names:
            raise InvalidParameters(f"label {inp.name!r} used twice")
        weights.add(inp.weight)
        names.add(inp.name)


def _summarise(rs: RootSystem, k: Fraction, critical: bool, inp: HighestWeightInput) -> HighestWeightSummary:
    swg = small_weyl_hw(rs, inp.weight)
    return HighestWeightSummary(
        input=inp,
        finite_dimensional=inp.weight.is_dominant_integral(),
        weight_class=weight_class(rs, inp.weight),
        small_weyl=swg,
        twist_count=twist_count(rs, swg),
        casimir=casimir(rs, inp.weight),
        conformal_weight=None if critical else conformal_weight(rs, inp.weight, k),
    )


class _Components:
    """Memoised arrow components, keyed by local type and local weight."""

    def __init__(self, cap: int | None):
        self.cap = cap
        self._cache: dict[tuple[AlgebraType, Weight], ComponentClass] = {}

    def __call__(self, t: AlgebraType, lam: Weight) -> ComponentClass:
        key = (t, lam)
        if key not in self._cache:
            comp = connected_component(build_root_system(t), lam, self.cap)
            for m in comp.members:
                self._cache[(t, m)] = comp
        return self._cache[key]


def _bounded_components(
    rs: RootSystem, ld: LeviDecomposition, lam: Weight, components: _Components
) -> tuple[ComponentClass, ...] | None:
    out = []
    for ideal in ld.ideals:
        local = project(rs, ld, ideal, lam)
        if not is_bounded(ideal.root_system, local):
            return None
        out.append(components(ideal.local_type, local))
    return tuple(out)


def _build_record(
    rs: RootSystem,
    k: Fraction,
    critical: bool,
    ld: LeviDecomposition,
    comps: tuple[ComponentClass, ...],
    mu: Weight,
    generators: list[HighestWeightInput],
    all_inputs: Sequence[HighestWeightInput],
    components: _Components,
) -> FamilyRecord:
    casimirs = None
    conf = None
    swg = None
    for gen in generators:
        g_cas = tuple(
            casimir(ideal.root_system, project(rs, ld, ideal, gen.weight)) for ideal in ld.ideals
        )
        g_conf = None if critical else conformal_weight(rs, gen.weight, k)
        g_swg = small_weyl_family(rs, ld, gen.weight)
        if casimirs is None:
            casimirs, conf, swg = g_cas, g_conf, g_swg
        assert (g_cas, g_conf, g_swg) == (casimirs, conf, swg), (
            f"generators of one family disagree on invariants at S={sorted(ld.subset)}"
        )

    record = FamilyRecord(
        levi=ld,
        component_classes=comps,
        central_weight=mu,
        casimirs=casimirs,
        conformal_weight=conf,
        small_weyl=swg,
        twist_count=twist_count(rs, swg, ld),
        generators=list(generators),
        coherent=len(ld.subset) == rs.rank,
    )

    gen_weights = {g.weight for g in generators}
    for idx, (ideal, cc) in enumerate(zip(ld.ideals, comps)):
        local_rs = ideal.root_system
        if ideal.local_type == AlgebraType("A", 1):
            if not cc.integral:
                continue
            dominant = shifted_reflection(local_rs, 1, cc.canonical)
            if not dominant.is_dominant_integral():
                continue
            record.findim_constituents.append(FindimConstituent(ideal, dominant))
            for other in all_inputs:
                if other.weight in gen_weights or other in record.extra_hw_contained:
                    continue
                if central_weight(rs, ld, other.weight) != mu:
                    continue
                if project(rs, ld, ideal, other.weight) != dominant:
                    continue
                if all(
                    j == idx or _same_component(rs, ld, ld.ideals[j], other.weight, comps[j], components)
                    for j in range(len(ld.ideals))
                ):
                    record.extra_hw_contained.append(other)
        elif cc.integral:
            wc = weight_class(local_rs, cc.canonical)
            if wc.shifted_regular:
                dom = _dominant_in_orbit(local_rs, cc.canonical)
                record.notes.append(
                    f"{ideal}: central character matches the finite-dimensional module of highest "
                    f"weight {dom}; containment undetermined"
                )
    return record


def _same_component(rs, ld, ideal, lam, comp, components) -> bool:
    local = project(rs, ld, ideal, lam)
    if not is_bounded(ideal.root_system, local):
        return False
    return components(ideal.local_type, local).canonical == comp.canonical


def classify(
    rs: RootSystem,
    k,
    inputs: Sequence[HighestWeightInput],
    cap: int | None = None,
) -> ClassificationReport:
    """Catalogue the irreducible semisimple standard parabolic and coherent families."""
    k = Fraction(k)
    inputs = list(inputs)
    _validate_inputs(rs, inputs)
    diag = level_diagnostic(rs, k)
    critical = diag.critical
    components = _Components(cap)

    hw = [_summarise(rs, k, critical, inp) for inp in inputs]
    infinite = [h.input for h in hw if not h.finite_dimensional]

    levis: list[LeviSummary] = []
    families: list[FamilyRecord] = []
    for size in range(1, rs.rank + 1):
        for subset in combinations(rs.nodes, size):
            ld = levi(rs, subset)
            if not is_ac_type(ld):
                levis.append(LeviSummary(ld, False, 0, 0))
                continue
            groups: dict[tuple, tuple[tuple[ComponentClass, ...], Weight, list]] = {}
            for inp in infinite:
                comps = _bounded_components(rs, ld, inp.weight, components)
                if comps is None:
                    continue
                mu = central_weight(rs, ld, inp.weight)
                key = (mu, tuple(c.canonical for c in comps))
                groups.setdefault(key, (comps, mu, []))[2].append(inp)
            found = [
                _build_record(rs, k, critical, ld, comps, mu, gens, inputs, components)
                for comps, mu, gens in groups.values()
            ]
            found.sort(key=family_key)
            families.extend(found)
            levis.append(LeviSummary(ld, True, len(found), sum(f.twist_count for f in found)))

    return ClassificationReport(
        algebra=rs.algebra_type,
        level=k,
        level_diag=diag,
        weyl_order=rs.weyl_order,
        hw_summary=hw,
        levis=levis,
        families=families,
    )


def sl2_admissible_weights(u: int, v: int) -> list[HighestWeightInput]:
    """Highest weights ``(r - 1 - (u/v) s) omega_1`` for ``1 <= r < u``, ``0 <= s < v``."""
    t = Fraction(u, v)
    return [
        HighestWeightInput(Weight.of(r - 1 - t * s), label=f"lambda[{r},{s}]")
        for s in range(v)
        for r in range(1, u)
    ]


def sl2_admissible(u: int, v: int, cap: int | None = None) -> ClassificationReport:
    """Classification for sl2 at the admissible level ``k = u/v - 2``."""
    for name, x in (("u", u), ("v", v)):
        if not isinstance(x, int) or isinstance(x, bool) or x < 2:
            raise InvalidParameters(f"{name} must be an integer >= 2, got {x!r}")
    if math.gcd(u, v) != 1:
        raise InvalidParameters(f"u={u} and v={v} must be coprime")
    rs = build_root_system(AlgebraType("A", 1))
    return classify(rs, Fraction(u, v) - 2, sl2_admissible_weights(u, v), cap)
