"""Deterministic JSON and plain-text renderings of a classification report.

Rationals are written as strings, ``"p/q"`` in lowest terms or ``"n"``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .classify import ClassificationReport, FamilyRecord, HighestWeightSummary
from .rootsys import LevelDiagnostic, Weight
from .smallweyl import SmallWeylGroup

FORMAT_VERSION = 1


def q(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def weight_json(w: Weight) -> list[str]:
    return [str(a) for a in w.labels]


def _swg(swg: SmallWeylGroup) -> dict:
    return {
        "generators": sorted(swg.generator_nodes),
        "order": swg.order,
        "types": [str(t) for t in swg.component_types],
    }


def _diag(d: LevelDiagnostic) -> dict:
    return {"critical": d.critical, "nonsimple_vacuum": d.nonsimple_vacuum, "u": d.u, "v": d.v}


def _hw(h: HighestWeightSummary) -> dict:
    return {
        "label": h.input.name,
        "weight": weight_json(h.input.weight),
        "finite_dimensional": h.finite_dimensional,
        "integral": h.weight_class.integral,
        "shifted_regular": h.weight_class.shifted_regular,
        "small_weyl": _swg(h.small_weyl),
        "twist_count": h.twist_count,
        "casimir": q(h.casimir),
        "conformal_weight": q(h.conformal_weight),
    }


def _family(f: FamilyRecord) -> dict:
    return {
        "key": f.key,
        "kind": "coherent" if f.coherent else "parabolic",
        "subset": sorted(f.subset),
        "shape": f.levi.shape,
        "ideals": [
            {
                "type": str(ideal.local_type),
                "nodes": list(ideal.nodes),
                "canonical": weight_json(cc.canonical),
                "component": [weight_json(m) for m in cc.sorted_members()],
                "integral": cc.integral,
                "casimir": q(cas),
            }
            for ideal, cc, cas in zip(f.levi.ideals, f.component_classes, f.casimirs)
        ],
        "central_weight": weight_json(f.central_weight),
        "conformal_weight": q(f.conformal_weight),
        "small_weyl": _swg(f.small_weyl),
        "twist_count": f.twist_count,
        "generators": [g.name for g in f.generators],
        "findim_constituents": [
            {"ideal_nodes": list(c.ideal.nodes), "weight": weight_json(c.local_weight)}
            for c in f.findim_constituents
        ],
        "extra_hw_contained": [g.name for g in f.extra_hw_contained],
        "notes": list(f.notes),
    }


def report_to_dict(report: ClassificationReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "algebra": str(report.algebra),
        "level": q(report.level),
        "weyl_order": report.weyl_order,
        "level_diagnostic": _diag(report.level_diag),
        "highest_weights": [_hw(h) for h in report.hw_summary],
        "levis": [
            {
                "subset": sorted(ls.levi.subset),
                "shape": ls.levi.shape,
                "ac_type": ls.ac_type,
                "perp_nodes": sorted(ls.levi.perp_nodes),
                "standard_families": ls.standard_families,
                "twist_total": ls.twist_total,
            }
            for ls in report.levis
        ],
        "families": [_family(f) for f in report.families],
        "totals": {
            "finite_dimensional": report.finite_dimensional_count,
            "highest_weight": report.highest_weight_count,
            "parabolic_by_shape": report.parabolic_by_shape(),
            "parabolic": report.parabolic_count,
            "coherent": report.coherent_count,
            "standard_parabolic": sum(1 for f in report.families if not f.coherent),
            "standard_coherent": sum(1 for f in report.families if f.coherent),
        },
    }


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def report_to_json(report: ClassificationReport) -> str:
    return dumps(report_to_dict(report))


def describe_level(d: LevelDiagnostic) -> str:
    if d.critical:
        return "non-simple vacuum: yes (critical level); critical: yes"
    if d.nonsimple_vacuum:
        return f"non-simple vacuum: yes (u={d.u}, v={d.v}); critical: no"
    return "non-simple vacuum: no; critical: no"


def render_text(report: ClassificationReport) -> str:
    out = []
    add = out.append
    add(f"algebra {report.algebra}, level {report.level}, |W| = {report.weyl_order}")
    add(describe_level(report.level_diag))
    add("")
    add("highest-weight modules:")
    for h in report.hw_summary:
        kind = "finite-dimensional" if h.finite_dimensional else "infinite-dimensional"
        cw = "n/a" if h.conformal_weight is None else str(h.conformal_weight)
        add(
            f"  {h.input.name} = {h.input.weight}: {kind}; small Weyl group "
            f"{h.small_weyl.describe()} (order {h.small_weyl.order}); twists {h.twist_count}; "
            f"casimir {h.casimir}; conformal weight {cw}"
        )
    add("")
    add("standard families:")
    by_subset: dict[frozenset, list[FamilyRecord]] = {}
    for f in report.families:
        by_subset.setdefault(f.subset, []).append(f)
    for ls in report.levis:
        s = "{" + ",".join(map(str, sorted(ls.levi.subset))) + "}"
        if not ls.ac_type:
            add(f"  S={s} ({ls.levi.shape}): not AC-type, no families")
            continue
        fams = by_subset.get(ls.levi.subset, [])
        if not fams:
            add(f"  S={s} ({ls.levi.shape}): no families")
            continue
        for f in fams:
            kind = "coherent" if f.coherent else "parabolic"
            add(f"  S={s} ({ls.levi.shape}) {kind} family, central weight {f.central_weight}")
            for ideal, cc, cas in zip(f.levi.ideals, f.component_classes, f.casimirs):
                members = ", ".join(str(m) for m in cc.sorted_members())
                add(f"    ideal {ideal}: component [{members}], casimir {cas}")
            cw = "n/a" if f.conformal_weight is None else str(f.conformal_weight)
            add(
                f"    small Weyl group {f.small_weyl.describe()} (order {f.small_weyl.order}); "
                f"twists {f.twist_count}; conformal weight {cw}"
            )
            add(f"    generators: {', '.join(g.name for g in f.generators)}")
            for c in f.findim_constituents:
                add(f"    finite-dimensional constituent on {c.ideal}: {c.local_weight}")
            if f.extra_hw_contained:
                add(f"    also contains: {', '.join(g.name for g in f.extra_hw_contained)}")
            for note in f.notes:
                add(f"    note: {note}")
    add("")
    add("totals:")
    add(f"  finite-dimensional modules: {report.finite_dimensional_count}")
    add(f"  infinite-dimensional highest-weight modules: {report.highest_weight_count}")
    for shape, n in report.parabolic_by_shape().items():
        add(f"  parabolic families with Levi shape {shape}: {n}")
    add(f"parabolic families: {report.parabolic_count}, coherent families: {report.coherent_count}")
    return "\n".join(out) + "\n"
