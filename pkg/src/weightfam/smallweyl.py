"""Small Weyl groups and W-twist counting.

A small Weyl group is the subgroup of W generated by a set of simple
reflections, so it is stored as generator nodes plus its order; elements are
never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .parabolic import LeviDecomposition
from .rootsys import (
    AlgebraType,
    RootSystem,
    Weight,
    connected_components,
    identify_subdiagram,
    parabolic_subgroup_order,
)


@dataclass(frozen=True)
class SmallWeylGroup:
    generator_nodes: frozenset[int]
    order: int
    component_types: tuple[AlgebraType, ...]

    def describe(self) -> str:
        if not self.generator_nodes:
            return "1"
        gens = ",".join(f"s{i}" for i in sorted(self.generator_nodes))
        return f"<{gens}>"


def small_weyl_group(rs: RootSystem, nodes: Iterable[int]) -> SmallWeylGroup:
    nodes = frozenset(nodes)
    types = tuple(identify_subdiagram(rs, c)[0] for c in connected_components(rs, nodes))
    return SmallWeylGroup(nodes, parabolic_subgroup_order(rs, nodes), types)


def _natural(x) -> bool:
    return x.denominator == 1 and x >= 0


def small_weyl_hw(rs: RootSystem, lam: Weight) -> SmallWeylGroup:
    """Small Weyl group of the simple highest-weight module of highest weight ``lam``."""
    return small_weyl_group(rs, (i for i in rs.nodes if _natural(lam.label(i))))


def small_weyl_family(rs: RootSystem, ld: LeviDecomposition, lam: Weight) -> SmallWeylGroup:
    """Small Weyl group of the parabolic family over ``ld`` generated by ``lam``.

    Only nodes orthogonal to the Levi factor can contribute; on those the label
    of ``lam`` is constant over the whole family.
    """
    return small_weyl_group(rs, (i for i in ld.perp_nodes if _natural(lam.label(i))))


def twist_count(rs: RootSystem, swg: SmallWeylGroup, ld: LeviDecomposition | None = None) -> int:
    """Number of distinct W-twists: ``|W| / (|small Weyl group| * |W_l|)``."""
    levi_order = 1 if ld is None else parabolic_subgroup_order(rs, ld.subset)
    q, r = divmod(rs.weyl_order, swg.order * levi_order)
    assert r == 0, f"|W|={rs.weyl_order} not divisible by {swg.order}*{levi_order}"
    return q
