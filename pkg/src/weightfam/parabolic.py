"""Standard parabolic subalgebras, described by subsets of Dynkin nodes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rootsys import (
    AlgebraType,
    RootSystem,
    Weight,
    build_root_system,
    connected_components,
    identify_subdiagram,
    mat_vec,
)


@dataclass(frozen=True)
class SimpleIdeal:
    """A simple ideal of the Levi factor.

    ``nodes[k]`` is the global node corresponding to local node ``k + 1``.
    """

    nodes: tuple[int, ...]
    local_type: AlgebraType

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.local_type)

    def local_node(self, global_node: int) -> int:
        return self.nodes.index(global_node) + 1

    def __str__(self) -> str:
        return f"{self.local_type}{{{','.join(map(str, self.nodes))}}}"


@dataclass(frozen=True)
class LeviDecomposition:
    subset: frozenset[int]
    ideals: tuple[SimpleIdeal, ...]
    center_rank: int
    perp_nodes: frozenset[int]

    @property
    def shape(self) -> str:
        """Ideal types joined by ``+``, e.g. ``"A1+A1"``; empty for the Borel."""
        return "+".join(sorted(str(i.local_type) for i in self.ideals))


def levi(rs: RootSystem, subset: Iterable[int]) -> LeviDecomposition:
    s = frozenset(subset)
    ideals = []
    for comp in connected_components(rs, s):
        t, order = identify_subdiagram(rs, comp)
        ideals.append(SimpleIdeal(order, t))
    touched = set(s)
    for v in s:
        touched |= rs.neighbours(v)
    return LeviDecomposition(
        subset=s,
        ideals=tuple(ideals),
        center_rank=rs.rank - len(s),
        perp_nodes=frozenset(set(rs.nodes) - touched),
    )


def is_ac_type(ld: LeviDecomposition) -> bool:
    """Whether every simple ideal is of type A or C (vacuously true for the Borel)."""
    return all(i.local_type.series in "AC" for i in ld.ideals)


def project(rs: RootSystem, ld: LeviDecomposition, ideal: SimpleIdeal, lam: Weight) -> Weight:
    """Orthogonal projection onto the ideal, in the ideal's own Dynkin labels."""
    return Weight(tuple(lam.label(v) for v in ideal.nodes))


def embed(rs: RootSystem, ld: LeviDecomposition, ideal: SimpleIdeal, local: Weight) -> Weight:
    """The element of the ideal's root span whose local labels are ``local``."""
    if len(local) != len(ideal.nodes):
        raise ValueError(f"local weight {local} does not match ideal {ideal}")
    coeffs = mat_vec(_local_inverse(ideal.local_type), local.labels)
    full = [Fraction(0)] * rs.rank
    for c, v in zip(coeffs, ideal.nodes):
        full[v - 1] = c
    return Weight(mat_vec(rs.cartan, full))


def _local_inverse(t: AlgebraType):
    return build_root_system(t).inverse_cartan


def central_weight(rs: RootSystem, ld: LeviDecomposition, lam: Weight) -> Weight:
    """``lam`` minus its projections onto all simple ideals."""
    mu = lam
    for ideal in ld.ideals:
        mu = mu - embed(rs, ld, ideal, project(rs, ld, ideal, lam))
    return mu

