"""Bounded highest weights in types A and C and their arrow components.

A weight is *bounded* when its simple highest-weight module has uniformly
bounded weight multiplicities.  For ``sl(n+1)`` and ``sp(2n)`` there are
explicit criteria in terms of Dynkin labels, implemented here.  The arrow
relation links bounded weights by shifted simple reflections; the weakly
connected components of the resulting directed graph label the irreducible
semisimple coherent families.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotBounded, OrbitCapExceeded, WrongType
from .rootsys import (
    AlgebraType,
    RootSystem,
    Weight,
    default_orbit_cap,
    dot_orbit,
    shifted_reflection,
)


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _is_pos_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def _require(rs: RootSystem, series: str) -> None:
    if rs.algebra_type.series not in series:
        raise WrongType(f"bounded-weight criteria need type {' or '.join(series)}, got {rs.algebra_type}")


def a_set(rs: RootSystem, lam: Weight) -> frozenset[int]:
    """Nodes ``i`` where ``<lam + rho, alpha_i^vee>`` is not a positive integer."""
    _require(rs, "A")
    return frozenset(i for i in rs.nodes if not _is_nonneg_int(lam.label(i)))


def _bounded_a(rs: RootSystem, lam: Weight) -> bool:
    n = rs.rank
    a = sorted(a_set(rs, lam))
    shifted = lambda i: lam.label(i) + 1  # noqa: E731
    if a == [1] or a == [n]:
        return True
    if len(a) == 1:
        i = a[0]
        return _is_pos_int(shifted(i) + shifted(i - 1)) or _is_pos_int(shifted(i) + shifted(i + 1))
    if len(a) == 2 and a[1] == a[0] + 1:
        return _is_pos_int(shifted(a[0]) + shifted(a[1]))
    return False


def _bounded_c(rs: RootSystem, lam: Weight) -> bool:
    n = rs.rank
    if not all(_is_nonneg_int(lam.label(i)) for i in range(1, n)):
        return False
    last = lam.label(n)
    if (last - Fraction(1, 2)).denominator != 1:
        return False
    edge = lam.label(n - 1) + 2 * last
    return edge.denominator == 1 and edge >= -2


def is_bounded(rs: RootSystem, lam: Weight) -> bool:
    _require(rs, "AC")
    if rs.algebra_type.series == "A":
        return _bounded_a(rs, lam)
    return _bounded_c(rs, lam)


def arrows(rs: RootSystem, lam: Weight) -> frozenset[Weight]:
    """Targets of the arrows leaving the bounded weight ``lam``."""
    if not is_bounded(rs, lam):
        raise NotBounded(f"{lam} is not a bounded {rs.algebra_type} weight")
    if rs.algebra_type.series == "A":
        candidates = (shifted_reflection(rs, i, lam) for i in sorted(a_set(rs, lam)))
    else:
        candidates = (shifted_reflection(rs, rs.rank, lam),)
    return frozenset(mu for mu in candidates if is_bounded(rs, mu))


def _neighbours(rs: RootSystem, lam: Weight) -> set[Weight]:
    out = set(arrows(rs, lam))
    # incoming arrows come from some s_i . lam, as the shifted reflections are involutions
    for i in rs.nodes:
        mu = shifted_reflection(rs, i, lam)
        if mu != lam and is_bounded(rs, mu) and lam in arrows(rs, mu):
            out.add(mu)
    out.discard(lam)
    return out


@dataclass(frozen=True)
class ComponentClass:
    ideal_type: AlgebraType
    members: frozenset[Weight]
    canonical: Weight
    integral: bool

    def sorted_members(self) -> list[Weight]:
        return sorted(self.members)


def expected_component_size(t: AlgebraType, integral: bool) -> int:
    if t.series == "C":
        return 2
    return t.rank if integral else t.rank + 1


def connected_component(rs: RootSystem, lam: Weight, cap: int | None = None) -> ComponentClass:
    """Weakly connected component of ``lam`` in the arrow graph."""
    if cap is None:
        cap = default_orbit_cap()
    if not is_bounded(rs, lam):
        raise NotBounded(f"{lam} is not a bounded {rs.algebra_type} weight")
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for mu in _neighbours(rs, cur):
            if mu not in seen:
                seen.add(mu)
                if len(seen) > cap:
                    raise OrbitCapExceeded(cap)
                queue.append(mu)
    canonical = min(seen)
    comp = ComponentClass(rs.algebra_type, frozenset(seen), canonical, canonical.is_integral())
    expected = expected_component_size(rs.algebra_type, comp.integral)
    assert len(seen) == expected, (
        f"component of {lam} in {rs.algebra_type} has {len(seen)} elements, expected {expected}"
    )
    return comp


def same_central_character(rs: RootSystem, lam: Weight, mu: Weight, cap: int | None = None) -> bool:
    if lam == mu:
        return True
    return mu in dot_orbit(rs, lam, cap)
