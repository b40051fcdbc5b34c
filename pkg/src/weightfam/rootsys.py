"""Root systems, weights and Weyl-group combinatorics of simple Lie algebras.

Everything is exact: Dynkin labels and pairings are :class:`fractions.Fraction`.

Conventions
-----------
* Nodes are numbered from 1 in the Bourbaki style.  In type C the long simple
  root is the last node, in type G2 node 1 is short, and in D4 node 2 is the
  trivalent centre.
* ``cartan[i][j]`` is the pairing of the simple root ``alpha_{j+1}`` with the
  simple coroot ``alpha_{i+1}^vee``; hence the simple root ``alpha_j``, written
  in Dynkin labels, is column ``j`` of the Cartan matrix.
* The invariant form is normalised so that long roots have squared length 2.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CriticalLevel, InvalidRank, OrbitCapExceeded, UnknownAlgebra

DEFAULT_ORBIT_CAP = 1_000_000

Matrix = tuple[tuple[Fraction, ...], ...]


def default_orbit_cap() -> int:
    """Orbit cap honouring the ``WEIGHTFAM_ORBIT_CAP`` environment variable."""
    raw = os.environ.get("WEIGHTFAM_ORBIT_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_ORBIT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("WEIGHTFAM_ORBIT_CAP must be a positive integer")
    return cap


# --------------------------------------------------------------------------
# Algebra types


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True, order=True)
class AlgebraType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in "ABCDEFG" or len(self.series) != 1:
            raise UnknownAlgebra(f"unknown series {self.series!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidRank(f"rank must be an integer, got {self.rank!r}")
        if self.series in _MIN_RANK:
            if self.rank < _MIN_RANK[self.series]:
                raise InvalidRank(
                    f"type {self.series} needs rank >= {_MIN_RANK[self.series]}, got {self.rank}"
                )
        elif self.rank not in _FIXED_RANKS[self.series]:
            raise InvalidRank(f"type {self.series} has no rank {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        """Parse names such as ``"A2"``, ``"d4"`` or ``"G2"``."""
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise UnknownAlgebra(f"cannot parse algebra name {text!r}")
        try:
            return cls(text[0].upper(), int(text[1:]))
        except UnknownAlgebra:
            raise UnknownAlgebra(f"unknown algebra {text!r}") from None

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def cartan_matrix(t: AlgebraType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def bond(i: int, j: int, a: int = -1, b: int = -1) -> None:
        # 1-based nodes; a = <alpha_j, alpha_i^vee>, b = <alpha_i, alpha_j^vee>
        c[i - 1][j - 1] = a
        c[j - 1][i - 1] = b

    s = t.series
    if s in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if s == "B":
            bond(n - 1, n, -1, -2)
        elif s == "C":
            bond(n - 1, n, -2, -1)
    elif s == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif s == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif s == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif s == "G":
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in c)


def weyl_group_order(t: AlgebraType) -> int:
    n = t.rank
    if t.series == "A":
        return math.factorial(n + 1)
    if t.series in "BC":
        return 2**n * math.factorial(n)
    if t.series == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(t)]


def dual_coxeter_number(t: AlgebraType) -> int:
    n = t.rank
    if t.series == "A":
        return n + 1
    if t.series == "B":
        return 2 * n - 1
    if t.series == "C":
        return n + 1
    if t.series == "D":
        return 2 * n - 2
    return {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}[str(t)]


def lacing_number(t: AlgebraType) -> int:
    return {"B": 2, "C": 2, "F": 2, "G": 3}.get(t.series, 1)


# --------------------------------------------------------------------------
# Weights


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; use Fraction, int or a 'p/q' string")
    return Fraction(x)


@dataclass(frozen=True, order=True)
class Weight:
    """A weight in the fundamental-weight basis (Dynkin labels).

    Ordering is lexicographic on the labels, which is what canonical
    representatives use.
    """

    labels: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(_frac(x) for x in self.labels))

    @classmethod
    def of(cls, *labels) -> "Weight":
        return cls(tuple(labels))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        return cls(tuple(Fraction(int(j == i)) for j in range(1, rank + 1)))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> Fraction:
        return self.labels[i]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.labels, other.labels, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.labels, other.labels, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.labels))

    def __mul__(self, scalar) -> "Weight":
        s = _frac(scalar)
        return Weight(tuple(s * a for a in self.labels))

    __rmul__ = __mul__

    def label(self, node: int) -> Fraction:
        """Label at 1-based ``node``."""
        return self.labels[node - 1]

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.labels)

    def is_dominant_integral(self) -> bool:
        return all(a.denominator == 1 and a >= 0 for a in self.labels)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.labels) + ")"


# --------------------------------------------------------------------------
# Exact linear algebra


def invert_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in m)


# --------------------------------------------------------------------------
# Root systems


@dataclass(frozen=True)
class RootSystem:
    algebra_type: AlgebraType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    inverse_cartan: Matrix
    gram: Matrix
    positive_roots: tuple[tuple[int, ...], ...]
    dual_coxeter: int
    lacing: int
    weyl_order: int

    @property
    def rank(self) -> int:
        return self.algebra_type.rank

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def rho(self) -> Weight:
        return Weight((Fraction(1),) * self.rank)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    def simple_root(self, i: int) -> Weight:
        """``alpha_i`` in Dynkin labels (column ``i`` of the Cartan matrix)."""
        return Weight(tuple(self.cartan[j][i - 1] for j in range(self.rank)))

    def root_to_weight(self, coords: Sequence[int]) -> Weight:
        """Convert simple-root coordinates to Dynkin labels."""
        return Weight(mat_vec(self.cartan, coords))

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def neighbours(self, i: int) -> frozenset[int]:
        return frozenset(j for j in self.nodes if self.adjacent(i, j))


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    # d_i * C[i][j] = d_j * C[j][i]; propagate along the (connected) diagram
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if cartan[i][j] != 0 and i != j and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = simple
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - sum(cartan[i][j] * beta[j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    gamma = tuple(up)
                    if gamma not in roots:
                        nxt.add(gamma)
        roots |= nxt
        layer = sorted(nxt)
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def build_root_system(algebra_type: AlgebraType) -> RootSystem:
    cartan = cartan_matrix(algebra_type)
    d = _symmetrizer(cartan)
    inv = invert_matrix(cartan)
    n = algebra_type.rank
    gram = tuple(tuple(d[i] * inv[i][j] for j in range(n)) for i in range(n))
    return RootSystem(
        algebra_type=algebra_type,
        cartan=cartan,
        symmetrizer=d,
        inverse_cartan=inv,
        gram=gram,
        positive_roots=_positive_roots(cartan),
        dual_coxeter=dual_coxeter_number(algebra_type),
        lacing=lacing_number(algebra_type),
        weyl_order=weyl_group_order(algebra_type),
    )


def _check(rs: RootSystem, lam: Weight) -> None:
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has {len(lam)} labels, expected {rs.rank} for {rs.algebra_type}")


def pairing(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """Invariant bilinear form on weights, long roots of squared length 2."""
    _check(rs, lam)
    _check(rs, mu)
    g = rs.gram
    total = Fraction(0)
    for i, a in enumerate(lam.labels):
        if a:
            for j, b in enumerate(mu.labels):
                if b:
                    total += a * g[i][j] * b
    return total


def root_norm(rs: RootSystem, coords: Sequence[int]) -> Fraction:
    """Squared length of a root given in simple-root coordinates."""
    n = rs.rank
    return sum(
        (coords[i] * coords[j] * rs.symmetrizer[i] * rs.cartan[i][j] for i in range(n) for j in range(n)),
        Fraction(0),
    )


def coroot_pairing(rs: RootSystem, lam: Weight, coords: Sequence[int]) -> Fraction:
    """``<lam, alpha^vee>`` for the root ``alpha`` with simple-root coordinates ``coords``."""
    _check(rs, lam)
    half_norm = root_norm(rs, coords) / 2
    return sum((c * rs.symmetrizer[j] * lam.labels[j] for j, c in enumerate(coords)), Fraction(0)) / half_norm


def shifted_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """Shifted action of the simple reflection: ``s_i . lam = s_i(lam + rho) - rho``."""
    _check(rs, lam)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"node {i} out of range for {rs.algebra_type}")
    c = lam.labels[i - 1] + 1
    if c == 0:
        return lam
    col = i - 1
    return Weight(tuple(a - c * rs.cartan[j][col] for j, a in enumerate(lam.labels)))


@dataclass(frozen=True)
class WeightClass:
    integral: bool
    dominant_integral: bool
    shifted_regular: bool

    @property
    def shifted_singular(self) -> bool:
        return not self.shifted_regular


def weight_class(rs: RootSystem, lam: Weight) -> WeightClass:
    shifted = lam + rs.rho
    regular = all(coroot_pairing(rs, shifted, r) != 0 for r in rs.positive_roots)
    return WeightClass(
        integral=lam.is_integral(),
        dominant_integral=lam.is_dominant_integral(),
        shifted_regular=regular,
    )


def dot_orbit(rs: RootSystem, lam: Weight, cap: int | None = None) -> frozenset[Weight]:
    """Orbit of ``lam`` under the shifted Weyl action, by breadth-first search."""
    if cap is None:
        cap = default_orbit_cap()
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _check(rs, lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for i in rs.nodes:
            nxt = shifted_reflection(rs, i, cur)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise OrbitCapExceeded(cap)
                queue.append(nxt)
    return frozenset(seen)


def casimir(rs: RootSystem, lam: Weight) -> Fraction:
    """Eigenvalue ``<lam, lam + 2 rho>`` of the quadratic Casimir."""
    return pairing(rs, lam, lam + 2 * rs.rho)


def conformal_weight(rs: RootSystem, lam: Weight, k) -> Fraction:
    k = _frac(k)
    if k + rs.dual_coxeter == 0:
        raise CriticalLevel(f"level {k} is critical for {rs.algebra_type}")
    return casimir(rs, lam) / (2 * (k + rs.dual_coxeter))


@dataclass(frozen=True)
class LevelDiagnostic:
    level: Fraction
    critical: bool
    nonsimple_vacuum: bool
    u: int | None = None
    v: int | None = None


def level_diagnostic(rs: RootSystem, k) -> LevelDiagnostic:
    """Decide whether the universal level-``k`` vacuum module fails to be simple.

    That happens at the critical level and when ``lacing * (k + h^vee) = u/v``
    with ``u >= 2``, ``v >= 1`` coprime.
    """
    k = _frac(k)
    shifted = rs.lacing * (k + rs.dual_coxeter)
    if shifted == 0:
        return LevelDiagnostic(k, critical=True, nonsimple_vacuum=True)
    if shifted > 0 and shifted.numerator >= 2:
        return LevelDiagnostic(k, False, True, shifted.numerator, shifted.denominator)
    return LevelDiagnostic(k, critical=False, nonsimple_vacuum=False)


# --------------------------------------------------------------------------
# Dynkin subdiagrams


def connected_components(rs: RootSystem, nodes: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the induced subdiagram, each sorted, ordered by least node."""
    remaining = set(nodes)
    for v in remaining:
        if not 1 <= v <= rs.rank:
            raise ValueError(f"node {v} out of range for {rs.algebra_type}")
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in rs.neighbours(v):
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        out.append(tuple(sorted(comp)))
    out.sort()
    return out


def _walk_chain(rs: RootSystem, nodes: set[int], start: int) -> list[int]:
    path = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in rs.neighbours(cur) if w in nodes and w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def identify_subdiagram(rs: RootSystem, nodes: Iterable[int]) -> tuple[AlgebraType, tuple[int, ...]]:
    """Type of a connected subdiagram and its local numbering.

    Returns ``(local_type, order)`` where ``order[k]`` is the global node that
    plays the role of local node ``k + 1`` in the reference Cartan matrix of
    ``local_type``.  A two-node double bond is reported as C2 (long node last),
    and a three-node chain as A3.
    """
    node_set = set(nodes)
    n = len(node_set)
    if n == 0:
        raise ValueError("empty subdiagram")
    if len(connected_components(rs, node_set)) != 1:
        raise ValueError(f"nodes {sorted(node_set)} are not connected")
    d = {v: rs.symmetrizer[v - 1] for v in node_set}
    degree = {v: len(rs.neighbours(v) & node_set) for v in node_set}
    bonds = {}
    for v in node_set:
        for w in rs.neighbours(v) & node_set:
            if v < w:
                bonds[(v, w)] = rs.cartan[v - 1][w - 1] * rs.cartan[w - 1][v - 1]
    leaves = sorted(v for v in node_set if degree[v] <= 1)

    if n == 1:
        t, order = AlgebraType("A", 1), [leaves[0]]
    elif 3 in bonds.values():
        t = AlgebraType("G", 2)
        order = sorted(node_set, key=lambda v: d[v])
    elif 2 in bonds.values():
        (a, b), = [e for e, m in bonds.items() if m == 2]
        if n == 2:
            t = AlgebraType("C", 2)
            order = sorted(node_set, key=lambda v: d[v])
        elif degree[a] == 1 or degree[b] == 1:
            end, inner = (a, b) if degree[a] == 1 else (b, a)
            other_end = next(v for v in leaves if v != end)
            order = _walk_chain(rs, node_set, other_end)
            t = AlgebraType("C" if d[end] > d[inner] else "B", n)
        else:
            t = AlgebraType("F", 4)
            start = max(leaves, key=lambda v: d[v])
            order = _walk_chain(rs, node_set, start)
    elif max(degree.values()) <= 2:
        t = AlgebraType("A", n)
        order = _walk_chain(rs, node_set, leaves[0])
    else:
        centre = next(v for v in node_set if degree[v] == 3)
        arms = []
        for w in sorted(rs.neighbours(centre) & node_set):
            arm = _walk_chain(rs, node_set - {centre}, w)
            arms.append(arm)
        lengths = sorted(len(a) for a in arms)
        if lengths[:2] == [1, 1]:
            t = AlgebraType("D", n)
            arms.sort(key=lambda a: (-len(a), a[0]))
            long_arm, leaf1, leaf2 = arms
            order = list(reversed(long_arm)) + [centre, leaf1[0], leaf2[0]]
        else:
            t = AlgebraType("E", n)
            arms.sort(key=lambda a: (len(a), a[0]))
            short, mid, long_arm = arms
            order = [mid[1], short[0], mid[0], centre] + long_arm
    order = tuple(order)
    ref = cartan_matrix(t)
    local = tuple(tuple(rs.cartan[u - 1][v - 1] for v in order) for u in order)
    assert local == ref, f"subdiagram {order} does not match reference {t}"
    return t, order


def parabolic_subgroup_order(rs: RootSystem, nodes: Iterable[int]) -> int:
    """Order of the subgroup of W generated by the simple reflections at ``nodes``."""
    total = 1
    for comp in connected_components(rs, nodes):
        t, _ = identify_subdiagram(rs, comp)
        total *= weyl_group_order(t)
    return total
