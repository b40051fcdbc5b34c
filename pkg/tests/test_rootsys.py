from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import SMALL_TYPES, W, rs_of, weights
from weightfam import AlgebraType, CriticalLevel, InvalidRank, OrbitCapExceeded, Weight, build_root_system
from weightfam.errors import UnknownAlgebra
from weightfam.rootsys import (
    casimir,
    cartan_matrix,
    conformal_weight,
    dot_orbit,
    identify_subdiagram,
    level_diagnostic,
    pairing,
    parabolic_subgroup_order,
    shifted_reflection,
    weight_class,
)

# dim g per type, for the positive-root count (dim - rank) / 2
DIMS = {"A1": 3, "A2": 8, "A3": 15, "A4": 24, "B2": 10, "B3": 21, "B4": 36, "C2": 10, "C3": 21,
        "C4": 36, "D4": 28, "D5": 45, "E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}
# comarks of the highest root's coroot; h^vee = 1 + sum
COMARKS = {"A1": [1], "A2": [1, 1], "B3": [1, 2, 1], "C3": [1, 1, 1], "D4": [1, 2, 1, 1],
           "F4": [2, 3, 2, 1], "G2": [2, 1], "E6": [1, 2, 3, 2, 1, 2]}


class TestAlgebraType:
    @pytest.mark.parametrize("s,n", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3)])
    def test_rejects_bad_rank(self, s, n):
        with pytest.raises(InvalidRank):
            AlgebraType(s, n)

    def test_unknown_series(self):
        with pytest.raises(UnknownAlgebra):
            AlgebraType.parse("H3")

    def test_parse_round_trip(self):
        assert str(AlgebraType.parse("d4")) == "D4"


class TestBuild:
    def test_sl2(self):
        rs = rs_of("A1")
        assert len(rs.positive_roots) == 1
        assert (rs.dual_coxeter, rs.lacing, rs.weyl_order) == (2, 1, 2)

    def test_so8_weyl_order(self):
        assert rs_of("D4").weyl_order == 192

    def test_g2_against_reflection_closure(self):
        rs = rs_of("G2")
        assert (rs.weyl_order, rs.dual_coxeter, rs.lacing) == (12, 4, 3)
        assert oracles.reflection_group_order(oracles.Model("G", 2), [1, 2]) == 12

    @pytest.mark.parametrize("name", sorted(DIMS))
    def test_positive_root_count(self, name):
        rs = rs_of(name)
        assert len(rs.positive_roots) == (DIMS[name] - rs.rank) // 2

    @pytest.mark.parametrize("name", sorted(DIMS))
    def test_symmetrized_cartan_and_theta(self, name):
        rs = rs_of(name)
        n = rs.rank
        for i in range(n):
            for j in range(n):
                assert rs.symmetrizer[i] * rs.cartan[i][j] == rs.symmetrizer[j] * rs.cartan[j][i]
        theta = rs.root_to_weight(rs.highest_root)
        assert pairing(rs, theta, theta) == 2
        assert rs.rho == Weight.of(*([1] * n))

    @pytest.mark.parametrize("name", sorted(COMARKS))
    def test_dual_coxeter_from_comarks(self, name):
        assert rs_of(name).dual_coxeter == 1 + sum(COMARKS[name])

    @pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
    def test_cartan_matches_epsilon_model(self, t):
        assert cartan_matrix(t) == oracles.Model(t.series, t.rank).cartan()

    @pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
    def test_weyl_order_against_closure(self, t):
        model = oracles.Model(t.series, t.rank)
        assert build_root_system(t).weyl_order == oracles.reflection_group_order(model, range(1, t.rank + 1))

    def test_full_diagrams_identify_as_themselves(self):
        for name in DIMS:
            rs = rs_of(name)
            t, order = identify_subdiagram(rs, rs.nodes)
            if name == "B2":
                assert (str(t), order) == ("C2", (2, 1))
            else:
                assert t == rs.algebra_type and order == rs.nodes


class TestPairing:
    def test_sl2_fundamental(self):
        rs = rs_of("A1")
        assert pairing(rs, W(1), W(1)) == F(1, 2)

    def test_zero(self, sl3):
        assert pairing(sl3, Weight.zero(2), W(F(-3, 2), 5)) == 0

    def test_sp4_gram(self, sp4):
        assert [[pairing(sp4, Weight.fundamental(2, i), Weight.fundamental(2, j)) for j in (1, 2)] for i in (1, 2)] == [
            [F(1, 2), F(1, 2)],
            [F(1, 2), F(1)],
        ]

    @pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
    def test_gram_against_epsilon_model(self, t):
        rs = build_root_system(t)
        model = oracles.Model(t.series, t.rank)
        for i in rs.nodes:
            for j in rs.nodes:
                wi, wj = Weight.fundamental(rs.rank, i), Weight.fundamental(rs.rank, j)
                assert pairing(rs, wi, wj) == model.pairing(wi.labels, wj.labels)

    def test_sl3_conformal_weight_cross_check(self, sl3):
        lam = W(F(-3, 2), 0)
        model = oracles.Model("A", 2)
        v = model.vector(lam.labels)
        two_rho = tuple(2 * x for x in model.rho())
        independent = model.form(v, tuple(a + b for a, b in zip(v, two_rho))) / (2 * (F(-3, 2) + 3))
        assert independent == F(-1, 2)
        assert conformal_weight(sl3, lam, F(-3, 2)) == independent

    @settings(max_examples=60, deadline=None)
    @given(data=st.data(), t=st.sampled_from(SMALL_TYPES))
    def test_symmetric_bilinear(self, data, t):
        rs = build_root_system(t)
        a, b, c = (data.draw(weights(rs.rank)) for _ in range(3))
        x = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=5))
        assert pairing(rs, a, b) == pairing(rs, b, a)
        assert pairing(rs, a * x + c, b) == x * pairing(rs, a, b) + pairing(rs, c, b)


class TestShiftedReflection:
    def test_sl2(self):
        rs = rs_of("A1")
        assert shifted_reflection(rs, 1, W(F(-3, 2))) == W(F(-1, 2))
        assert shifted_reflection(rs, 1, W(F(-1, 2))) == W(F(-3, 2))

    def test_sp4_arrow(self, sp4):
        assert shifted_reflection(sp4, 2, W(0, F(-1, 2))) == W(1, F(-3, 2))

    def test_sl3_reaches_lambda3(self, sl3):
        lam1 = W(F(-3, 2), 0)
        image = shifted_reflection(sl3, 1, lam1)
        assert image.labels == oracles.sl3_shifted_reflection(1, lam1.labels)
        assert image == W(F(-1, 2), F(-1, 2))
        orbit = {w.labels for w in dot_orbit(sl3, lam1)}
        assert orbit == oracles.sl3_dot_orbit(lam1.labels)
        assert W(F(-1, 2), F(-1, 2)).labels in orbit and W(0, F(-3, 2)).labels in orbit

    @settings(max_examples=100, deadline=None)
    @given(data=st.data(), t=st.sampled_from(SMALL_TYPES))
    def test_involution(self, data, t):
        rs = build_root_system(t)
        lam = data.draw(weights(rs.rank))
        i = data.draw(st.sampled_from(rs.nodes))
        assert shifted_reflection(rs, i, shifted_reflection(rs, i, lam)) == lam

    @settings(max_examples=40, deadline=None)
    @given(a=st.fractions(min_value=-5, max_value=5, max_denominator=4),
           b=st.fractions(min_value=-5, max_value=5, max_denominator=4), i=st.sampled_from([1, 2]))
    def test_sl3_matches_epsilon_reflection(self, a, b, i, sl3):
        lam = W(a, b)
        assert shifted_reflection(sl3, i, lam).labels == oracles.sl3_shifted_reflection(i, lam.labels)


class TestWeightClass:
    def test_zero(self, sl3):
        c = weight_class(sl3, Weight.zero(2))
        assert c.integral and c.dominant_integral and c.shifted_regular

    def test_sl3_minus_omega1(self, sl3):
        c = weight_class(sl3, W(-1, 0))
        assert c.integral and c.shifted_singular and not c.dominant_integral

    def test_so8_projection_is_singular_integral(self):
        c = weight_class(rs_of("A2"), W(-2, 0))
        assert c.integral and c.shifted_singular

    @settings(max_examples=100, deadline=None)
    @given(data=st.data(), t=st.sampled_from(SMALL_TYPES))
    def test_consistency(self, data, t):
        rs = build_root_system(t)
        lam = data.draw(weights(rs.rank))
        c = weight_class(rs, lam)
        assert not c.dominant_integral or c.integral
        assert c.shifted_singular != c.shifted_regular
        orbit = dot_orbit(rs, lam)
        # the regular orbits are exactly the free ones
        assert (len(orbit) == rs.weyl_order) == c.shifted_regular


class TestOrbit:
    def test_sl2_singular(self):
        assert dot_orbit(rs_of("A1"), W(-1)) == {W(-1)}

    def test_sl2_pair(self):
        assert dot_orbit(rs_of("A1"), W(-2)) == {W(-2), W(0)}

    def test_sp4_divides(self, sp4):
        assert 8 % len(dot_orbit(sp4, W(0, F(-1, 2)))) == 0

    def test_cap(self, so8):
        with pytest.raises(OrbitCapExceeded):
            dot_orbit(so8, W(F(1, 3), F(1, 5), F(1, 7), F(1, 11)), cap=10)

    def test_env_cap(self, so8, monkeypatch):
        monkeypatch.setenv("WEIGHTFAM_ORBIT_CAP", "5")
        with pytest.raises(OrbitCapExceeded):
            dot_orbit(so8, W(F(1, 3), 0, 0, 0))

    def test_generic_d4_orbit_is_free(self, so8):
        assert len(dot_orbit(so8, W(F(1, 3), F(1, 5), F(1, 7), F(1, 11)))) == 192

    @settings(max_examples=60, deadline=None)
    @given(data=st.data(), t=st.sampled_from(SMALL_TYPES))
    def test_orbit_size_divides_weyl_order_and_casimir_constant(self, data, t):
        rs = build_root_system(t)
        lam = data.draw(weights(rs.rank))
        orbit = dot_orbit(rs, lam)
        assert rs.weyl_order % len(orbit) == 0
        assert {casimir(rs, w) for w in orbit} == {casimir(rs, lam)}


class TestCasimirAndConformal:
    def test_zero(self, sl3):
        assert casimir(sl3, Weight.zero(2)) == 0
        assert conformal_weight(sl3, Weight.zero(2), F(7, 3)) == 0

    def test_so8_ideal_values(self):
        assert casimir(rs_of("A2"), W(-2, 0)) == F(-4, 3)
        assert casimir(rs_of("A2"), W(0, -1)) == F(-4, 3)
        assert casimir(rs_of("A3"), W(-2, 0, 0)) == -3

    def test_sl2_admissible_instance(self):
        rs = rs_of("A1")
        u, v, r, s = 3, 2, 1, 1
        lam = W(r - 1 - F(u, v) * s)
        assert conformal_weight(rs, lam, F(u, v) - 2) == F(-1, 8)

    def test_sl3_orbit_agreement(self, sl3):
        k = F(-3, 2)
        values = {conformal_weight(sl3, lam, k) for lam in (W(F(-3, 2), 0), W(0, F(-3, 2)), W(F(-1, 2), F(-1, 2)))}
        assert values == {F(-1, 2)}

    def test_critical(self):
        with pytest.raises(CriticalLevel):
            conformal_weight(rs_of("A1"), W(0), -2)


class TestParabolicSubgroupOrder:
    def test_empty(self, so8):
        assert parabolic_subgroup_order(so8, []) == 1

    def test_so8_a3(self, so8):
        assert parabolic_subgroup_order(so8, {2, 3, 4}) == 24
        assert so8.weyl_order // (1 * 24) == 8

    def test_so8_single(self, so8):
        assert parabolic_subgroup_order(so8, {1}) == 2
        assert oracles.reflection_group_order(oracles.Model("D", 4), [1]) == 2


class TestLevel:
    def test_sl2_admissible(self):
        d = level_diagnostic(rs_of("A1"), F(-1, 2))
        assert d.nonsimple_vacuum and (d.u, d.v) == (3, 2) and not d.critical

    def test_sl2_critical(self):
        d = level_diagnostic(rs_of("A1"), -2)
        assert d.critical and d.nonsimple_vacuum

    def test_so8(self, so8):
        d = level_diagnostic(so8, -2)
        assert d.nonsimple_vacuum and (d.u, d.v) == (4, 1)

    def test_generic_level_is_simple(self):
        d = level_diagnostic(rs_of("A1"), F(1, 3) - 2)
        assert not d.nonsimple_vacuum and not d.critical

    def test_g2_uses_lacing(self):
        # 3 * (-5/3 + 4) = 7
        d = level_diagnostic(rs_of("G2"), F(-5, 3))
        assert (d.u, d.v) == (7, 1)
