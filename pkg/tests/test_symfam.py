"""Symmetry families, brackets, structure constants, Lie correspondence."""

from fractions import Fraction
from itertools import combinations

import pytest

from conftest import make_random_poly
from jetsym.diffring import DiffPoly, jet_poly, par_poly, t_poly, x_poly
from jetsym.jetflow import BURGERS, HEAT, POTBURGERS, Characteristic, invariance_residual
from jetsym.symfam import (
    Family,
    FamilyIndex,
    LieGenerator,
    closed_form_bracket,
    commutator,
    evolution_form,
    heat_point_symmetries,
    lie_correspondence,
    q_char,
    structure_check,
)

t, x = t_poly(), x_poly()
half = Fraction(1, 2)


def z(k):
    return jet_poly(k)


def test_burgers_seeds():
    assert q_char(Family.BURGERS_Q, 0, 1).body == -half * z(1)
    assert q_char(Family.BURGERS_Q, 0, 0).body == 0
    # definitional seed D_x(boost 1); differs from a misprinted variant
    assert q_char(Family.BURGERS_Q, 1, 0).body == half * (1 - t * z(1))


def test_family_index_on_characteristic():
    c = q_char(Family.HEAT_Q, 2, 1)
    assert c.label == FamilyIndex(Family.HEAT_Q, 2, 1)
    assert c.equation is HEAT


def test_boost_squared_member_degrees():
    from jetsym.diffring import T_VAR

    q20 = q_char(Family.HEAT_Q, 2, 0).body
    assert q20.degree(T_VAR) == 2
    assert q20 == (
        t * t * jet_poly(2)
        + t * x * jet_poly(1)
        + (Fraction(1, 4) * x * x + half * t) * jet_poly(0)
    )


def test_family_order_is_total_index():
    for family in (Family.HEAT_Q, Family.POT_Q, Family.BURGERS_Q):
        for k in range(4):
            for l in range(4):
                if (k, l) == (0, 0):
                    continue
                assert q_char(family, k, l).body.order() == k + l, (family, k, l)


def test_all_family_members_are_symmetries():
    for family, eq in (
        (Family.HEAT_Q, HEAT),
        (Family.POT_Q, POTBURGERS),
        (Family.BURGERS_Q, BURGERS),
    ):
        for k in range(4):
            for l in range(4):
                if k + l > 3:
                    continue
                res = invariance_residual(eq, q_char(family, k, l))
                assert res == 0, (family, k, l)


def test_commutator_heat_example():
    # [Q01, Q10] = -u/2, by hand: (x u1/2 + t u2) - (t u2 + u/2 + x u1/2)
    got = commutator(HEAT, q_char(Family.HEAT_Q, 0, 1), q_char(Family.HEAT_Q, 1, 0))
    assert got.body == -half * z(0)


def test_commutator_parameter_fields_commute():
    zh = q_char(Family.HEAT_Z)
    assert commutator(HEAT, zh, zh).body == 0
    # concrete heat-polynomial instances of the parameter function
    h1 = Characteristic(HEAT, x)
    h2 = Characteristic(HEAT, x * x + 2 * t)
    assert commutator(HEAT, h1, h2).body == 0


def test_commutator_burgers_degenerate_pair():
    got = commutator(BURGERS, q_char(Family.BURGERS_Q, 0, 1), q_char(Family.BURGERS_Q, 1, 0))
    assert got.body == 0


def test_commutator_antisymmetric_and_bilinear(rng):
    for _ in range(8):
        a = Characteristic(BURGERS, make_random_poly(rng))
        b = Characteristic(BURGERS, make_random_poly(rng))
        ab = commutator(BURGERS, a, b).body
        ba = commutator(BURGERS, b, a).body
        assert ab == -ba
        c = Characteristic(BURGERS, make_random_poly(rng))
        s = Characteristic(BURGERS, 2 * a.body - 3 * c.body)
        lhs = commutator(BURGERS, s, b).body
        rhs = 2 * ab - 3 * commutator(BURGERS, c, b).body
        assert lhs == rhs


def test_structure_check_heat_example():
    assert structure_check(Family.HEAT_Q, (0, 1), (1, 0)) == 0
    assert closed_form_bracket(Family.HEAT_Q, (0, 1), (1, 0)) == -half * z(0)


def test_structure_check_parameter_bracket():
    assert structure_check(Family.HEAT_Z, (1, 1)).is_zero()
    # [Z(h), Q11] = Z(G D_x h) with body t h2 + x h1 / 2
    zh = q_char(Family.HEAT_Z)
    q11 = q_char(Family.HEAT_Q, 1, 1)
    got = commutator(HEAT, zh, q11).body
    assert got == t * par_poly(2) + half * x * par_poly(1)


def test_structure_check_burgers_degenerate():
    assert structure_check(Family.BURGERS_Q, (0, 1), (1, 0)).is_zero()


def test_structure_sweep_small():
    pairs = [(k, l) for k in range(3) for l in range(3) if k + l <= 2]
    for family in (Family.HEAT_Q, Family.POT_Q, Family.BURGERS_Q):
        for kl1 in pairs:
            for kl2 in pairs:
                assert structure_check(family, kl1, kl2).is_zero(), (family, kl1, kl2)


def test_burgers_brackets_match_rescaled_binomial_form():
    # the unscaled binomial constants hold verbatim for the images -2 Q[k,l]
    from jetsym.symfam import _binomial_weight, _q_body

    pairs = [(k, l) for k in range(3) for l in range(3) if 1 <= k + l <= 2]
    for k, l in pairs:
        for kp, lp in pairs:
            a = Characteristic(BURGERS, -2 * _q_body(Family.BURGERS_Q, k, l))
            b = Characteristic(BURGERS, -2 * _q_body(Family.BURGERS_Q, kp, lp))
            brute = commutator(BURGERS, a, b).body
            expected = DiffPoly.zero()
            for i in range(min(k, lp) + 1):
                expected = expected + _binomial_weight(i, k, lp) * (
                    -2 * _q_body(Family.BURGERS_Q, k + kp - i, l + lp - i)
                )
            for i in range(min(kp, l) + 1):
                expected = expected - _binomial_weight(i, kp, l) * (
                    -2 * _q_body(Family.BURGERS_Q, k + kp - i, l + lp - i)
                )
            assert brute == expected


def test_jacobi_identity_low_order():
    indices = [(k, l) for k in range(3) for l in range(3) if k + l <= 2]
    for family, eq in (
        (Family.HEAT_Q, HEAT),
        (Family.POT_Q, POTBURGERS),
        (Family.BURGERS_Q, BURGERS),
    ):
        chars = [q_char(family, k, l) for k, l in indices]
        for a, b, c in combinations(chars, 3):
            ab_c = commutator(eq, commutator(eq, a, b), c).body
            bc_a = commutator(eq, commutator(eq, b, c), a).body
            ca_b = commutator(eq, commutator(eq, c, a), b).body
            assert (ab_c + bc_a + ca_b).is_zero()


def test_family_linearly_independent():
    from jetsym.detsolve import _rank_of_bodies, family_bodies

    bodies = family_bodies(4)
    assert _rank_of_bodies(bodies) == len(bodies)


def test_evolution_forms():
    gens = heat_point_symmetries()
    dilation = evolution_form(gens["dilation"], HEAT).body
    expected = -(2 * q_char(Family.HEAT_Q, 1, 1).body + half * q_char(Family.HEAT_Q, 0, 0).body)
    assert dilation == expected
    assert evolution_form(gens["space_translation"], HEAT).body == -z(1)
    assert evolution_form(gens["amplitude_scaling"], HEAT).body == z(0)


def test_burgers_seeds_are_point_symmetry_evolution_forms():
    # the seeds match the halved space translation and Galilean boost of
    # the Burgers equation up to sign (the boost is t d/dx + d/dv)
    translation = LieGenerator(
        DiffPoly.zero(), Fraction(1, 2) * DiffPoly.const(1), DiffPoly.zero()
    )
    boost = LieGenerator(
        DiffPoly.zero(), half * t, half * DiffPoly.const(1)
    )
    ev_trans = evolution_form(translation, BURGERS).body
    ev_boost = evolution_form(boost, BURGERS).body
    assert ev_trans in (q_char(Family.BURGERS_Q, 0, 1).body, -q_char(Family.BURGERS_Q, 0, 1).body)
    assert ev_boost in (q_char(Family.BURGERS_Q, 1, 0).body, -q_char(Family.BURGERS_Q, 1, 0).body)


def test_lie_correspondence_up_to_sign():
    matches = lie_correspondence()
    assert len(matches) == 6
    assert all(m.sign in (-1, 1) for m in matches)
    signs = {m.name: m.sign for m in matches}
    assert signs["amplitude_scaling"] == 1  # the only positive match


def test_z_family_rejects_indices():
    with pytest.raises(ValueError):
        q_char(Family.HEAT_Z, 1, 0)
    with pytest.raises(ValueError):
        q_char(Family.BURGERS_Q, -1, 0)
