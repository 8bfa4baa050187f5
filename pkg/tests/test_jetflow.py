"""On-shell derivations, the Frechet derivative, and invariance residuals."""

from fractions import Fraction

import pytest

from conftest import make_random_poly
from jetsym.diffring import jet_poly, par_poly, t_poly, x_poly
from jetsym.jetflow import (
    BURGERS,
    HEAT,
    POTBURGERS,
    Characteristic,
    EvolutionEquation,
    invariance_residual,
)

t, x = t_poly(), x_poly()
half = Fraction(1, 2)


def z(k):
    return jet_poly(k)


def h(j):
    return par_poly(j)


def test_builtin_right_hand_sides():
    assert HEAT.rhs == z(2)
    assert POTBURGERS.rhs == z(2) + z(1) * z(1)
    assert BURGERS.rhs == z(2) - z(0) * z(1)


def test_dx_examples():
    assert BURGERS.dx(-half * z(0)) == -half * z(1)
    # hand expansion: D_x(t u_1 + x u / 2) = t u_2 + u/2 + x u_1 / 2
    assert HEAT.dx(t * z(1) + half * x * z(0)) == t * z(2) + half * z(0) + half * x * z(1)
    # Leibniz with the parameter shift
    assert HEAT.dx(h(0) * z(0)) == h(1) * z(0) + h(0) * z(1)


def test_dt_examples():
    assert HEAT.dt(z(1)) == z(3)
    assert BURGERS.dt(z(0)) == z(2) - z(0) * z(1)
    assert HEAT.dt(h(0)) == h(2)


def test_frechet_burgers_direction_v1():
    # sum_k dL/dz_k D_x^k(v_1) expanded by hand
    expected = z(3) - z(1) * z(1) - z(0) * z(2)
    assert BURGERS.frechet(BURGERS.rhs, z(1)) == expected


def test_frechet_linear_rhs_is_dx_squared(rng):
    for _ in range(10):
        eta = make_random_poly(rng)
        assert HEAT.frechet(z(2), eta) == HEAT.dx(HEAT.dx(eta))


def test_frechet_identity_direction(rng):
    eta = make_random_poly(rng)
    assert BURGERS.frechet(z(0), eta) == eta


def test_invariance_residual_examples():
    assert invariance_residual(BURGERS, z(1)) == 0
    # dt(v) - L'[v] = (v2 - v v1) - (v2 - 2 v v1) = v v1
    assert invariance_residual(BURGERS, z(0)) == z(0) * z(1)
    assert invariance_residual(HEAT, h(0)) == 0


def test_invariance_residual_accepts_characteristics():
    eta = Characteristic(BURGERS, z(1))
    assert invariance_residual(BURGERS, eta) == 0
    with pytest.raises(ValueError):
        invariance_residual(HEAT, eta)


def test_derivations_commute_on_random_probes(rng):
    for eq, with_par in ((HEAT, True), (POTBURGERS, True), (BURGERS, False)):
        count = 0
        while count < 20:
            p = make_random_poly(rng, with_par=with_par)
            if not p:
                continue
            count += 1
            assert eq.dt(eq.dx(p)) == eq.dx(eq.dt(p)), eq.name


def test_residual_is_linear(rng):
    a, b = Fraction(3, 2), Fraction(-2, 3)
    for _ in range(10):
        eta = make_random_poly(rng)
        zeta = make_random_poly(rng)
        lhs = invariance_residual(BURGERS, a * eta + b * zeta)
        rhs = a * invariance_residual(BURGERS, eta) + b * invariance_residual(BURGERS, zeta)
        assert lhs == rhs


def test_burgers_rejects_parameter_symbols():
    with pytest.raises(ValueError):
        BURGERS.dx(h(0))
    with pytest.raises(ValueError):
        BURGERS.dt(h(0) * z(0))


def test_equation_rhs_validation():
    with pytest.raises(ValueError):
        EvolutionEquation("bad", h(0))
    with pytest.raises(ValueError):
        EvolutionEquation("bad", t * z(1))


def test_prepare_extends_cache():
    eq = EvolutionEquation("heat_copy", z(2))
    eq.prepare(4)
    assert eq.dt(z(3)) == z(5)
