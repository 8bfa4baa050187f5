"""Exact nullspace computation and the bounded-ansatz symmetry solver."""

from fractions import Fraction

import pytest

from jetsym.detsolve import (
    Ansatz,
    AnsatzTooLarge,
    LinearSystem,
    build_system,
    family_bodies,
    nullspace,
    solve_symmetries,
)
from jetsym.diffring import T_VAR, X_VAR, jet, jet_poly
from jetsym.jetflow import BURGERS, HEAT, invariance_residual
from jetsym.symfam import Family, q_char


def test_nullspace_zero_matrix():
    system = LinearSystem(ncols=3)
    basis = nullspace(system)
    assert basis == [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
    ]


def test_nullspace_single_row():
    system = LinearSystem.from_dense([[1, -1]])
    assert nullspace(system) == [(Fraction(1), Fraction(1))]


def test_nullspace_rectangular():
    system = LinearSystem.from_dense(
        [
            [1, 2, 3],
            [2, 4, 6],
            [0, 1, 1],
        ]
    )
    basis = nullspace(system)
    assert len(basis) == 1
    vec = basis[0]
    assert vec[0] == 1  # normalized leading entry
    for row in ([1, 2, 3], [0, 1, 1]):
        assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


def test_nullspace_fractional_entries():
    system = LinearSystem.from_dense([[Fraction(1, 2), Fraction(-1, 3)]])
    (vec,) = nullspace(system)
    assert Fraction(1, 2) * vec[0] - Fraction(1, 3) * vec[1] == 0


def test_ansatz_monomials_are_bounded_and_sorted():
    ansatz = Ansatz(BURGERS, 2)
    monos = ansatz.monomials()
    assert len(monos) == len(set(monos))
    for m in monos:
        d = dict(m)
        assert d.get(T_VAR, 0) <= 2 and d.get(X_VAR, 0) <= 2
        assert sum(e for (kind, _), e in m if kind == 2) <= 2
    assert monos == sorted(monos, key=lambda m: (sum(e for _, e in m), m))


def test_ansatz_cap():
    with pytest.raises(AnsatzTooLarge):
        Ansatz(BURGERS, 4, monomial_cap=10).monomials()


def test_system_order_one_contains_translation():
    report = solve_symmetries(BURGERS, 1)
    assert report.dimension == 2
    span = [c.body for c in report.basis]
    # v_x lies in the kernel span: residual of v_x is zero and rank is 2
    assert invariance_residual(BURGERS, jet_poly(1)) == 0
    from jetsym.detsolve import _rank_of_bodies

    assert _rank_of_bodies(span + [jet_poly(1)]) == 2


def test_order_zero_has_no_symmetries():
    report = solve_symmetries(BURGERS, 0)
    assert report.dimension == 0


def test_single_monomial_ansatz_is_empty():
    system = build_system(Ansatz(BURGERS, 0, jet_degree=1, x_degree=0, t_degree=0))
    assert system.columns == (
        (),
        ((jet(0), 1),),
    )
    kernel = nullspace(system)
    assert kernel == []


def test_solver_dimensions_and_span():
    expected = {1: 2, 2: 5, 3: 9}
    for order, dim in expected.items():
        report = solve_symmetries(BURGERS, order)
        assert report.dimension == dim, order
        assert report.family_span_matches is True
        for c in report.basis:
            assert invariance_residual(BURGERS, c.body) == 0


def test_family_contained_in_default_bounds():
    # explicit membership of every family monomial in the default ansatz
    n = 4
    admissible = set(Ansatz(BURGERS, n).monomials())
    for total in range(1, n + 1):
        for k in range(total + 1):
            body = q_char(Family.BURGERS_Q, k, total - k).body
            assert set(body.terms) <= admissible, (k, total - k)


def test_determinism():
    a = solve_symmetries(BURGERS, 2)
    b = solve_symmetries(BURGERS, 2)
    assert [c.body for c in a.basis] == [c.body for c in b.basis]


def test_heat_requires_experimental_flag():
    with pytest.raises(ValueError):
        solve_symmetries(HEAT, 1)
    report = solve_symmetries(HEAT, 1, experimental=True)
    # 3 linear family members (u, u_x, t u_x + x u / 2) plus the bounded
    # polynomial heat solutions 1 and x; the span verdict does not apply
    assert report.family_span_matches is None
    assert report.dimension == 5
    for c in report.basis:
        assert invariance_residual(HEAT, c.body) == 0
    # order 2: six family members plus the heat polynomials 1, x, x^2 + 2t
    assert solve_symmetries(HEAT, 2, experimental=True).dimension == 9


def test_family_rank_matches_count():
    from jetsym.detsolve import _rank_of_bodies

    bodies = family_bodies(3)
    assert len(bodies) == 9
    assert _rank_of_bodies(bodies) == 9
