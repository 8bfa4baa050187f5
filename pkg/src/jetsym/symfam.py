"""Symmetry families, evolutionary commutators, and structure constants.

Each equation carries a two-parameter family of polynomial characteristics
built from its recursion operators applied to a seed:

    heat:              Q[k,l] = boost^k translation^l (u)
    potential Burgers: Q[k,l] = boost^k translation^l (1)
    Burgers:           Q[k,l] = D_x boost^k translation^l (1)

(the Burgers (0,0) entry is the zero characteristic).  The heat and
potential-Burgers equations additionally admit the parameter families
h(t,x) and h(t,x) e^{-w} with h a symbolic heat solution.

Brackets of evolutionary vector fields are computed through the
prolongation formula [eta, zeta] = pr_eta(zeta) - pr_zeta(eta) with
pr_eta(zeta) = sum_k D_x^k(eta) dzeta/dz_k; the parameter symbols are
coefficients, so prolongations act on jet variables only.  The closed-form
structure constants of the families are binomial sums, checked exactly
against the brute-force brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Optional

from .colemap import ExpPoly, exp_dx
from .diffring import DiffPoly, jet, jet_poly, par_poly, t_poly, x_poly
from .jetflow import (
    BURGERS,
    HEAT,
    POTBURGERS,
    Characteristic,
    EvolutionEquation,
)
from .opcalc import Compose, Dx, apply, boost_op, translation_op


class Family(Enum):
    HEAT_Q = "heat_q"
    POT_Q = "pot_q"
    BURGERS_Q = "burgers_q"
    HEAT_Z = "heat_z"
    POT_Z = "pot_z"


Q_FAMILIES = (Family.HEAT_Q, Family.POT_Q, Family.BURGERS_Q)
Z_FAMILIES = (Family.HEAT_Z, Family.POT_Z)

FAMILY_EQUATION = {
    Family.HEAT_Q: HEAT,
    Family.POT_Q: POTBURGERS,
    Family.BURGERS_Q: BURGERS,
    Family.HEAT_Z: HEAT,
    Family.POT_Z: POTBURGERS,
}

_Q_OF_Z = {Family.HEAT_Z: Family.HEAT_Q, Family.POT_Z: Family.POT_Q}


@dataclass(frozen=True)
class FamilyIndex:
    family: Family
    k: int = 0
    l: int = 0


@lru_cache(maxsize=None)
def _q_body(family: Family, k: int, l: int):
    if family is Family.HEAT_Z:
        return par_poly(0)
    if family is Family.POT_Z:
        return ExpPoly({-1: par_poly(0)})
    eq = FAMILY_EQUATION[family]
    ops = (boost_op(eq),) * k + (translation_op(eq),) * l
    if family is Family.BURGERS_Q:
        ops = (Dx(),) + ops
        seed = DiffPoly.const(1)
    elif family is Family.HEAT_Q:
        seed = jet_poly(0)
    else:
        seed = DiffPoly.const(1)
    return apply(Compose(ops), eq, seed)


def q_char(family: Family | FamilyIndex, k: int = 0, l: int = 0) -> Characteristic:
    """The (k, l) member of a symmetry family, as a Characteristic."""
    if isinstance(family, FamilyIndex):
        family, k, l = family.family, family.k, family.l
    if k < 0 or l < 0:
        raise ValueError("family indices must be nonnegative")
    if family in Z_FAMILIES and (k or l):
        raise ValueError("the parameter families carry no (k, l) indices")
    body = _q_body(family, k, l)
    return Characteristic(FAMILY_EQUATION[family], body, FamilyIndex(family, k, l))


# -- evolutionary brackets -----------------------------------------------------


def _prolongation(eq: EvolutionEquation, eta, zeta):
    """pr_eta(zeta) = sum_k D_x^k(eta) * dzeta/dz_k (jet variables only)."""
    if isinstance(zeta, ExpPoly):
        top = zeta.jet_order_for_prolongation()
    else:
        top = zeta.order()
    if top < 0:
        return DiffPoly.zero() if isinstance(eta, DiffPoly) else ExpPoly({})
    result = None
    dk = eta
    for k in range(int(top) + 1):
        c = zeta.partial_jet(k) if isinstance(zeta, ExpPoly) else zeta.partial(jet(k))
        if c:
            term = c * dk
            result = term if result is None else result + term
        if k < top:
            dk = exp_dx(eq, dk) if isinstance(dk, ExpPoly) else eq.dx(dk)
    if result is None:
        return DiffPoly.zero() if isinstance(eta, DiffPoly) else ExpPoly({})
    return result


def commutator(
    eq: EvolutionEquation, eta: Characteristic, zeta: Characteristic
) -> Characteristic:
    """The evolutionary bracket [eta, zeta] = pr_eta(zeta) - pr_zeta(eta)."""
    if eta.equation is not eq or zeta.equation is not eq:
        raise ValueError("both characteristics must belong to the given equation")
    a, b = eta.body, zeta.body
    if isinstance(a, ExpPoly) or isinstance(b, ExpPoly):
        a = a if isinstance(a, ExpPoly) else ExpPoly.from_poly(a)
        b = b if isinstance(b, ExpPoly) else ExpPoly.from_poly(b)
    body = _prolongation(eq, a, b) - _prolongation(eq, b, a)
    if isinstance(body, ExpPoly):
        plain = body.pure_grade0()
        if plain is not None:
            body = plain
    return Characteristic(eq, body)


# -- closed-form structure constants -------------------------------------------


def _binomial_weight(i: int, a: int, b: int) -> Fraction:
    return Fraction(factorial(i), 2**i) * comb(a, i) * comb(b, i)


# The Burgers generators are the (-1/2)-scaled images of the potential ones
# under the pushforward homomorphism, so their brackets pick up an extra
# factor -1/2 relative to the binomial constants of the other two families
# (equivalently, the unscaled constants hold verbatim for -2 Q[k,l]).
_BRACKET_SCALE = {
    Family.HEAT_Q: Fraction(1),
    Family.POT_Q: Fraction(1),
    Family.BURGERS_Q: Fraction(-1, 2),
}


def closed_form_bracket(family: Family, kl1, kl2):
    """The closed-form right side for [Q[k,l], Q[k',l']] in one family."""
    k, l = kl1
    kp, lp = kl2
    body = None
    for i in range(min(k, lp) + 1):
        term = _q_body(family, k + kp - i, l + lp - i) * _binomial_weight(i, k, lp)
        body = term if body is None else body + term
    for i in range(min(kp, l) + 1):
        term = _q_body(family, k + kp - i, l + lp - i) * _binomial_weight(i, kp, l)
        body = -term if body is None else body - term
    if body is None:
        return DiffPoly.zero()
    return body * _BRACKET_SCALE[family]


def structure_check(family: Family, idx1, idx2=None):
    """Residual of one closed-form commutation relation; zero means it holds.

    For the Q families pass two index pairs: the brute-force bracket is
    compared with the binomial sum.  For the parameter families pass the Q
    index pair: [z(h), Q[k,l]] is compared with z(boost^k D_x^l h).
    """
    eq = FAMILY_EQUATION[family]
    if family in Z_FAMILIES:
        kl = idx1 if idx2 is None else idx2
        k, l = kl
        z = q_char(family)
        q = q_char(_Q_OF_Z[family], k, l)
        brute = commutator(eq, z, q).body
        ops = (boost_op(HEAT),) * k + (Dx(),) * l
        h_image = apply(Compose(ops), HEAT, par_poly(0))
        expected = h_image if family is Family.HEAT_Z else ExpPoly({-1: h_image})
        return brute - expected
    (k, l), (kp, lp) = idx1, idx2
    brute = commutator(eq, q_char(family, k, l), q_char(family, kp, lp)).body
    return brute - closed_form_bracket(family, idx1, idx2)


# -- point symmetries and their evolution forms ---------------------------------


@dataclass(frozen=True)
class LieGenerator:
    """A point-symmetry vector field xi_t d/dt + xi_x d/dx + phi d/dz."""

    xi_t: DiffPoly
    xi_x: DiffPoly
    phi: DiffPoly
    name: Optional[str] = None


def evolution_form(g: LieGenerator, eq: EvolutionEquation) -> Characteristic:
    """The reduced evolutionary characteristic phi - xi_t rhs - xi_x z_1."""
    body = g.phi - g.xi_t * eq.rhs - g.xi_x * jet_poly(1)
    return Characteristic(eq, body)


def heat_point_symmetries() -> dict[str, LieGenerator]:
    """The essential point-symmetry algebra of the linear heat equation."""
    one = DiffPoly.const(1)
    zero = DiffPoly.zero()
    t = t_poly()
    x = x_poly()
    u = jet_poly(0)
    half = Fraction(1, 2)
    return {
        "time_translation": LieGenerator(one, zero, zero, "time_translation"),
        "dilation": LieGenerator(2 * t, x, -half * u, "dilation"),
        "projective": LieGenerator(
            t * t, t * x, (x * x + 2 * t) * u * Fraction(-1, 4), "projective"
        ),
        "galilean_boost": LieGenerator(zero, t, -half * x * u, "galilean_boost"),
        "space_translation": LieGenerator(zero, one, zero, "space_translation"),
        "amplitude_scaling": LieGenerator(zero, zero, u, "amplitude_scaling"),
    }


@dataclass(frozen=True)
class LieMatch:
    name: str
    sign: Optional[int]  # +1 / -1 when matched up to sign, None otherwise


def lie_correspondence() -> list[LieMatch]:
    """Match heat point symmetries with family combinations, up to sign.

    The expected partners are Q[0,2], 2 Q[1,1] + Q[0,0]/2, Q[2,0], Q[1,0],
    Q[0,1] and Q[0,0]; the sign of each match is recorded, not asserted.
    """
    expected = {
        "time_translation": _q_body(Family.HEAT_Q, 0, 2),
        "dilation": 2 * _q_body(Family.HEAT_Q, 1, 1)
        + Fraction(1, 2) * _q_body(Family.HEAT_Q, 0, 0),
        "projective": _q_body(Family.HEAT_Q, 2, 0),
        "galilean_boost": _q_body(Family.HEAT_Q, 1, 0),
        "space_translation": _q_body(Family.HEAT_Q, 0, 1),
        "amplitude_scaling": _q_body(Family.HEAT_Q, 0, 0),
    }
    matches = []
    for name, gen in heat_point_symmetries().items():
        body = evolution_form(gen, HEAT).body
        target = expected[name]
        if body == target:
            sign: Optional[int] = 1
        elif body == -target:
            sign = -1
        else:
            sign = None
        matches.append(LieMatch(name, sign))
    return matches
