"""Evolution equations and their on-shell calculus.

An evolution equation z_t = L[z] is reduced to the parametric jet
coordinates (t, x, z_0, z_1, ...).  The restricted total derivatives act as

    D_x = d/dx + sum_k z_{k+1} d/dz_k + sum_j h_{j+1} d/dh_j,
    D_t = d/dt + sum_k (D_x^k L) d/dz_k + sum_j h_{j+2} d/dh_j,

where the parameter symbols h_j differentiate by index shift because the
symbolic parameter function h(t, x) solves the linear heat equation
(h_t = h_xx).  Three equations are built in:

    HEAT         z_t = z_2             (u_t = u_xx)
    POTBURGERS   z_t = z_2 + z_1^2     (w_t = w_xx + w_x^2)
    BURGERS      z_t = z_2 - z_0 z_1   (v_t = v_xx - v v_x)

A characteristic eta attached to an equation is a generalized symmetry
exactly when its invariance residual D_t(eta) - L'[eta] vanishes, L' being
the Frechet derivative of the right-hand side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .diffring import (
    DiffPoly,
    KIND_JET,
    KIND_PAR,
    KIND_T,
    KIND_X,
    Monomial,
    jet,
    jet_poly,
    par,
)

_X_IMAGE = DiffPoly.const(1)


def x_derivative(p: DiffPoly) -> DiffPoly:
    """Equation-independent total x-derivative on the parametric jet ring."""
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        for pos, (v, e) in enumerate(mono):
            kind, idx = v
            if kind == KIND_T:
                continue
            # d/dx of the factor v: 1 for x, z_{k+1} for z_k, h_{j+1} for h_j.
            if kind == KIND_X:
                image_var = None
            elif kind == KIND_JET:
                image_var = jet(idx + 1)
            else:
                image_var = par(idx + 1)
            base = list(mono)
            if e > 1:
                base[pos] = (v, e - 1)
            else:
                del base[pos]
            if image_var is not None:
                emap = dict(base)
                emap[image_var] = emap.get(image_var, 0) + 1
                new_mono = tuple(sorted(emap.items()))
            else:
                new_mono = tuple(base)
            c = coeff * e
            s = out.get(new_mono)
            if s is None:
                out[new_mono] = c
            else:
                s = s + c
                if s:
                    out[new_mono] = s
                else:
                    del out[new_mono]
    return DiffPoly._raw(out)


class EvolutionEquation:
    """A named evolution equation z_t = rhs, with cached D_x powers of rhs.

    Instances are effectively immutable: the derivative cache only ever
    extends, and every public operation is a pure function of its inputs.
    """

    def __init__(self, name: str, rhs: DiffPoly, allows_par: bool = True):
        if rhs.has_kind(KIND_PAR) or rhs.has_kind(KIND_T):
            raise ValueError("equation right-hand side must involve jets (and x) only")
        self.name = name
        self.rhs = rhs
        self.allows_par = allows_par
        self._rhs_dx: list[DiffPoly] = [rhs]

    def __repr__(self) -> str:
        return f"EvolutionEquation({self.name}: z_t = {self.rhs})"

    def prepare(self, max_order: int) -> None:
        """Extend the D_x^k(rhs) cache up to k = max_order."""
        while len(self._rhs_dx) <= max_order:
            self._rhs_dx.append(x_derivative(self._rhs_dx[-1]))

    def _rhs_dx_k(self, k: int) -> DiffPoly:
        self.prepare(k)
        return self._rhs_dx[k]

    def _check_par(self, p: DiffPoly) -> None:
        if not self.allows_par and p.has_kind(KIND_PAR):
            raise ValueError(
                f"parameter symbols are not supported in the {self.name} ring"
            )

    def dx(self, p: DiffPoly) -> DiffPoly:
        """Restricted total x-derivative."""
        self._check_par(p)
        return x_derivative(p)

    def dt(self, p: DiffPoly) -> DiffPoly:
        """Restricted total t-derivative (z_t replaced by D_x^k(rhs))."""
        self._check_par(p)
        top = p.order()
        if top >= 0:
            self.prepare(int(top))
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in p.terms.items():
            for pos, (v, e) in enumerate(mono):
                kind, idx = v
                if kind == KIND_X:
                    continue
                base = list(mono)
                if e > 1:
                    base[pos] = (v, e - 1)
                else:
                    del base[pos]
                c = coeff * e
                if kind == KIND_T:
                    images = {(): Fraction(1)}
                elif kind == KIND_JET:
                    images = self._rhs_dx[idx].terms
                else:
                    images = {((par(idx + 2), 1),): Fraction(1)}
                for img_mono, img_coeff in images.items():
                    emap = dict(base)
                    for iv, ie in img_mono:
                        emap[iv] = emap.get(iv, 0) + ie
                    new_mono = tuple(sorted(emap.items()))
                    cc = c * img_coeff
                    s = out.get(new_mono)
                    if s is None:
                        out[new_mono] = cc
                    else:
                        s = s + cc
                        if s:
                            out[new_mono] = s
                        else:
                            del out[new_mono]
        return DiffPoly._raw(out)

    def frechet(self, F: DiffPoly, eta: DiffPoly) -> DiffPoly:
        """Frechet derivative of F in the direction eta (on-shell).

        F must be free of parameter symbols; the result is
        sum_k (dF/dz_k) * D_x^k(eta).
        """
        if F.has_kind(KIND_PAR):
            raise ValueError("Frechet derivative target must be free of parameter symbols")
        top = F.order()
        if top < 0:
            return DiffPoly.zero()
        result = DiffPoly.zero()
        dk_eta = eta
        for k in range(int(top) + 1):
            coeff = F.partial(jet(k))
            if coeff:
                result = result + coeff * dk_eta
            if k < top:
                dk_eta = self.dx(dk_eta)
        return result


@dataclass(frozen=True)
class Characteristic:
    """A reduced evolutionary-symmetry characteristic tied to one equation.

    The body depends only on t, x, jet variables and (for parameter
    families) the h_j symbols; bodies over the Burgers ring must be free of
    the h_j symbols.  The body may also be an exponential-graded polynomial
    (see colemap.ExpPoly) for the potential-Burgers parameter family.
    """

    equation: EvolutionEquation
    body: object
    label: Optional[object] = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"{self.body}"


def invariance_residual(eq: EvolutionEquation, eta) -> object:
    """D_t(eta) - L'[eta]; zero exactly when eta is a generalized symmetry.

    Accepts a Characteristic, a DiffPoly, or an exponential-graded ExpPoly
    body (needed for the e^{-w}-weighted parameter family).
    """
    if isinstance(eta, Characteristic):
        if eta.equation is not eq:
            raise ValueError("characteristic belongs to a different equation")
        eta = eta.body
    if isinstance(eta, DiffPoly):
        return eq.dt(eta) - eq.frechet(eq.rhs, eta)
    from .colemap import exp_invariance_residual

    return exp_invariance_residual(eq, eta)


HEAT = EvolutionEquation("heat", jet_poly(2), allows_par=True)
POTBURGERS = EvolutionEquation(
    "potburgers", jet_poly(2) + jet_poly(1) * jet_poly(1), allows_par=True
)
BURGERS = EvolutionEquation(
    "burgers", jet_poly(2) - jet_poly(0) * jet_poly(1), allows_par=False
)

EQUATIONS = {eq.name: eq for eq in (HEAT, POTBURGERS, BURGERS)}
