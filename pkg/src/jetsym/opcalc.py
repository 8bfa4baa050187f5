"""Operator expressions and the formal integration machinery.

Operators are small ASTs built from the total derivative D_x (and D_t for
identity probing), formal integration D_x^{-1}, multiplication by a
polynomial, rational scaling, sums, and right-to-left compositions.  The
built-in constructors cover the recursion operators of the three equations:

    heat:               D_x                and  t D_x + x/2
    potential Burgers:  D_x + w_1          and  t (D_x + w_1) + x/2
    Burgers:            D_x - v/2          and  t D_x + (x - v t)/2
    Burgers, nonlocal:  D_x (D_x - v/2) D_x^{-1}   and   D_x (t D_x + (x - vt)/2) D_x^{-1}

D_x^{-1} is only ever applied to total x-derivatives; membership is
certified by the Euler operator (variational derivative), which vanishes
exactly on the image of D_x for polynomials with polynomial (t, x)
coefficients.

The kernel of D_x on this ring consists of the polynomials in t alone, so a
preimage is only determined up to such terms.  dx_preimage pins the branch
canonically: the returned g has no bare constant term, and the t-only part
of its potential defect D_t g - sum_{k>=1} (dL/dz_k) D_x^k g vanishes.  On
characteristics of generalized symmetries this selects exactly the
potential that the recursion operators need, which makes the generation
identities between the operator powers and the symmetry families exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diffring import (
    DiffPoly,
    KIND_PAR,
    KIND_T,
    T_VAR,
    X_VAR,
    jet,
    jet_poly,
    t_poly,
    x_poly,
)
from .jetflow import BURGERS, HEAT, POTBURGERS, EvolutionEquation, x_derivative


class NotATotalDerivative(ValueError):
    """Raised by D_x^{-1} on input outside the image of D_x.

    Carries the (nonzero) Euler residual of the offending polynomial.
    """

    def __init__(self, message: str, euler_residual: DiffPoly):
        super().__init__(message)
        self.euler_residual = euler_residual


# -- operator AST ------------------------------------------------------------


class OperatorExpr:
    """Base class for operator AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Dx(OperatorExpr):
    pass


@dataclass(frozen=True)
class Dt(OperatorExpr):
    """Total t-derivative; admitted only for operator identity probing."""


@dataclass(frozen=True)
class DxInv(OperatorExpr):
    pass


@dataclass(frozen=True)
class MulBy(OperatorExpr):
    factor: DiffPoly


@dataclass(frozen=True)
class Scale(OperatorExpr):
    coeff: Fraction


@dataclass(frozen=True)
class Sum(OperatorExpr):
    ops: tuple


@dataclass(frozen=True)
class Compose(OperatorExpr):
    """Composition, applied right to left; the empty composition is the identity."""

    ops: tuple


def op_sum(*ops: OperatorExpr) -> OperatorExpr:
    return Sum(tuple(ops))


def op_compose(*ops: OperatorExpr) -> OperatorExpr:
    return Compose(tuple(ops))


def op_scale(c: Fraction | int, op: OperatorExpr | None = None) -> OperatorExpr:
    node = Scale(Fraction(c))
    if op is None:
        return node
    return Compose((node, op))


def op_power(op: OperatorExpr, n: int) -> OperatorExpr:
    if n < 0:
        raise ValueError("operator powers must be nonnegative")
    return Compose((op,) * n)


def identity_op() -> OperatorExpr:
    return Compose(())


def commutator_op(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    return Sum((Compose((a, b)), Compose((Scale(Fraction(-1)), b, a))))


def translation_op(eq: EvolutionEquation) -> OperatorExpr:
    """The first-order recursion operator tied to space translations."""
    if eq is HEAT:
        return Dx()
    if eq is POTBURGERS:
        return Sum((Dx(), MulBy(jet_poly(1))))
    if eq is BURGERS:
        return Sum((Dx(), MulBy(jet_poly(0) * Fraction(-1, 2))))
    raise ValueError(f"no built-in recursion operators for {eq.name}")


def boost_op(eq: EvolutionEquation) -> OperatorExpr:
    """The recursion operator tied to Galilean boosts."""
    half_x = MulBy(x_poly() * Fraction(1, 2))
    if eq in (HEAT, POTBURGERS):
        return Sum((Compose((MulBy(t_poly()), translation_op(eq))), half_x))
    if eq is BURGERS:
        shift = (x_poly() - jet_poly(0) * t_poly()) * Fraction(1, 2)
        return Sum((Compose((MulBy(t_poly()), Dx())), MulBy(shift)))
    raise ValueError(f"no built-in recursion operators for {eq.name}")


def recursion_ops() -> tuple[OperatorExpr, OperatorExpr]:
    """The two nonlocal recursion operators of the Burgers equation."""
    r1 = Compose((Dx(), translation_op(BURGERS), DxInv()))
    r2 = Compose((Dx(), boost_op(BURGERS), DxInv()))
    return r1, r2


def potential_defect_op(eq: EvolutionEquation) -> OperatorExpr:
    """D_t - sum_{k>=1} (dL/dz_k) D_x^k; annihilates potentials of symmetries.

    For the Burgers equation this is the operator D_t + v D_x - D_x^2 that
    commutes with both local recursion operators.
    """
    ops: list[OperatorExpr] = [Dt()]
    top = eq.rhs.order()
    for k in range(1, int(top) + 1):
        c = eq.rhs.partial(jet(k))
        if c:
            ops.append(Compose((Scale(Fraction(-1)), MulBy(c), op_power(Dx(), k))))
    return Sum(tuple(ops))


def apply(op: OperatorExpr, eq: EvolutionEquation, p: DiffPoly) -> DiffPoly:
    """Evaluate an operator expression on a polynomial."""
    if isinstance(op, Dx):
        return eq.dx(p)
    if isinstance(op, Dt):
        return eq.dt(p)
    if isinstance(op, DxInv):
        return dx_preimage(eq, p)
    if isinstance(op, MulBy):
        return op.factor * p
    if isinstance(op, Scale):
        return p * op.coeff
    if isinstance(op, Sum):
        result = DiffPoly.zero()
        for sub in op.ops:
            result = result + apply(sub, eq, p)
        return result
    if isinstance(op, Compose):
        for sub in reversed(op.ops):
            p = apply(sub, eq, p)
        return p
    raise TypeError(f"not an operator expression: {op!r}")


# -- Euler operator and formal integration -----------------------------------


def euler_residual(p: DiffPoly) -> DiffPoly:
    """Variational derivative sum_k (-D_x)^k (dp/dz_k) in the free jet ring.

    Zero exactly when p is a total x-derivative of a differential
    polynomial (within the class of polynomial (t, x) coefficients).
    """
    if p.has_kind(KIND_PAR):
        raise ValueError("Euler operator requires a parameter-free polynomial")
    top = p.order()
    if top < 0:
        return DiffPoly.zero()
    result = DiffPoly.zero()
    for k in range(int(top) + 1):
        term = p.partial(jet(k))
        for _ in range(k):
            term = x_derivative(term)
        if k % 2:
            term = -term
        result = result + term
    return result


@dataclass(frozen=True)
class IntegrabilityCertificate:
    euler_residual: DiffPoly
    is_total_derivative: bool


def integrability_certificate(p: DiffPoly) -> IntegrabilityCertificate:
    res = euler_residual(p)
    return IntegrabilityCertificate(res, res.is_zero())


def _potential_defect(eq: EvolutionEquation, g: DiffPoly) -> DiffPoly:
    # D_t g - sum_{k>=1} (dL/dz_k) D_x^k g, written via the Frechet derivative.
    defect = eq.dt(g) - eq.frechet(eq.rhs, g)
    mult = eq.rhs.partial(jet(0))
    if mult:
        defect = defect + mult * g
    return defect


def dx_preimage(eq: EvolutionEquation, p: DiffPoly) -> DiffPoly:
    """Return g with D_x(g) = p, for p in the image of D_x.

    The jet part is integrated by peeling the top jet variable (p must be
    linear in it), the jet-free remainder is integrated with respect to x,
    and the kernel branch is fixed as described in the module docstring.
    Raises NotATotalDerivative when p is not a total x-derivative.
    """
    if p.has_kind(KIND_PAR):
        raise ValueError("formal integration requires a parameter-free polynomial")

    def fail() -> NotATotalDerivative:
        return NotATotalDerivative(
            "polynomial is not a total x-derivative", euler_residual(p)
        )

    g = DiffPoly.zero()
    cur = p
    while True:
        top = cur.order()
        if top < 0:
            piece = cur.integrate(X_VAR)
            g = g + piece
            cur = cur - x_derivative(piece)
            if not cur.is_zero():
                raise fail()
            break
        if top == 0:
            raise fail()
        top = int(top)
        v_top = jet(top)
        if cur.degree(v_top) > 1:
            raise fail()
        coeff = cur.partial(v_top)
        piece = coeff.integrate(jet(top - 1))
        g = g + piece
        cur = cur - x_derivative(piece)
        if cur.order() >= top:
            raise fail()

    # Fix the t-only kernel branch via the potential defect.
    sigma = _potential_defect(eq, g).restrict_to_kinds((KIND_T,))
    if sigma:
        g = g - sigma.integrate(T_VAR)
    return g


def normalize_op(op: OperatorExpr) -> OperatorExpr:
    """Flatten compositions and cancel D_x^{-1} D_x pairs.

    On the reduced ring D_x has the nontrivial kernel of t-only
    polynomials, so a preimage followed by D_x recovers the input exactly
    while D_x followed by a preimage recovers it only up to that kernel.
    Operator identities involving D_x^{-1} (the recursion-operator
    commutator in particular) are statements of the formal calculus in
    which both cancellations are exact; this normalization realizes that
    convention at the AST level, leaving operator application itself
    untouched.
    """
    if isinstance(op, Sum):
        return Sum(tuple(normalize_op(sub) for sub in op.ops))
    if isinstance(op, Compose):
        flat: list[OperatorExpr] = []
        for sub in op.ops:
            subn = normalize_op(sub)
            if isinstance(subn, Compose):
                flat.extend(subn.ops)
            else:
                flat.append(subn)
        out: list[OperatorExpr] = []
        for node in flat:
            # (..., DxInv, Dx, ...) applies Dx first; the pair collapses.
            if out and isinstance(node, Dx) and isinstance(out[-1], DxInv):
                out.pop()
            else:
                out.append(node)
        return Compose(tuple(out))
    return op


# -- identity probing ---------------------------------------------------------


@dataclass(frozen=True)
class ProbeOutcome:
    probe: DiffPoly
    residual: DiffPoly

    @property
    def equal(self) -> bool:
        return self.residual.is_zero()


@dataclass(frozen=True)
class ProbeReport:
    outcomes: tuple[ProbeOutcome, ...]

    @property
    def all_equal(self) -> bool:
        return all(o.equal for o in self.outcomes)

    def __len__(self) -> int:
        return len(self.outcomes)


def operator_identity_probe(
    lhs: OperatorExpr,
    rhs: OperatorExpr,
    eq: EvolutionEquation,
    probes,
    normalize: bool = True,
) -> ProbeReport:
    """Evaluate lhs - rhs on each probe and report exact equality per probe.

    Both sides are normalized (see normalize_op) before evaluation unless
    normalize=False, so identities stated in the formal D_x^{-1} calculus
    are probed in that calculus.
    """
    if normalize:
        lhs = normalize_op(lhs)
        rhs = normalize_op(rhs)
    outcomes = []
    for probe in probes:
        residual = apply(lhs, eq, probe) - apply(rhs, eq, probe)
        outcomes.append(ProbeOutcome(probe, residual))
    return ProbeReport(tuple(outcomes))
