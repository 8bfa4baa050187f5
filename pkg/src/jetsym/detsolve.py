"""Bounded-ansatz solver for the generalized-symmetry determining equation.

A polynomial ansatz eta = sum_a c_a m_a over monomials in t, x, z_0..z_n
(with configurable degree bounds) turns the invariance condition
D_t eta - L'[eta] = 0 into an exact linear system for the coefficients:
the residual of each ansatz monomial is scattered into rows indexed by the
monomials of the residual, and the kernel of the resulting sparse rational
matrix is computed by fraction-free Gaussian elimination (integer rows kept
primitive by gcd division).  Pivoting is deterministic - each row's pivot
is its first nonzero entry in the fixed column order - and kernel basis
vectors are normalized to leading entry 1, so identical inputs always
produce identical bases.

For the Burgers equation the solver reproduces the graded dimension count
n + 1 at each order: the cumulative dimension through order n is
n (n + 3) / 2, and the solution space coincides with the span of the
symmetry family members of order <= n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .diffring import DiffPoly, Monomial, T_VAR, X_VAR, jet, mono_key
from .jetflow import BURGERS, Characteristic, EvolutionEquation, invariance_residual
from .symfam import Family, q_char

DEFAULT_MONOMIAL_CAP = 200_000


class AnsatzTooLarge(RuntimeError):
    """The enumerated monomial basis exceeds the configured cap."""


@dataclass(frozen=True)
class Ansatz:
    """Monomial ansatz for an order-n symmetry with explicit degree bounds."""

    equation: EvolutionEquation
    order: int
    jet_degree: int = -1  # -1 means "default to order"
    x_degree: int = -1
    t_degree: int = -1
    monomial_cap: int = DEFAULT_MONOMIAL_CAP

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("ansatz order must be >= 0")
        for name in ("jet_degree", "x_degree", "t_degree"):
            if getattr(self, name) == -1:
                object.__setattr__(self, name, max(self.order, 1))

    def monomials(self) -> list[Monomial]:
        """The ansatz basis, sorted in the global monomial order."""
        jet_parts: list[Monomial] = []

        def extend(idx: int, budget: int, acc: list):
            if idx > self.order:
                jet_parts.append(tuple(acc))
                return
            for e in range(budget + 1):
                if e:
                    acc.append((jet(idx), e))
                extend(idx + 1, budget - e, acc)
                if e:
                    acc.pop()

        extend(0, self.jet_degree, [])

        count = len(jet_parts) * (self.x_degree + 1) * (self.t_degree + 1)
        if count > self.monomial_cap:
            raise AnsatzTooLarge(
                f"{count} ansatz monomials exceed the cap {self.monomial_cap}"
            )

        monos = []
        for a in range(self.t_degree + 1):
            for b in range(self.x_degree + 1):
                prefix = []
                if a:
                    prefix.append((T_VAR, a))
                if b:
                    prefix.append((X_VAR, b))
                prefix_t = tuple(prefix)
                for jp in jet_parts:
                    monos.append(prefix_t + jp)
        monos.sort(key=mono_key)
        return monos


@dataclass
class LinearSystem:
    """Sparse exact linear system; rows are labelled, columns are indexed."""

    ncols: int
    rows: dict = field(default_factory=dict)  # label -> {col index: Fraction}
    columns: tuple = ()  # optional column labels (ansatz monomials)

    @staticmethod
    def from_dense(matrix: Sequence[Sequence]) -> "LinearSystem":
        ncols = len(matrix[0]) if matrix else 0
        rows = {}
        for i, r in enumerate(matrix):
            entries = {j: Fraction(v) for j, v in enumerate(r) if v}
            if entries:
                rows[i] = entries
        return LinearSystem(ncols=ncols, rows=rows)


def build_system(ansatz: Ansatz) -> LinearSystem:
    """Scatter the invariance residual of each ansatz monomial into rows."""
    columns = ansatz.monomials()
    eq = ansatz.equation
    rows: dict[Monomial, dict[int, Fraction]] = {}
    for col, mono in enumerate(columns):
        residual = invariance_residual(eq, DiffPoly({mono: 1}))
        for rmono, coeff in residual.terms.items():
            rows.setdefault(rmono, {})[col] = coeff
    return LinearSystem(ncols=len(columns), rows=rows, columns=tuple(columns))


# -- exact elimination ---------------------------------------------------------


def _as_int_row(entries: dict) -> dict[int, int]:
    """Clear denominators and divide by the content, keeping the row primitive."""
    if not entries:
        return {}
    denom_lcm = 1
    for v in entries.values():
        d = Fraction(v).denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    row = {c: int(Fraction(v) * denom_lcm) for c, v in entries.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _reduce_int_row(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _echelon(int_rows) -> dict[int, dict[int, int]]:
    """Fraction-free elimination; returns pivot column -> primitive row.

    Each incoming row is reduced against the recorded pivots (cross
    multiplication keeps everything integral); when a nonzero remainder
    appears its first nonzero column becomes a new pivot.  The resulting
    pivot column set is independent of the row processing order.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in int_rows:
        row = dict(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                if row[c] < 0:
                    row = {col: -v for col, v in row.items()}
                pivots[c] = _reduce_int_row(row)
                break
            a, b = piv[c], row[c]
            new = {col: a * v for col, v in row.items()}
            for col, v in piv.items():
                nv = new.get(col, 0) - b * v
                if nv:
                    new[col] = nv
                else:
                    new.pop(col, None)
            row = _reduce_int_row(new)
    return pivots


def _row_sort_key(label):
    if isinstance(label, tuple):
        return (0, mono_key(label))
    return (1, label)


def nullspace(system: LinearSystem) -> list[tuple[Fraction, ...]]:
    """Exact rational kernel basis, one vector per free column.

    Vectors are returned in increasing free-column order, each normalized
    so that its first nonzero entry equals 1.
    """
    ordered = sorted(system.rows, key=_row_sort_key)
    int_rows = (_as_int_row(system.rows[label]) for label in ordered)
    pivots = _echelon(r for r in int_rows if r)
    pivot_cols = sorted(pivots)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(system.ncols):
        if free in pivot_set:
            continue
        x: dict[int, Fraction] = {free: Fraction(1)}
        for p in reversed(pivot_cols):
            if p > free:
                continue
            row = pivots[p]
            s = Fraction(0)
            for col, v in row.items():
                if col != p:
                    xv = x.get(col)
                    if xv:
                        s += v * xv
            if s:
                x[p] = -s / row[p]
        vec = [x.get(c, Fraction(0)) for c in range(system.ncols)]
        lead = next((v for v in vec if v), None)
        if lead is not None and lead != 1:
            vec = [v / lead for v in vec]
        basis.append(tuple(vec))
    return basis


def _rank_of_bodies(bodies) -> int:
    monos = sorted({m for b in bodies for m in b.terms}, key=mono_key)
    index = {m: i for i, m in enumerate(monos)}
    rows = [
        _as_int_row({index[m]: c for m, c in b.terms.items()})
        for b in bodies
        if b.terms
    ]
    return len(_echelon(rows))


def family_bodies(order: int) -> list[DiffPoly]:
    """The Burgers family members with 1 <= k + l <= order, in index order."""
    bodies = []
    for total in range(1, order + 1):
        for k in range(total + 1):
            bodies.append(q_char(Family.BURGERS_Q, k, total - k).body)
    return bodies


@dataclass(frozen=True)
class SolveReport:
    order: int
    dimension: int
    basis: tuple[Characteristic, ...]
    family_span_matches: Optional[bool]  # None when no reference family applies
    ansatz_size: int


def solve_symmetries(
    eq: EvolutionEquation,
    order: int,
    jet_degree: int = -1,
    x_degree: int = -1,
    t_degree: int = -1,
    monomial_cap: int = DEFAULT_MONOMIAL_CAP,
    experimental: bool = False,
) -> SolveReport:
    """Solve the determining equation over a bounded polynomial ansatz.

    The supported equation is Burgers; other equations run only behind the
    experimental flag (a polynomial ansatz cannot represent their full
    parameter families) and skip the family span comparison.
    """
    if eq is not BURGERS and not experimental:
        raise ValueError(
            "solve_symmetries supports the Burgers equation; "
            "pass experimental=True to run other equations anyway"
        )
    ansatz = Ansatz(eq, order, jet_degree, x_degree, t_degree, monomial_cap)
    system = build_system(ansatz)
    kernel = nullspace(system)
    basis = []
    for vec in kernel:
        terms = {
            mono: coeff for mono, coeff in zip(system.columns, vec) if coeff
        }
        body = DiffPoly(terms)
        residual = invariance_residual(eq, body)
        if not residual.is_zero():
            raise RuntimeError("internal error: kernel vector fails the residual check")
        basis.append(Characteristic(eq, body))
    span_matches: Optional[bool] = None
    if eq is BURGERS:
        family = family_bodies(order)
        solver_rank = len(basis)
        family_rank = _rank_of_bodies(family)
        joint_rank = _rank_of_bodies([c.body for c in basis] + family)
        span_matches = solver_rank == family_rank == joint_rank
    return SolveReport(
        order=order,
        dimension=len(basis),
        basis=tuple(basis),
        family_span_matches=span_matches,
        ansatz_size=system.ncols,
    )
