"""Tour of the exact jet-space calculus.

Polynomials live over t, x, the jet variables z0, z1, ... (x-derivatives of
the dependent variable) and the parameter symbols h0, h1, ... (x-derivatives
of a symbolic heat solution).  Every coefficient is an exact rational, so
all the identity checks below are exact zero tests.
"""

from fractions import Fraction

from jetsym import BURGERS, HEAT, invariance_residual
from jetsym.diffring import jet_poly, par_poly, t_poly, x_poly

t, x = t_poly(), x_poly()
v, v1 = jet_poly(0), jet_poly(1)
h = par_poly(0)

print("The three built-in evolution equations:")
for eq in (HEAT, BURGERS):
    print(f"  {eq.name}: z_t = {eq.rhs}")

print()
print("Total derivatives restricted to the equation:")
p = t * v1 + Fraction(1, 2) * x * v
print(f"  D_x({p}) = {HEAT.dx(p)}")
print(f"  D_t(v)  = {BURGERS.dt(v)}   (the right-hand side itself)")
print(f"  D_t(h)  = {HEAT.dt(h)}      (h solves the heat equation)")

print()
print("The Frechet derivative linearizes the right-hand side:")
print(f"  L'[v_x] for Burgers = {BURGERS.frechet(BURGERS.rhs, v1)}")

print()
print("A characteristic is a generalized symmetry iff its residual vanishes:")
print(f"  residual(v_x) = {invariance_residual(BURGERS, v1)}  ->  symmetry")
print(f"  residual(v)   = {invariance_residual(BURGERS, v)}  ->  not a symmetry")
print(f"  residual(h)   = {invariance_residual(HEAT, h)}  ->  superposition symmetry")
