"""The triangular nonlinear coordinates on the Burgers jet space.

Iterating the translation recursion operator on 1 produces polynomials
zeta_k with order k and leading part -v_k/2.  They are exactly flat for the
flow operator D_t + v D_x - D_x^2, satisfy a one-step derivative recursion,
and serve as alternative coordinates: the change of variables is
triangular, hence exactly invertible.
"""

from jetsym.diffring import jet_poly, t_poly, x_poly
from jetsym.zeta import (
    build_zetas,
    from_zeta_coordinates,
    to_zeta_coordinates,
    verify_zeta_identities,
)

basis = build_zetas(4)
print("The first coordinates (z_k here denotes v_k):")
for k, zk in enumerate(basis.zetas[:4]):
    print(f"  zeta_{k} = {zk}")

print()
report = verify_zeta_identities(8)
print(f"D_x zeta_k = zeta_(k+1) - zeta_0 zeta_k for k <= 8: {all(report.derivative_ok)}")
print(f"(D_t + v D_x - D_x^2) zeta_k = 0 for k <= 8:        {all(report.flow_ok)}")

print()
print("Changing coordinates is exact in both directions:")
p = t_poly() * jet_poly(2) + x_poly() * jet_poly(0) ** 2
zp = to_zeta_coordinates(p, basis)
print(f"  p            = {p}")
print(f"  in zetas     = {zp.poly}   (z_k now denotes zeta_k)")
print(f"  back again   = {from_zeta_coordinates(zp, basis)}")
print(f"  round trip exact: {from_zeta_coordinates(zp, basis) == p}")
