"""Mapping symmetries along u = e^w and -2 w_x = v.

The substitution u = e^w pulls heat characteristics back to the potential
Burgers equation; differentiating and substituting -2 w_x = v pushes them
forward to the Burgers equation.  The composite realizes the Hopf-Cole
correspondence between the symmetry algebras, with a one-dimensional kernel
and with the parameter family obstructed (it depends on w itself).
"""

from jetsym.colemap import NotProjectable, heat_to_potential, potential_to_burgers
from jetsym.symfam import Family, q_char

print("A full trip down the chain for Q[1,1]:")
heat_char = q_char(Family.HEAT_Q, 1, 1)
print(f"  heat:      {heat_char.body}")
mid = heat_to_potential(heat_char)
print(f"  potential: {mid.body}")
final = potential_to_burgers(mid)
print(f"  burgers:   {final.body}")
print(f"  equals -2 * Q-hat[1,1]: {final.body == -2 * q_char(Family.BURGERS_Q, 1, 1).body}")

print()
print("The constant symmetry spans the kernel of the pushforward:")
print(f"  image of Q-tilde[0,0] = {potential_to_burgers(q_char(Family.POT_Q, 0, 0)).body}")

print()
print("The parameter family survives the first map but not the second:")
z_mid = heat_to_potential(q_char(Family.HEAT_Z))
print(f"  potential image: {z_mid.body}")
try:
    potential_to_burgers(z_mid)
except NotProjectable as exc:
    print(f"  pushforward fails: {exc}")

print()
print("Family-to-family sweep (k+l <= 4):")
ok = all(
    potential_to_burgers(q_char(Family.POT_Q, k, l)).body
    == -2 * q_char(Family.BURGERS_Q, k, l).body
    for k in range(5)
    for l in range(5)
    if k + l <= 4
)
print(f"  pushforward(Q-tilde[k,l]) == -2 Q-hat[k,l]: {ok}")
