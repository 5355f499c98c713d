"""
Dunkl operators on polynomials in three variables
=================================================

"""

from bannai_ito.opcalc import commutator, operators_equal
from bannai_ito.realization import realize
from bannai_ito.textform import parse_poly

# b3-scalar carries two symbolic couplings, a and b
r = realize("b3-scalar")
f = parse_poly("x1^2*x2 - 3*a*x3", r.ring)
print("f        =", f)
print("D_1 f    =", r.D[1](f))
print("D_2 D_1 f =", r.D[2](r.D[1](f)))

# The operators commute.  Equality is checked on every basis monomial up to degree 4.
cert = operators_equal(commutator(r.D[1], r.D[2]), r.one * 0, 4)
print("[D_1,D_2] = 0 up to degree 4:", cert.equal, "(", cert.checked, "basis elements )")

# [D_i, x_j] is a group algebra element of the hyperoctahedral group
print("S_12 =", r.S_el(1, 2))
print("S_11 =", r.S_el(1, 1))

# parameters can be specialized to rationals
r0 = r.specialize({"a": 0, "b": "1/2"})
print("at a=0, b=1/2: D_1 x1^3 =", r0.D[1](parse_poly("x1^3", r0.ring)))
