"""
Centralizer elements and the anticommutator relations
=====================================================

"""

from bannai_ito.opcalc import anticommutator, operators_equal
from bannai_ito.realization import realize
from bannai_ito.textform import parse_poly

r = realize("b3-scalar")

# C_S is built from A_-, A_+ and the product of involutions P_S
print("C_1 x1     =", r.C(1)(parse_poly("x1", r.ring)))
print("C_12 x1*x2 =", r.C(1, 2)(parse_poly("x1*x2", r.ring)))

# C_123 coincides with the Casimir Gamma
print("C_123 = Gamma:", operators_equal(r.C(1, 2, 3), r.gamma(), 4).equal)

# The anticommutator of two overlapping two-index elements closes on the others
C = r.C
lhs = anticommutator(C(1, 2), C(2, 3))
rhs = C(1, 3) + anticommutator(C(2), C(1, 2, 3)) + anticommutator(C(1), C(3))
cert = operators_equal(lhs, rhs, 4)
print("{C_12,C_23} = C_13 + {C_2,C_123} + {C_1,C_3}:", cert.equal)

# with a=0 the one-index elements are the constant b and the classical relations appear
r0 = r.specialize({"a": 0})
print("C_1 at a=0 applied to 1:", r0.C(1)(parse_poly("1", r0.ring)))
