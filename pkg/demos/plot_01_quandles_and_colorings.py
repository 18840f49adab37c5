"""
Finite quandles and knot colorings
==================================

Build a few small quandles, check their axioms and count colorings of the
trefoil and of a connected sum.
"""

from quandle_lab import quandle as qd

# The dihedral quandle R_p acts on {0..p-1} by a*b = 2b - a mod p.
R3 = qd.dihedral(3)
print(R3.label, "table:")
for row in R3.table:
    print("   ", row)
print("axioms:", qd.check_axioms(R3.table))

# A table that breaks self-distributivity is reported with a witness.
broken = [[0, 2, 0], [2, 1, 1], [1, 0, 2]]
print("broken table:", qd.check_axioms(broken))

# Colorings of the trefoil by R_p: 3p for p = 3, only the p constant ones otherwise.
for p in (3, 5, 7):
    print(f"trefoil colorings by R{p}:", qd.count_colorings(qd.TREFOIL, qd.dihedral(p)))

# The connected sum identifies one arc of each summand.
double = qd.connected_sum(qd.TREFOIL, qd.TREFOIL, "a", "a")
print("trefoil # trefoil colorings by R3:", qd.count_colorings(double, R3))

# Alexander quandles Z_n[t]/(t - s) give more examples.
print("A5,2 colorings:", qd.count_colorings(qd.TREFOIL, qd.alexander(5, 2)))
