"""
Rack and quandle homology
=========================

Boundary matrices, Smith normal form and the third homology of R_3.
"""

from quandle_lab import chains, quandle

R3 = quandle.dihedral(3)

# Chains are formal sums of tuples; the boundary of a 2-chain.
z = chains.IntChain.from_pairs(2, [((0, 1), 1)])
print("d(0,1) =", chains.boundary(z, R3))

# The quandle complex drops tuples with equal neighbours.
for n in (2, 3):
    M = chains.boundary_matrix(R3, n, "Q")
    print(f"d_{n} over C^Q: {M.shape[0]} x {M.shape[1]}")

# Homology groups by integer elimination.
for theory in ("R", "Q"):
    for n in (1, 2, 3, 4):
        print(f"H^{theory}_{n}(R3) =", chains.homology(R3, n, theory))

# The one-element quandle has vanishing quandle homology.
T1 = quandle.trivial(1)
print("H^Q_3(T1) =", chains.homology(T1, 3, "Q"))
