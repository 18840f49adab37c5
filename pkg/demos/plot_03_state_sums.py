"""
Cocycle invariants of twist-spun torus knots
============================================

Solve for 3-cocycles of R_p, pick a normalized one and sum over the
colorings of the bundled diagram fixtures.
"""

from quandle_lab import chains, closed_forms, diagram, quandle, state_sum

for p in (3, 5, 7):
    spaces = chains.solve_cocycles(quandle.dihedral(p), p, 3)
    print(f"R{p}: dim Z^3 = {spaces.cocycles.shape[0]}, dim H^3 = {spaces.cohomology_dim}")

theta = chains.select_distinguished_cocycle(3)
print(chains.format_cochain(theta, "R3"), end="")

# Each positive fixture satisfies the cycle condition for every coloring.
for key in diagram.POSITIVE_FIXTURES:
    D = diagram.load_fixture(key)
    print(key, "sheets:", len(D.sheets), "triple points:", len(D.triple_points))

pairs = [("twist-spun-trefoil", 3), ("twist-spun-5-1", 5), ("twist-spun-7-1", 7)]
for key, p in pairs:
    D = diagram.load_fixture(key)
    X = quandle.dihedral(p)
    v = state_sum.phi(D, X, chains.select_distinguished_cocycle(p))
    print(f"{key} over R{p}: {v.pretty()}   mirror: {state_sum.phi_mirror(v).pretty()}")

# Connected sums of the diagram data reproduce the closed form constant terms.
T = diagram.load_fixture("twist-spun-trefoil")
same = diagram.connected_sum_datum(T, T, "x0", "x0")
other = diagram.connected_sum_datum(T, diagram.mirror_datum(T), "x0", "x0")
for name, D in (("K # K", same), ("K # -K*", other)):
    v = state_sum.phi(D, quandle.dihedral(3), theta)
    print(name, v.pretty(), " constant term", v.constant_term())
print("closed forms:", closed_forms.phi_closed_form(3, 1).pretty(), "|",
      closed_forms.phi_closed_form(3, 2).pretty())

# The value survives sheet relabelings and coboundary shifts of theta.
report = state_sum.invariance_probe(T, quandle.dihedral(3), theta, trials=100)
print("probe:", report.trials, "trials,", report.failures, "failures")
