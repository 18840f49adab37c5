"""
A multiplicative Gauss-sum invariant
====================================

Values of connected sums of a few building blocks.
"""

from quandle_lab import gauss_sum as gs

for text in ("ribbon:0", "ribbon:3", "spun-torus", "ribbon:2 # spun-torus", "ribbon:2 # turned-spun-torus"):
    print(f"{text:32s} {gs.sigma_value(gs.parse_expression(text))}")

for g in range(1, 6):
    v = gs.distinguish_genus_g_pair(g)
    print(f"genus {g}: {v.spun_value} vs {v.turned_value} -> {v.text}")
