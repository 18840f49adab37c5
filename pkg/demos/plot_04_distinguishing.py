"""
Telling connected sums apart
============================

Constant terms of the closed forms separate F_{p,1} from F_{p,2} whenever
p = 3 mod 4; sums over several primes are compared prime by prime.
"""

import itertools

from quandle_lab import closed_forms as cf

for p in (3, 7, 11):
    r = cf.verify_prop31(p)
    print(f"p={p}: pairs {r.sum_count}, {r.diff_count}; constant terms {r.constant_terms}")

# For p = 1 mod 4 the two counts coincide and the test says nothing.
print("p=5 counts:", cf.count_square_pairs(5))

primes = (3, 7)
labels = list(itertools.product((1, 2), repeat=len(primes)))
for a, b in itertools.combinations(labels, 2):
    v = cf.distinguish_pair(a, b, primes)
    print(a, b, "prime", v.prime, "constant terms", v.constant_terms, "->", v.text)
