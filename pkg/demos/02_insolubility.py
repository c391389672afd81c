"""
Insolubility probabilities for alternating groups
=================================================

For an automorphism a of Alt(n) and a coset b*Alt(n) inside Sym(n), P_ins
is the proportion of y in the coset with <a, y> insoluble, and Q the
proportion with <a, y> containing Alt(n).  eta(n) is the minimum of P_ins
over all nontrivial a and both cosets.
"""

from solab.constructions import alternating_group
from solab.insolubility import (
    alt_coset,
    eta_exact,
    pins_exact,
    pins_montecarlo,
    random_wreath_pairs,
    two_coset_generation_check,
    wreath_pins_montecarlo,
)
from solab.perm import Permutation

# Exact values by enumerating the coset.
a = Permutation.parse("(1 2)(3 4)", 5)
rep = pins_exact(a, alt_coset(5, "even"))
print("n=5, a=(1 2)(3 4), even coset: P_ins =", rep.p_ins, " Q =", rep.q_value)

for n in (5, 7):
    e = eta_exact(n)
    print(f"eta({n}) = {e.value}, attained at", [(w.cycle_string(), c) for w, c in e.witnesses])

# Monte Carlo estimates carry a Wilson interval and depend only on the seed.
a9 = Permutation.parse("(1 2 3)", 9)
est = pins_montecarlo(a9, alt_coset(9, "odd"), samples=5000, seed=1).p_ins
print(f"n=9 estimate {est.estimate:.4f} +/- {est.half_width:.4f}")

# Pairs (a, b) in Sym(5) wr Sym(2), sampled from the base Alt(5)^2.
for a, b, seed in random_wreath_pairs(5, 2, 3, seed=0):
    est = wreath_pins_montecarlo(a, b, alternating_group(5), 2, 2000, seed).p_ins
    print("a =", a.to_permutation(), f" P_ins ~ {est.estimate:.3f}")

# Two independent coset elements generate Alt(5) with probability 19/30.
print("two-coset:", two_coset_generation_check(Permutation.identity(5), Permutation.parse("(1 2)", 5), 5))
