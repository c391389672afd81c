"""
Counting identities, totients and finite fields
===============================================

Exhaustive checks of the counting lemmas, the totient machinery behind
B(t), and fixed points of semilinear maps on small fields.
"""

from solab.combinatorics import facile_count, iota_count, lambda_fraction_exact, lambda_rate
from solab.fields import fpagl_row, prime_powers
from solab.numtheory import b_empirical, erdos_comparison, totient_ratio_count
from solab.verify import verify_facile, verify_kappa

# Permutations of 6 points leaving some nonempty subset of a 2-set invariant.
c = iota_count(6, 2)
print("iota(6, 2):", c.total, "even", c.even, "odd", c.odd, "formula", c.formula)

for res in verify_kappa(6):
    print(res.name, "passed" if res.passed else res.failures)

# The facile count matches (n-2)! phi(k); the stated lower bound does not
# hold for every small case, and the failures are listed.
f = facile_count(7, 4)
print("facile(7, 4):", f.exact, "closed form", f.closed_form, "bound", f.bound)
closed, bound = verify_facile(9)
print("facile bound failures:", bound.failures)

# Lambda: cycle through 1 of admissible length.
print("Lambda(12) exact:", float(lambda_fraction_exact(12, 0.6, 0.3)))
print("Lambda(40) sampled:", lambda_rate(40, 0.6, 0.3, 4000, seed=0).estimate)

# Totients.
n = 10**6
print("count/n at 1e6:", totient_ratio_count(n, 0.5, 0.3) / n)
for t in (1.1, 2, 3):
    print(f"B({t}) ~ {float(b_empirical(t, n)):.4f}")
print("near t = 1:", erdos_comparison(0.01, n))

# Fixed points of x -> x^(p^e) a + b never exceed sqrt(q).
for q in prime_powers(81):
    row = fpagl_row(q)
    if row.max_fix > 1:
        print(f"q={q}: max fixed points {row.max_fix} (sqrt q = {row.sqrt_q:.3f})")
