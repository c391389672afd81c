"""
Solubilizers and the density bound
==================================

S_G(g) is the set of y in G with <g, y> soluble.  On finite groups its
size over |G| stands in for a Haar measure; the density bound compares it
with (1 - min(eta, 53/90))^t.
"""

from solab.constructions import construct
from solab.insolubility import eta_exact
from solab.perm import Permutation
from solab.solubilizer import crucial_bound_check, solubilizer_set, t_centralizer_count

eta5 = eta_exact(5).value

c = construct("alt5")
g = Permutation.parse("(1 2 3 4 5)")
print("Alt(5), g = 5-cycle:", solubilizer_set(c.group, g).ratio)

res = crucial_bound_check(c.group, g, c.series, eta5)
print(f"t = {res.t}: ratio {res.ratio} <= bound {res.bound}: {res.holds}")

# Alt(5)^2 extended by the swap of the two factors, order 7200.
c = construct("alt5^2:swap")
swap = c.named_elements["swap"]
print("t for the swap:", t_centralizer_count(c.series, swap))
res = crucial_bound_check(c.group, swap, c.series, eta5)
print(f"swap extension: ratio {res.ratio} <= bound {res.bound}: {res.holds}")
