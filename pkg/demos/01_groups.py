"""
Permutations, groups and solubility
===================================

Build a few permutation groups, read off their orders from a base and
strong generating set, and walk the derived series.
"""

from solab import GroupHandle, Permutation, is_soluble
from solab.analysis import contains_alternating
from solab.constructions import construct

# Permutations are written in 1-indexed cycle notation and act on the right:
# in p * q, p is applied first.
p = Permutation.parse("(1 2 3)(4 5)")
q = Permutation.parse("(1 2)", 5)
print("p =", p, " order", p.order(), " parity", p.parity())
print("p * q =", p * q)

# Sym(4) is soluble; its derived series has orders 24, 12, 4, 1.
s4 = GroupHandle([Permutation.parse("(1 2)", 4), Permutation.parse("(1 2 3 4)", 4)])
res = is_soluble(s4)
print("Sym(4):", res.soluble, res.derived_orders)

# Alt(5) is perfect, so the series stalls at 60.
a5 = construct("alt5").group
res = is_soluble(a5)
print("Alt(5):", res.soluble, res.derived_orders)

# Two random-looking elements of Sym(7) usually generate Alt(7) or Sym(7).
x = Permutation.parse("(1 2 3 4 5 6 7)")
y = Permutation.parse("(1 2)", 7)
g = GroupHandle([x, y])
print("<x, y> has order", g.order(), " contains Alt(7):", contains_alternating(g))

# Wreath-type recipes come with their supplied normal series.
c = construct("alt5^2:swap")
print(c.name, "order", c.group.order(), " series orders", [h.order() for h in c.series.subgroups])
