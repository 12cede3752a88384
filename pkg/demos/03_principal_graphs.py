"""
Principal graphs and the index
==============================

Build the inclusion graphs until they repeat, then compare the index from
the Perron-Frobenius vectors with the sine-product formula.
"""

import math

from qbrauer import towers
from qbrauer.partitions import Partition
from qbrauer.qarith import RootOfUnityContext

for N, ell in [(2, 8), (3, 7), (3, 9), (4, 8), (-4, 8)]:
    ctx = RootOfUnityContext(N, ell)
    g = towers.principal_graph(ctx)
    print(f"N={N:2d} ell={ell}: stable from n={g.n_stable}, level {g.n}, "
          f"{len(g.even)}+{len(g.odd)} vertices, index {g.index:.9f} "
          f"(closed form {towers.index_closed_form(ctx):.9f}), graph {towers.identify_dynkin(g)}")

print(towers.principal_graph(RootOfUnityContext(3, 7)).to_dot())

# N = 4: the invertible even vertices and the orbit they move around
g = towers.inclusion_graph(RootOfUnityContext(4, 8), 12)
print("d~ = 1:", [list(l) for l in g.even if abs(g.a[l] - 1) < 1e-9])
for mu in (Partition([2]), Partition([1, 1])):
    print(list(mu), "->", sorted(list(l) for l in g.neighbours(mu)))

print("4+2*sqrt(2) =", 4 + 2 * math.sqrt(2))
t = towers.asymptotics_probe(3, range(7, 33, 2))
for row in t.rows:
    print(row.ell, f"{row.ratio:.6e}")
print("limit", f"{t.limit:.6e}")
