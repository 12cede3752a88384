"""
Labels and weights at a root of unity
=====================================

Walk through the label sets for N = 3, ell = 7 and compare the two ways
of getting a trace weight: the box product and a character value.
"""

from qbrauer import branching, labels, qarith
from qbrauer.qarith import RootOfUnityContext

ctx = RootOfUnityContext(3, 7)
print("q =", ctx.q, " [2] =", ctx.qint(2))

# Brauer labels: a finite set, with boundary diagrams just outside
members = labels.brauer_label_set(ctx)
print("Brauer labels:", [list(m) for m in members])
print("boundary, up to 4 boxes:", [list(b) for b in labels.brauer_boundary_set(ctx, 4)])

# the same weight two ways
for lam in members:
    a = qarith.brauer_weight(ctx, lam)
    b = branching.brauer_weight_from_character(ctx, lam)
    print(f"{str(list(lam)):10s} product {a:.12f}   character {b:.12f}")

# Hecke labels repeat once full columns are added; the weight does not see them
for n in (2, 5, 8):
    print(n, [(list(l), round(qarith.hecke_weight(ctx, l), 6)) for l in labels.hecke_labels(ctx, n)])

# N = 3, ell = 8 has a negative weight
print(qarith.positivity_report(RootOfUnityContext(3, 8)).as_dict())
