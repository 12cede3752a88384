"""
Restriction multiplicities
==========================

The fusion branching table of a Hecke label, obtained by solving a
character system and, separately, by folding the classical table into
the alcove.
"""

from qbrauer import branching
from qbrauer.partitions import Partition
from qbrauer.qarith import RootOfUnityContext

ctx = RootOfUnityContext(4, 8)
lam = Partition([4, 2])

classical = branching.classical_branch(4, lam)
print("classical O(4) content of U(4)", list(lam), ":")
for mu, b in classical.items():
    print("   ", list(mu), b, "->", branching.fold_label(ctx, mu, lam.size % 2))

direct = branching.fusion_branch_direct(ctx, lam)
folded = branching.fusion_branch_folded(ctx, lam)
print("direct:", [(list(m), b) for m, b in direct.items()])
print("folded:", [(list(m), b) for m, b in folded.items()])
print("agree:", direct == folded)

# with the plain determinant sign instead of the twisted one the folding goes wrong
wrong = branching.fusion_branch_folded(ctx, Partition([3, 1]), sign_name="epsilon")
print("untwisted fold of [3,1]:", [(list(m), b) for m, b in wrong.items()],
      " true:", [(list(m), b) for m, b in branching.fusion_branch_direct(ctx, Partition([3, 1])).items()])

# large N, far from the walls, the Littlewood rule takes over
print(branching.classical_branch(3, Partition([4])).as_dict())
