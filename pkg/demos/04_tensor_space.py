"""
The q-Brauer generators on tensor space
=======================================
"""

import cmath

import numpy as np

from qbrauer import molev
from qbrauer.qarith import RootOfUnityContext

rep = molev.representation(RootOfUnityContext(3, 7), 4)
print("dimension", rep.dim)
for name, r in molev.verify_relations(rep).residuals.items():
    print(f"  {name:12s} {r:.1e}")

# the span of words fills out the Brauer algebra at q = 1 when N >= n
for n in (2, 3):
    print(n, molev.word_span_dimension(molev.representation(3, n, q=1.0)))

# break one matrix slightly and watch the checker notice
bad = molev.representation(3, 3, q=cmath.exp(0.3j))
bad.e = bad.e + 1e-6 * np.eye(bad.dim)
print(molev.verify_relations(bad).failing)
