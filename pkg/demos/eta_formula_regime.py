"""
The eta closed form below the line 4|ab|^2 = |cd|^2
===================================================

The published expression for E_N(eta) only matches the spectrum while
4|ab|^2 >= |cd|^2. Below that line the branched form takes over.
"""
import numpy as np

from locc_negativity import FamilyParams, build_eta, log_negativity
from locc_negativity.measures import eta_branched, eta_verbatim

print(" theta1  theta2   4x-y     numeric    published   branched")
for t1, t2 in [(0.6, 0.3), (0.3, 0.3), (0.2, 0.6), (0.05, 0.7), (0.0, np.pi / 4)]:
    p = FamilyParams.from_angles(t1, t2)
    en = log_negativity(build_eta(p, (1, 2, 3))).en
    print(f"{t1:7.3f} {t2:7.3f} {4 * p.x - p.y:+8.4f}  {en:.8f}  {eta_verbatim(p):.8f}  {eta_branched(p):.8f}")

# at theta1 = 0 the three states are |00>, |11>, (|01>+|10>)/sqrt2: locally
# distinguishable, so E_N must be at least 1; the published form says 0.80
