"""
Special cases of three-state discrimination
===========================================

One representative per labelled case, with the verdict the E_N argument
(or a fallback) reaches for it.
"""
import math

from locc_negativity import BELL_PARAMS, FamilyParams, certify_three, classify_case

s = 1 / math.sqrt(2)
examples = [
    (FamilyParams(s, s, 1, 0), (1, 2, 3)),
    (BELL_PARAMS, (1, 2, 3)),
    (FamilyParams(math.sqrt(0.8), math.sqrt(0.2), s, s), (3, 4, 1)),
    (FamilyParams(1, 0, s, s), (1, 2, 3)),
    (FamilyParams(s, 1j * s, s, s), (1, 2, 3)),
    (FamilyParams(s, s, 1, 0), (3, 4, 1)),
    (FamilyParams(s, s, s, 1j * s), (3, 4, 1)),
    (FamilyParams(math.sqrt(0.7), math.sqrt(0.3), math.sqrt(0.55), math.sqrt(0.45)), (1, 2, 3)),
]

for p, triple in examples:
    v = certify_three(p, triple)
    print(f"{classify_case(p, triple):8s} triple {triple}  E_N = {v.en_value:.6f}  {v.kind.value}")
