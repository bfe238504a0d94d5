"""
Four states: logarithmic negativity of the rho mixture
======================================================

Mixing |A_i>_AB |B_i>_CD over all four i gives a 16x16 state rho. If Alice
and Bob could tell the |A_i> apart with LOCC they would leave Charu and Debu
one ebit, so E_N(rho) across AC:BD would have to reach 1.
"""
import math

from locc_negativity import (
    BELL_PARAMS,
    PRODUCT_PARAMS,
    FamilyParams,
    build_rho,
    certify_four,
    en_rho_closed_form,
    log_negativity,
)

points = {
    "Bell": BELL_PARAMS,
    "product corner": PRODUCT_PARAMS,
    "(sqrt .8, sqrt .2, sqrt .6, sqrt .4)": FamilyParams(
        math.sqrt(0.8), math.sqrt(0.2), math.sqrt(0.6), math.sqrt(0.4)),
    "theta = (0.3, 0.6)": FamilyParams.from_angles(0.3, 0.6),
}

# numeric E_N from the 16x16 partial transpose vs log2(|a|^2 + |c|^2)
for name, p in points.items():
    res = log_negativity(build_rho(p), ("A", "C"))
    print(f"{name:38s} numeric {res.en:.12f}  closed {en_rho_closed_form(p):.12f}  N = {res.negativity:.6f}")

# only the product corner reaches one ebit
print()
for name, p in points.items():
    v = certify_four(p)
    print(f"{name:38s} -> {v.kind.value}")
