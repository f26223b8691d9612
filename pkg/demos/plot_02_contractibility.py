"""
Contractibility and homology witnesses
======================================

A space is contractible exactly when every maximal stratum pins the
lightest cone point p_1.  When one does not, it certifies a degree in which
reduced Z2-homology is non-zero.
"""
from fractions import Fraction as F

from barycenters import is_contractible, noncontractibility_witnesses, normalize_params, stability_profile

cases = {
    "surface + segment": (F(9, 8), [F(-1, 2), F(-1, 2)]),
    "two isolated points": (F(7, 8), [F(-3, 4), F(-1, 4)]),
    "cone over p_1": (F(13, 8), [F(-1, 2), F(-1, 4)]),
    "single point": (F(3, 4), [F(-1, 2)]),
}

for name, (r, alphas) in cases.items():
    p = normalize_params(r, alphas)
    print(f"{name}: contractible={is_contractible(p)} stable={stability_profile(p).user}")
    for w in noncontractibility_witnesses(p):
        print(f"    witness {w.label}: H~_{w.degree} != 0 ({w.case})")
