"""
Weight threshold for contractibility
====================================

Fix rho and all weights but one.  Pushing the remaining weight towards -1
makes the space contractible; the crossover is an exact rational.
"""
from fractions import Fraction as F

from barycenters import alpha_threshold, is_contractible, is_singular, normalize_params

r, others = F(9, 8), [F(-1, 2)]
a_star = alpha_threshold(others, r)
print("alpha* =", a_star)

for a in [a_star - F(1, 16), a_star - F(1, 64), a_star, a_star + F(1, 64), F(-1, 2)]:
    p = normalize_params(r, others + [a])
    if is_singular(p):
        print(f"alpha = {a}: rho is singular")
    else:
        print(f"alpha = {a}: contractible = {is_contractible(p)}")
