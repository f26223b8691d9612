"""
Strata, maximal decomposition and the S-graph
=============================================

Two cone points of equal weight -1/2 and rho = 4*pi * 9/8: the space is a
copy of the surface glued to a segment joining the two cone points.
"""
from fractions import Fraction as F

from barycenters import enumerate_strata, maximal_strata, normalize_params, s_graph

params = normalize_params(F(9, 8), [F(-1, 2), F(-1, 2)])

# every admissible (k, I), in canonical order
for lab in enumerate_strata(params):
    print(lab)

# the surface stratum S(1;) and the segment S(0;1,2)
print("maximal:", ", ".join(map(str, maximal_strata(params))))

# Hasse diagram of the inclusion order, ready for `dot -Tpng`
print(s_graph(params).to_dot(params.permutation))
