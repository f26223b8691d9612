"""
Phase diagram in rho
====================

Verdicts only change at singular values, so one exact evaluation per
interval gives the whole phase diagram.
"""
from fractions import Fraction as F

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from barycenters import scan_rho

alphas = [F(-1, 2), F(-1, 3)]
rows = scan_rho(alphas, 4)
for row in rows:
    print(f"({row.lo}, {row.hi}): {row.verdict.kind}")

colors = {
    "EmptyCoercive": "0.8",
    "ContractibleInconclusive": "tab:blue",
    "SolvableMinMax": "tab:green",
}
fig, ax = plt.subplots(figsize=(8, 1.5))
for row in rows:
    ax.axvspan(float(row.lo), float(row.hi), color=colors[str(row.verdict.kind)])
ax.set_xlabel("rho / (4 pi)")
ax.set_yticks([])
fig.savefig("scan.png", bbox_inches="tight")
