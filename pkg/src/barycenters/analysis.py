"""Stability, contractibility, witnesses, thresholds and solvability verdicts.

Indices are in *sorted* order throughout (index 1 is the smallest weight);
:class:`~barycenters.core.Params` translates back to user order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .core import Params, StratumLabel, _subset_sums, as_rational, dimension, is_singular, normalize_params, singular_values
from .errors import EmptySpace, IndexOutOfRange, SingularRho, SingularRhoOthers, ThresholdOutOfRange
from .strata import DEFAULT_CAP, DEFAULT_MAX_M, maximal_strata

__all__ = [
    "CaseTag",
    "Witness",
    "VerdictKind",
    "Verdict",
    "StabilityProfile",
    "ScanInterval",
    "is_pj_stable",
    "is_contractible",
    "noncontractibility_witnesses",
    "stability_profile",
    "alpha_threshold",
    "solvability_verdict",
    "scan_rho",
    "CITATIONS",
]


class CaseTag(str, enum.Enum):
    REGULAR = "RegularStratum"
    SINGULAR = "SingularStratum"

    def __str__(self):
        return self.value


class VerdictKind(str, enum.Enum):
    EMPTY_COERCIVE = "EmptyCoercive"
    SINGULAR_RHO = "SingularRho"
    SOLVABLE_MINMAX = "SolvableMinMax"
    CONTRACTIBLE_INCONCLUSIVE = "ContractibleInconclusive"

    def __str__(self):
        return self.value


# Short names of the published results each verdict rests on.
CITATIONS = {
    VerdictKind.EMPTY_COERCIVE: (
        "coercivity of the Euler-Lagrange functional below the first singular value "
        "(Troyanov's inequality)",
    ),
    VerdictKind.SINGULAR_RHO: (
        "the variational theory is only available for rho outside the singular set",
    ),
    VerdictKind.SOLVABLE_MINMAX: (
        "contractibility is equivalent to p_1-stability",
        "a non p_1-stable barycenter space with non-singular rho yields a min-max solution",
    ),
    VerdictKind.CONTRACTIBLE_INCONCLUSIVE: (
        "contractibility is equivalent to p_1-stability",
        "non-existence holds once some weight is close enough to -1",
    ),
}


@dataclass(frozen=True)
class Witness:
    """A stratum certifying that the space is not contractible.

    ``degree`` is a degree in which reduced Z2-homology of the whole space
    is non-zero; nothing is claimed about other degrees.
    """

    label: StratumLabel
    degree: int
    case: CaseTag


class StabilityProfile(NamedTuple):
    sorted: tuple
    user: tuple


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witnesses: tuple = ()
    stability: Optional[StabilityProfile] = None
    advisory: Optional[str] = None
    citations: tuple = field(default=())


class ScanInterval(NamedTuple):
    lo: Fraction
    hi: Fraction
    verdict: Verdict


def _nonempty_maximal(params, cap, max_m):
    dec = maximal_strata(params, cap, max_m)
    if not dec.maximal:
        raise EmptySpace()
    return dec


def is_pj_stable(params: Params, j: int, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> bool:
    """Whether the space is closed under sliding mass onto ``p_j``.

    Equivalent to every maximal stratum pinning ``p_j``.  Undefined (and
    raising :class:`EmptySpace`) when no stratum is admissible.
    """
    if not 1 <= j <= params.m:
        raise IndexOutOfRange(f"index {j} outside 1..{params.m}")
    dec = _nonempty_maximal(params, cap, max_m)
    return all(j in lab.indices for lab in dec)


def is_contractible(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> bool:
    if params.m == 0:
        _nonempty_maximal(params, cap, max_m)
        return False
    return is_pj_stable(params, 1, cap, max_m)


def _witness(lab: StratumLabel) -> Witness:
    case = CaseTag.SINGULAR if lab.indices else CaseTag.REGULAR
    return Witness(lab, dimension(lab), case)


def noncontractibility_witnesses(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> list:
    """One witness per maximal stratum that does not pin ``p_1``.

    For such a stratum ``(k, I)`` the weight ``chi(k, I)`` is below ``r``
    while ``chi(k, I + {1})`` is above it.  The certified homology degree is
    ``3k - 1`` for ``I`` empty and ``3k + card(I) - 1`` otherwise, i.e. the
    stratum dimension in both cases.  Without singular points the single
    regular maximal stratum is reported.  Empty list iff the space is
    contractible or empty.
    """
    if is_singular(params):
        raise SingularRho(f"r = {params.r} is a singular value")
    dec = maximal_strata(params, cap, max_m)
    return [_witness(lab) for lab in dec if 1 not in lab.indices]


def stability_profile(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> StabilityProfile:
    dec = _nonempty_maximal(params, cap, max_m)
    flags = tuple(all(j in lab.indices for lab in dec) for j in range(1, params.m + 1))
    user = [False] * params.m
    for i, flag in enumerate(flags, 1):
        user[params.to_user(i) - 1] = flag
    return StabilityProfile(flags, tuple(user))


def alpha_threshold(others: Sequence, r) -> Fraction:
    """Weight below which the remaining singular point makes the space contractible.

    ``others`` are the weights of every *other* singular point.  With
    ``c`` the largest weighted cardinality strictly below ``r`` that avoids
    the varied point (counting the empty configuration as 0), the result is
    ``r - c - 1``: below it the space is p_j-stable, at it ``r`` becomes a
    singular value, above it the space is empty or not p_j-stable.
    """
    r = as_rational(r)
    rest = normalize_params(r, others)
    if is_singular(rest):
        raise SingularRhoOthers(f"r = {r} is a singular value of the remaining weights")
    scale, rs = rest._scale, rest._r_scaled
    best = 0
    for s in _subset_sums(rest._w_scaled, rs):
        if s < rs:
            # largest n with n + s < r
            best = max(best, s + ((rs - s - 1) // scale) * scale)
    gap = Fraction(rs - best, scale)
    if gap >= 1:
        raise ThresholdOutOfRange(gap)
    if gap <= 0:
        raise AssertionError("non-positive threshold gap under a non-singular r")
    return gap - 1


def _advisory_empty(params):
    if params.m == 1:
        return None
    return ("the coercive label extrapolates the single-singularity statement to "
            f"m = {params.m}: here r lies below every singular value")


_ADVISORY_CONTRACTIBLE = (
    "the barycenter space is contractible, so the min-max argument gives no solution; "
    "non-existence is known for weights sufficiently close to -1, but no explicit "
    "threshold is available"
)


def solvability_verdict(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> Verdict:
    if is_singular(params):
        kind = VerdictKind.SINGULAR_RHO
        return Verdict(kind, citations=CITATIONS[kind])
    dec = maximal_strata(params, cap, max_m)
    if not dec.maximal:
        kind = VerdictKind.EMPTY_COERCIVE
        return Verdict(kind, advisory=_advisory_empty(params), citations=CITATIONS[kind])
    profile = stability_profile(params, cap, max_m) if params.m else None
    witnesses = tuple(_witness(lab) for lab in dec if 1 not in lab.indices)
    if witnesses:
        kind = VerdictKind.SOLVABLE_MINMAX
        return Verdict(kind, witnesses, profile, citations=CITATIONS[kind])
    kind = VerdictKind.CONTRACTIBLE_INCONCLUSIVE
    return Verdict(kind, (), profile, _ADVISORY_CONTRACTIBLE, CITATIONS[kind])


def scan_rho(alphas: Sequence, r_max, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> list:
    """Verdicts on each open interval of ``(0, r_max)`` between consecutive singular values.

    Every decision compares ``r`` with a singular value (or 0), so one
    evaluation at the midpoint settles the whole interval.
    """
    r_max = as_rational(r_max)
    base = normalize_params(r_max, alphas)
    cuts = [Fraction(0)] + [v for v in singular_values(base, None, r_max) if v < r_max] + [r_max]
    out = []
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        out.append(ScanInterval(lo, hi, solvability_verdict(base.with_r(mid), cap, max_m)))
    return out
