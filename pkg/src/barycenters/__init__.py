"""Exact decision procedures for generalized spaces of formal barycenters.

Parameters are exact rationals: ``r = rho/(4*pi)`` and cone weights
``alpha_i`` in ``(-1, 0)``.  Reference brute-force checkers live in
:mod:`barycenters.oracle`, which is not imported here.
"""
from .core import (
    Params,
    StratumLabel,
    as_rational,
    chi,
    dimension,
    format_rational,
    is_singular,
    label,
    normalize_params,
    parse_rational,
    singular_values,
)
from .strata import (
    Decomposition,
    SGraph,
    enumerate_strata,
    intersect_strata,
    is_admissible,
    maximal_strata,
    precedes,
    s_graph,
    substrata,
)
from .analysis import (
    CaseTag,
    ScanInterval,
    StabilityProfile,
    Verdict,
    VerdictKind,
    Witness,
    alpha_threshold,
    is_contractible,
    is_pj_stable,
    noncontractibility_witnesses,
    scan_rho,
    solvability_verdict,
    stability_profile,
)
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
