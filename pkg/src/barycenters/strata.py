"""Admissible strata, the inclusion order between them, and the S-graph."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .core import Params, StratumLabel, _scaled_chi
from .errors import EmptyLabel, IndexOutOfRange, SizeLimit

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_MAX_M",
    "is_admissible",
    "precedes",
    "enumerate_strata",
    "maximal_strata",
    "Decomposition",
    "SGraph",
    "s_graph",
    "intersect_strata",
    "substrata",
    "maximal_elements",
]

DEFAULT_CAP = 2 ** 20
DEFAULT_MAX_M = 24


def is_admissible(params: Params, lab: StratumLabel) -> bool:
    """Selection rule: the label carries at least one point and ``chi < r`` strictly."""
    params.check_indices(lab.indices)
    return not lab.is_empty and _scaled_chi(params, lab) < params._r_scaled


def precedes(l1: StratumLabel, l2: StratumLabel) -> bool:
    """``l1 <= l2`` in the stratum order, i.e. the stratum ``l1`` is contained in ``l2``.

    Indices of ``l1`` missing from ``l2`` must be absorbed by the extra free
    points of ``l2``.
    """
    dk = l2.k - l1.k
    if dk < 0:
        return False
    if dk >= l1.card:
        return True
    missing = len(set(l1.indices).difference(l2.indices))
    return missing <= dk


def _check_size(params: Params, max_m: int) -> None:
    if params.m > max_m:
        raise SizeLimit(f"m = {params.m} exceeds the configured limit of {max_m} singular points")


def enumerate_strata(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> list:
    """All admissible labels, in canonical (k, I) order.

    For each ``k`` a depth-first walk over the ascending weights adds
    indices while the running weight stays below ``r - k``; since later
    weights are no smaller, the first failure prunes the rest of the level.
    """
    _check_size(params, max_m)
    scale, r, w = params._scale, params._r_scaled, params._w_scaled
    m = params.m
    out = []

    def walk(k, start, acc, budget):
        for i in range(start, m):
            if w[i] >= budget:
                break
            idx = acc + (i + 1,)
            out.append(StratumLabel(k, idx))
            if len(out) > cap:
                raise SizeLimit(f"more than {cap} admissible strata")
            walk(k, i + 1, idx, budget - w[i])

    k = 0
    while k * scale < r:
        if k:
            out.append(StratumLabel(k, ()))
            if len(out) > cap:
                raise SizeLimit(f"more than {cap} admissible strata")
        walk(k, 0, (), r - k * scale)
        k += 1
    out.sort()
    return out


def _upper_cover_cost(params: Params, lab: StratumLabel) -> int:
    """Smallest scaled increase of chi over the labels covering ``lab``.

    The covers of ``(k, I)`` are ``(k, I+{j})`` for ``j`` not in ``I``,
    ``(k+1, I-{i})`` for ``i`` in ``I``, and ``(k+1, {})`` when ``I`` is empty.
    """
    w = params._w_scaled
    inside = set(lab.indices)
    costs = [w[j] for j in range(params.m) if j + 1 not in inside]
    if inside:
        costs.extend(params._scale - w[i - 1] for i in inside)
    else:
        costs.append(params._scale)
    return min(costs)


@dataclass(frozen=True)
class Decomposition:
    """The maximal strata whose union is the whole space."""

    maximal: tuple

    def __iter__(self):
        return iter(self.maximal)

    def __len__(self):
        return len(self.maximal)

    def __contains__(self, lab):
        return lab in self.maximal


def maximal_strata(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> Decomposition:
    """Maximal admissible strata.

    Admissibility is closed downwards, so a label is maximal exactly when
    none of its upper covers is admissible; that is a local O(m) test.
    """
    r = params._r_scaled
    out = []
    for lab in enumerate_strata(params, cap, max_m):
        if _scaled_chi(params, lab) + _upper_cover_cost(params, lab) >= r:
            out.append(lab)
    return Decomposition(tuple(out))


def maximal_elements(labels: Iterable[StratumLabel]) -> list:
    """Maximal members of a finite family under ``precedes`` (pairwise, quadratic)."""
    labels = sorted(set(labels))
    return [a for a in labels if not any(a != b and precedes(a, b) for b in labels)]


@dataclass(frozen=True)
class SGraph:
    """Hasse diagram of the admissible strata; ``edges`` holds (lower, upper) cover pairs."""

    nodes: tuple
    edges: tuple

    def successors(self, lab):
        return [b for a, b in self.edges if a == lab]

    def to_dot(self, index_map: Optional[Sequence[int]] = None, name: str = "sgraph") -> str:
        """Graphviz text, one node or edge per line.

        ``index_map`` renames the singular indices (e.g. back to user order);
        indices inside each node name are printed ascending either way.
        """
        def show(lab):
            return f'"{lab.relabel(index_map) if index_map else lab}"'

        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        lines += [f"  {show(n)};" for n in self.nodes]
        lines += [f"  {show(a)} -> {show(b)};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def write_dot(self, path, index_map=None) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_dot(index_map))


def s_graph(params: Params, cap: int = DEFAULT_CAP, max_m: int = DEFAULT_MAX_M) -> SGraph:
    """Admissible strata linked by the cover relation of the stratum order.

    Pairwise comparison followed by transitive reduction; each node's
    strict up-set is a bitmask so removing the transitive edges is a few
    big-integer operations per node.
    """
    nodes = enumerate_strata(params, cap, max_m)
    n = len(nodes)
    up = [0] * n
    for a in range(n):
        la = nodes[a]
        for b in range(n):
            if a != b and precedes(la, nodes[b]):
                up[a] |= 1 << b
    edges = []
    for a in range(n):
        above = up[a]
        reach = 0
        rest = above
        while rest:
            low = rest & -rest
            reach |= up[low.bit_length() - 1]
            rest ^= low
        covers = above & ~reach
        while covers:
            low = covers & -covers
            edges.append((nodes[a], nodes[low.bit_length() - 1]))
            covers ^= low
    edges.sort()
    return SGraph(tuple(nodes), tuple(edges))


def _require_points(*labels):
    for lab in labels:
        if lab.is_empty:
            raise EmptyLabel()


def intersect_strata(l1: StratumLabel, l2: StratumLabel) -> list:
    """Maximal labels lying below both ``l1`` and ``l2``.

    A common lower bound using an index outside ``I1 | I2`` can trade it for
    a free point and stay below both, so candidates only draw from ``I1 | I2``.
    """
    _require_points(l1, l2)
    pool = sorted(set(l1.indices) | set(l2.indices))
    common = []
    for k in range(min(l1.k, l2.k) + 1):
        for size in range(len(pool) + 1):
            for idx in combinations(pool, size):
                lab = StratumLabel(k, idx)
                if not lab.is_empty and precedes(lab, l1) and precedes(lab, l2):
                    common.append(lab)
    return maximal_elements(common)


def substrata(lab: StratumLabel, bound_m: int) -> list:
    """Every nonempty label below ``lab`` with indices in ``1..bound_m``."""
    _require_points(lab)
    if lab.indices and lab.indices[-1] > bound_m:
        raise IndexOutOfRange(f"{lab} has indices beyond m = {bound_m}")
    own = lab.indices
    others = [i for i in range(1, bound_m + 1) if i not in set(own)]
    out = set()
    for k in range(lab.k + 1):
        spare = lab.k - k
        for a in range(len(own) + 1):
            for kept in combinations(own, a):
                for b in range(min(spare, len(others)) + 1):
                    for extra in combinations(others, b):
                        cand = StratumLabel(k, kept + extra)
                        if not cand.is_empty:
                            out.add(cand)
    return sorted(out)
