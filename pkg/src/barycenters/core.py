"""Exact scalar layer: rationals, parameters, weighted cardinality, singular values.

Everything is measured in units of 4*pi, so a parameter ``r`` stands for
``rho / (4*pi)``.  No floating point value ever enters a decision.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptyLabel,
    IndexOutOfRange,
    InvalidAlpha,
    InvalidRho,
    RationalSyntaxError,
)

__all__ = [
    "parse_rational",
    "as_rational",
    "format_rational",
    "StratumLabel",
    "label",
    "Params",
    "normalize_params",
    "chi",
    "dimension",
    "singular_values",
    "is_singular",
]

_FRACTION_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")
_DECIMAL_RE = re.compile(r"^(-?)(\d*)\.(\d*)$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a finite decimal ``"d.ddd"`` exactly.

    The sign may only appear in front of the numerator.  Exponents,
    whitespace inside the literal, ``inf``/``nan`` and symbolic constants
    are rejected.
    """
    s = text.strip()
    m = _FRACTION_RE.match(s)
    if m:
        sign, num, den = m.groups()
        if den is not None and int(den) == 0:
            raise RationalSyntaxError(f"zero denominator in {text!r}")
        value = Fraction(int(num), int(den) if den else 1)
        return -value if sign else value
    m = _DECIMAL_RE.match(s)
    if m and (m.group(2) or m.group(3)):
        sign, whole, frac = m.groups()
        value = Fraction(int(whole or "0")) + Fraction(int(frac or "0"), 10 ** len(frac))
        return -value if sign else value
    raise RationalSyntaxError(
        f"{text!r} is not an exact rational (expected 'p/q' or a finite decimal)"
    )


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"{type(value).__name__} is not an exact rational; pass a Fraction, int or 'p/q' string"
    )


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True, slots=True)
class StratumLabel:
    """A stratum ``(k, I)``: ``k`` free points plus the pinned singular points ``I``.

    ``indices`` is always stored as an ascending tuple of 1-based indices, so
    the dataclass ordering is the canonical (k, I) lexicographic order.
    """

    k: int
    indices: tuple = ()

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"k must be a natural number, got {self.k}")
        idx = tuple(sorted(set(self.indices)))
        if idx and idx[0] < 1:
            raise IndexOutOfRange(f"singular indices start at 1, got {idx[0]}")
        object.__setattr__(self, "indices", idx)

    @property
    def card(self) -> int:
        return len(self.indices)

    @property
    def index_set(self) -> frozenset:
        return frozenset(self.indices)

    @property
    def is_empty(self) -> bool:
        return self.k == 0 and not self.indices

    def with_indices(self, indices: Iterable[int]) -> "StratumLabel":
        return StratumLabel(self.k, tuple(indices))

    def relabel(self, mapping: Sequence[int]) -> "StratumLabel":
        """Translate indices through ``mapping`` (``mapping[i-1]`` is the new name of ``i``)."""
        return StratumLabel(self.k, tuple(mapping[i - 1] for i in self.indices))

    def __str__(self):
        return f"S({self.k};{','.join(map(str, self.indices))})"


def label(k: int, *indices: int) -> StratumLabel:
    """Shorthand: ``label(1, 2, 3)`` is the stratum with one free point pinned at p2, p3."""
    return StratumLabel(k, indices)


@dataclass(frozen=True)
class Params:
    """Validated parameters with weights sorted ascending.

    ``permutation[i-1]`` is the user-supplied (1-based) position of the
    weight that ended up at sorted index ``i``.  Build instances through
    :func:`normalize_params`.
    """

    r: Fraction
    alphas: tuple
    permutation: tuple = None
    # integer images of r and of the weights 1+alpha_i over a common denominator
    _scale: int = field(init=False, repr=False, compare=False)
    _r_scaled: int = field(init=False, repr=False, compare=False)
    _w_scaled: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        r = as_rational(self.r)
        alphas = tuple(as_rational(a) for a in self.alphas)
        perm = tuple(range(1, len(alphas) + 1)) if self.permutation is None else tuple(self.permutation)
        if r <= 0:
            raise InvalidRho(r)
        for i, a in enumerate(alphas, 1):
            if not -1 < a < 0:
                raise InvalidAlpha(perm[i - 1] if i <= len(perm) else i, a)
        if any(a > b for a, b in zip(alphas, alphas[1:])):
            raise ValueError("alphas must be sorted ascending; use normalize_params")
        if sorted(perm) != list(range(1, len(alphas) + 1)):
            raise ValueError("permutation must be a bijection on 1..m")
        scale = math.lcm(r.denominator, *(a.denominator for a in alphas))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_r_scaled", int(r * scale))
        object.__setattr__(self, "_w_scaled", tuple(int((1 + a) * scale) for a in alphas))

    @property
    def m(self) -> int:
        return len(self.alphas)

    @property
    def weights(self) -> tuple:
        """The weighted cardinalities ``1 + alpha_i`` of the singular points."""
        return tuple(1 + a for a in self.alphas)

    @property
    def user_alphas(self) -> tuple:
        out = [None] * self.m
        for i, a in enumerate(self.alphas):
            out[self.permutation[i] - 1] = a
        return tuple(out)

    def to_user(self, i: int) -> int:
        return self.permutation[i - 1]

    def to_sorted(self, user_index: int) -> int:
        return self.permutation.index(user_index) + 1

    def label_to_user(self, lab: StratumLabel) -> StratumLabel:
        return lab.relabel(self.permutation)

    def with_r(self, r) -> "Params":
        return Params(as_rational(r), self.alphas, self.permutation)

    def check_indices(self, indices: Iterable[int]) -> None:
        for i in indices:
            if not 1 <= i <= self.m:
                raise IndexOutOfRange(f"index {i} outside 1..{self.m}")


def normalize_params(r, raw_alphas: Sequence = ()) -> Params:
    """Validate ``r = rho/(4*pi)`` and the cone weights, sorting weights ascending.

    The sort is stable, so equal weights keep their user order.

    >>> p = normalize_params(Fraction(9, 8), [Fraction(-1, 3), Fraction(-1, 2)])
    >>> p.alphas, p.permutation
    ((Fraction(-1, 2), Fraction(-1, 3)), (2, 1))
    """
    r = as_rational(r)
    alphas = [as_rational(a) for a in raw_alphas]
    if r <= 0:
        raise InvalidRho(r)
    for i, a in enumerate(alphas, 1):
        if not -1 < a < 0:
            raise InvalidAlpha(i, a)
    order = sorted(range(len(alphas)), key=lambda i: alphas[i])
    return Params(r, tuple(alphas[i] for i in order), tuple(i + 1 for i in order))


def _scaled_chi(params: Params, lab: StratumLabel) -> int:
    w = params._w_scaled
    return lab.k * params._scale + sum(w[i - 1] for i in lab.indices)


def chi(params: Params, lab: StratumLabel) -> Fraction:
    """Weighted cardinality ``k + sum_{i in I} (1 + alpha_i)``."""
    params.check_indices(lab.indices)
    return lab.k + sum((1 + params.alphas[i - 1] for i in lab.indices), Fraction(0))


def dimension(lab: StratumLabel) -> int:
    """Dimension ``3k + card(I) - 1`` of the open part of a stratum."""
    if lab.is_empty:
        raise EmptyLabel()
    return 3 * lab.k + lab.card - 1


def _subset_sums(weights: Sequence[int], bound: int) -> set:
    # distinct subset sums not exceeding bound
    sums = {0}
    for w in weights:
        sums |= {s + w for s in sums if s + w <= bound}
    return sums


def singular_values(params: Params, exclude: Optional[int] = None, upper=None) -> list:
    """Sorted distinct values ``n + sum_I (1+alpha_i) <= upper`` with ``n + card(I) > 0``.

    ``exclude`` drops one (sorted) index from the admissible sets ``I``.
    ``upper`` defaults to ``params.r``.
    """
    upper = params.r if upper is None else as_rational(upper)
    if upper <= 0:
        raise ValueError("upper bound must be positive")
    if exclude is not None:
        params.check_indices([exclude])
    scale = params._scale * upper.denominator
    bound = int(upper * scale)
    weights = [
        int(params.weights[i] * scale)
        for i in range(params.m)
        if i + 1 != exclude
    ]
    values = set()
    for s in _subset_sums(weights, bound):
        n = 0
        while s + n * scale <= bound:
            if s or n:
                values.add(s + n * scale)
            n += 1
    return [Fraction(v, scale) for v in sorted(values)]


def is_singular(params: Params) -> bool:
    """Whether ``r`` itself is a singular value."""
    scale = params._scale
    r = params._r_scaled
    return any((r - s) % scale == 0 for s in _subset_sums(params._w_scaled, r))
