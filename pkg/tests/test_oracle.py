from fractions import Fraction as F

import pytest

from barycenters import label, normalize_params
from barycenters.errors import EmptyLabel
from barycenters.oracle import naive_intersection, naive_pj_stable, naive_precedes, naive_witness_search


def P(r, *alphas):
    return normalize_params(F(r), [F(a) for a in alphas])


def test_naive_precedes_examples():
    assert naive_precedes(label(0, 1), label(1))
    assert naive_precedes(label(1, 1, 2), label(2, 2))
    assert not naive_precedes(label(1, 1), label(0, 1))


def test_naive_pj_stable_examples():
    assert not naive_pj_stable(P("13/8", "-1/2", "-1/4"), 2, 2)
    assert naive_pj_stable(P("3/4", "-1/2"), 1, 1)
    assert not naive_pj_stable(P("9/8", "-1/2", "-1/2"), 1, 2)


def test_naive_witness_search_examples():
    assert naive_witness_search(P("9/8", "-1/2", "-1/2"), 2) == [label(1)]
    assert naive_witness_search(P("3/4", "-1/2"), 1) == []
    assert naive_witness_search(P("7/8", "-3/4", "-1/4"), 1) == [label(0, 2)]


def test_naive_intersection_examples():
    assert naive_intersection(label(1, 1), label(1, 2), 2) == {label(1), label(0, 1), label(0, 2), label(0, 1, 2)}
    assert naive_intersection(label(0, 1), label(0, 2), 2) == set()
    assert naive_intersection(label(1), label(1), 0) == {label(1)}
    with pytest.raises(EmptyLabel):
        naive_intersection(label(0), label(1), 1)
