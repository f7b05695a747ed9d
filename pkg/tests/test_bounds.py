import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsinsdel import errors
from rsinsdel.bounds import BoundReport, bound_report, capability, improved_bound, singleton_insdel, size_bound
from rsinsdel.field import build_field_q
from rsinsdel.insdel import code_min_distance_bruteforce


def test_singleton_examples():
    assert singleton_insdel(5, 5) == 2
    assert singleton_insdel(5, 2) == 8
    assert singleton_insdel(7, 1) == 14
    with pytest.raises(errors.BadDims):
        singleton_insdel(3, 4)
    with pytest.raises(errors.BadDims):
        singleton_insdel(3, 0)


def test_improved_examples():
    b = improved_bound(4, 2, 16)
    assert b.applicable and b.bound == 4
    b = improved_bound(4, 2, 13)
    assert not b.applicable and b.bound == 6
    b = improved_bound(3, 2, 11)
    assert b.applicable and b.bound == 2
    with pytest.raises(errors.BadDims):
        improved_bound(4, 1, 100)
    with pytest.raises(errors.BadDims):
        improved_bound(4, 4, 100)


def test_capability_examples():
    assert capability(2 * 4 - 4) == 1
    assert capability(2) == 0
    assert capability(0) == 0
    for n in range(1, 10):
        assert capability(2 * n) == n - 1


@given(d=st.integers(1, 10**6))
def test_capability_below_half(d):
    assert capability(d) < d / 2


def test_size_bound():
    assert size_bound(7, 4, 4) == 7**3
    with pytest.raises(ValueError):
        size_bound(7, 4, 3)


@given(n=st.integers(3, 40), k=st.integers(2, 39), q=st.integers(2, 2000))
def test_report_invariants(n, k, q):
    if k >= n:
        return
    rep = BoundReport(n, k, q)
    assert rep.improved_d == rep.singleton_d - 2
    assert rep.binding in (rep.singleton_d, rep.improved_d)


def test_report_compliance_and_degenerate_flag():
    data = bound_report(4, 2, 16, 4).to_json()
    assert data["compliant"] and data["binding_d"] == 4 and data["capability"] == 1
    data = bound_report(4, 2, 16, 6).to_json()
    assert not data["compliant"]
    assert bound_report(3, 2, 9, 0).to_json()["capability_degenerate"]


@pytest.mark.parametrize("q", [9, 11, 13, 16])
def test_measured_distances_respect_bounds(q):
    F = build_field_q(q)
    rng = random.Random(q)
    elems = list(F.elements())
    for _ in range(10):
        n = rng.randint(3, 3 if q < 16 else 4)
        pts = rng.sample(elems, n)
        d = code_min_distance_bruteforce(pts).d_min
        assert d % 2 == 0 and 2 <= d <= singleton_insdel(n, 2)
        assert d <= improved_bound(n, 2, q).bound
