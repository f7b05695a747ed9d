import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import overlap_full_scan
from rsinsdel import errors
from rsinsdel.evalset import EvaluationSet
from rsinsdel.field import build_field, build_field_q
from rsinsdel.insdel import rs2_min_distance
from rsinsdel.intersections import intersection_size, max_intersection, ordered_lcs

F7 = build_field(7, 1)
S124 = EvaluationSet.manual(F7, [1, 2, 4])


def test_identity_map_gives_n():
    assert intersection_size(S124, F7.one, F7.zero) == 3
    assert ordered_lcs(S124, F7.one, F7.zero) == 3


def test_zero_delta_counts_at_most_one():
    for g in F7.elements():
        assert intersection_size(S124, F7.zero, g) in (0, 1)
    with pytest.raises(errors.ZeroDelta):
        ordered_lcs(S124, F7.zero, F7.one)


def test_multiplicative_subgroup_examples():
    assert intersection_size(S124, F7(2), F7.zero) == 3
    assert ordered_lcs(S124, F7(2), F7.zero) == 2


def test_singleton_set_profile():
    F = build_field(5, 1)
    prof = max_intersection(EvaluationSet.manual(F, [3]))
    assert prof.max_size == 1
    assert max_intersection(EvaluationSet.manual(F, [3]), "full_scan").max_size == 1


def test_profile_never_reports_identity():
    F = build_field(3, 2)
    for pts in combinations(list(F.elements()), 3):
        for mode in ("candidates", "full_scan"):
            prof = max_intersection(list(pts), mode)
            assert all(not (d == F.one and g.is_zero()) for d, g in prof.argmax)
            for d, g in prof.argmax:
                assert intersection_size(list(pts), d, g) == prof.max_size


def test_argmax_is_sorted_and_capped():
    F = build_field(2, 3)
    prof = max_intersection(list(F.elements())[1:6], "full_scan", argmax_cap=3)
    keys = [(d.to_int(), g.to_int()) for d, g in prof.argmax]
    assert keys == sorted(keys) and len(keys) <= 3
    assert prof.exhaustive


def test_full_scan_cap():
    F = build_field(2, 13)
    with pytest.raises(errors.TooLarge):
        max_intersection([F.one, F.x], "full_scan")


def test_unknown_mode():
    with pytest.raises(ValueError):
        max_intersection(S124, "sampling")


@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_candidates_equal_independent_full_scan(q):
    F = build_field_q(q)
    rng = random.Random(100 + q)
    elems = list(F.elements())
    for n in (2, 3, 4, 5):
        for _ in range(5):
            pts = rng.sample(elems, n)
            assert max_intersection(pts).max_size == overlap_full_scan(F, pts)


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_ordered_le_unordered_le_n(data):
    F = build_field(11, 1)
    pts = data.draw(st.lists(st.integers(0, 10), min_size=1, max_size=6, unique=True))
    d = data.draw(st.integers(1, 10))
    g = data.draw(st.integers(0, 10))
    S = [F(v) for v in pts]
    assert ordered_lcs(S, F(d), F(g)) <= intersection_size(S, F(d), F(g)) <= len(S)


@settings(max_examples=40, deadline=None)
@given(pts=st.lists(st.integers(0, 12), min_size=2, max_size=6, unique=True))
def test_distance_lower_bound_from_profile(pts):
    F = build_field(13, 1)
    S = [F(v) for v in pts]
    n = len(S)
    assert rs2_min_distance(S).d_min >= 2 * n - 2 * max_intersection(S).max_size


def test_profile_json():
    data = max_intersection(S124).to_json()
    assert set(data) == {"n", "max_size", "argmax", "candidates_checked", "exhaustive"}
    assert data["max_size"] == 3 and not data["exhaustive"]
