import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import edit_script_distance, lcs_recursive, min_distance_pairs, rs2_words
from rsinsdel import errors
from rsinsdel.evalset import EvaluationSet
from rsinsdel.field import build_field
from rsinsdel.insdel import (
    code_min_distance_bruteforce,
    encode_codeword,
    insdel_distance,
    lcs,
    rs2_min_distance,
)

words = st.lists(st.integers(0, 4), max_size=9)


def test_lcs_examples():
    assert lcs((1, 2, 3), (1, 2, 3)) == 3
    assert lcs((1, 2, 3, 4), (2, 4, 6)) == 2
    assert lcs((), (1, 2)) == 0


def test_lcs_witness_is_lexicographically_first():
    length, pairs = lcs((1, 2, 3, 4), (2, 4, 6), witness=True)
    assert length == 2 and pairs == [(1, 0), (3, 1)]
    length, pairs = lcs("abab", "baba", witness=True)
    assert length == 3 and pairs == [(0, 1), (1, 2), (2, 3)]


def test_insdel_distance_examples():
    assert insdel_distance((1, 2, 3), (1, 2, 3)) == 0
    assert insdel_distance((1, 2, 3, 4), (2, 4, 6)) == 3
    assert insdel_distance((1, 2, 3), (4, 5, 6, 7, 8)) == 8


@settings(max_examples=300)
@given(a=words, b=words)
def test_lcs_matches_recursive_oracle(a, b):
    assert lcs(a, b) == lcs_recursive(a, b)
    length, pairs = lcs(a, b, witness=True)
    assert length == len(pairs)
    assert all(a[i] == b[j] for i, j in pairs)
    assert all(i1 < i2 and j1 < j2 for (i1, j1), (i2, j2) in zip(pairs, pairs[1:]))


@settings(max_examples=300)
@given(a=words, b=words, c=words)
def test_metric_axioms(a, b, c):
    assert insdel_distance(a, a) == 0
    assert insdel_distance(a, b) == insdel_distance(b, a)
    assert insdel_distance(a, c) <= insdel_distance(a, b) + insdel_distance(b, c)
    assert insdel_distance(a, b) % 2 == (len(a) + len(b)) % 2


@settings(max_examples=150, deadline=None)
@given(a=st.lists(st.integers(0, 2), max_size=4), b=st.lists(st.integers(0, 2), max_size=4))
def test_distance_matches_breadth_first_edit_search(a, b):
    assert insdel_distance(a, b) == edit_script_distance(a, b)


# -- code distances -------------------------------------------------------


def test_bruteforce_q5_three_points_matches_pair_oracle():
    F = build_field(5, 1)
    pts = [F(0), F(1), F(2)]
    report = code_min_distance_bruteforce(pts)
    assert report.d_min == min_distance_pairs(rs2_words(F, pts))
    assert report.d_min in (2, 4, 6)


def test_bruteforce_witness_reproduces_distance():
    F = build_field(7, 1)
    pts = [F(1), F(3), F(2), F(6)]
    rep = code_min_distance_bruteforce(pts)
    c1 = encode_codeword([F.element(c) for c in rep.witness["f1"]], pts)
    c2 = encode_codeword([F.element(c) for c in rep.witness["f2"]], pts)
    assert c1 != c2 and insdel_distance(c1, c2) == rep.d_min


@pytest.mark.parametrize("n", [1, 2, 4])
def test_bruteforce_dimension_one_gives_2n(n):
    F = build_field(7, 1)
    rep = code_min_distance_bruteforce([F(i) for i in range(n)], k=1)
    assert rep.d_min == 2 * n


def test_bruteforce_caps_and_errors():
    F = build_field(2, 9)
    with pytest.raises(errors.TooLarge):
        code_min_distance_bruteforce([F.from_int(i) for i in range(1, 4)])
    G = build_field(5, 1)
    with pytest.raises(ValueError):
        code_min_distance_bruteforce([G(1), G(2)], k=3)
    with pytest.raises(errors.DuplicateEvaluationPoints):
        code_min_distance_bruteforce([G(1), G(1), G(2)])


def test_rs2_errors():
    F = build_field(5, 1)
    with pytest.raises(errors.TooSmall):
        rs2_min_distance([F(1)])
    with pytest.raises(errors.DuplicateEvaluationPoints):
        rs2_min_distance([F(1), F(2), F(1)])
    with pytest.raises(errors.DuplicateEvaluationPoints):
        EvaluationSet.manual(F, [1, 2, 1])


@pytest.mark.parametrize("q", [5, 7, 8, 9])
def test_rs2_equals_pair_oracle_small(q):
    from rsinsdel.field import build_field_q

    F = build_field_q(q)
    elems = list(F.elements())
    rng = random.Random(q)
    for n in (2, 3, 4):
        for _ in range(6):
            pts = rng.sample(elems, n)
            assert rs2_min_distance(pts).d_min == min_distance_pairs(rs2_words(F, pts))


def test_rs2_witness_reproduces_distance():
    F = build_field(3, 2)
    for pts in combinations(list(F.elements()), 4):
        rep = rs2_min_distance(list(pts))
        c1 = encode_codeword([F.element(c) for c in rep.witness["f1"]], pts)
        c2 = encode_codeword([F.element(c) for c in rep.witness["f2"]], pts)
        assert c1 != c2
        assert insdel_distance(c1, c2) == rep.d_min


def test_rs2_upper_bound_single_match():
    F = build_field(11, 1)
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randint(2, 6)
        pts = rng.sample(list(F.elements()), n)
        assert rs2_min_distance(pts).d_min <= 2 * n - 2


def test_distance_report_json_shape():
    F = build_field(7, 1)
    rep = rs2_min_distance(EvaluationSet.manual(F, [1, 2, 4]))
    data = rep.to_json()
    for key in ("n", "k", "q", "method", "d_min", "lcs_max", "witness", "guarantee_status"):
        assert key in data
    assert data["d_min"] == 2 * (data["n"] - data["lcs_max"])
    assert data["method"] == "affine_candidates"
