import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import difference_counts
from rsinsdel import errors
from rsinsdel.constructions import (
    bertrand_prime,
    build_T,
    lemma4_set,
    recursive_union_bound,
    singer_set,
    size_window,
    theorem2_set,
    theorem3_set,
    verify_difference_multiplicity,
)
from rsinsdel.evalset import EvaluationSet
from rsinsdel.field import build_field, subfield_generator
from rsinsdel.insdel import code_min_distance_bruteforce, rs2_min_distance
from rsinsdel.intersections import max_intersection


# -- subfield unions ------------------------------------------------------


def test_lemma4_strict_instance_shape():
    S = lemma4_set(2, 5, 7)
    assert S.n == 16 and S.field.q == 2**35
    assert S.guarantee_status == "strict"
    G1, G2 = S.elements[:8], S.elements[8:]
    assert not set(G1) & set(G2)
    assert S.field.zero not in S.elements


def test_lemma4_blocks_live_in_their_subfields():
    S = lemma4_set(2, 5, 7)
    for el in S.elements[:8]:
        assert el ** (2**5) == el
    for el in S.elements[8:]:
        assert el ** (2**7) == el


def test_lemma4_block_structure_is_an_affine_span():
    S = lemma4_set(3, 3, 4, "research")
    beta = subfield_generator(S.field, 3)
    G1 = S.elements[:3]
    diffs = {g - beta for g in G1}
    assert diffs == {beta * beta * S.field(c) for c in range(3)}


def test_lemma4_research_two_point_instance():
    S = lemma4_set(3, 2, 3, "research")
    assert S.n == 2 and S.field.q == 3**6
    assert S.guarantee_status == "research"
    # q^2 is too big for brute force; the 2-point code is settled by the single-match bound
    assert rs2_min_distance(S).d_min == 2


def test_lemma4_errors():
    with pytest.raises(errors.NotCoprime):
        lemma4_set(2, 4, 6, "research")
    with pytest.raises(errors.StrictViolation, match="t1 >= 5"):
        lemma4_set(2, 3, 5)
    with pytest.raises(errors.FieldTooLarge):
        lemma4_set(2, 7, 11)
    with pytest.raises(ValueError):
        lemma4_set(2, 7, 5, "research")
    with pytest.raises(errors.NonPrime):
        lemma4_set(4, 5, 7)


def test_theorem2_reduces_to_lemma4():
    a = lemma4_set(2, 5, 7)
    b = theorem2_set(2, (5, 7))
    assert a.elements == b.elements and a.field == b.field
    c = theorem2_set(3, [2, 5], "research")
    d = lemma4_set(3, 2, 5, "research")
    assert c.elements == d.elements


def test_theorem2_big_field_structure():
    S = theorem2_set(2, (3, 5, 7, 11), "research")
    assert S.n == 8 and S.field.s == 1155
    assert S.provenance["primitive_certified"] is False
    assert S.provenance["overlap_bound"] == 9 == recursive_union_bound(2, 3, 2)
    assert len(set(S.elements)) == 8


def test_theorem2_errors():
    with pytest.raises(errors.NotPowerOfTwoCount):
        theorem2_set(2, (3, 5, 7), "research")
    with pytest.raises(errors.NotPairwiseCoprime):
        theorem2_set(2, (3, 5, 7, 9), "research")
    with pytest.raises(errors.StrictViolation):
        theorem2_set(2, (3, 5, 7, 11))
    with pytest.raises(errors.StrictViolation):
        theorem2_set(2, (5, 11))  # not consecutive primes


def test_recursive_union_bound_values():
    assert recursive_union_bound(2, 5, 1) == 8 + 1
    assert recursive_union_bound(3, 5, 2) == 27 + 1 + (2 * 1 * 3 + 2)


# -- difference sets ------------------------------------------------------


def test_verify_difference_multiplicity_examples():
    assert verify_difference_multiplicity([0], 11) == 0
    assert verify_difference_multiplicity([0, 1, 3], 7) == 1
    assert verify_difference_multiplicity([0, 1, 2], 5) == 2


@settings(max_examples=100)
@given(f=st.integers(2, 60), data=st.data())
def test_difference_multiplicity_matches_counts(f, data):
    T = data.draw(st.lists(st.integers(0, f - 1), unique=True, max_size=8))
    counts = difference_counts(T, f)
    assert verify_difference_multiplicity(T, f) == max(counts.values(), default=0)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 7, 8, 9])
def test_singer_sets_are_planar(r):
    D = singer_set(r)
    N = r * r + r + 1
    assert D.f == N and len(D) == r + 1
    counts = difference_counts(D.elements, N)
    assert sorted(counts) == list(range(1, N)) and set(counts.values()) == {1}


def test_singer_r2_affine_equivalent_to_124():
    D = set(singer_set(2).elements)
    target = {1, 2, 4}
    assert any({(u * x + v) % 7 for x in D} == target for u in range(1, 7) for v in range(7))


def test_singer_rejects_non_prime_power():
    with pytest.raises(errors.NotPrimePower):
        singer_set(6)
    with pytest.raises(errors.GroupTooLarge):
        singer_set(1024)


def test_bertrand_prime_examples():
    assert bertrand_prime(12) == 2
    assert bertrand_prime(17) == 3
    assert bertrand_prime(100) == 5
    with pytest.raises(errors.TooSmall):
        bertrand_prime(8)


@pytest.mark.parametrize("f", range(9, 2000, 7))
def test_bertrand_prime_in_window(f):
    r = bertrand_prime(f)
    # sqrt(f)/2 <= r <= sqrt(f) - 1, squared and kept in integers
    assert 4 * r * r >= f and (r + 1) ** 2 <= f


def test_build_T_examples():
    assert build_T(3).elements == (0,)
    T6 = build_T(6)
    assert T6.elements == (0, 1) and T6.max_diff_multiplicity <= 1
    T9 = build_T(9)
    assert len(T9) == 3 and T9.max_diff_multiplicity <= 2
    T17 = build_T(17)
    assert len(T17) == 4 and T17.provenance["r"] == 3
    with pytest.raises(errors.TooSmall):
        build_T(1)


def test_size_window():
    assert size_window(17) == (3, 6)
    for f in range(2, 500):
        lo, hi = size_window(f)
        # lo is the least m with 2m >= sqrt(f); hi the least h with h >= sqrt(2f)
        assert 4 * lo * lo >= f > 4 * (lo - 1) ** 2
        assert hi * hi >= 2 * f > (hi - 1) ** 2


# -- cyclotomic sets ------------------------------------------------------


def test_theorem3_examples():
    S = theorem3_set(7, 12, 13)
    assert S.n == 3 and S.provenance["r"] == 2
    assert S.provenance["condition"]["holds"]
    S = theorem3_set(5, 16, 17)
    assert S.n == 4 and S.provenance["r"] == 3


def test_theorem3_points_lie_in_order_f_subgroup():
    S = theorem3_set(5, 16, 17)
    for x in S.elements:
        assert x**17 == S.field.one


def test_theorem3_degenerate_instance():
    S = theorem3_set(61, 1, 3)
    assert S.n == 1 and S.provenance["degenerate"]


def test_theorem3_errors():
    with pytest.raises(errors.NotADivisor):
        theorem3_set(7, 1, 4)
    with pytest.raises(errors.NotADivisor):
        theorem3_set(7, 1, 6)
    with pytest.raises(errors.StrictViolation):
        theorem3_set(19, 1, 6)
    S = theorem3_set(19, 1, 6, "research")
    assert S.guarantee_status == "research" and S.n == 2


def test_theorem3_small_field_against_bruteforce():
    # q = 29, f = 14: T comes from the r = 2 planar set, n = 3
    S = theorem3_set(29, 1, 14, "research")
    assert S.n == 3
    assert rs2_min_distance(S).d_min == code_min_distance_bruteforce(S).d_min


def test_evaluation_set_json_round_trip():
    S = theorem3_set(5, 16, 17)
    again = EvaluationSet.from_json(S.to_json())
    assert again.elements == S.elements and again.provenance == S.provenance


def test_evaluation_set_parse_rejects_duplicates():
    F = build_field(5, 1)
    data = EvaluationSet.manual(F, [1, 2]).to_json()
    data["elements"].append([1])
    with pytest.raises(errors.ParseError, match=r"\[1\]"):
        EvaluationSet.from_json(data)


def test_theorem3_strict_guarantees_small_grid():
    for p, s, f in [(7, 12, 13), (5, 16, 17)]:
        S = theorem3_set(p, s, f)
        assert max_intersection(S).max_size <= 2
        assert rs2_min_distance(S).d_min == 2 * S.n - 4
