"""Evaluation-set builders: unions of shifted subfield spans, and the
cyclotomic sets indexed by a difference set T of Z_f."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from .cyclotomy import condition_i
from .errors import (
    CertificationFailed,
    FieldTooLarge,
    GroupTooLarge,
    NoPrimeFound,
    NotADivisor,
    NotCoprime,
    NotPairwiseCoprime,
    NotPowerOfTwoCount,
    StrictViolation,
    TooSmall,
)
from .evalset import STRICT, DifferenceSetT, EvaluationSet, check_mode
from .field import DLOG_GROUP_CAP, STRICT_FIELD_LIMIT, Field, FieldElement, build_field, subfield_generator, trace
from .ntheory import ceil_sqrt, is_prime, prime_power, require_prime

ASYMPTOTIC_NOTE_DEGREES = "t_i proportional to each other: asymptotic hypothesis, not checked"
ASYMPTOTIC_NOTE_Q = "q sufficiently large: no explicit threshold, not checked"
ASYMPTOTIC_NOTE_F = "f proportional to log q: asymptotic hypothesis, not checked"


# --------------------------------------------------------------------------
# shifted subfield spans


def _span_shift(field: Field, beta: FieldElement, width: int) -> list[FieldElement]:
    """beta + span_{F_p}{beta^2, ..., beta^(width-1)}, sorted by coefficient vector."""
    basis = []
    power = beta * beta
    for _ in range(2, width):
        basis.append(power)
        power = power * beta
    scalars = [field(c) for c in range(field.p)]
    out = []
    for coeffs in product(scalars, repeat=len(basis)):
        acc = beta
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + c * b
        out.append(acc)
    out.sort(key=lambda el: el.coeffs)
    return out


def _union_field(p: int, degree: int, seed: int) -> Field:
    return build_field(p, degree, seed=seed, strict=p**degree < STRICT_FIELD_LIMIT)


def _subfield_union(p: int, ts: tuple[int, ...], seed: int) -> tuple[Field, list[list[FieldElement]]]:
    degree = 1
    for t in ts:
        degree *= t
    field = _union_field(p, degree, seed)
    blocks = [_span_shift(field, subfield_generator(field, t), ts[0]) for t in ts]
    return field, blocks


def _check_degrees(ts: tuple[int, ...]) -> None:
    if ts[0] < 2:
        raise ValueError(f"smallest degree must be >= 2, got {ts[0]}")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise ValueError(f"degrees must be strictly increasing, got {list(ts)}")
    for a, b in combinations(ts, 2):
        if gcd(a, b) != 1:
            raise NotPairwiseCoprime(f"degrees {a} and {b} share the factor {gcd(a, b)}")


def lemma4_set(p: int, t1: int, t2: int, mode: str = STRICT, seed: int = 0) -> EvaluationSet:
    """G_1 ∪ G_2 inside GF(p^(t1*t2)), where G_i = beta_i + span{beta_i^2..beta_i^(t1-1)}
    and beta_i generates the subfield of degree t_i.  n = 2*p^(t1-2)."""
    check_mode(mode)
    require_prime(p)
    if gcd(t1, t2) != 1:
        raise NotCoprime(f"gcd(t1, t2) = gcd({t1}, {t2}) != 1")
    if not 2 <= t1 < t2:
        raise ValueError(f"need 2 <= t1 < t2, got t1={t1}, t2={t2}")
    if mode == STRICT:
        if t1 < 5:
            raise StrictViolation(f"t1 >= 5 required for the lemma4 construction (got t1={t1})")
        if p ** (t1 * t2) >= STRICT_FIELD_LIMIT:
            raise FieldTooLarge(f"GF({p}^{t1 * t2}) exceeds the strict-mode bound 2^64")
    field, blocks = _subfield_union(p, (t1, t2), seed)
    provenance = {
        "construction": "lemma4",
        "p": p,
        "t1": t1,
        "t2": t2,
        "block_sizes": [len(b) for b in blocks],
        "advisory": [ASYMPTOTIC_NOTE_DEGREES],
    }
    return EvaluationSet(field, tuple(el for b in blocks for el in b), provenance, mode)


def _is_consecutive_primes(ts: tuple[int, ...]) -> bool:
    if not all(is_prime(t) for t in ts):
        return False
    for a, b in zip(ts, ts[1:]):
        if any(is_prime(m) for m in range(a + 1, b)):
            return False
    return True


def recursive_union_bound(p: int, t1: int, s: int) -> int:
    """|G_1| + sum_{i<s} (2^i (2^i - 1) p + 2^i): the cap on the overlap size
    for a union of 2^s shifted spans."""
    return p ** (t1 - 2) + sum(2**i * (2**i - 1) * p + 2**i for i in range(s))


def theorem2_set(p: int, ts, mode: str = STRICT, seed: int = 0) -> EvaluationSet:
    """Union of 2^s shifted spans G_1..G_{2^s} in GF(p^(t_1*...*t_{2^s})).

    Only additive structure and subfield generators are used, so fields of
    any size are accepted and the primitive element is not certified when
    q >= 2^64.  n = 2^s * p^(t_1-2).
    """
    check_mode(mode)
    require_prime(p)
    ts = tuple(int(t) for t in ts)
    count = len(ts)
    if count < 2 or count & (count - 1):
        raise NotPowerOfTwoCount(f"number of degrees must be a power of two >= 2, got {count}")
    _check_degrees(ts)
    if mode == STRICT:
        if ts[0] < 5:
            raise StrictViolation(f"t1 >= 5 required for the theorem2 construction (got t1={ts[0]})")
        if not _is_consecutive_primes(ts):
            raise StrictViolation(f"degrees must be consecutive primes in strict mode, got {list(ts)}")
    field, blocks = _subfield_union(p, ts, seed)
    s = count.bit_length() - 1
    provenance = {
        "construction": "theorem2",
        "p": p,
        "t": list(ts),
        "s": s,
        "block_sizes": [len(b) for b in blocks],
        "overlap_bound": recursive_union_bound(p, ts[0], s),
        "primitive_certified": field.primitive is not None,
        "advisory": [ASYMPTOTIC_NOTE_DEGREES, ASYMPTOTIC_NOTE_Q],
    }
    if field.primitive is None:
        provenance["note"] = "q >= 2^64: primitivity certification skipped (only subfield generators are needed)"
    return EvaluationSet(field, tuple(el for b in blocks for el in b), provenance, mode)


# --------------------------------------------------------------------------
# difference sets


def verify_difference_multiplicity(T, f: int) -> int:
    """Largest number of times a nonzero residue occurs among the ordered differences of T."""
    counts = Counter((a - b) % f for a in T for b in T if a != b)
    counts.pop(0, None)
    return max(counts.values(), default=0)


@lru_cache(maxsize=64)
def singer_set(r: int, seed: int = 0) -> DifferenceSetT:
    """Planar difference set of size r + 1 in Z_{r^2+r+1}.

    With h primitive in GF(r^3), D = {i : Tr(h^i) = 0} for 0 <= i < r^2+r+1,
    the trace going down to GF(r).  Since h^(r^2+r+1) generates GF(r)^*, the
    index i is the discrete log of the trace-zero line through h^i.
    """
    p, m = prime_power(r)
    N = r * r + r + 1
    if N > DLOG_GROUP_CAP:
        raise GroupTooLarge(f"r^2+r+1 = {N} exceeds the group cap {DLOG_GROUP_CAP}")
    field = build_field(p, 3 * m, seed=seed)
    h = field.primitive
    D = []
    x = field.one
    for i in range(N):
        if trace(x, r, 3).is_zero():
            D.append(i)
        x = x * h
    mult = verify_difference_multiplicity(D, N)
    if len(D) != r + 1 or mult != 1:
        raise CertificationFailed(f"trace-zero set for r={r} is not a planar difference set")
    provenance = {"construction": "singer", "r": r, "field": field.to_json()}
    return DifferenceSetT(N, tuple(D), mult, provenance)


def bertrand_prime(f: int) -> int:
    """A prime r with sqrt(f)/2 <= r <= sqrt(f) - 1 (r = 2 for 9 <= f <= 16)."""
    if f < 9:
        raise TooSmall(f"f = {f} < 9")
    if f <= 16:
        return 2
    m = (ceil_sqrt(f) + 1) // 2  # ceil(sqrt(f) / 2)
    for r in range(m, 2 * m - 2):
        if is_prime(r):
            return r
    raise NoPrimeFound(f"no prime in [{m}, {2 * m - 3}]")


def size_window(f: int) -> tuple[int, int]:
    """(ceil(sqrt(f)/2), ceil(sqrt(2f))): the admissible range for |T|."""
    return (ceil_sqrt(f) + 1) // 2, ceil_sqrt(2 * f)


def build_T(f: int) -> DifferenceSetT:
    """T ⊂ Z_f in which no nonzero residue is a difference more than twice."""
    if f < 2:
        raise TooSmall(f"f = {f} < 2")
    if f <= 4:
        elements, provenance = (0,), {"construction": "singleton"}
    elif f <= 8:
        elements, provenance = (0, 1), {"construction": "pair"}
    else:
        r = bertrand_prime(f)
        D = singer_set(r)
        elements = D.elements
        provenance = {"construction": "singer_embedding", "r": r, "singer_modulus": D.f}
    mult = verify_difference_multiplicity(elements, f)
    if mult > 2:
        raise CertificationFailed(f"T for f={f} has a difference of multiplicity {mult} > 2")
    return DifferenceSetT(f, tuple(sorted(elements)), mult, provenance)


def theorem3_set(p: int, s: int, f: int, mode: str = STRICT, seed: int = 0) -> EvaluationSet:
    """S = {g^(a*e) : a in T} with e = (q-1)/f and T = build_T(f)."""
    check_mode(mode)
    require_prime(p)
    q = p**s
    if (q - 1) % f != 0 or not 1 < f < q - 1:
        raise NotADivisor(f"f={f} must divide q-1={q - 1} with 1 < f < q-1")
    if q >= STRICT_FIELD_LIMIT:
        raise FieldTooLarge(f"GF({p}^{s}) needs a certified primitive element; q >= 2^64")
    cert = condition_i(p, f)
    if mode == STRICT and not cert.holds:
        raise StrictViolation(
            f"condition 14^f < p^(2*ord_f(p)) fails: 14^{f} >= {p}^{2 * cert.order}"
        )
    field = build_field(p, s, seed=seed)
    e = (q - 1) // f
    T = build_T(f)
    g = field.primitive
    points = tuple(g ** (a * e) for a in T.elements)
    provenance = {
        "construction": "theorem3",
        "p": p,
        "s": s,
        "f": f,
        "e": e,
        "r": T.provenance.get("r"),
        "T": T.to_json(),
        "condition": cert.to_json(),
        "degenerate": len(points) < 3,
        "advisory": [ASYMPTOTIC_NOTE_F],
    }
    return EvaluationSet(field, points, provenance, mode)
