"""Low-level polynomial arithmetic over Z_p.

Two representations are used:

* characteristic 2: a polynomial is a Python int, bit ``i`` holding the
  coefficient of ``x**i``;
* odd characteristic: a list/tuple of coefficients, constant term first.

Nothing in here knows about field elements; ``field.py`` wraps these.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

# --------------------------------------------------------------------------
# GF(2)[x] on ints


def gf2_clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    if b.bit_length() <= 48:
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        return r
    # 4-bit window for long operands
    table = [0] * 16
    for i in range(1, 16):
        t = 0
        for bit in range(4):
            if (i >> bit) & 1:
                t ^= a << bit
        table[i] = t
    r = 0
    shift = 0
    while b:
        nib = b & 15
        if nib:
            r ^= table[nib] << shift
        b >>= 4
        shift += 4
    return r


def gf2_square(a: int) -> int:
    # reading the binary digits in base 4 interleaves zero bits
    return int(bin(a)[2:], 4) if a else 0


def gf2_taps(modulus: int) -> tuple[int, ...]:
    deg = modulus.bit_length() - 1
    return tuple(i for i in range(deg) if (modulus >> i) & 1)


def gf2_reduce(r: int, deg: int, taps: Sequence[int]) -> int:
    """Reduce ``r`` modulo the monic polynomial ``x**deg + sum(x**t for t in taps)``."""
    mask = (1 << deg) - 1
    while r >> deg:
        h = r >> deg
        r &= mask
        for t in taps:
            r ^= h << t
    return r


def gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    if db == 0:
        raise ZeroDivisionError("polynomial division by zero")
    la = a.bit_length()
    while la >= db:
        a ^= b << (la - db)
        la = a.bit_length()
    return a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_inv(a: int, modulus: int) -> int:
    """Inverse of ``a`` modulo an irreducible bit-polynomial."""
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    u, v = a, modulus
    g1, g2 = 1, 0
    while u != 1:
        j = u.bit_length() - v.bit_length()
        if j < 0:
            u, v = v, u
            g1, g2 = g2, g1
            j = -j
        u ^= v << j
        g1 ^= g2 << j
        if u == 0:
            raise ZeroDivisionError("element not invertible; modulus reducible?")
    return gf2_mod(g1, modulus)


# --------------------------------------------------------------------------
# Z_p[x] on coefficient lists


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim([c % p for c in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] * inv_lead % p
        quot[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        trim(r)
    return trim(quot), r


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return poly_divmod(a, b, p)[1]


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = trim([c % p for c in a]), trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = poly_mod(poly_mul(base, base, p), m, p)
    return result


# --------------------------------------------------------------------------
# irreducibility and candidate enumeration

_BEN_OR_PREFILTER = 16


def _prime_factors_small(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Rabin's test with a short Ben-Or prefilter for small factors.

    ``modulus`` is a coefficient list (constant first) of a monic polynomial.
    """
    s = len(modulus) - 1
    if s < 1 or modulus[-1] % p != 1:
        return False
    if s == 1:
        return True
    if modulus[0] % p == 0:
        return False
    checkpoints = {s // ell for ell in _prime_factors_small(s)}
    if p == 2:
        f = sum(1 << i for i, c in enumerate(modulus) if c % 2)
        taps = gf2_taps(f)
        h = 2  # x
        for i in range(1, s + 1):
            h = gf2_reduce(gf2_square(h), s, taps)
            if (i <= _BEN_OR_PREFILTER and i <= s // 2) or i in checkpoints:
                if gf2_gcd(f, h ^ 2) != 1:
                    return False
        return h == 2
    f = [c % p for c in modulus]
    x = [0, 1]
    h = x
    for i in range(1, s + 1):
        h = poly_powmod(h, p, f, p)
        if (i <= _BEN_OR_PREFILTER and i <= s // 2) or i in checkpoints:
            if len(poly_gcd(f, poly_sub(h, x, p), p)) != 1:
                return False
    return trim(list(h)) == x


def monic_candidates(p: int, s: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-``s`` polynomials over Z_p in a fixed counter order.

    Ordered by the number of nonzero lower coefficients, then by the support
    (lexicographic), then by the coefficient values.  For ``s >= 2`` the
    order skips candidates that are reducible for trivial reasons: zero
    constant term, or (for small p) a root in Z_p.  Yields full coefficient
    tuples of length ``s + 1``, constant term first.
    """
    if s == 1:
        for c in range(p):
            yield (c, 1)
        return
    check_roots = p <= 64
    for weight in range(1, s + 1):
        # p = 2: f(1) = 1 + weight, so odd weights have the root 1
        if p == 2 and weight % 2 == 1:
            continue
        for rest in combinations(range(1, s), weight - 1):
            support = (0,) + rest
            for values in product(range(1, p), repeat=weight):
                if check_roots and p > 2 and _has_root(p, s, support, values):
                    continue
                coeffs = [0] * (s + 1)
                coeffs[s] = 1
                for pos, val in zip(support, values):
                    coeffs[pos] = val
                yield tuple(coeffs)


def _has_root(p: int, s: int, support: Sequence[int], values: Sequence[int]) -> bool:
    for a in range(1, p):
        acc = pow(a, s, p)
        for pos, val in zip(support, values):
            acc += val * pow(a, pos, p)
        if acc % p == 0:
            return True
    return False


def find_irreducible(p: int, s: int, seed: int = 0) -> tuple[int, ...]:
    """The ``seed``-th (0-based) irreducible polynomial in counter order."""
    skip = seed
    for cand in monic_candidates(p, s):
        if is_irreducible(p, cand):
            if skip == 0:
                return cand
            skip -= 1
    raise RuntimeError(f"no irreducible polynomial of degree {s} over GF({p}) at seed {seed}")
