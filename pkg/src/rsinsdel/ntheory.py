"""Integer helpers: primality, factorization, multiplicative orders."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint as _sympy_factorint
from sympy import isprime as _sympy_isprime

from .errors import NonPrime, NotCoprime, NotPrimePower


def is_prime(n: int) -> bool:
    return n >= 2 and bool(_sympy_isprime(n))


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    return p


@lru_cache(maxsize=256)
def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factorint needs n >= 1")
    return dict(sorted(_sympy_factorint(n).items()))


def prime_divisors(n: int) -> list[int]:
    return list(factorint(n))


def divisors(n: int) -> list[int]:
    divs = [1]
    for prime, exp in factorint(n).items():
        divs = [d * prime**k for d in divs for k in range(exp + 1)]
    return sorted(divs)


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, s)`` with ``q == p**s``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    ((p, s),) = fac.items()
    return p, s


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


def carmichael(m: int) -> int:
    """Carmichael function lambda(m), the exponent of (Z/mZ)^*."""
    lam = 1
    for prime, exp in factorint(m).items() if m > 1 else ():
        if prime == 2 and exp >= 3:
            part = 2 ** (exp - 2)
        else:
            part = (prime - 1) * prime ** (exp - 1)
        lam = lam * part // gcd(lam, part)
    return lam


def mult_order(a: int, m: int) -> int:
    """Smallest ``j >= 1`` with ``a**j == 1 (mod m)``."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    a %= m
    if gcd(a, m) != 1:
        raise NotCoprime(f"gcd({a}, {m}) != 1")
    if m < 64:
        j, acc = 1, a
        while acc != 1:
            acc = acc * a % m
            j += 1
        return j
    j = carmichael(m)
    for ell in prime_divisors(j):
        while j % ell == 0 and pow(a, j // ell, m) == 1:
            j //= ell
    return j


def ord_f_p(f: int, p: int) -> int:
    """ord_f(p): multiplicative order of p modulo f."""
    return mult_order(p, f)


def ceil_sqrt(n: int) -> int:
    """Smallest c >= 0 with c*c >= n."""
    if n <= 0:
        return 0
    c = isqrt(n)
    return c if c * c == n else c + 1
