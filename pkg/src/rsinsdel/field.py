"""Finite fields GF(p^s) in polynomial-basis representation.

Elements are coefficient vectors over Z_p, constant term first, reduced
modulo a monic irreducible ``modulus`` of degree ``s``.  Characteristic 2
stores the vector as the bits of a Python int; odd characteristic stores a
tuple.  Either way the stored value (``FieldElement.raw``) is hashable and
fields as large as GF(2^1155) are workable.

The canonical integer encoding of an element is ``sum(c_i * p**i)``; it is
used for enumeration order, tie-breaking and compact keys.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Iterator, Sequence

from . import _polyarith as pa
from .errors import (
    DivisionByZero,
    FieldMismatch,
    FieldTooLarge,
    GroupTooLarge,
    NoPrimitiveFound,
    NonDivisorDegree,
    NotInGroup,
    ReducibleModulus,
)
from .ntheory import factorint, prime_divisors, prime_power, require_prime

STRICT_FIELD_LIMIT = 2**64
DLOG_GROUP_CAP = 2**20


class _BinaryOps:
    """GF(2^s) on int bitmasks."""

    def __init__(self, s: int, modulus: Sequence[int]):
        self.s = s
        self.mod_int = sum(1 << i for i, c in enumerate(modulus) if c)
        self.taps = pa.gf2_taps(self.mod_int)
        self.zero = 0
        self.one = 1

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        return sum(1 << i for i, c in enumerate(coeffs) if c % 2)

    def to_coeffs(self, raw: int) -> list[int]:
        return [(raw >> i) & 1 for i in range(self.s)]

    def encode(self, raw: int) -> int:
        return raw

    def decode(self, n: int) -> int:
        return n

    def scalar(self, n: int) -> int:
        return n & 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        return pa.gf2_reduce(pa.gf2_clmul(a, b), self.s, self.taps)

    def square(self, a: int) -> int:
        return pa.gf2_reduce(pa.gf2_square(a), self.s, self.taps)

    def inv(self, a: int) -> int:
        if self.s == 1:
            return 1
        return pa.gf2_inv(a, self.mod_int)

    def frobenius(self, a: int) -> int:
        return self.square(a)


class _OddOps:
    """GF(p^s), p odd, on coefficient tuples."""

    def __init__(self, p: int, s: int, modulus: Sequence[int]):
        self.p = p
        self.s = s
        self.modulus = tuple(modulus)
        # x^s = -(m_0 + ... + m_{s-1} x^{s-1})
        self.neg_low = tuple((-c) % p for c in modulus[:s])
        self.zero = (0,) * s
        self.one = (1,) + (0,) * (s - 1)

    def from_coeffs(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        return tuple(c % self.p for c in coeffs)

    def to_coeffs(self, raw: tuple[int, ...]) -> list[int]:
        return list(raw)

    def encode(self, raw: tuple[int, ...]) -> int:
        n = 0
        for c in reversed(raw):
            n = n * self.p + c
        return n

    def decode(self, n: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.s):
            n, c = divmod(n, self.p)
            out.append(c)
        return tuple(out)

    def scalar(self, n: int) -> tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.s - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, s = self.p, self.s
        if s == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        low = self.neg_low
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k] % p
            if c:
                base = k - s
                for i, m in enumerate(low):
                    prod[base + i] += c * m
        return tuple(c % p for c in prod[:s])

    def square(self, a):
        return self.mul(a, a)

    def inv(self, a):
        if self.s == 1:
            return (pow(a[0], -1, self.p),)
        return _pow_raw(self, a, self.p**self.s - 2)

    def frobenius(self, a):
        return _pow_raw(self, a, self.p)


def _pow_raw(ops, a, e: int):
    result = ops.one
    base = a
    while e:
        if e & 1:
            result = ops.mul(result, base)
        e >>= 1
        if e:
            base = ops.square(base)
    return result


class Field:
    """A concrete finite field GF(p^s).  Build one with :func:`build_field`."""

    def __init__(self, p: int, s: int, modulus: Sequence[int], seed: int = 0):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = tuple(int(c) % p for c in modulus)
        self.seed = seed
        self.ops = _BinaryOps(s, self.modulus) if p == 2 else _OddOps(p, s, self.modulus)
        self.zero = FieldElement(self, self.ops.zero)
        self.one = FieldElement(self, self.ops.one)
        self.primitive: FieldElement | None = None

    # -- identity ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"

    # -- element construction --------------------------------------------
    def __call__(self, value) -> "FieldElement":
        """Integers map to ``value * 1``; sequences are coefficient vectors."""
        if isinstance(value, FieldElement):
            self._check(value)
            return value
        if isinstance(value, int):
            return FieldElement(self, self.ops.scalar(value))
        return self.element(value)

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.s:
            if any(c % self.p for c in coeffs[self.s:]):
                raise FieldMismatch(f"coefficient vector longer than degree {self.s}")
            coeffs = coeffs[: self.s]
        coeffs += [0] * (self.s - len(coeffs))
        return FieldElement(self, self.ops.from_coeffs(coeffs))

    def from_int(self, n: int) -> "FieldElement":
        if not 0 <= n < self.q:
            raise ValueError(f"encoding {n} out of range for {self!r}")
        return FieldElement(self, self.ops.decode(n))

    @property
    def x(self) -> "FieldElement":
        """The class of the polynomial variable (a root of the modulus)."""
        if self.s == 1:
            return FieldElement(self, self.ops.scalar(-self.modulus[0]))
        return self.element([0, 1])

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements in encoding order."""
        for n in range(self.q):
            yield FieldElement(self, self.ops.decode(n))

    def _check(self, el: "FieldElement") -> None:
        if el.field is not self and el.field != self:
            raise FieldMismatch(f"element of {el.field!r} used in {self!r}")

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "modulus": list(self.modulus),
            "primitive": self.primitive.coeffs if self.primitive is not None else None,
        }

    @classmethod
    def from_json(cls, data: dict, strict: bool = False) -> "Field":
        return build_field(
            int(data["p"]),
            int(data["s"]),
            data.get("modulus"),
            primitive=data.get("primitive"),
            strict=strict,
        )


class FieldElement:
    """An element of a :class:`Field`; immutable and hashable."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    @property
    def coeffs(self) -> list[int]:
        return self.field.ops.to_coeffs(self.raw)

    def to_int(self) -> int:
        return self.field.ops.encode(self.raw)

    def is_zero(self) -> bool:
        return self.raw == self.field.ops.zero

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, int):
            return FieldElement(self.field, self.field.ops.scalar(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.ops.add(self.raw, o.raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.ops.sub(self.raw, o.raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.ops.sub(o.raw, self.raw))

    def __neg__(self):
        return FieldElement(self.field, self.field.ops.neg(self.raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.ops.mul(self.raw, o.raw))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return FieldElement(self.field, self.field.ops.inv(self.raw))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        if e == 0:
            return self.field.one
        if self.is_zero():
            return self
        e %= self.field.q - 1
        if e == 0:
            e = self.field.q - 1
        return FieldElement(self.field, _pow_raw(self.field.ops, self.raw, e))

    def frobenius(self, k: int = 1) -> "FieldElement":
        """``self ** (p ** k)``."""
        raw = self.raw
        ops = self.field.ops
        for _ in range(k % self.field.s if self.field.s > 1 else 0):
            raw = ops.frobenius(raw)
        return FieldElement(self.field, raw)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.raw == other.raw and (other.field is self.field or other.field == self.field)
        if isinstance(other, int):
            return self.raw == self.field.ops.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.raw)

    def __repr__(self) -> str:
        return f"{self.field!r}{self.coeffs}"

    def degree(self) -> int:
        """Degree of the minimal polynomial over GF(p), i.e. [F_p(self) : F_p]."""
        s = self.field.s
        raw = self.raw
        ops = self.field.ops
        y = raw
        for i in range(1, s + 1):
            y = ops.frobenius(y)
            if s % i == 0 and y == raw:
                return i
        raise AssertionError("Frobenius orbit longer than the field degree")

    def has_degree(self, t: int) -> bool:
        """True when the element generates exactly the subfield GF(p^t)."""
        if self.frobenius_power(t) != self.raw:
            return False
        return all(self.frobenius_power(t // ell) != self.raw for ell in prime_divisors(t)) if t > 1 else True

    def frobenius_power(self, k: int):
        raw = self.raw
        ops = self.field.ops
        for _ in range(k):
            raw = ops.frobenius(raw)
        return raw

    def order(self) -> int:
        """Multiplicative order; needs the factorization of q - 1."""
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative order")
        n = self.field.q - 1
        j = n
        for ell in prime_divisors(n):
            while j % ell == 0 and (self ** (j // ell)) == 1:
                j //= ell
        return j


def _find_primitive(field: Field) -> FieldElement:
    n = field.q - 1
    if n == 1:
        return field.one
    cofactors = [n // ell for ell in prime_divisors(n)]
    for code in range(1, field.q):
        g = field.from_int(code)
        if all(g ** c != 1 for c in cofactors):
            return g
    raise NoPrimitiveFound(f"no primitive element found in {field!r}")


def is_primitive(g: FieldElement) -> bool:
    if g.is_zero():
        return False
    n = g.field.q - 1
    return all(g ** (n // ell) != 1 for ell in prime_divisors(n)) if n > 1 else True


def build_field(
    p: int,
    s: int = 1,
    modulus: Sequence[int] | None = None,
    *,
    seed: int = 0,
    primitive: Sequence[int] | None = None,
    strict: bool = True,
) -> Field:
    """Construct GF(p^s) with a verified modulus and primitive element.

    Without ``modulus`` the ``seed``-th irreducible polynomial in a fixed
    counter order is used.  A primitive element is certified whenever
    q < 2**64 (the smallest one in encoding order unless ``primitive`` is
    given).  Larger fields are refused in strict mode; otherwise they are
    built without a primitive element.
    """
    require_prime(p)
    if s < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**s
    if strict and q >= STRICT_FIELD_LIMIT:
        raise FieldTooLarge(f"GF({p}^{s}) exceeds the strict-mode bound 2^64")
    if modulus is None:
        modulus = pa.find_irreducible(p, s, seed)
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {s}")
        if not pa.is_irreducible(p, modulus):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
    field = Field(p, s, modulus, seed=seed)
    if q < STRICT_FIELD_LIMIT:
        if primitive is not None:
            g = field.element(primitive)
            if not is_primitive(g):
                raise NoPrimitiveFound(f"{g!r} is not primitive")
            field.primitive = g
        else:
            field.primitive = _find_primitive(field)
    elif primitive is not None:
        # too large to factor q - 1; kept as supplied, uncertified
        field.primitive = field.element(primitive)
    return field


def build_field_q(q: int, **kwargs) -> Field:
    p, s = prime_power(q)
    return build_field(p, s, **kwargs)


def arith(a: FieldElement, b: FieldElement | None, op: str, k: int | None = None) -> FieldElement:
    """Dispatch one of add/sub/mul/div/pow/inv/neg by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** k
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def subfield_generator(field: Field, t: int) -> FieldElement:
    """An element generating the subfield GF(p^t) over GF(p).

    With a primitive element g this is h = g^((q-1)/(p^t-1)), which generates
    the multiplicative group of GF(p^t) and so has degree exactly t (for
    t = s it is g itself).  Without a certified primitive element, h is
    y^((q-1)/(p^t-1)) for the first y in encoding order for which h has
    degree t; powers of an h of lower degree never reach degree t, so only
    the bases need scanning.
    """
    s = field.s
    if t < 2 or s % t != 0:
        raise NonDivisorDegree(f"t={t} must be >= 2 and divide s={s}")
    if t == s and field.primitive is not None:
        return field.primitive
    exponent = (field.q - 1) // (field.p**t - 1)
    if field.primitive is not None:
        bases: Iterable[FieldElement] = [field.primitive ** exponent]
    else:
        bases = (field.from_int(code) ** exponent for code in range(field.p, field.q))
    for h in bases:
        if h.has_degree(t):
            return h
    raise NoPrimitiveFound(f"no element of degree {t} found in {field!r}")


def trace(x: FieldElement, r: int, d: int) -> FieldElement:
    """Tr_{GF(r^d)/GF(r)}(x) = x + x^r + ... + x^(r^(d-1))."""
    field = x.field
    if r**d != field.q:
        raise FieldMismatch(f"{field!r} is not a degree-{d} extension of GF({r})")
    _, m = prime_power(r)
    total = field.zero
    y = x
    for _ in range(d):
        total = total + y
        y = y.frobenius(m)
    return total


def discrete_log_small(
    x: FieldElement, base: FieldElement, order: int | None = None, cap: int = DLOG_GROUP_CAP
) -> int:
    """Least e >= 0 with base**e == x, by baby-step/giant-step."""
    if base.field != x.field:
        raise FieldMismatch("base and argument live in different fields")
    if x.is_zero() or base.is_zero():
        raise NotInGroup("zero is not in a multiplicative group")
    m = order if order is not None else base.order()
    if m > cap:
        raise GroupTooLarge(f"group order {m} exceeds cap {cap}")
    step = isqrt(m - 1) + 1 if m > 1 else 1
    baby = {}
    cur = x.field.one
    for j in range(step):
        baby.setdefault(cur.raw, j)
        cur = cur * base
    giant = base ** (-step) if m > 1 else x.field.one
    y = x
    for i in range(step + 1):
        j = baby.get(y.raw)
        if j is not None:
            e = i * step + j
            if e < m:
                return e
        y = y * giant
    raise NotInGroup(f"{x!r} is not a power of {base!r}")


def factor_group_order(field: Field) -> dict[int, int]:
    return factorint(field.q - 1)
