"""Cyclotomic numbers of order e and the exact order condition that caps them."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field as dc_field
from math import gcd

from .errors import BadFactorization, NotCoprime
from .field import Field, FieldElement
from .ntheory import ord_f_p


@dataclass(frozen=True)
class ConditionCertificate:
    """Exact form of f < log_{sqrt 14}(p^ord_f(p)), namely 14^f < p^(2*ord_f(p))."""

    p: int
    f: int
    order: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "ord_f_p": self.order,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "inequality": f"14^{self.f} < {self.p}^{2 * self.order}",
            "holds": self.holds,
        }


def condition_i(p: int, f: int) -> ConditionCertificate:
    """Decide 14^f < p^(2*ord_f(p)) with integer arithmetic only."""
    if gcd(p, f) != 1:
        raise NotCoprime(f"gcd({p}, {f}) != 1")
    order = ord_f_p(f, p)
    return ConditionCertificate(p, f, order, 14**f, p ** (2 * order))


def _check_factorization(field: Field, e: int, f: int) -> None:
    if e < 1 or f < 1 or e * f != field.q - 1:
        raise BadFactorization(f"e*f = {e}*{f} must equal q-1 = {field.q - 1}")


def _generator(field: Field, g: FieldElement | None) -> FieldElement:
    if g is not None:
        return g
    if field.primitive is None:
        raise ValueError(f"{field!r} has no certified primitive element")
    return field.primitive


def cyclotomic_class(field: Field, e: int, f: int, a: int, g: FieldElement | None = None) -> list[FieldElement]:
    """S_a = g^a * <g^e>, listed as g^(a + e*j) for j = 0..f-1."""
    _check_factorization(field, e, f)
    g = _generator(field, g)
    step = g**e
    x = g ** (a % e)
    out = []
    for _ in range(f):
        out.append(x)
        x = x * step
    return out


def cyclotomic_number(field: Field, e: int, f: int, a: int, b: int, g: FieldElement | None = None) -> int:
    """(a, b) = |(1 + S_a) ∩ S_b|."""
    shifted = [(field.one + x).raw for x in cyclotomic_class(field, e, f, a, g)]
    target = {x.raw for x in cyclotomic_class(field, e, f, b, g)}
    return sum(y in target for y in shifted)


@dataclass
class CyclotomicTable:
    q: int
    e: int
    f: int
    g: FieldElement
    values: list[list[int]]
    minus_one_class: int = dc_field(default=-1)

    def row_sum_expected(self, a: int) -> int:
        return self.f - (1 if self.minus_one_class == a else 0)

    def max_entry(self) -> int:
        return max(max(row) for row in self.values)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "e": self.e,
            "f": self.f,
            "g": self.g.coeffs,
            "values": self.values,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# q={self.q} e={self.e} f={self.f} g={self.g.to_int()}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.values)
        return buf.getvalue()


def cyclotomic_table(field: Field, e: int, f: int, g: FieldElement | None = None) -> CyclotomicTable:
    """All e^2 cyclotomic numbers, from one class-index map of F_q^*."""
    _check_factorization(field, e, f)
    g = _generator(field, g)
    class_of: dict = {}
    x = field.one
    for k in range(field.q - 1):
        class_of[x.raw] = k % e
        x = x * g
    values = [[0] * e for _ in range(e)]
    x = field.one
    for k in range(field.q - 1):
        b = class_of.get((field.one + x).raw)
        if b is not None:
            values[k % e][b] += 1
        x = x * g
    return CyclotomicTable(field.q, e, f, g, values, class_of[(-field.one).raw])


@dataclass
class CapReport:
    table: CyclotomicTable
    condition: ConditionCertificate
    annotations: dict

    @property
    def max_entry(self) -> int:
        return self.table.max_entry()

    @property
    def within_cap(self) -> bool:
        return self.max_entry <= 2

    @property
    def violations(self) -> list[tuple[int, int, int]]:
        return [
            (a, b, v)
            for a, row in enumerate(self.table.values)
            for b, v in enumerate(row)
            if v > 2
        ]

    @property
    def contradiction(self) -> bool:
        """The order condition holds yet some entry exceeds 2."""
        return self.condition.holds and not self.within_cap

    def to_json(self) -> dict:
        return {
            "table": self.table.to_json(),
            "condition": self.condition.to_json(),
            "max_entry": self.max_entry,
            "within_cap": self.within_cap,
            "violations": [list(v) for v in self.violations],
            "contradiction": self.contradiction,
            "annotations": self.annotations,
        }


def verify_lemma8(field: Field, e: int, f: int, g: FieldElement | None = None) -> CapReport:
    """Full table plus a check that every entry is at most 2.

    Runs on any instance; the cap is only promised when the order condition
    holds, and ``contradiction`` flags the case where it holds but fails.
    """
    table = cyclotomic_table(field, e, f, g)
    cert = condition_i(field.p, f)
    two = field.one + field.one
    annotations = {
        "class_of_minus_one": table.minus_one_class,
        "class_of_two": None,
        "f_mod_6": f % 6,
    }
    if not two.is_zero():
        for a in range(e):
            if two in set(cyclotomic_class(field, e, f, a, table.g)):
                annotations["class_of_two"] = a
                break
    return CapReport(table, cert, annotations)
