"""Upper bounds on the insdel distance of linear codes, and decoding radius."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadDims


def singleton_insdel(n: int, k: int) -> int:
    """d <= 2n - 2k + 2 for any [n, k] linear code."""
    if not 1 <= k <= n:
        raise BadDims(f"need 1 <= k <= n, got n={n}, k={k}")
    return 2 * n - 2 * k + 2


@dataclass(frozen=True)
class ImprovedBound:
    bound: int
    applicable: bool
    improved_d: int


def improved_bound(n: int, k: int, q: int) -> ImprovedBound:
    """d <= 2n - 2k for RS codes once q >= n^2.

    ``bound`` is the binding value: the improved one when applicable,
    the Singleton value otherwise.
    """
    if not 2 <= k < n:
        raise BadDims(f"need 2 <= k < n, got n={n}, k={k}")
    applicable = q >= n * n
    improved = 2 * n - 2 * k
    return ImprovedBound(improved if applicable else singleton_insdel(n, k), applicable, improved)


def capability(d: int) -> int:
    """floor((d-1)/2) insertions+deletions are correctable; d = 0 maps to 0."""
    if d < 0:
        raise ValueError("distance must be >= 0")
    return 0 if d == 0 else (d - 1) // 2


def size_bound(q: int, n: int, d: int) -> int:
    """Largest code size allowed by M <= q^(n - d/2 + 1), for even d."""
    if d % 2:
        raise ValueError("insdel distances between equal-length words are even")
    return q ** (n - d // 2 + 1)


@dataclass
class BoundReport:
    n: int
    k: int
    q: int
    d: int | None = None

    @property
    def singleton_d(self) -> int:
        return singleton_insdel(self.n, self.k)

    @property
    def improved_applicable(self) -> bool:
        return self.q >= self.n**2 and 2 <= self.k < self.n

    @property
    def improved_d(self) -> int:
        return 2 * self.n - 2 * self.k

    @property
    def binding(self) -> int:
        return self.improved_d if self.improved_applicable else self.singleton_d

    @property
    def capability(self) -> int | None:
        return None if self.d is None else capability(self.d)

    @property
    def compliant(self) -> bool | None:
        return None if self.d is None else self.d <= self.binding

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "singleton_d": self.singleton_d,
            "improved_applicable": self.improved_applicable,
            "improved_d": self.improved_d,
            "binding_d": self.binding,
        }
        if self.d is not None:
            out.update(
                d=self.d,
                capability=self.capability,
                capability_degenerate=self.d == 0,
                compliant=self.compliant,
            )
        return out


def bound_report(n: int, k: int, q: int, d: int | None = None) -> BoundReport:
    singleton_insdel(n, k)
    return BoundReport(n, k, q, d)
