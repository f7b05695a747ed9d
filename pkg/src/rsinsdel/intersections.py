"""Sizes of the overlaps delta*S and S + gamma, globally maximized."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ._kernels import candidate_groups
from .errors import TooLarge, ZeroDelta
from .evalset import points_of
from .field import FieldElement
from .insdel import _check_distinct, lcs

FULLSCAN_CAP = 2**24
ARGMAX_CAP = 16
MODES = ("candidates", "full_scan")


def intersection_size(S, delta: FieldElement, gamma: FieldElement) -> int:
    """|{(x, y) in S x S : delta*x = y + gamma}|, i.e. |delta*S ∩ (S + gamma)|."""
    _, points = points_of(S)
    image = {(delta * x).raw for x in points}
    return sum((y + gamma).raw in image for y in points)


def ordered_lcs(S, delta: FieldElement, gamma: FieldElement) -> int:
    """LCS of (delta*a_1, ..., delta*a_n) and (a_1 + gamma, ..., a_n + gamma)."""
    if delta.is_zero():
        raise ZeroDelta("ordered match length is defined for nonzero delta only")
    _, points = points_of(S)
    return lcs([(delta * x).raw for x in points], [(y + gamma).raw for y in points])


@dataclass
class IntersectionProfile:
    n: int
    max_size: int
    argmax: list = dc_field(default_factory=list)
    candidates_checked: int = 0
    exhaustive: bool = False

    def __post_init__(self):
        assert 0 <= self.max_size <= self.n

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_size": self.max_size,
            "argmax": [{"delta": d.coeffs, "gamma": g.coeffs} for d, g in self.argmax],
            "candidates_checked": self.candidates_checked,
            "exhaustive": self.exhaustive,
        }


def _sort_key(pair):
    d, g = pair
    return d.to_int(), g.to_int()


def max_intersection(
    S, mode: str = "candidates", cap: int = FULLSCAN_CAP, argmax_cap: int = ARGMAX_CAP
) -> IntersectionProfile:
    """Maximum of |delta*S ∩ (S + gamma)| over all (delta, gamma) != (1, 0).

    ``candidates`` enumerates only the (delta, gamma) fixed by two match
    pairs, which reaches every value >= 2; a value of 1 is always attained
    (send any point of S to any point of S + gamma with delta = 0).
    ``full_scan`` visits all q^2 pairs and serves as the reference.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    field, points = points_of(S)
    _check_distinct(points)
    n = len(points)

    if mode == "full_scan":
        total = field.q**2
        if total > cap:
            raise TooLarge(f"full scan needs q^2 = {total} pairs, above the cap {cap}; raise --cap-fullscan")
        best, winners = -1, []
        elems = list(field.elements())
        for delta in elems:
            for gamma in elems:
                if delta == field.one and gamma.is_zero():
                    continue
                size = intersection_size(points, delta, gamma)
                if size > best:
                    best, winners = size, [(delta, gamma)]
                elif size == best:
                    winners.append((delta, gamma))
        winners.sort(key=_sort_key)
        return IntersectionProfile(n, best, winners[:argmax_cap], total - 1, True)

    groups = candidate_groups(points)
    ops = field.ops
    best, winners = 0, []
    for (d_raw, g_raw), pairs in groups.items():
        # distinct left indices = distinct matches (x -> delta*x - gamma is injective)
        size = len({i for i, _ in pairs})
        if size > best:
            best, winners = size, [(d_raw, g_raw)]
        elif size == best:
            winners.append((d_raw, g_raw))
    argmax = [(FieldElement(field, d), FieldElement(field, g)) for d, g in winners]
    if best < 2 and n >= 1 and field.q >= 2:
        # the value 1 is attained by delta = 0, gamma = -a_1; listing every
        # such pair is pointless, so the canonical one stands in
        best = 1
        argmax = [(field.zero, -points[0])]
    argmax.sort(key=_sort_key)
    return IntersectionProfile(n, best, argmax[:argmax_cap], len(groups), False)
