"""Evaluation sets and difference sets, plus their JSON forms."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

from .errors import DuplicateEvaluationPoints, ParseError
from .field import Field, FieldElement

STRICT = "strict"
RESEARCH = "research"
MODES = (STRICT, RESEARCH)


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    return mode


@dataclass(frozen=True)
class EvaluationSet:
    """Ordered distinct points alpha_1..alpha_n defining a 2-dim RS code."""

    field: Field
    elements: tuple[FieldElement, ...]
    provenance: dict = dc_field(default_factory=lambda: {"construction": "manual"})
    guarantee_status: str = RESEARCH

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("an evaluation set needs at least one point")
        seen: dict = {}
        for idx, el in enumerate(self.elements):
            if el.field != self.field:
                raise ValueError(f"point {idx} lives in {el.field!r}, not {self.field!r}")
            if el.raw in seen:
                raise DuplicateEvaluationPoints(
                    f"duplicate evaluation point {el.coeffs} at positions {seen[el.raw]} and {idx}"
                )
            seen[el.raw] = idx
        check_mode(self.guarantee_status)

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @classmethod
    def manual(cls, field: Field, points: Sequence) -> "EvaluationSet":
        return cls(field, tuple(field(pt) for pt in points))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "elements": [el.coeffs for el in self.elements],
            "provenance": self.provenance,
            "guarantee_status": self.guarantee_status,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EvaluationSet":
        try:
            fld = Field.from_json(data["field"])
            raw_points = data["elements"]
            provenance = data.get("provenance") or {"construction": "manual"}
            status = data.get("guarantee_status", RESEARCH)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed evaluation set: {exc}") from exc
        points = []
        for idx, coeffs in enumerate(raw_points):
            if not isinstance(coeffs, list) or len(coeffs) != fld.s:
                raise ParseError(f"point {idx} must be a list of {fld.s} coefficients")
            points.append(fld.element(coeffs))
        try:
            return cls(fld, tuple(points), provenance, status)
        except DuplicateEvaluationPoints as exc:
            raise ParseError(str(exc)) from exc
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def points_of(S) -> tuple[Field, tuple[FieldElement, ...]]:
    """Accept an EvaluationSet or a plain sequence of field elements."""
    if isinstance(S, EvaluationSet):
        return S.field, S.elements
    pts = tuple(S)
    if not pts:
        raise ValueError("empty point list")
    return pts[0].field, pts


@dataclass(frozen=True)
class DifferenceSetT:
    """A subset T of Z_f with its certified maximum difference multiplicity."""

    f: int
    elements: tuple[int, ...]
    max_diff_multiplicity: int
    provenance: dict = dc_field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        out = {
            "f": self.f,
            "elements": list(self.elements),
            "max_diff_multiplicity": self.max_diff_multiplicity,
        }
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DifferenceSetT":
        try:
            return cls(
                int(data["f"]),
                tuple(int(a) for a in data["elements"]),
                int(data["max_diff_multiplicity"]),
                data.get("provenance") or {},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed difference set: {exc}") from exc
