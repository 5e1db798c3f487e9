"""Bound ledgers and their canonical serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction


def fmt_rational(v) -> str:
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return str(Fraction(v))


@dataclass(frozen=True)
class BoundReport:
    """Every constant computed on the way to one enumeration bound.

    ``constants`` keeps insertion order; ``subreports`` holds nested ledgers
    (Lemma 2 invocations) under a label. ``prepared`` carries the recurrences
    the bound actually applies to (after hypothesis-driven shifting) and is
    not serialized.
    """

    theorem: str
    inputs: tuple[tuple[str, object], ...]
    constants: tuple[tuple[str, Fraction], ...]
    case_trace: tuple[str, ...]
    final: Fraction
    subreports: tuple[tuple[str, "BoundReport"], ...] = ()
    offsets: tuple[int, int] = (0, 0)
    prepared: object = field(default=None, compare=False, repr=False)

    @property
    def enumeration_limit(self) -> int:
        return math.floor(self.final)

    def constant(self, name: str) -> Fraction:
        for key, value in self.constants:
            if key == name:
                return value
        raise KeyError(name)

    def subreport(self, label: str) -> "BoundReport":
        for key, value in self.subreports:
            if key == label:
                return value
        raise KeyError(label)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "inputs": {k: (v if isinstance(v, (int, str, list)) else fmt_rational(v))
                       for k, v in self.inputs},
            "constants": {k: fmt_rational(v) for k, v in self.constants},
            "case_trace": list(self.case_trace),
            "final": fmt_rational(self.final),
            "enumeration_limit": self.enumeration_limit,
            "offsets": list(self.offsets),
            "subreports": [{"label": k, "report": v.to_dict()} for k, v in self.subreports],
        }


class Ledger:
    """Mutable builder for a BoundReport."""

    def __init__(self, theorem: str):
        self.theorem = theorem
        self.inputs: list[tuple[str, object]] = []
        self.constants: list[tuple[str, Fraction]] = []
        self.trace: list[str] = []
        self.subreports: list[tuple[str, BoundReport]] = []

    def note(self, name: str, value) -> None:
        self.inputs.append((name, value))

    def put(self, name: str, value) -> Fraction:
        value = Fraction(value)
        self.constants.append((name, value))
        return value

    def case(self, label: str) -> None:
        self.trace.append(label)

    def sub(self, label: str, report: BoundReport) -> Fraction:
        self.subreports.append((label, report))
        return report.final

    def finish(self, final, offsets=(0, 0), prepared=None) -> BoundReport:
        return BoundReport(
            theorem=self.theorem,
            inputs=tuple(self.inputs),
            constants=tuple(self.constants),
            case_trace=tuple(self.trace),
            final=Fraction(final),
            subreports=tuple(self.subreports),
            offsets=tuple(offsets),
            prepared=prepared,
        )


def dumps(obj: dict) -> str:
    """Canonical report text: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
