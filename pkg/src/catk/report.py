"""Law reports: the runtime stand-in for proof terms.

A report collects falsified instances of an equation. An empty report means
every checked instance held.
"""
from __future__ import annotations

from dataclasses import dataclass, field

LAWS = (
    "left-identity",
    "right-identity",
    "associativity",
    "functor-identity",
    "functor-composition",
    "naturality",
    "bifunctor",
    "pentagon",
    "triangle",
    "hexagon",
    "symmetry",
    # universal properties and strictness are reported through the same channel
    "terminal",
    "initial",
    "product",
    "coproduct",
    "strictness",
    "interchange",
    "tensor-unit",
    "tensor-associativity",
)


def label(x) -> str:
    """Render an identifier (string, tuple, functor, ...) for reports."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(label(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Violation:
    law: str
    witnesses: tuple
    detail: str

    def __post_init__(self):
        if self.law not in LAWS:
            raise ValueError(f"unknown law name {self.law!r}")

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "witnesses": [label(w) for w in self.witnesses],
            "detail": self.detail,
        }


@dataclass
class LawReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, law: str, witnesses, detail: str) -> None:
        self.violations.append(Violation(law, tuple(witnesses), detail))

    def extend(self, other: "LawReport") -> "LawReport":
        self.violations.extend(other.violations)
        return self

    def laws(self) -> set:
        return {v.law for v in self.violations}

    def relabel(self, law: str) -> "LawReport":
        return LawReport([Violation(law, v.witnesses, v.detail) for v in self.violations])

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def to_json(self) -> list:
        return [v.to_json() for v in self.violations]

    def __str__(self):
        if self.ok:
            return "no violations"
        return "\n".join(f"{v.law}: {v.detail}" for v in self.violations)
