"""Quivers, their path categories, and finite monoids as one-object categories.

The free category on a quiver needs no quotient: its morphisms are edge
paths and composition is concatenation. It is exposed as a
:class:`~catk.views.CategoryView` because any length-truncated tabulation
would not be closed under composition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import (
    DuplicateEdgeName,
    DuplicateId,
    IncompleteTable,
    NotAssociative,
    NotComposable,
    UnitLawFails,
    UnknownNode,
)
from .kernel import FinCategory, build_fin_category
from .report import label
from .views import CategoryView, as_view, check_view_laws

__all__ = [
    "Edge",
    "Quiver",
    "Path",
    "FiniteMonoid",
    "FreeCategory",
    "CategoryView",
    "as_view",
    "check_view_laws",
    "build_quiver",
    "path_identity",
    "path_compose",
    "hom_paths",
    "free_category",
    "build_finite_monoid",
    "monoid_as_category",
]


@dataclass(frozen=True)
class Edge:
    name: str
    src: Hashable
    tgt: Hashable


@dataclass(frozen=True)
class Quiver:
    nodes: tuple
    edges: tuple

    def edge(self, name) -> Edge:
        for e in self.edges:
            if e.name == name:
                return e
        raise NotComposable(f"unknown edge {name}", name)

    def edge_map(self) -> dict:
        return {e.name: e for e in self.edges}

    def outgoing(self, node) -> list:
        """Edges leaving ``node``, sorted by name."""
        return sorted((e for e in self.edges if e.src == node), key=lambda e: e.name)

    def _require(self, node):
        if node not in self.nodes:
            raise UnknownNode(f"unknown node {label(node)}", node)


@dataclass(frozen=True)
class Path:
    """A path from ``anchor`` to ``end`` following ``steps`` (edge names)."""

    anchor: Hashable
    steps: tuple = ()
    end: Hashable = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.end is None:
            if self.steps:
                raise ValueError("a non-empty path needs its end node")
            object.__setattr__(self, "end", self.anchor)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        if not self.steps:
            return f"@{self.anchor}"
        return ";".join(self.steps)


def build_quiver(nodes: Iterable[Hashable], edges: Iterable[Sequence] = ()) -> Quiver:
    """``edges`` are ``(name, src, tgt)`` triples."""
    nodes = tuple(nodes)
    if len(set(nodes)) != len(nodes):
        dup = next(n for n in nodes if nodes.count(n) > 1)
        raise DuplicateId(f"duplicate node {label(dup)}", dup)
    out = []
    seen = set()
    for name, a, b in edges:
        if name in seen:
            raise DuplicateEdgeName(f"duplicate edge name {name}", name)
        seen.add(name)
        for x in (a, b):
            if x not in nodes:
                raise UnknownNode(f"edge {name} refers to unknown node {label(x)}", name, x)
        out.append(Edge(name, a, b))
    return Quiver(nodes, tuple(out))


def make_path(q: Quiver, steps: Sequence[str], anchor=None) -> Path:
    """Validate a step sequence as a path in ``q``."""
    steps = tuple(steps)
    edges = q.edge_map()
    if not steps:
        if anchor is None:
            raise ValueError("empty path needs an anchor")
        q._require(anchor)
        return Path(anchor)
    for s in steps:
        if s not in edges:
            raise NotComposable(f"unknown edge {s}", s)
    start = edges[steps[0]].src
    if anchor is not None and anchor != start:
        raise NotComposable(f"path anchored at {label(anchor)} starts at {label(start)}", anchor)
    for e1, e2 in zip(steps, steps[1:]):
        if edges[e1].tgt != edges[e2].src:
            raise NotComposable(f"edge {e1} does not end where {e2} starts", e1, e2)
    return Path(start, steps, edges[steps[-1]].tgt)


def path_identity(q: Quiver, node) -> Path:
    q._require(node)
    return Path(node)


def path_compose(p: Path, r: Path) -> Path:
    if p.end != r.anchor:
        raise NotComposable(
            f"path {p} ends at {label(p.end)} but {r} starts at {label(r.anchor)}", str(p), str(r)
        )
    return Path(p.anchor, p.steps + r.steps, r.end)


def _paths_from(q: Quiver, a, max_len: int):
    """All paths out of ``a`` up to ``max_len`` steps, length then lexicographic."""
    layer = [Path(a)]
    yield from layer
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for e in q.outgoing(p.end):
                nxt.append(Path(p.anchor, p.steps + (e.name,), e.tgt))
        nxt.sort(key=lambda p: p.steps)
        yield from nxt
        layer = nxt


def hom_paths(q: Quiver, a, b, max_len: int) -> list:
    q._require(a)
    q._require(b)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    return [p for p in _paths_from(q, a, max_len) if p.end == b]


class FreeCategory(CategoryView):
    """Path category of a quiver. ``bound`` is a maximum path length."""

    default_bound = 4

    def __init__(self, q: Quiver, name: str = "free"):
        self.quiver = q
        self.name = name

    def has_object(self, x):
        return x in self.quiver.nodes

    def identity(self, x):
        return path_identity(self.quiver, x)

    def compose(self, f, g):
        return path_compose(f, g)

    def source(self, f):
        return f.anchor

    def target(self, f):
        return f.end

    def objects(self, bound=None):
        return list(self.quiver.nodes)

    def hom(self, a, b, bound=None):
        return hom_paths(self.quiver, a, b, self.default_bound if bound is None else bound)

    def morphisms(self, bound=None):
        bound = self.default_bound if bound is None else bound
        return [p for a in self.quiver.nodes for p in _paths_from(self.quiver, a, bound)]


def free_category(q: Quiver) -> FreeCategory:
    return FreeCategory(q)


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple
    unit: Hashable
    mult: dict

    def __call__(self, x, y):
        return self.mult[x, y]


def build_finite_monoid(elements: Iterable[Hashable], unit, mult) -> FiniteMonoid:
    """``mult`` is a dict on pairs or a callable; it is tabulated and checked."""
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise DuplicateId("duplicate monoid element")
    if unit not in elements:
        raise UnitLawFails(f"unit {label(unit)} is not an element", unit)
    table = {}
    for x, y in itertools.product(elements, repeat=2):
        try:
            z = mult(x, y) if callable(mult) else mult[x, y]
        except KeyError:
            raise IncompleteTable(f"no product for ({label(x)}, {label(y)})", x, y) from None
        if z not in elements:
            raise IncompleteTable(f"{label(x)}*{label(y)} = {label(z)} is not an element", x, y)
        table[x, y] = z
    for x in elements:
        if table[unit, x] != x or table[x, unit] != x:
            raise UnitLawFails(f"unit law fails at {label(x)}", x)
    for x, y, z in itertools.product(elements, repeat=3):
        if table[table[x, y], z] != table[x, table[y, z]]:
            raise NotAssociative(
                f"({label(x)}*{label(y)})*{label(z)} != {label(x)}*({label(y)}*{label(z)})", x, y, z
            )
    return FiniteMonoid(elements, unit, table)


def monoid_as_category(m: FiniteMonoid, obj="pt", name: str = "") -> FinCategory:
    """One object; morphisms are the elements; ``f ; g`` is ``f*g``."""
    mors = [(x, obj, obj) for x in m.elements if x != m.unit]
    comp = [(x, y, m.mult[x, y]) for x in m.elements for y in m.elements
            if x != m.unit and y != m.unit]
    return build_fin_category([obj], mors, comp, identities={obj: m.unit}, name=name)
