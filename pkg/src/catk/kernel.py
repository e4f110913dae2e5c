"""Finite categories with enumerated hom-sets and their law checker.

Composition is diagrammatic throughout: ``compose(cat, f, g)`` is *f then g*
and is only defined when ``tgt f == src g``. Morphisms are compared by
identifier; hom-sets are listed explicitly, never quotiented.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from typing import Hashable, Iterable, Sequence

from .errors import (
    DuplicateId,
    EndpointMismatch,
    IdentityConflict,
    IllTypedComposite,
    MissingComposite,
    NotComposable,
    UnknownMorphism,
    UnknownObject,
)
from .report import LawReport, label
from .views import CategoryView


@dataclass(frozen=True)
class FinCategory:
    """A fully tabulated finite category.

    ``morphisms`` lists every morphism (identities included) in a fixed
    order; ``homs`` indexes them by (source, target). ``comp`` maps every
    composable pair to its composite.
    """

    objects: tuple
    morphisms: tuple
    src: dict
    tgt: dict
    identities: dict
    comp: dict
    name: str = ""
    homs: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        homs = {(a, b): [] for a in self.objects for b in self.objects}
        for f in self.morphisms:
            homs[self.src[f], self.tgt[f]].append(f)
        object.__setattr__(self, "homs", {k: tuple(v) for k, v in homs.items()})

    def hom(self, a, b) -> tuple:
        try:
            return self.homs[a, b]
        except KeyError:
            raise UnknownObject(f"unknown object in hom({label(a)}, {label(b)})", a, b) from None

    def identity(self, a):
        try:
            return self.identities[a]
        except KeyError:
            raise UnknownObject(f"unknown object {label(a)}", a) from None

    def is_identity(self, f) -> bool:
        return self.identities.get(self.src[f]) == f

    def compose(self, f, g):
        for m in (f, g):
            if m not in self.src:
                raise UnknownMorphism(f"unknown morphism {label(m)}", m)
        if self.tgt[f] != self.src[g]:
            raise NotComposable(
                f"cannot compose {label(f)} : {label(self.src[f])} -> {label(self.tgt[f])} "
                f"with {label(g)} : {label(self.src[g])} -> {label(self.tgt[g])}",
                f,
                g,
            )
        return self.comp[f, g]

    def outgoing(self) -> dict:
        out = defaultdict(list)
        for f in self.morphisms:
            out[self.src[f]].append(f)
        return out

    def composable_pairs(self):
        out = self.outgoing()
        for f in self.morphisms:
            for g in out.get(self.tgt[f], ()):
                yield f, g

    def non_identities(self) -> tuple:
        return tuple(f for f in self.morphisms if not self.is_identity(f))

    def mutate(self, f, g, h) -> "FinCategory":
        """Copy with ``comp(f, g)`` overwritten by ``h``.

        Only typing is enforced, so the result may break the laws; this is
        what law-checker soundness tests feed on.
        """
        if (f, g) not in self.comp:
            raise NotComposable(f"{label(f)}, {label(g)} not composable", f, g)
        if h not in self.hom(self.src[f], self.tgt[g]):
            raise IllTypedComposite(f"{label(h)} is not in the hom-set of {label(f)} ; {label(g)}", h)
        comp = dict(self.comp)
        comp[f, g] = h
        return replace(self, comp=comp)

    def as_view(self) -> "FinView":
        return FinView(self)

    def __str__(self):
        return self.name or f"<category with {len(self.objects)} objects>"


class FinView(CategoryView):
    def __init__(self, cat: FinCategory):
        self.cat = cat
        self.name = cat.name

    def has_object(self, x):
        return x in self.cat.identities

    def identity(self, x):
        return self.cat.identity(x)

    def compose(self, f, g):
        return self.cat.compose(f, g)

    def source(self, f):
        return self.cat.src[f]

    def target(self, f):
        return self.cat.tgt[f]

    def objects(self, bound=None):
        return list(self.cat.objects)

    def hom(self, a, b, bound=None):
        return list(self.cat.hom(a, b))

    def morphisms(self, bound=None):
        return list(self.cat.morphisms)


def _check_unique(ids, what):
    seen = set()
    for x in ids:
        if x in seen:
            raise DuplicateId(f"duplicate {what} {label(x)}", x)
        seen.add(x)


def build_fin_category(
    objects: Iterable[Hashable],
    morphisms: Iterable[Sequence] = (),
    comp: Iterable[Sequence] = (),
    identities: dict | None = None,
    name: str = "",
) -> FinCategory:
    """Validate a presentation and return the category it tabulates.

    ``morphisms`` are ``(name, src, tgt)`` triples for the non-identity
    morphisms. ``comp`` entries ``(f, g, h)`` say ``f ; g = h``. Identities
    default to ``id_<object>`` and every composite involving an identity is
    filled in; a supplied entry that disagrees raises ``IdentityConflict``.
    """
    objects = tuple(objects)
    _check_unique(objects, "object")
    if identities is None:
        identities = {a: f"id_{a}" for a in objects}
    else:
        identities = dict(identities)
        for a in identities:
            if a not in objects:
                raise UnknownObject(f"identity given for unknown object {label(a)}", a)
        for a in objects:
            if a not in identities:
                raise UnknownObject(f"no identity for object {label(a)}", a)

    src, tgt = {}, {}
    order = []
    for a in objects:
        i = identities[a]
        if i in src:
            raise DuplicateId(f"duplicate morphism {label(i)}", i)
        src[i] = tgt[i] = a
        order.append(i)
    for m in morphisms:
        f, a, b = m
        if f in src:
            raise DuplicateId(f"duplicate morphism {label(f)}", f)
        for x in (a, b):
            if x not in identities:
                raise UnknownObject(f"morphism {label(f)} refers to unknown object {label(x)}", f, x)
        src[f], tgt[f] = a, b
        order.append(f)
    id_set = set(identities.values())

    table = {}
    for f in order:
        for g in order:
            if tgt[f] != src[g]:
                continue
            if f in id_set:
                table[f, g] = g
            elif g in id_set:
                table[f, g] = f

    supplied = set()
    for entry in comp:
        f, g, h = entry
        for m in (f, g, h):
            if m not in src:
                raise UnknownMorphism(f"composite entry refers to unknown morphism {label(m)}", m)
        if tgt[f] != src[g]:
            raise NotComposable(f"{label(f)} ; {label(g)} is not composable", f, g)
        if (f, g) in supplied:
            raise DuplicateId(f"composite {label(f)} ; {label(g)} given twice", f, g)
        supplied.add((f, g))
        if src[h] != src[f] or tgt[h] != tgt[g]:
            raise IllTypedComposite(
                f"{label(f)} ; {label(g)} = {label(h)} but {label(h)} is not "
                f"{label(src[f])} -> {label(tgt[g])}",
                f,
                g,
                h,
            )
        if (f, g) in table and table[f, g] != h:
            raise IdentityConflict(
                f"{label(f)} ; {label(g)} is forced to be {label(table[f, g])}, got {label(h)}",
                f,
                g,
                h,
            )
        table[f, g] = h

    for f in order:
        for g in order:
            if tgt[f] == src[g] and (f, g) not in table:
                raise MissingComposite(f"no composite given for {label(f)} ; {label(g)}", f, g)

    return FinCategory(objects, tuple(order), src, tgt, identities, table, name)


def compose(cat: FinCategory, f, g):
    return cat.compose(f, g)


def check_category_laws(cat: FinCategory) -> LawReport:
    """Exhaustively check both identity laws and associativity."""
    report = LawReport()
    for f in cat.morphisms:
        a, b = cat.src[f], cat.tgt[f]
        left = cat.comp[cat.identities[a], f]
        if left != f:
            report.add("left-identity", [f], f"{label(cat.identities[a])} ; {label(f)} = {label(left)}, expected {label(f)}")
        right = cat.comp[f, cat.identities[b]]
        if right != f:
            report.add("right-identity", [f], f"{label(f)} ; {label(cat.identities[b])} = {label(right)}, expected {label(f)}")
    out = cat.outgoing()
    for f in cat.morphisms:
        for g in out[cat.tgt[f]]:
            fg = cat.comp[f, g]
            for h in out[cat.tgt[g]]:
                lhs = cat.comp[f, cat.comp[g, h]]
                rhs = cat.comp[fg, h]
                if lhs != rhs:
                    report.add(
                        "associativity",
                        [f, g, h],
                        f"{label(f)} ; ({label(g)} ; {label(h)}) = {label(lhs)} but "
                        f"({label(f)} ; {label(g)}) ; {label(h)} = {label(rhs)}",
                    )
    return report


def opposite_category(cat: FinCategory) -> FinCategory:
    comp = {(g, f): h for (f, g), h in cat.comp.items()}
    name = cat.name[:-3] if cat.name.endswith("^op") else (cat.name + "^op" if cat.name else "")
    return FinCategory(
        cat.objects, cat.morphisms, dict(cat.tgt), dict(cat.src), dict(cat.identities), comp, name
    )


@dataclass(frozen=True)
class MorPath:
    """A composable sequence of morphisms; empty paths need an anchor."""

    steps: tuple = ()
    anchor: Hashable = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps and self.anchor is None:
            raise ValueError("empty path needs an anchor object")

    def endpoints(self, cat: FinCategory):
        for f in self.steps:
            if f not in cat.src:
                raise UnknownMorphism(f"unknown morphism {label(f)}", f)
        if not self.steps:
            if self.anchor not in cat.identities:
                raise UnknownObject(f"unknown object {label(self.anchor)}", self.anchor)
            return self.anchor, self.anchor
        start = cat.src[self.steps[0]]
        if self.anchor is not None and self.anchor != start:
            raise EndpointMismatch(
                f"path anchored at {label(self.anchor)} starts at {label(start)}", self.anchor
            )
        return start, cat.tgt[self.steps[-1]]

    def fold(self, cat: FinCategory):
        a, _ = self.endpoints(cat)
        result = cat.identity(a)
        for f in self.steps:
            result = cat.compose(result, f)
        return result


def _as_path(p) -> MorPath:
    return p if isinstance(p, MorPath) else MorPath(tuple(p))


def commutes(cat: FinCategory, p1, p2) -> bool:
    """True iff both paths fold to the same morphism."""
    p1, p2 = _as_path(p1), _as_path(p2)
    e1, e2 = p1.endpoints(cat), p2.endpoints(cat)
    if e1 != e2:
        raise EndpointMismatch(
            f"paths run {label(e1[0])} -> {label(e1[1])} and {label(e2[0])} -> {label(e2[1])}"
        )
    return p1.fold(cat) == p2.fold(cat)
