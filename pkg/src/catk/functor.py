"""Functors, natural transformations, functor enumeration and Cat.

A functor out of a finite category carries two dicts; out of a view
(a free category, say) its maps may be callables instead. Equality of
finite functors is pointwise on both maps.
"""
from __future__ import annotations

import itertools
import os
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import CapExceeded, DuplicateId, IllTypedEdgeImage, NotComposable, SourceTargetMismatch
from .kernel import FinCategory, build_fin_category
from .quiver import FreeCategory, Quiver
from .report import LawReport, label
from .views import as_view

DEFAULT_BUDGET = 10000


def instance_budget(default: int = DEFAULT_BUDGET) -> int:
    value = os.environ.get("CATK_INSTANCE_BUDGET")
    return int(value) if value else default


def _lookup(m, x):
    return m(x) if callable(m) else m[x]


class FunctorData:
    def __init__(self, source, target, obj_map, mor_map, name: str = ""):
        self.source = source
        self.target = target
        self.obj_map = obj_map
        self.mor_map = mor_map
        self.name = name

    def obj(self, x):
        return _lookup(self.obj_map, x)

    def mor(self, f):
        return _lookup(self.mor_map, f)

    @property
    def finite(self) -> bool:
        return (
            isinstance(self.source, FinCategory)
            and isinstance(self.obj_map, Mapping)
            and isinstance(self.mor_map, Mapping)
        )

    def key(self):
        return (
            self.source.name,
            self.target.name,
            tuple(self.obj_map[a] for a in self.source.objects),
            tuple(self.mor_map[f] for f in self.source.morphisms),
        )

    def __eq__(self, other):
        if not isinstance(other, FunctorData):
            return NotImplemented
        if self.finite and other.finite:
            return self.key() == other.key()
        return self is other

    def __hash__(self):
        return hash(self.key()) if self.finite else id(self)

    def __str__(self):
        if self.name:
            return self.name
        if not self.finite:
            return f"<functor {self.source.name} -> {self.target.name}>"
        objs = ",".join(f"{label(a)}:{label(self.obj_map[a])}" for a in self.source.objects)
        mors = ",".join(
            f"{label(f)}:{label(self.mor_map[f])}" for f in self.source.non_identities()
        )
        return f"{self.source.name}->{self.target.name}[{objs}|{mors}]"

    __repr__ = __str__


def make_functor(source, target, obj_map, mor_map, name: str = "") -> FunctorData:
    """Build a functor, checking totality and typing on finite sources."""
    F = FunctorData(source, target, obj_map, mor_map, name)
    if isinstance(source, FinCategory):
        T = as_view(target)
        for a in source.objects:
            try:
                x = F.obj(a)
            except KeyError:
                raise SourceTargetMismatch(f"object {label(a)} has no image", a) from None
            if not T.has_object(x):
                raise SourceTargetMismatch(f"{label(a)} maps to a non-object {label(x)}", a)
        for f in source.morphisms:
            try:
                g = F.mor(f)
            except KeyError:
                if source.is_identity(f):
                    continue
                raise SourceTargetMismatch(f"morphism {label(f)} has no image", f) from None
            _check_typed(F, T, f, g, source.src[f], source.tgt[f])
        if isinstance(obj_map, Mapping) and isinstance(mor_map, Mapping):
            full = dict(mor_map)
            for a in source.objects:
                full.setdefault(source.identities[a], T.identity(F.obj(a)))
            F.mor_map = full
    return F


def _check_typed(F, T, f, g, a, b):
    try:
        ok = T.source(g) == F.obj(a) and T.target(g) == F.obj(b)
    except KeyError:
        ok = False
    if not ok:
        raise SourceTargetMismatch(
            f"{label(f)} : {label(a)} -> {label(b)} maps to {label(g)}, "
            f"which is not {label(F.obj(a))} -> {label(F.obj(b))}",
            f,
        )


def identity_functor(C) -> FunctorData:
    if isinstance(C, FinCategory):
        return FunctorData(C, C, {a: a for a in C.objects}, {f: f for f in C.morphisms})
    return FunctorData(C, C, lambda x: x, lambda f: f)


def check_functor_laws(F: FunctorData, bound=None) -> LawReport:
    """Identity and composition preservation; bounded on view sources."""
    S, T = as_view(F.source), as_view(F.target)
    report = LawReport()
    for a in S.objects(bound):
        img = F.mor(S.identity(a))
        want = T.identity(F.obj(a))
        if not T.equal(img, want):
            report.add(
                "functor-identity",
                [a],
                f"F(id_{label(a)}) = {label(img)}, expected {label(want)}",
            )
    for f, g in S.composable_pairs(bound):
        for m in (f, g):
            _check_typed(F, T, m, F.mor(m), S.source(m), S.target(m))
        lhs = F.mor(S.compose(f, g))
        rhs = T.compose(F.mor(f), F.mor(g))
        if not T.equal(lhs, rhs):
            report.add(
                "functor-composition",
                [f, g],
                f"F({label(f)} ; {label(g)}) = {label(lhs)} but F({label(f)}) ; F({label(g)}) = {label(rhs)}",
            )
    return report


def _same_category(a, b) -> bool:
    if a is b:
        return True
    return isinstance(a, FinCategory) and isinstance(b, FinCategory) and a == b


def compose_functors(F: FunctorData, G: FunctorData) -> FunctorData:
    """``F`` then ``G``."""
    if not _same_category(F.target, G.source):
        raise NotComposable(f"target of {F} is not the source of {G}")
    if F.finite and isinstance(G.obj_map, Mapping) and isinstance(G.mor_map, Mapping):
        C = F.source
        return FunctorData(
            C,
            G.target,
            {a: G.obj_map[F.obj_map[a]] for a in C.objects},
            {f: G.mor_map[F.mor_map[f]] for f in C.morphisms},
        )
    return FunctorData(
        F.source, G.target, lambda x: G.obj(F.obj(x)), lambda f: G.mor(F.mor(f))
    )


def iter_functors(C: FinCategory, D: FinCategory):
    """Every functor ``C -> D``, lexicographic over the object map then the morphism map."""
    free = C.non_identities()
    pos = {f: i for i, f in enumerate(free)}
    for f in C.morphisms:
        pos.setdefault(f, -1)
    # each composite constraint is checked as soon as its last member is assigned
    constraints = defaultdict(list)
    for (f, g), h in C.comp.items():
        last = max(pos[f], pos[g], pos[h])
        if last >= 0:
            constraints[last].append((f, g, h))

    for images in itertools.product(D.objects, repeat=len(C.objects)):
        obj_map = dict(zip(C.objects, images))
        mor_map = {C.identities[a]: D.identities[obj_map[a]] for a in C.objects}
        choices = [D.hom(obj_map[C.src[f]], obj_map[C.tgt[f]]) for f in free]
        if any(not c for c in choices):
            continue

        def extend(k):
            if k == len(free):
                yield FunctorData(C, D, dict(obj_map), dict(mor_map))
                return
            f = free[k]
            for g in choices[k]:
                mor_map[f] = g
                if all(D.comp[mor_map[a], mor_map[b]] == mor_map[c] for a, b, c in constraints[k]):
                    yield from extend(k + 1)
            del mor_map[f]

        yield from extend(0)


def enumerate_functors(C: FinCategory, D: FinCategory) -> list:
    return list(iter_functors(C, D))


def cat_category(cats, cap: int | None = None, name: str = "Cat") -> FinCategory:
    """Tabulate the category of the given finite categories and all functors between them."""
    cats = list(cats)
    cap = instance_budget() if cap is None else cap
    names = [c.name for c in cats]
    for n in names:
        if not n or names.count(n) > 1:
            raise DuplicateId(f"categories need distinct non-empty names, got {n!r}", n)
    by_name = dict(zip(names, cats))
    homs = {}
    total = 0
    for C in cats:
        for D in cats:
            found = []
            for F in iter_functors(C, D):
                total += 1
                if total > cap:
                    raise CapExceeded(f"more than {cap} functors to tabulate")
                found.append(F)
            homs[C.name, D.name] = found

    identities = {n: identity_functor(by_name[n]) for n in names}
    id_set = set(identities.values())
    mors = [(F, a, b) for (a, b), fs in homs.items() for F in fs if F not in id_set]
    index = {(a, b): set(fs) for (a, b), fs in homs.items()}
    comp = []
    for F, a, b in mors:
        for G, b2, c in mors:
            if b2 != b:
                continue
            H = compose_functors(F, G)
            if H not in index[a, c]:
                raise CapExceeded(f"composite of {F} and {G} is not in the tabulated hom-set")
            comp.append((F, G, H))
    cat = build_fin_category(names, mors, comp, identities=identities, name=name)
    return cat


def free_functor_extend(q: Quiver, C, node_map, edge_map, source: FreeCategory | None = None) -> FunctorData:
    """The unique functor out of the path category of ``q`` that agrees with ``edge_map``."""
    T = as_view(C)
    node_map = dict(node_map)
    edge_map = dict(edge_map)
    for n in q.nodes:
        if n not in node_map:
            raise IllTypedEdgeImage(f"node {label(n)} has no image", n)
        if not T.has_object(node_map[n]):
            raise IllTypedEdgeImage(f"node {label(n)} maps to a non-object {label(node_map[n])}", n)
    for e in q.edges:
        if e.name not in edge_map:
            raise IllTypedEdgeImage(f"edge {e.name} has no image", e.name)
        g = edge_map[e.name]
        try:
            typed = T.source(g) == node_map[e.src] and T.target(g) == node_map[e.tgt]
        except (KeyError, AttributeError):
            typed = False
        if not typed:
            raise IllTypedEdgeImage(
                f"edge {e.name} : {label(e.src)} -> {label(e.tgt)} maps to {label(g)}, "
                f"which is not {label(node_map[e.src])} -> {label(node_map[e.tgt])}",
                e.name,
            )

    def on_path(p):
        result = T.identity(node_map[p.anchor])
        for step in p.steps:
            result = T.compose(result, edge_map[step])
        return result

    return FunctorData(source or FreeCategory(q), C, node_map, on_path)


@dataclass
class NatTransData:
    F: FunctorData
    G: FunctorData
    components: Callable | Mapping

    def component(self, a):
        return _lookup(self.components, a)


def make_nat_trans(F: FunctorData, G: FunctorData, components) -> NatTransData:
    if not (_same_category(F.source, G.source) and _same_category(F.target, G.target)):
        raise SourceTargetMismatch("functors are not parallel")
    t = NatTransData(F, G, components)
    S, T = as_view(F.source), as_view(F.target)
    if isinstance(F.source, FinCategory):
        for a in S.objects():
            try:
                c = t.component(a)
            except KeyError:
                raise SourceTargetMismatch(f"no component at {label(a)}", a) from None
            if T.source(c) != F.obj(a) or T.target(c) != G.obj(a):
                raise SourceTargetMismatch(
                    f"component at {label(a)} is {label(c)}, not "
                    f"{label(F.obj(a))} -> {label(G.obj(a))}",
                    a,
                )
    return t


def identity_transformation(F: FunctorData) -> NatTransData:
    T = as_view(F.target)
    return NatTransData(F, F, lambda a: T.identity(F.obj(a)))


def check_naturality(t: NatTransData, bound=None) -> LawReport:
    """Every square ``t_a ; G(f) = F(f) ; t_b`` for ``f : a -> b``."""
    S, T = as_view(t.F.source), as_view(t.F.target)
    report = LawReport()
    for f in S.morphisms(bound):
        a, b = S.source(f), S.target(f)
        lhs = T.compose(t.component(a), t.G.mor(f))
        rhs = T.compose(t.F.mor(f), t.component(b))
        if not T.equal(lhs, rhs):
            report.add(
                "naturality",
                [f],
                f"square at {label(f)} : {label(a)} -> {label(b)} fails: "
                f"t_{label(a)} ; G({label(f)}) = {label(lhs)}, F({label(f)}) ; t_{label(b)} = {label(rhs)}",
            )
    return report
