"""Terminal objects and binary products by exhaustive cone enumeration.

Initial objects and coproducts are never computed directly: they are the
terminal objects and products of the opposite category, with witnesses
reoriented on the way back.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .errors import IllTypedWitness, UnknownObject
from .kernel import FinCategory, opposite_category
from .report import LawReport, label
from .views import as_view


@dataclass(frozen=True)
class TerminalWitness:
    object: Hashable


@dataclass(frozen=True)
class InitialWitness:
    object: Hashable


@dataclass(frozen=True)
class ProductWitness:
    left: Hashable
    right: Hashable
    apex: Hashable
    proj_l: Hashable
    proj_r: Hashable


@dataclass(frozen=True)
class CoproductWitness:
    left: Hashable
    right: Hashable
    apex: Hashable
    inj_l: Hashable
    inj_r: Hashable


def _require(cat, *objs):
    V = as_view(cat)
    for x in objs:
        if not V.has_object(x):
            raise UnknownObject(f"unknown object {label(x)}", x)


def check_terminal(cat, t, law: str = "terminal", bound=None) -> LawReport:
    """Every hom-set into ``t`` must be a singleton (objects within ``bound`` on views)."""
    _require(cat, t)
    V = as_view(cat)
    report = LawReport()
    for a in V.objects(bound):
        n = len(V.hom(a, t, bound))
        if n != 1:
            report.add(
                law, [a, t], f"{n} morphisms {label(a)} -> {label(t)}, need exactly 1"
            )
    return report


def find_terminals(cat: FinCategory) -> list:
    return [TerminalWitness(t) for t in cat.objects if check_terminal(cat, t).ok]


def check_initial(cat: FinCategory, i) -> LawReport:
    return check_terminal(opposite_category(cat), i, law="initial")


def find_initials(cat: FinCategory) -> list:
    return [InitialWitness(w.object) for w in find_terminals(opposite_category(cat))]


def mediators(cat, w: ProductWitness, f, g, bound=None) -> list:
    """All ``m`` with ``m ; proj_l = f`` and ``m ; proj_r = g``."""
    V = as_view(cat)
    c = V.source(f)
    return [
        m
        for m in V.hom(c, w.apex, bound)
        if V.equal(V.compose(m, w.proj_l), f) and V.equal(V.compose(m, w.proj_r), g)
    ]


def _check_witness_typing(cat, w):
    _require(cat, w.left, w.right, w.apex)
    V = as_view(cat)
    for name, leg, end in (("proj_l", w.proj_l, w.left), ("proj_r", w.proj_r, w.right)):
        try:
            typed = V.source(leg) == w.apex and V.target(leg) == end
        except (KeyError, AttributeError):
            typed = False
        if not typed:
            raise IllTypedWitness(
                f"{name} {label(leg)} is not a morphism {label(w.apex)} -> {label(end)}", leg
            )


def check_product(cat, w: ProductWitness, law: str = "product", bound=None) -> LawReport:
    """Count mediating morphisms for every cone; report counts other than one.

    On a view the cone objects range over ``V.objects(bound)``.
    """
    _check_witness_typing(cat, w)
    V = as_view(cat)
    report = LawReport()
    for c in V.objects(bound):
        for f in V.hom(c, w.left, bound):
            for g in V.hom(c, w.right, bound):
                ms = mediators(cat, w, f, g, bound)
                if not ms:
                    report.add(
                        law,
                        [c, f, g],
                        f"no mediator from {label(c)} for cone ({label(f)}, {label(g)})",
                    )
                elif len(ms) > 1:
                    report.add(
                        law,
                        [c, f, g, *ms],
                        f"{len(ms)} mediators from {label(c)} for cone ({label(f)}, {label(g)}): "
                        + ", ".join(label(m) for m in ms),
                    )
    return report


def find_products(cat: FinCategory, a, b) -> list:
    _require(cat, a, b)
    found = []
    for apex in cat.objects:
        for p in cat.hom(apex, a):
            for q in cat.hom(apex, b):
                w = ProductWitness(a, b, apex, p, q)
                if check_product(cat, w).ok:
                    found.append(w)
    return found


def _to_product(w: CoproductWitness) -> ProductWitness:
    return ProductWitness(w.left, w.right, w.apex, w.inj_l, w.inj_r)


def check_coproduct(cat: FinCategory, w: CoproductWitness) -> LawReport:
    op = opposite_category(cat)
    _require(op, w.left, w.right, w.apex)
    for name, leg, end in (("inj_l", w.inj_l, w.left), ("inj_r", w.inj_r, w.right)):
        if leg not in cat.hom(end, w.apex):
            raise IllTypedWitness(
                f"{name} {label(leg)} is not a morphism {label(end)} -> {label(w.apex)}", leg
            )
    return check_product(op, _to_product(w), law="coproduct")


def find_coproducts(cat: FinCategory, a, b) -> list:
    return [
        CoproductWitness(w.left, w.right, w.apex, w.proj_l, w.proj_r)
        for w in find_products(opposite_category(cat), a, b)
    ]


