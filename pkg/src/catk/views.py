"""A uniform handle on categories that may be infinite.

Finite categories, path categories and the category of finite sets all
answer the same questions: identities, composition, equality of parallel
morphisms and a bounded listing of hom-sets. Law checks that must work
for all of them go through this interface.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from collections import defaultdict

from .report import LawReport, label


class CategoryView(ABC):
    name = ""
    default_bound = None

    @abstractmethod
    def has_object(self, x) -> bool: ...

    @abstractmethod
    def identity(self, x): ...

    @abstractmethod
    def compose(self, f, g):
        """``f`` then ``g``."""

    @abstractmethod
    def source(self, f): ...

    @abstractmethod
    def target(self, f): ...

    @abstractmethod
    def objects(self, bound=None) -> list:
        """Finite list of objects swept by bounded checks."""

    @abstractmethod
    def hom(self, a, b, bound=None) -> list: ...

    def equal(self, f, g) -> bool:
        return f == g

    def morphisms(self, bound=None) -> list:
        obs = self.objects(bound)
        return [f for a in obs for b in obs for f in self.hom(a, b, bound)]

    def composable_pairs(self, bound=None):
        outgoing = defaultdict(list)
        mors = self.morphisms(bound)
        for f in mors:
            outgoing[self.source(f)].append(f)
        for f in mors:
            for g in outgoing.get(self.target(f), ()):
                yield f, g


def as_view(cat) -> CategoryView:
    if isinstance(cat, CategoryView):
        return cat
    return cat.as_view()


def check_view_laws(view: CategoryView, bound=None) -> LawReport:
    """Identity and associativity laws over every morphism within ``bound``."""
    report = LawReport()
    mors = view.morphisms(bound)
    outgoing = defaultdict(list)
    for f in mors:
        outgoing[view.source(f)].append(f)
    for f in mors:
        a, b = view.source(f), view.target(f)
        if not view.equal(view.compose(view.identity(a), f), f):
            report.add("left-identity", [f], f"id_{label(a)} ; {label(f)} != {label(f)}")
        if not view.equal(view.compose(f, view.identity(b)), f):
            report.add("right-identity", [f], f"{label(f)} ; id_{label(b)} != {label(f)}")
    for f in mors:
        for g in outgoing.get(view.target(f), ()):
            fg = view.compose(f, g)
            for h in outgoing.get(view.target(g), ()):
                if not view.equal(view.compose(f, view.compose(g, h)), view.compose(fg, h)):
                    report.add(
                        "associativity",
                        [f, g, h],
                        f"{label(f)} ; ({label(g)} ; {label(h)}) != ({label(f)} ; {label(g)}) ; {label(h)}",
                    )
    return report


class ProductView(CategoryView):
    """Componentwise product of two views; morphisms are pairs."""

    def __init__(self, left, right):
        self.left, self.right = as_view(left), as_view(right)
        self.name = f"{self.left.name}x{self.right.name}"

    def has_object(self, x):
        return (
            isinstance(x, tuple) and len(x) == 2
            and self.left.has_object(x[0]) and self.right.has_object(x[1])
        )

    def identity(self, x):
        return (self.left.identity(x[0]), self.right.identity(x[1]))

    def compose(self, f, g):
        return (self.left.compose(f[0], g[0]), self.right.compose(f[1], g[1]))

    def source(self, f):
        return (self.left.source(f[0]), self.right.source(f[1]))

    def target(self, f):
        return (self.left.target(f[0]), self.right.target(f[1]))

    def equal(self, f, g):
        return self.left.equal(f[0], g[0]) and self.right.equal(f[1], g[1])

    def objects(self, bound=None):
        return [(a, b) for a in self.left.objects(bound) for b in self.right.objects(bound)]

    def hom(self, a, b, bound=None):
        return [
            (f, g)
            for f in self.left.hom(a[0], b[0], bound)
            for g in self.right.hom(a[1], b[1], bound)
        ]
