"""Finite sets and tabulated functions: the executable base category.

Functions are stored as tables, so two functions are equal exactly when
they agree pointwise. Every law check in this module is a table
comparison.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded, ComposeDomainMismatch, IllTypedEdgeImage, NotAPath, NotComposable, UnknownNode
from .functor import free_functor_extend, instance_budget
from .monoidal import MonoidalStructure, monoidal_from_products
from .quiver import Path, Quiver, make_path
from .universal import ProductWitness
from .views import CategoryView


@dataclass(frozen=True, order=True)
class FinSetObj:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("set size must be non-negative")

    def __str__(self):
        return str(self.size)


@dataclass(frozen=True)
class FinFunction:
    dom: FinSetObj
    cod: FinSetObj
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise ValueError(f"table has {len(self.table)} entries for a domain of size {self.dom.size}")
        for x in self.table:
            if not 0 <= x < self.cod.size:
                raise ValueError(f"entry {x} outside codomain of size {self.cod.size}")

    def __call__(self, i):
        return self.table[i]

    def __str__(self):
        return "[" + ",".join(map(str, self.table)) + "]"


def _trusted(dom, cod, table) -> FinFunction:
    # skips range validation; callers guarantee a well-typed table
    f = object.__new__(FinFunction)
    object.__setattr__(f, "dom", dom)
    object.__setattr__(f, "cod", cod)
    object.__setattr__(f, "table", table)
    return f


def _obj(x) -> FinSetObj:
    return x if isinstance(x, FinSetObj) else FinSetObj(int(x))


def fin_function(table, cod) -> FinFunction:
    table = tuple(table)
    return FinFunction(FinSetObj(len(table)), _obj(cod), table)


def identity_function(n) -> FinFunction:
    n = _obj(n)
    return _trusted(n, n, tuple(range(n.size)))


def compose_functions(f: FinFunction, g: FinFunction) -> FinFunction:
    """``f`` then ``g``."""
    if f.cod != g.dom:
        raise ComposeDomainMismatch(
            f"cannot compose {f} : {f.dom} -> {f.cod} with {g} : {g.dom} -> {g.cod}"
        )
    gt = g.table
    return _trusted(f.dom, g.cod, tuple([gt[x] for x in f.table]))


class FinSetCategory(CategoryView):
    """All finite sets; ``bound`` caps the sizes swept by bounded checks."""

    name = "FinSet"
    default_bound = 3

    def __init__(self, budget: int | None = None):
        self.budget = budget

    def has_object(self, x):
        return isinstance(x, FinSetObj)

    def identity(self, x):
        return identity_function(x)

    def compose(self, f, g):
        return compose_functions(f, g)

    def source(self, f):
        return f.dom

    def target(self, f):
        return f.cod

    def objects(self, bound=None):
        bound = self.default_bound if bound is None else bound
        return [FinSetObj(n) for n in range(bound + 1)]

    def hom(self, a, b, bound=None):
        a, b = _obj(a), _obj(b)
        budget = instance_budget() if self.budget is None else self.budget
        if b.size ** a.size > budget:
            raise CapExceeded(f"hom({a}, {b}) has {b.size ** a.size} functions, budget {budget}")
        return [_trusted(a, b, t) for t in itertools.product(range(b.size), repeat=a.size)]


def finset_category(budget: int | None = None) -> FinSetCategory:
    return FinSetCategory(budget)


def pair_witness(a, b) -> ProductWitness:
    """Cartesian product with ``(i, j)`` encoded row-major as ``i*|b| + j``."""
    a, b = _obj(a), _obj(b)
    ab = FinSetObj(a.size * b.size)
    return ProductWitness(
        a,
        b,
        ab,
        FinFunction(ab, a, tuple(k // b.size for k in range(ab.size))),
        FinFunction(ab, b, tuple(k % b.size for k in range(ab.size))),
    )


def pair_functions(w: ProductWitness, f: FinFunction, g: FinFunction) -> FinFunction:
    """The mediating map ``x -> (f x, g x)`` into the encoded product."""
    n = w.right.size
    return _trusted(f.dom, w.apex, tuple([i * n + j for i, j in zip(f.table, g.table)]))


def finset_products_monoidal(size_cap: int, budget: int | None = None) -> MonoidalStructure:
    """Cartesian monoidal structure checked on all sets of size at most ``size_cap``."""
    if size_cap < 1:
        raise ValueError("size_cap must be at least 1")
    budget = instance_budget() if budget is None else budget
    sizes = range(size_cap + 1)
    tabulated = sum(n ** m for m in sizes for n in sizes)
    if tabulated > budget:
        raise CapExceeded(f"{tabulated} functions to tabulate, budget {budget}")
    base = FinSetCategory(budget)
    return monoidal_from_products(
        base,
        chooser=pair_witness,
        terminal=FinSetObj(1),
        mediate=pair_functions,
        bound=size_cap,
    )


def evaluate_free_functor(q: Quiver, node_sizes, edge_tables, p) -> FinFunction:
    """Run a path of ``q`` as the composite of its edges' functions.

    ``p`` is a :class:`Path` or a sequence of edge names; an empty path must
    be given as a :class:`Path` so that it carries its node.
    """
    sizes = {}
    for n in q.nodes:
        if n not in node_sizes:
            raise IllTypedEdgeImage(f"node {n} has no size", n)
        sizes[n] = _obj(node_sizes[n])
    funcs = {}
    for e in q.edges:
        if e.name not in edge_tables:
            raise IllTypedEdgeImage(f"edge {e.name} has no table", e.name)
        t = edge_tables[e.name]
        table = t.table if isinstance(t, FinFunction) else tuple(t)
        try:
            funcs[e.name] = FinFunction(sizes[e.src], sizes[e.tgt], table)
        except ValueError as err:
            raise IllTypedEdgeImage(f"edge {e.name}: {err}", e.name) from None
    if not isinstance(p, Path):
        steps = tuple(p)
        if not steps:
            raise NotAPath("an empty path needs its node")
        p = steps
    try:
        path = make_path(q, p.steps, p.anchor) if isinstance(p, Path) else make_path(q, p)
    except (NotComposable, UnknownNode) as err:
        raise NotAPath(str(err), *err.ids) from None
    F = free_functor_extend(q, finset_category(), sizes, funcs)
    return F.mor(path)
