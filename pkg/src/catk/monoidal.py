"""Monoidal and symmetric monoidal structure with exhaustive coherence checks.

Structure maps may be dicts or callables. Checks sweep every object tuple
(and every morphism tuple, for naturality) of the base; on an infinite base
the sweep is over ``base.objects(bound)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .errors import IllTypedWitness, InvalidStructure, MissingProduct, MissingTerminal
from .functor import FunctorData, check_functor_laws
from .kernel import FinCategory
from .report import LawReport, label
from .universal import (
    ProductWitness,
    TerminalWitness,
    check_product,
    check_terminal,
    find_products,
    find_terminals,
    mediators,
)
from .views import ProductView, as_view


def product_category(C, D):
    """Componentwise product; a :class:`FinCategory` when both factors are finite."""
    if not (isinstance(C, FinCategory) and isinstance(D, FinCategory)):
        return ProductView(C, D)
    objects = tuple((a, b) for a in C.objects for b in D.objects)
    identities = {(a, b): (C.identities[a], D.identities[b]) for a, b in objects}
    mors = tuple((f, g) for f in C.morphisms for g in D.morphisms)
    src = {(f, g): (C.src[f], D.src[g]) for f, g in mors}
    tgt = {(f, g): (C.tgt[f], D.tgt[g]) for f, g in mors}
    comp = {
        ((f, g), (h, k)): (C.comp[f, h], D.comp[g, k])
        for f, h in C.comp
        for g, k in D.comp
    }
    # hom order: identities first, matching build_fin_category
    ids = set(identities.values())
    order = tuple(identities[o] for o in objects) + tuple(m for m in mors if m not in ids)
    return FinCategory(objects, order, src, tgt, identities, comp, f"{C.name}x{D.name}")


def _at(m, *args):
    if callable(m):
        return m(*args)
    return m[args[0] if len(args) == 1 else args]


@dataclass
class MonoidalStructure:
    base: Any
    tensor: FunctorData
    unit: Hashable
    associator: Any
    associator_inv: Any
    unitor_l: Any
    unitor_l_inv: Any
    unitor_r: Any
    unitor_r_inv: Any
    strict: bool = False
    bound: Any = None
    products: Any = field(default=None, repr=False)

    def __post_init__(self):
        self.validate()

    @property
    def view(self):
        return as_view(self.base)

    def objects(self) -> list:
        return self.view.objects(self.bound)

    def t(self, a, b):
        return self.tensor.obj((a, b))

    def tm(self, f, g):
        return self.tensor.mor((f, g))

    def alpha(self, a, b, c):
        return _at(self.associator, a, b, c)

    def alpha_inv(self, a, b, c):
        return _at(self.associator_inv, a, b, c)

    def lam(self, a):
        return _at(self.unitor_l, a)

    def lam_inv(self, a):
        return _at(self.unitor_l_inv, a)

    def rho(self, a):
        return _at(self.unitor_r, a)

    def rho_inv(self, a):
        return _at(self.unitor_r_inv, a)

    def validate(self):
        """Typing of every structure map and its designated inverse."""
        V = self.view
        if not V.has_object(self.unit):
            raise InvalidStructure(f"unit {label(self.unit)} is not an object", self.unit)
        obs = self.objects()

        def typed(m, a, b, what):
            try:
                ok = V.source(m) == a and V.target(m) == b
            except (KeyError, AttributeError):
                ok = False
            if not ok:
                raise InvalidStructure(f"{what} is {label(m)}, not {label(a)} -> {label(b)}", m)

        def inverse(m, n, a, b, what):
            if not (V.equal(V.compose(m, n), V.identity(a)) and V.equal(V.compose(n, m), V.identity(b))):
                raise InvalidStructure(f"designated inverse of {what} is not an inverse", m, n)

        t, u = self.t, self.unit
        for a, b, c in itertools.product(obs, repeat=3):
            src, dst = t(t(a, b), c), t(a, t(b, c))
            what = f"associator at ({label(a)},{label(b)},{label(c)})"
            m, n = self.alpha(a, b, c), self.alpha_inv(a, b, c)
            typed(m, src, dst, what)
            typed(n, dst, src, what + " inverse")
            inverse(m, n, src, dst, what)
        for a in obs:
            for m, n, src, what in (
                (self.lam(a), self.lam_inv(a), t(u, a), f"left unitor at {label(a)}"),
                (self.rho(a), self.rho_inv(a), t(a, u), f"right unitor at {label(a)}"),
            ):
                typed(m, src, a, what)
                typed(n, a, src, what + " inverse")
                inverse(m, n, src, a, what)


@dataclass
class SymmetricStructure:
    braiding: Any

    def beta(self, a, b):
        return _at(self.braiding, a, b)


def check_interchange(M: MonoidalStructure) -> LawReport:
    """``(f*g) ; (h*k) = (f;h) * (g;k)`` swept directly, not through functor laws."""
    V = M.view
    pairs = list(V.composable_pairs(M.bound))
    report = LawReport()
    for f, h in pairs:
        for g, k in pairs:
            lhs = V.compose(M.tm(f, g), M.tm(h, k))
            rhs = M.tm(V.compose(f, h), V.compose(g, k))
            if not V.equal(lhs, rhs):
                report.add(
                    "interchange",
                    [f, g, h, k],
                    f"({label(f)}*{label(g)}) ; ({label(h)}*{label(k)}) != "
                    f"({label(f)};{label(h)}) * ({label(g)};{label(k)})",
                )
    return report


def check_monoidal_structure(M: MonoidalStructure) -> LawReport:
    V = M.view
    report = LawReport()
    report.extend(check_functor_laws(M.tensor, M.bound).relabel("bifunctor"))

    obs = M.objects()
    mors = V.morphisms(M.bound)
    eq, comp, t, tm = V.equal, V.compose, M.t, M.tm
    ident = V.identity

    for f, g, h in itertools.product(mors, repeat=3):
        a, b, c = V.source(f), V.source(g), V.source(h)
        a2, b2, c2 = V.target(f), V.target(g), V.target(h)
        lhs = comp(M.alpha(a, b, c), tm(f, tm(g, h)))
        rhs = comp(tm(tm(f, g), h), M.alpha(a2, b2, c2))
        if not eq(lhs, rhs):
            report.add(
                "naturality",
                ["associator", f, g, h],
                f"associator not natural at ({label(f)}, {label(g)}, {label(h)})",
            )
    u = M.unit
    for f in mors:
        a, b = V.source(f), V.target(f)
        if not eq(comp(M.lam(a), f), comp(tm(ident(u), f), M.lam(b))):
            report.add("naturality", ["left-unitor", f], f"left unitor not natural at {label(f)}")
        if not eq(comp(M.rho(a), f), comp(tm(f, ident(u)), M.rho(b))):
            report.add("naturality", ["right-unitor", f], f"right unitor not natural at {label(f)}")

    for a, b, c, d in itertools.product(obs, repeat=4):
        lhs = comp(
            comp(tm(M.alpha(a, b, c), ident(d)), M.alpha(a, t(b, c), d)),
            tm(ident(a), M.alpha(b, c, d)),
        )
        rhs = comp(M.alpha(t(a, b), c, d), M.alpha(a, b, t(c, d)))
        if not eq(lhs, rhs):
            report.add(
                "pentagon",
                [a, b, c, d],
                f"pentagon fails at ({label(a)}, {label(b)}, {label(c)}, {label(d)}): "
                f"{label(lhs)} != {label(rhs)}",
            )

    for a, b in itertools.product(obs, repeat=2):
        lhs = comp(M.alpha(a, u, b), tm(ident(a), M.lam(b)))
        rhs = tm(M.rho(a), ident(b))
        if not eq(lhs, rhs):
            report.add(
                "triangle",
                [a, b],
                f"triangle fails at ({label(a)}, {label(b)}): {label(lhs)} != {label(rhs)}",
            )

    if M.strict:
        for a, b, c in itertools.product(obs, repeat=3):
            if t(t(a, b), c) != t(a, t(b, c)):
                report.add("strictness", [a, b, c], f"tensor not associative on objects at ({label(a)}, {label(b)}, {label(c)})")
            elif not eq(M.alpha(a, b, c), ident(t(t(a, b), c))):
                report.add("strictness", [a, b, c], f"associator at ({label(a)}, {label(b)}, {label(c)}) is not an identity")
        for a in obs:
            if t(u, a) != a or t(a, u) != a:
                report.add("strictness", [a], f"unit is not strict at {label(a)}")
                continue
            if not eq(M.lam(a), ident(a)) or not eq(M.rho(a), ident(a)):
                report.add("strictness", [a], f"unitor at {label(a)} is not an identity")
    return report


def check_symmetric_structure(M: MonoidalStructure, S: SymmetricStructure) -> LawReport:
    V = M.view
    eq, comp, t, tm, ident = V.equal, V.compose, M.t, M.tm, V.identity
    obs = M.objects()
    for a, b in itertools.product(obs, repeat=2):
        m = S.beta(a, b)
        try:
            ok = V.source(m) == t(a, b) and V.target(m) == t(b, a)
        except (KeyError, AttributeError):
            ok = False
        if not ok:
            raise InvalidStructure(f"braiding at ({label(a)}, {label(b)}) is ill-typed", m)

    report = LawReport()
    mors = V.morphisms(M.bound)
    for f, g in itertools.product(mors, repeat=2):
        a, b, a2, b2 = V.source(f), V.source(g), V.target(f), V.target(g)
        if not eq(comp(tm(f, g), S.beta(a2, b2)), comp(S.beta(a, b), tm(g, f))):
            report.add("naturality", ["braiding", f, g], f"braiding not natural at ({label(f)}, {label(g)})")

    for a, b, c in itertools.product(obs, repeat=3):
        lhs = comp(comp(M.alpha(a, b, c), S.beta(a, t(b, c))), M.alpha(b, c, a))
        rhs = comp(comp(tm(S.beta(a, b), ident(c)), M.alpha(b, a, c)), tm(ident(b), S.beta(a, c)))
        if not eq(lhs, rhs):
            report.add("hexagon", [a, b, c], f"first hexagon fails at ({label(a)}, {label(b)}, {label(c)})")
        lhs = comp(comp(M.alpha_inv(a, b, c), S.beta(t(a, b), c)), M.alpha_inv(c, a, b))
        rhs = comp(comp(tm(ident(a), S.beta(b, c)), M.alpha_inv(a, c, b)), tm(S.beta(a, c), ident(b)))
        if not eq(lhs, rhs):
            report.add("hexagon", [a, b, c], f"second hexagon fails at ({label(a)}, {label(b)}, {label(c)})")

    for a, b in itertools.product(obs, repeat=2):
        if not eq(comp(S.beta(a, b), S.beta(b, a)), ident(t(a, b))):
            report.add("symmetry", [a, b], f"braiding twice at ({label(a)}, {label(b)}) is not the identity")
    return report


def _memo(fn):
    cache = {}

    def wrapped(*args):
        if args not in cache:
            cache[args] = fn(*args)
        return cache[args]

    return wrapped


def default_chooser(cat):
    """First product witness found for each pair, or ``None``."""

    @_memo
    def choose(a, b):
        found = find_products(cat, a, b)
        return found[0] if found else None

    return choose


def _search_mediator(cat, bound):
    def mediate(w, f, g):
        ms = mediators(cat, w, f, g, bound)
        if len(ms) != 1:
            raise MissingProduct(f"{len(ms)} mediators into {label(w.apex)}", w.apex)
        return ms[0]

    return mediate


@dataclass
class ProductsMonoidal:
    """The cartesian structure: witnesses, mediators and the derived braiding."""

    base: Any
    choose: Callable
    terminal: Hashable
    mediate: Callable
    bound: Any = None
    cache: dict = field(default_factory=dict)

    def P(self, a, b) -> ProductWitness:
        return self.choose(a, b)

    def bang(self, a):
        return as_view(self.base).hom(a, self.terminal, self.bound)[0]

    def tensor_obj(self, pair):
        a, b = pair
        return self.P(a, b).apex

    def tensor_mor(self, pair):
        f, g = pair
        V = as_view(self.base)
        w = self.P(V.source(f), V.source(g))
        w2 = self.P(V.target(f), V.target(g))
        return self.mediate(w2, V.compose(w.proj_l, f), V.compose(w.proj_r, g))

    def alpha(self, a, b, c):
        V = as_view(self.base)
        ab, bc = self.P(a, b), self.P(b, c)
        ab_c, a_bc = self.P(ab.apex, c), self.P(a, bc.apex)
        inner = self.mediate(bc, V.compose(ab_c.proj_l, ab.proj_r), ab_c.proj_r)
        return self.mediate(a_bc, V.compose(ab_c.proj_l, ab.proj_l), inner)

    def alpha_inv(self, a, b, c):
        V = as_view(self.base)
        ab, bc = self.P(a, b), self.P(b, c)
        ab_c, a_bc = self.P(ab.apex, c), self.P(a, bc.apex)
        inner = self.mediate(ab, a_bc.proj_l, V.compose(a_bc.proj_r, bc.proj_l))
        return self.mediate(ab_c, inner, V.compose(a_bc.proj_r, bc.proj_r))

    def lam(self, a):
        return self.P(self.terminal, a).proj_r

    def lam_inv(self, a):
        return self.mediate(self.P(self.terminal, a), self.bang(a), as_view(self.base).identity(a))

    def rho(self, a):
        return self.P(a, self.terminal).proj_l

    def rho_inv(self, a):
        return self.mediate(self.P(a, self.terminal), as_view(self.base).identity(a), self.bang(a))

    def braid(self, a, b):
        w = self.P(a, b)
        return self.mediate(self.P(b, a), w.proj_r, w.proj_l)


def monoidal_from_products(
    cat, chooser=None, terminal=None, mediate=None, bound=None
) -> MonoidalStructure:
    """Cartesian monoidal structure from chosen binary products and a terminal object.

    ``chooser`` maps ``(a, b)`` to a :class:`ProductWitness` (dict or callable);
    by default the first witness found by exhaustive search is used.
    ``mediate(w, f, g)`` returns the unique mediating morphism into ``w.apex``;
    by default it is found by search.
    """
    V = as_view(cat)
    obs = V.objects(bound)
    if chooser is None:
        chooser = default_chooser(cat)
    choose = chooser if callable(chooser) else (lambda a, b: chooser.get((a, b)))
    for a, b in itertools.product(obs, repeat=2):
        w = choose(a, b)
        if w is None:
            raise MissingProduct(f"no product chosen for ({label(a)}, {label(b)})", a, b)
        try:
            bad = not check_product(cat, w, bound=bound).ok
        except IllTypedWitness as e:
            raise MissingProduct(f"chosen product for ({label(a)}, {label(b)}) is ill-typed: {e}", a, b) from None
        if bad or (w.left, w.right) != (a, b):
            raise MissingProduct(f"chosen product for ({label(a)}, {label(b)}) is not a product", a, b)

    if terminal is None:
        found = find_terminals(cat) if isinstance(cat, FinCategory) else []
        if not found:
            raise MissingTerminal("no terminal object")
        terminal = found[0]
    t = terminal.object if isinstance(terminal, TerminalWitness) else terminal
    if not check_terminal(cat, t, bound=bound).ok:
        raise MissingTerminal(f"{label(t)} is not terminal", t)

    pm = ProductsMonoidal(cat, _memo(choose), t, mediate or _search_mediator(cat, bound), bound)
    source = product_category(cat, cat)
    tensor = FunctorData(source, cat, _memo(pm.tensor_obj), _memo(pm.tensor_mor), name="tensor")
    M = MonoidalStructure(
        cat,
        tensor,
        t,
        _memo(pm.alpha),
        _memo(pm.alpha_inv),
        _memo(pm.lam),
        _memo(pm.lam_inv),
        _memo(pm.rho),
        _memo(pm.rho_inv),
        strict=False,
        bound=bound,
    )
    M.strict = _is_strict(M)
    M.products = pm
    return M


def _is_strict(M: MonoidalStructure) -> bool:
    V = M.view
    obs = M.objects()
    u = M.unit
    for a in obs:
        if M.t(u, a) != a or M.t(a, u) != a:
            return False
        if not (V.equal(M.lam(a), V.identity(a)) and V.equal(M.rho(a), V.identity(a))):
            return False
    for a, b, c in itertools.product(obs, repeat=3):
        abc = M.t(M.t(a, b), c)
        if abc != M.t(a, M.t(b, c)) or not V.equal(M.alpha(a, b, c), V.identity(abc)):
            return False
    return True


def product_braiding(M: MonoidalStructure) -> SymmetricStructure:
    """Braiding induced by swapping product projections."""
    return SymmetricStructure(M.products.braid)
