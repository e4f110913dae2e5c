"""The free strict symmetric monoidal category on a signature.

Objects are words over the generating objects; the empty word is the unit.
A morphism is a string diagram: a list of boxes plus a wiring that feeds
every *in-port* (a codomain position or a box argument) from exactly one
*out-port* (a domain position or a box result). Wires must respect object
types and the boxes must be acyclically connected.

Two diagrams denote the same morphism iff they are isomorphic as wirings
with the boundary held fixed. That is decided by a canonical numbering of
the boxes, so no quotient is ever formed.

Port encoding:

* out-ports: ``("in", i)`` for domain position ``i``, ``("out", b, j)`` for
  result ``j`` of box ``b``;
* in-ports: ``("cod", k)`` for codomain position ``k``, ``("arg", b, j)`` for
  argument ``j`` of box ``b``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import (
    DuplicateGenerator,
    InvalidDiagram,
    UnknownGenerator,
    UnknownObjectToken,
    WordMismatch,
)
from .report import LawReport


def word_str(w) -> str:
    return ".".join(w) if w else "1"


def parse_word(text: str) -> tuple:
    text = text.strip()
    if text in ("", "1"):
        return ()
    return tuple(t.strip() for t in text.split("."))


@dataclass(frozen=True)
class Generator:
    name: str
    dom: tuple
    cod: tuple

    def __str__(self):
        return f"{self.name} : {word_str(self.dom)} -> {word_str(self.cod)}"


@dataclass(frozen=True)
class Signature:
    gen_objects: tuple
    gen_morphisms: tuple

    def generator(self, name) -> Generator:
        for g in self.gen_morphisms:
            if g.name == name:
                return g
        raise UnknownGenerator(f"unknown generator {name}", name)

    def check_word(self, w) -> tuple:
        w = tuple(w)
        for t in w:
            if t not in self.gen_objects:
                raise UnknownObjectToken(f"unknown object token {t}", t)
        return w

    def words(self, max_len: int) -> list:
        out = []
        for n in range(max_len + 1):
            out.extend(itertools.product(self.gen_objects, repeat=n))
        return out


def build_signature(objects: Iterable[str], generators: Iterable = ()) -> Signature:
    """``generators`` are ``(name, dom, cod)`` with words as tuples or dotted strings."""
    objects = tuple(objects)
    if len(set(objects)) != len(objects):
        dup = next(o for o in objects if objects.count(o) > 1)
        raise DuplicateGenerator(f"duplicate object token {dup}", dup)
    gens = []
    seen = set()
    for name, dom, cod in generators:
        if name in seen:
            raise DuplicateGenerator(f"duplicate generator {name}", name)
        seen.add(name)
        dom = parse_word(dom) if isinstance(dom, str) else tuple(dom)
        cod = parse_word(cod) if isinstance(cod, str) else tuple(cod)
        for t in dom + cod:
            if t not in objects:
                raise UnknownObjectToken(f"generator {name} uses unknown object token {t}", name, t)
        gens.append(Generator(name, dom, cod))
    return Signature(objects, tuple(gens))


@dataclass(frozen=True)
class Diagram:
    dom: tuple
    cod: tuple
    boxes: tuple
    wiring: tuple

    def in_ports(self) -> list:
        ports = [("cod", k) for k in range(len(self.cod))]
        for b, g in enumerate(self.boxes):
            ports.extend(("arg", b, j) for j in range(len(g.dom)))
        return ports

    def out_ports(self) -> list:
        ports = [("in", i) for i in range(len(self.dom))]
        for b, g in enumerate(self.boxes):
            ports.extend(("out", b, j) for j in range(len(g.cod)))
        return ports

    def feeds(self) -> dict:
        """in-port -> out-port."""
        return dict(zip(self.in_ports(), self.wiring))

    def __str__(self):
        return serialize(self)


def _in_type(d_cod, boxes, p):
    return d_cod[p[1]] if p[0] == "cod" else boxes[p[1]].dom[p[2]]


def _out_type(d_dom, boxes, p):
    return d_dom[p[1]] if p[0] == "in" else boxes[p[1]].cod[p[2]]


def _from_feeds(dom, cod, boxes, feeds) -> Diagram:
    d = Diagram(tuple(dom), tuple(cod), tuple(boxes), ())
    return Diagram(d.dom, d.cod, d.boxes, tuple(feeds[p] for p in d.in_ports()))


def _acyclic(boxes, feeds) -> bool:
    succ = defaultdict(set)
    indeg = [0] * len(boxes)
    for p, q in feeds.items():
        if p[0] == "arg" and q[0] == "out" and p[1] not in succ[q[1]]:
            if p[1] == q[1]:
                return False
            succ[q[1]].add(p[1])
            indeg[p[1]] += 1
    ready = [b for b in range(len(boxes)) if indeg[b] == 0]
    seen = 0
    while ready:
        b = ready.pop()
        seen += 1
        for c in succ[b]:
            indeg[c] -= 1
            if indeg[c] == 0:
                ready.append(c)
    return seen == len(boxes)


def make_diagram(dom, cod, boxes, feeds: dict) -> Diagram:
    """Validate a wiring given as ``{in-port: out-port}``."""
    d = Diagram(tuple(dom), tuple(cod), tuple(boxes), ())
    ins, outs = d.in_ports(), d.out_ports()
    if set(feeds) != set(ins):
        raise InvalidDiagram("every in-port must be fed exactly once")
    used = list(feeds.values())
    if sorted(used) != sorted(outs) or len(set(used)) != len(used):
        raise InvalidDiagram("every out-port must feed exactly one in-port")
    for p, q in feeds.items():
        if _in_type(d.cod, d.boxes, p) != _out_type(d.dom, d.boxes, q):
            raise InvalidDiagram(f"wire {q} -> {p} joins different object types")
    if not _acyclic(d.boxes, feeds):
        raise InvalidDiagram("boxes are wired in a cycle")
    return _from_feeds(d.dom, d.cod, d.boxes, feeds)


def identity(w) -> Diagram:
    w = tuple(w)
    return Diagram(w, w, (), tuple(("in", i) for i in range(len(w))))


def generator(sig: Signature, name: str) -> Diagram:
    g = sig.generator(name)
    feeds = {("cod", k): ("out", 0, k) for k in range(len(g.cod))}
    feeds.update({("arg", 0, j): ("in", j) for j in range(len(g.dom))})
    return _from_feeds(g.dom, g.cod, (g,), feeds)


def symmetry(u, v) -> Diagram:
    u, v = tuple(u), tuple(v)
    wiring = tuple(("in", len(u) + k) for k in range(len(v))) + tuple(("in", k) for k in range(len(u)))
    return Diagram(u + v, v + u, (), wiring)


def atomic_diagram(sig: Signature, kind: str, *args) -> Diagram:
    """``kind`` is ``identity`` (word), ``generator`` (name) or ``symmetry`` (word, word)."""
    if kind == "identity":
        return identity(sig.check_word(args[0]))
    if kind == "generator":
        return generator(sig, args[0])
    if kind == "symmetry":
        return symmetry(sig.check_word(args[0]), sig.check_word(args[1]))
    raise ValueError(f"unknown diagram kind {kind!r}")


def compose_diagrams(d1: Diagram, d2: Diagram) -> Diagram:
    """``d1`` then ``d2``."""
    if d1.cod != d2.dom:
        raise WordMismatch(
            f"codomain {word_str(d1.cod)} does not match domain {word_str(d2.dom)}",
            word_str(d1.cod),
            word_str(d2.dom),
        )
    n1 = len(d1.boxes)
    w1 = d1.wiring

    def resolve(q):
        return w1[q[1]] if q[0] == "in" else ("out", q[1] + n1, q[2])

    # in-port order: codomain, then d1's box arguments, then d2's
    k2 = len(d2.cod)
    wiring = (
        tuple(resolve(q) for q in d2.wiring[:k2])
        + w1[len(d1.cod):]
        + tuple(resolve(q) for q in d2.wiring[k2:])
    )
    return Diagram(d1.dom, d2.cod, d1.boxes + d2.boxes, wiring)


def tensor_diagrams(d1: Diagram, d2: Diagram) -> Diagram:
    n1, m1, k1, k2 = len(d1.boxes), len(d1.dom), len(d1.cod), len(d2.cod)

    def shift(q):
        return ("in", q[1] + m1) if q[0] == "in" else ("out", q[1] + n1, q[2])

    wiring = (
        d1.wiring[:k1]
        + tuple(shift(q) for q in d2.wiring[:k2])
        + d1.wiring[k1:]
        + tuple(shift(q) for q in d2.wiring[k2:])
    )
    return Diagram(d1.dom + d2.dom, d1.cod + d2.cod, d1.boxes + d2.boxes, wiring)


def _port_str(p) -> str:
    if p[0] in ("in", "cod"):
        return f"{p[0]}{p[1]}"
    return f"{p[0]}{p[1]}.{p[2]}"


def serialize(d: Diagram) -> str:
    """Literal text of a diagram, boxes in their stored order."""
    boxes = " ".join(g.name for g in d.boxes)
    wires = " ".join(f"{_port_str(q)}>{_port_str(p)}" for p, q in zip(d.in_ports(), d.wiring))
    return f"{word_str(d.dom)} -> {word_str(d.cod)} | {boxes} | {wires}"


def _traverse(d: Diagram, feeds: dict, consumer: dict, starts, allowed=None) -> list:
    """Number boxes breadth-first from ``starts``, following ports in order."""
    order = []
    seen = set()
    queue = deque()

    def visit(b):
        if b not in seen and (allowed is None or b in allowed):
            seen.add(b)
            order.append(b)
            queue.append(b)

    for b in starts:
        visit(b)
        while queue:
            c = queue.popleft()
            g = d.boxes[c]
            for j in range(len(g.dom)):
                q = feeds[("arg", c, j)]
                if q[0] == "out":
                    visit(q[1])
            for j in range(len(g.cod)):
                p = consumer[("out", c, j)]
                if p[0] == "arg":
                    visit(p[1])
    return order


def _component_key(d, feeds, order) -> tuple:
    local = {b: i for i, b in enumerate(order)}
    key = []
    for b in order:
        g = d.boxes[b]
        args = tuple((local[feeds[("arg", b, j)][1]], feeds[("arg", b, j)][2]) for j in range(len(g.dom)))
        key.append((g.name, g.dom, g.cod, args))
    return tuple(key)


def _canonical_order(d: Diagram) -> list:
    feeds = d.feeds()
    consumer = {q: p for p, q in feeds.items()}
    starts = []
    for i in range(len(d.dom)):
        p = consumer[("in", i)]
        if p[0] == "arg":
            starts.append(p[1])
    for k in range(len(d.cod)):
        q = feeds[("cod", k)]
        if q[0] == "out":
            starts.append(q[1])
    order = _traverse(d, feeds, consumer, starts)

    # boxes not reachable from the boundary form floating components
    rest = [b for b in range(len(d.boxes)) if b not in set(order)]
    keyed = []
    while rest:
        comp = set(_traverse(d, feeds, consumer, [rest[0]], None))
        best = None
        for s in sorted(comp):
            o = _traverse(d, feeds, consumer, [s], comp)
            k = _component_key(d, feeds, o)
            if best is None or k < best[0]:
                best = (k, o)
        keyed.append(best)
        rest = [b for b in rest if b not in comp]
    keyed.sort(key=lambda t: t[0])
    for _, o in keyed:
        order.extend(o)
    return order


def canonical(d: Diagram) -> Diagram:
    """The same morphism with boxes renumbered canonically."""
    order = _canonical_order(d)
    new = {b: i for i, b in enumerate(order)}

    def ren(p):
        if p[0] in ("arg", "out"):
            return (p[0], new[p[1]], p[2])
        return p

    feeds = {ren(p): ren(q) for p, q in d.feeds().items()}
    return _from_feeds(d.dom, d.cod, tuple(d.boxes[b] for b in order), feeds)


@lru_cache(maxsize=200000)
def canonical_key(d: Diagram) -> str:
    return serialize(canonical(d))


def diagrams_equal(d1: Diagram, d2: Diagram) -> bool:
    return d1.dom == d2.dom and d1.cod == d2.cod and canonical_key(d1) == canonical_key(d2)


def _raw_diagrams(boxes, w1, w2):
    """Every acyclic type-respecting wiring of ``boxes`` between ``w1`` and ``w2``."""
    d = Diagram(tuple(w1), tuple(w2), tuple(boxes), ())
    ins, outs = d.in_ports(), d.out_ports()
    if len(ins) != len(outs):
        return
    ins_by, outs_by = defaultdict(list), defaultdict(list)
    for p in ins:
        ins_by[_in_type(d.cod, d.boxes, p)].append(p)
    for q in outs:
        outs_by[_out_type(d.dom, d.boxes, q)].append(q)
    if {t: len(v) for t, v in ins_by.items()} != {t: len(v) for t, v in outs_by.items()}:
        return
    types = sorted(ins_by)
    per_type = [list(itertools.permutations(outs_by[t])) for t in types]
    for choice in itertools.product(*per_type):
        feeds = {}
        for t, perm in zip(types, choice):
            feeds.update(zip(ins_by[t], perm))
        if _acyclic(d.boxes, feeds):
            yield _from_feeds(d.dom, d.cod, d.boxes, feeds)


def enumerate_homs(sig: Signature, w1, w2, max_boxes: int) -> list:
    """Pairwise distinct morphisms ``w1 -> w2`` with at most ``max_boxes`` boxes.

    Ordered by box count, then by canonical serialization.
    """
    w1, w2 = sig.check_word(w1), sig.check_word(w2)
    if max_boxes < 0:
        raise ValueError("max_boxes must be non-negative")
    found = {}
    for k in range(max_boxes + 1):
        for boxes in itertools.combinations_with_replacement(sig.gen_morphisms, k):
            for d in _raw_diagrams(boxes, w1, w2):
                c = canonical(d)
                found.setdefault(serialize(c), (k, c))
    return [c for key, (k, c) in sorted(found.items(), key=lambda kv: (kv[1][0], kv[0]))]


def _bucketed(items, shape, repeat, fits):
    """Tuples of ``items`` whose shapes pass ``fits``, without scanning the rest."""
    buckets = defaultdict(list)
    for x in items:
        buckets[shape(x)].append(x)
    for shapes in itertools.product(list(buckets), repeat=repeat):
        if fits(*shapes):
            yield from itertools.product(*(buckets[s] for s in shapes))


def _words_ok(max_word, *ws):
    return all(len(w) <= max_word for w in ws)


def check_free_smc_laws(sig: Signature, max_boxes: int = 2, max_word: int = 4, key=None) -> LawReport:
    """Sweep the strict symmetric monoidal laws over every diagram within the bounds.

    Instances are limited to ``max_boxes`` boxes in total and words of length
    at most ``max_word``. ``key`` overrides the canonical serialization used
    for equality (a test hook).
    """
    key = key or canonical_key

    def eq(d1, d2):
        return d1.dom == d2.dom and d1.cod == d2.cod and key(d1) == key(d2)

    report = LawReport()
    words = sig.words(max_word)
    homs = {}
    for w1 in words:
        for w2 in words:
            hs = enumerate_homs(sig, w1, w2, max_boxes)
            if hs:
                homs[w1, w2] = hs
    diagrams = [d for hs in homs.values() for d in hs]
    by_dom = defaultdict(list)
    for d in diagrams:
        by_dom[d.dom].append(d)

    def nb(*ds):
        return sum(len(d.boxes) for d in ds)

    for d in diagrams:
        if not eq(compose_diagrams(identity(d.dom), d), d):
            report.add("left-identity", [serialize(d)], "id ; d != d")
        if not eq(compose_diagrams(d, identity(d.cod)), d):
            report.add("right-identity", [serialize(d)], "d ; id != d")
        if not (eq(tensor_diagrams(d, identity(())), d) and eq(tensor_diagrams(identity(()), d), d)):
            report.add("tensor-unit", [serialize(d)], "tensoring with id(1) changes d")

    composable = [(f, g) for f in diagrams for g in by_dom[f.cod] if nb(f, g) <= max_boxes]
    for f, g in composable:
        fg = compose_diagrams(f, g)
        for h in by_dom[g.cod]:
            if nb(f, g, h) > max_boxes:
                continue
            if not eq(compose_diagrams(fg, h), compose_diagrams(f, compose_diagrams(g, h))):
                report.add("associativity", [serialize(f), serialize(g), serialize(h)], "(f;g);h != f;(g;h)")

    def shape(d):
        return (len(d.boxes), len(d.dom), len(d.cod))

    def fits3(s1, s2, s3):
        return (
            s1[0] + s2[0] + s3[0] <= max_boxes
            and s1[1] + s2[1] + s3[1] <= max_word
            and s1[2] + s2[2] + s3[2] <= max_word
        )

    for f, g, h in _bucketed(diagrams, shape, 3, fits3):
        lhs = tensor_diagrams(tensor_diagrams(f, g), h)
        rhs = tensor_diagrams(f, tensor_diagrams(g, h))
        if not eq(lhs, rhs):
            report.add("tensor-associativity", [serialize(f), serialize(g), serialize(h)], "(f*g)*h != f*(g*h)")

    def pair_shape(fh):
        f, h = fh
        return (nb(f, h), len(f.dom), len(f.cod), len(h.cod))

    def fits2(s1, s2):
        return s1[0] + s2[0] <= max_boxes and all(s1[i] + s2[i] <= max_word for i in (1, 2, 3))

    for (f, h), (g, k) in _bucketed(composable, pair_shape, 2, fits2):
        lhs = compose_diagrams(tensor_diagrams(f, g), tensor_diagrams(h, k))
        rhs = tensor_diagrams(compose_diagrams(f, h), compose_diagrams(g, k))
        if not eq(lhs, rhs):
            report.add(
                "interchange",
                [serialize(f), serialize(g), serialize(h), serialize(k)],
                "(f*g);(h*k) != (f;h)*(g;k)",
            )

    for d in diagrams:
        for w in words:
            if not _words_ok(max_word, d.dom + w, d.cod + w):
                continue
            lhs = compose_diagrams(tensor_diagrams(d, identity(w)), symmetry(d.cod, w))
            rhs = compose_diagrams(symmetry(d.dom, w), tensor_diagrams(identity(w), d))
            if not eq(lhs, rhs):
                report.add("naturality", [serialize(d), word_str(w)], "braid does not slide past d")

    for u, v, w in itertools.product(words, repeat=3):
        if len(u) + len(v) + len(w) > max_word:
            continue
        lhs = symmetry(u, v + w)
        rhs = compose_diagrams(
            tensor_diagrams(symmetry(u, v), identity(w)), tensor_diagrams(identity(v), symmetry(u, w))
        )
        if not eq(lhs, rhs):
            report.add("hexagon", [word_str(u), word_str(v), word_str(w)], "sym(u, v.w) is not the block composite")
        lhs = symmetry(u + v, w)
        rhs = compose_diagrams(
            tensor_diagrams(identity(u), symmetry(v, w)), tensor_diagrams(symmetry(u, w), identity(v))
        )
        if not eq(lhs, rhs):
            report.add("hexagon", [word_str(u), word_str(v), word_str(w)], "sym(u.v, w) is not the block composite")

    for u, v in itertools.product(words, repeat=2):
        if len(u) + len(v) > max_word:
            continue
        if not eq(compose_diagrams(symmetry(u, v), symmetry(v, u)), identity(u + v)):
            report.add("symmetry", [word_str(u), word_str(v)], "sym(u,v) ; sym(v,u) != id")
    return report
