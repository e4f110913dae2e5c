"""Line-oriented text formats for categories, quivers, signatures, functors
and edge-table assignments, with a canonical printer.

Every format is one declaration per line and ``#`` starts a comment::

    # .cat                      # .qv                 # .sig
    objects: A, B               nodes: A, B           objects: x
    mor f : A -> B              edge a : A -> B       gen m : x.x -> x
    comp f g = h

    # .fun                      # .asg
    functor F : c.cat -> d.cat  node A = 2
    obj A |-> X                 edge a = [1,0]
    mor f |-> g

Semantic validation is left to the owning module's builder; its errors come
back as :class:`SemanticError` carrying the spans of the declarations
involved.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from .errors import (
    CatkError,
    DslSyntaxError,
    DuplicateEdgeName,
    DuplicateGenerator,
    DuplicateId,
    ReservedName,
    SemanticError,
    UnknownMorphism,
    UnknownObject,
)
from .functor import FunctorData, make_functor
from .kernel import FinCategory, build_fin_category
from .quiver import Quiver, build_quiver
from .smc_free import Diagram, Signature, atomic_diagram, build_signature, compose_diagrams, tensor_diagrams, word_str

KINDS = ("category", "quiver", "signature", "functor", "assignment")
SUFFIXES = {".cat": "category", ".qv": "quiver", ".sig": "signature", ".fun": "functor", ".asg": "assignment"}

_IDENT = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_']*")
_INT = re.compile(r"-?[0-9]+")


@dataclass(frozen=True)
class FunctorDecl:
    """A parsed ``.fun`` file; ``functor`` is filled in when the files resolve."""

    name: str
    source_path: str
    target_path: str
    obj_map: tuple
    mor_map: tuple
    functor: FunctorData | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Assignment:
    nodes: tuple  # (name, size)
    edges: tuple  # (name, table)

    def node_sizes(self) -> dict:
        return dict(self.nodes)

    def edge_tables(self) -> dict:
        return dict(self.edges)


@dataclass
class Document:
    kind: str
    payload: object
    spans: dict = field(default_factory=dict, compare=False)
    name: str = field(default="", compare=False)


class _Line:
    """Cursor over one source line. Columns are 1-based."""

    def __init__(self, text: str, lineno: int):
        self.text, self.ln, self.pos = text, lineno, 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    @property
    def span(self):
        self.skip()
        return (self.ln, self.pos + 1)

    def fail(self, expected):
        self.skip()
        rest = self.text[self.pos:].split()
        raise DslSyntaxError(self.ln, self.pos + 1, expected, rest[0] if rest else "")

    def at(self, s) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def lit(self, s):
        if not self.at(s):
            self.fail(repr(s))
        self.pos += len(s)

    def ident(self, what="identifier"):
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.fail(what)
        span = (self.ln, self.pos + 1)
        self.pos = m.end()
        return m.group(), span

    def integer(self, what="integer"):
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.fail(what)
        self.pos = m.end()
        return int(m.group())

    def token(self, what):
        """A run of non-blank characters (file paths)."""
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and not self.text[self.pos].isspace():
            self.pos += 1
        if self.pos == start:
            self.fail(what)
        return self.text[start:self.pos], (self.ln, start + 1)

    def ident_list(self, what):
        out = []
        self.skip()
        if self.pos == len(self.text):
            return out
        out.append(self.ident(what))
        while self.at(","):
            self.lit(",")
            out.append(self.ident(what))
        self.end()
        return out

    def word(self):
        first, _ = self.ident("object token or 1")
        toks = [first]
        while self.at("."):
            self.lit(".")
            toks.append(self.ident("object token")[0])
        if toks == ["1"]:
            return ()
        return tuple(toks)

    def table(self):
        self.lit("[")
        vals = []
        if not self.at("]"):
            vals.append(self.integer())
            while self.at(","):
                self.lit(",")
                vals.append(self.integer())
        self.lit("]")
        return tuple(vals)

    def end(self):
        self.skip()
        if self.pos != len(self.text):
            self.fail("end of line")


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield _Line(body, i)


def _keyword(line: _Line, allowed):
    expected = "one of " + ", ".join(allowed)
    line.skip()
    m = _IDENT.match(line.text, line.pos)
    if not m or m.group() not in {k.rstrip(":") for k in allowed}:
        line.fail(expected)
    line.pos = m.end()
    kw = m.group()
    if kw + ":" in allowed:
        line.lit(":")
        return kw + ":"
    return kw


def sniff_kind(text: str) -> str:
    for line in _lines(text):
        m = _IDENT.match(line.text.strip())
        kw = m.group() if m else ""
        if kw == "functor":
            return "functor"
        if kw in ("mor", "comp"):
            return "category"
        if kw == "nodes":
            return "quiver"
        if kw == "node":
            return "assignment"
        if kw == "gen":
            return "signature"
        if kw == "edge":
            return "assignment" if "=" in line.text else "quiver"
    return "category"


class _Decls:
    """Declaration spans, with duplicate detection that reports both sites."""

    def __init__(self, error=DuplicateId):
        self.spans = {}
        self.error = error

    def add(self, key, span, what):
        if key in self.spans:
            first = self.spans[key]
            ident = key[-1] if isinstance(key, tuple) else key
            raise SemanticError(self.error(f"duplicate {what} {ident}", ident), [first, span])
        self.spans[key] = span

    def locate(self, ids, *prefixes):
        found = []
        for i in ids:
            for p in prefixes:
                s = self.spans.get((p, i))
                if s is not None:
                    if s not in found:
                        found.append(s)
                    break
        return found


def _semantic(err: CatkError, spans):
    return SemanticError(err, spans)


def _parse_category(text, name):
    d = _Decls()
    objects, mors, comps = [], [], []
    for line in _lines(text):
        kw = _keyword(line, ("objects:", "mor", "comp"))
        if kw == "objects:":
            for o, span in line.ident_list("object name"):
                d.add(("obj", o), span, "object")
                objects.append(o)
        elif kw == "mor":
            f, span = line.ident("morphism name")
            line.lit(":")
            a, _ = line.ident("object name")
            line.lit("->")
            b, _ = line.ident("object name")
            line.end()
            if f.startswith("id_"):
                raise SemanticError(ReservedName(f"morphism names id_<object> are reserved for identities: {f}", f), [span])
            d.add(("mor", f), span, "morphism")
            mors.append((f, a, b))
        else:
            span = line.span
            f, _ = line.ident("morphism name")
            g, _ = line.ident("morphism name")
            line.lit("=")
            h, _ = line.ident("morphism name")
            line.end()
            d.add(("comp", (f, g)), span, "composite")
            comps.append((f, g, h))
    try:
        cat = build_fin_category(objects, mors, comps, name=name)
    except CatkError as e:
        spans = []
        if len(e.ids) >= 2 and ("comp", (e.ids[0], e.ids[1])) in d.spans:
            spans.append(d.spans["comp", (e.ids[0], e.ids[1])])
        spans += [s for s in d.locate(e.ids, "mor", "obj") if s not in spans]
        raise _semantic(e, spans) from None
    return cat, d.spans


def _parse_quiver(text, name):
    nodes_d, edges_d = _Decls(), _Decls(DuplicateEdgeName)
    nodes, edges = [], []
    for line in _lines(text):
        kw = _keyword(line, ("nodes:", "edge"))
        if kw == "nodes:":
            for n, span in line.ident_list("node name"):
                nodes_d.add(("node", n), span, "node")
                nodes.append(n)
        else:
            e, span = line.ident("edge name")
            line.lit(":")
            a, _ = line.ident("node name")
            line.lit("->")
            b, _ = line.ident("node name")
            line.end()
            edges_d.add(("edge", e), span, "edge")
            edges.append((e, a, b))
    try:
        q = build_quiver(nodes, edges)
    except CatkError as e:
        raise _semantic(e, edges_d.locate(e.ids, "edge") or nodes_d.locate(e.ids, "node")) from None
    return q, {**nodes_d.spans, **edges_d.spans}


def _parse_signature(text, name):
    d = _Decls(DuplicateGenerator)
    objects, gens = [], []
    for line in _lines(text):
        kw = _keyword(line, ("objects:", "gen"))
        if kw == "objects:":
            for o, span in line.ident_list("object token"):
                if o == "1":
                    raise SemanticError(ReservedName("1 denotes the empty word", o), [span])
                d.add(("obj", o), span, "object token")
                objects.append(o)
        else:
            g, span = line.ident("generator name")
            line.lit(":")
            dom = line.word()
            line.lit("->")
            cod = line.word()
            line.end()
            d.add(("gen", g), span, "generator")
            gens.append((g, dom, cod))
    try:
        sig = build_signature(objects, gens)
    except CatkError as e:
        raise _semantic(e, d.locate(e.ids, "gen", "obj")) from None
    return sig, d.spans


def _parse_functor(text, name, base_dir):
    d = _Decls()
    header = None
    objs, mors = [], []
    for line in _lines(text):
        if header is None:
            _keyword(line, ("functor",))
            fname, span = line.ident("functor name")
            line.lit(":")
            src, _ = line.token("source file")
            line.lit("->")
            tgt, _ = line.token("target file")
            line.end()
            header = (fname, src, tgt)
            d.spans["functor", fname] = span
            continue
        kw = _keyword(line, ("obj", "mor"))
        x, span = line.ident("object name" if kw == "obj" else "morphism name")
        line.lit("|->")
        y, _ = line.ident("object name" if kw == "obj" else "morphism name")
        line.end()
        d.add((kw, x), span, "object image" if kw == "obj" else "morphism image")
        (objs if kw == "obj" else mors).append((x, y))
    if header is None:
        raise DslSyntaxError(1, 1, "'functor' header")
    decl = FunctorDecl(header[0], header[1], header[2], tuple(objs), tuple(mors))
    if base_dir is not None:
        decl = resolve_functor(decl, base_dir, d.spans)
    return decl, d.spans


def resolve_functor(decl: FunctorDecl, base_dir, spans=None) -> FunctorDecl:
    """Load the two category files and build the functor they describe."""
    spans = spans or {}
    base = FsPath(base_dir)
    cats = []
    for p in (decl.source_path, decl.target_path):
        doc = load_document(base / p)
        if doc.kind != "category":
            raise SemanticError(
                UnknownObject(f"{p} is a {doc.kind} file, not a category", p),
                [spans.get(("functor", decl.name), (1, 1))],
            )
        cats.append(doc.payload)
    C, D = cats
    for x, _ in decl.obj_map:
        if x not in C.identities:
            raise SemanticError(UnknownObject(f"{x} is not an object of the source", x), [spans.get(("obj", x))])
    for f, _ in decl.mor_map:
        if f not in C.src:
            raise SemanticError(UnknownMorphism(f"{f} is not a morphism of the source", f), [spans.get(("mor", f))])
    try:
        F = make_functor(C, D, dict(decl.obj_map), dict(decl.mor_map), name=decl.name)
    except CatkError as e:
        found = []
        for i in e.ids:
            s = spans.get(("mor", i)) or spans.get(("obj", i))
            if s and s not in found:
                found.append(s)
        raise _semantic(e, found) from None
    return FunctorDecl(decl.name, decl.source_path, decl.target_path, decl.obj_map, decl.mor_map, F)


def _parse_assignment(text, name):
    d = _Decls()
    nodes, edges = [], []
    for line in _lines(text):
        kw = _keyword(line, ("node", "edge"))
        x, span = line.ident("node name" if kw == "node" else "edge name")
        line.lit("=")
        if kw == "node":
            n = line.integer("set size")
            line.end()
            if n < 0:
                raise SemanticError(ValueError(f"node {x} has negative size {n}"), [span])
            d.add(("node", x), span, "node")
            nodes.append((x, n))
        else:
            t = line.table()
            line.end()
            d.add(("edge", x), span, "edge")
            edges.append((x, t))
    return Assignment(tuple(nodes), tuple(edges)), d.spans


def parse_document(text: str, kind: str | None = None, name: str = "", base_dir=None) -> Document:
    """Parse ``text`` as a document of ``kind`` (sniffed from the keywords if omitted).

    A functor document is resolved against its category files only when
    ``base_dir`` is given.
    """
    kind = kind or sniff_kind(text)
    if kind == "category":
        payload, spans = _parse_category(text, name)
    elif kind == "quiver":
        payload, spans = _parse_quiver(text, name)
    elif kind == "signature":
        payload, spans = _parse_signature(text, name)
    elif kind == "functor":
        payload, spans = _parse_functor(text, name, base_dir)
    elif kind == "assignment":
        payload, spans = _parse_assignment(text, name)
    else:
        raise ValueError(f"unknown document kind {kind!r}")
    return Document(kind, payload, spans, name)


def load_document(path, kind: str | None = None) -> Document:
    path = FsPath(path)
    kind = kind or SUFFIXES.get(path.suffix)
    text = path.read_text()
    try:
        return parse_document(text, kind, name=path.stem, base_dir=path.parent)
    except (DslSyntaxError, SemanticError) as e:
        if getattr(e, "path", None) is None:
            e.path = str(path)
        raise


def _print_category(cat: FinCategory) -> list:
    lines = ["objects: " + ", ".join(cat.objects) if cat.objects else "objects:"]
    for a in cat.objects:
        if cat.identities[a] != f"id_{a}":
            raise ValueError(f"identity of {a} must be named id_{a} to print")
    free = cat.non_identities()
    lines += [f"mor {f} : {cat.src[f]} -> {cat.tgt[f]}" for f in free]
    lines += [f"comp {f} {g} = {cat.comp[f, g]}" for f in free for g in free if (f, g) in cat.comp]
    return lines


def _print_quiver(q: Quiver) -> list:
    lines = ["nodes: " + ", ".join(q.nodes) if q.nodes else "nodes:"]
    return lines + [f"edge {e.name} : {e.src} -> {e.tgt}" for e in q.edges]


def _print_signature(sig: Signature) -> list:
    lines = ["objects: " + ", ".join(sig.gen_objects) if sig.gen_objects else "objects:"]
    return lines + [f"gen {g.name} : {word_str(g.dom)} -> {word_str(g.cod)}" for g in sig.gen_morphisms]


def _print_functor(decl: FunctorDecl) -> list:
    lines = [f"functor {decl.name} : {decl.source_path} -> {decl.target_path}"]
    lines += [f"obj {x} |-> {y}" for x, y in decl.obj_map]
    return lines + [f"mor {f} |-> {g}" for f, g in decl.mor_map]


def _print_assignment(a: Assignment) -> list:
    lines = [f"node {x} = {n}" for x, n in a.nodes]
    return lines + [f"edge {x} = [" + ",".join(map(str, t)) + "]" for x, t in a.edges]


def print_document(doc: Document) -> str:
    printer = {
        "category": _print_category,
        "quiver": _print_quiver,
        "signature": _print_signature,
        "functor": _print_functor,
        "assignment": _print_assignment,
    }[doc.kind]
    return "\n".join(printer(doc.payload)) + "\n"


# string-diagram terms: ';' binds looser than '*'


_TERM_TOKEN = re.compile(r"\s*(?:([A-Za-z0-9_][A-Za-z0-9_']*)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TERM_TOKEN.match(text, pos)
        if m.group(1) is None and m.group(2) is None:
            break
        kind = "name" if m.group(1) is not None else m.group(2)
        start = m.start(1) if m.group(1) is not None else m.start(2)
        toks.append((kind, m.group(1) or m.group(2), start + 1))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


class _TermParser:
    def __init__(self, sig: Signature, text: str):
        self.sig, self.toks, self.i = sig, _tokenize(text), 0

    def peek(self):
        return self.toks[self.i]

    def fail(self, expected):
        _, val, col = self.peek()
        raise DslSyntaxError(1, col, expected, val)

    def take(self, kind, expected=None):
        if self.peek()[0] != kind:
            self.fail(expected or repr(kind))
        t = self.toks[self.i]
        self.i += 1
        return t

    def run(self) -> Diagram:
        d = self.seq()
        if self.peek()[0] != "end":
            self.fail("';', '*' or end of term")
        return d

    def _apply(self, op, d1, d2, col):
        try:
            return op(d1, d2)
        except CatkError as e:
            raise SemanticError(e, [(1, col)]) from None

    def seq(self):
        d = self.par()
        while self.peek()[0] == ";":
            col = self.take(";")[2]
            d = self._apply(compose_diagrams, d, self.par(), col)
        return d

    def par(self):
        d = self.atom()
        while self.peek()[0] == "*":
            col = self.take("*")[2]
            d = self._apply(tensor_diagrams, d, self.atom(), col)
        return d

    def word(self):
        toks = [self.take("name", "object token or 1")]
        while self.peek()[0] == ".":
            self.take(".")
            toks.append(self.take("name", "object token"))
        names = [t[1] for t in toks]
        return (() if names == ["1"] else tuple(names)), toks[0][2]

    def atom(self):
        kind, val, col = self.peek()
        if kind == "(":
            self.take("(")
            d = self.seq()
            self.take(")", "')'")
            return d
        if kind != "name":
            self.fail("generator, id(...), sym(...) or '('")
        self.i += 1
        if val in ("id", "sym") and self.peek()[0] == "(":
            self.take("(")
            w, wcol = self.word()
            if val == "id":
                self.take(")", "')'")
                return self._atomic("identity", wcol, w)
            self.take(",", "','")
            v, _ = self.word()
            self.take(")", "')'")
            return self._atomic("symmetry", wcol, w, v)
        return self._atomic("generator", col, val)

    def _atomic(self, kind, col, *args):
        try:
            return atomic_diagram(self.sig, kind, *args)
        except CatkError as e:
            raise SemanticError(e, [(1, col)]) from None


def parse_term(sig: Signature, text: str) -> Diagram:
    """Parse a diagram term such as ``sym(x,x) ; m`` or ``id(x) * m``."""
    return _TermParser(sig, text).run()


def parse_path(text: str):
    """``f;g;h`` gives the steps, ``@A`` the empty path at ``A``: returns ``(steps, anchor)``."""
    line = _Line(text, 1)
    if line.at("@"):
        line.lit("@")
        a, _ = line.ident("object name")
        line.end()
        return (), a
    steps = [line.ident("morphism name")[0]]
    while line.at(";"):
        line.lit(";")
        steps.append(line.ident("morphism name")[0])
    line.end()
    return tuple(steps), None
