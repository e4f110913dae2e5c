"""The ``catk`` command-line tool.

Exit status: 0 when a check finds nothing or a query succeeds, 1 on law
violations, empty search results or a false answer, 2 on usage, parse or
semantic errors. ``--format json`` prints ``{ok, results, violations}`` with
sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import CatkError, DslSyntaxError, MissingProduct, MissingTerminal, SemanticError
from .dsl import Document, load_document, parse_path, parse_term, print_document
from .finset import evaluate_free_functor, finset_products_monoidal
from .functor import cat_category, check_functor_laws, check_naturality, enumerate_functors, make_nat_trans
from .kernel import MorPath, check_category_laws, commutes, compose, opposite_category
from .monoidal import (
    check_interchange,
    check_monoidal_structure,
    check_symmetric_structure,
    monoidal_from_products,
    product_braiding,
)
from .quiver import Path, hom_paths
from .report import LawReport, label
from .smc_free import check_free_smc_laws, diagrams_equal, enumerate_homs, parse_word, serialize
from .universal import find_coproducts, find_initials, find_products, find_terminals


class UsageError(CatkError):
    pass


class Outcome:
    def __init__(self, ok=True, results=(), violations=None, lines=None):
        self.ok = ok
        self.results = list(results)
        self.violations = violations if violations is not None else LawReport()
        self.lines = lines

    @classmethod
    def from_report(cls, report: LawReport, results=(), lines=None):
        return cls(report.ok, results, report, lines)

    def to_json(self) -> str:
        body = {"ok": self.ok, "results": self.results, "violations": self.violations.to_json()}
        return json.dumps(body, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        out = [f"{v.law}: {v.detail}" for v in self.violations]
        if self.lines is not None:
            out += self.lines
        else:
            out += [r if isinstance(r, str) else json.dumps(r, sort_keys=True) for r in self.results]
        if not out:
            out = ["ok" if self.ok else "none"]
        return "\n".join(out) + "\n"


def _load(path, kind) -> Document:
    doc = load_document(path)
    if doc.kind != kind:
        raise UsageError(f"{path}: expected a {kind} file, got a {doc.kind} file")
    return doc


def _category(path):
    return _load(path, "category").payload


def _functor(path):
    return _load(path, "functor").payload.functor


def _bool(value: bool) -> Outcome:
    return Outcome(value, [value], lines=["true" if value else "false"])


def _found(items, lines) -> Outcome:
    return Outcome(bool(items), items, lines=lines)


def cmd_check(a):
    return Outcome.from_report(check_category_laws(_category(a.file)))


def cmd_check_functor(a):
    return Outcome.from_report(check_functor_laws(_functor(a.file)))


def cmd_check_natural(a):
    F, G = _functor(a.source), _functor(a.target)
    comps = {}
    for item in a.component:
        obj, sep, mor = item.partition("=")
        if not sep or not obj or not mor:
            raise UsageError(f"component {item!r} is not of the form OBJECT=MORPHISM")
        comps[obj.strip()] = mor.strip()
    return Outcome.from_report(check_naturality(make_nat_trans(F, G, comps)))


def cmd_compose(a):
    h = compose(_category(a.file), a.f, a.g)
    return Outcome(True, [label(h)])


def _mor_path(text):
    steps, anchor = parse_path(text)
    return MorPath(steps, anchor)


def cmd_commutes(a):
    return _bool(commutes(_category(a.file), _mor_path(a.path1), _mor_path(a.path2)))


def cmd_opposite(a):
    cat = _category(a.file)
    lines = print_document(Document("category", opposite_category(cat))).splitlines()
    return Outcome(True, lines, lines=lines)


def cmd_paths(a):
    q = _load(a.file, "quiver").payload
    ps = hom_paths(q, a.a, a.b, a.max_len)
    if a.count:
        return Outcome(True, [len(ps)], lines=[str(len(ps))])
    return Outcome(True, [str(p) for p in ps])


def cmd_free_eval(a):
    q = _load(a.quiver, "quiver").payload
    asg = _load(a.assignment, "assignment").payload
    steps, anchor = parse_path(a.path)
    f = evaluate_free_functor(q, asg.node_sizes(), asg.edge_tables(), steps or Path(anchor))
    return Outcome(True, [list(f.table)], lines=[str(f)])


def cmd_terminal(a):
    found = [label(w.object) for w in find_terminals(_category(a.file))]
    return _found(found, found)


def cmd_initial(a):
    found = [label(w.object) for w in find_initials(_category(a.file))]
    return _found(found, found)


def cmd_product(a):
    ws = find_products(_category(a.file), a.a, a.b)
    results = [{"apex": label(w.apex), "proj_l": label(w.proj_l), "proj_r": label(w.proj_r)} for w in ws]
    return _found(results, [f"{r['apex']} {r['proj_l']} {r['proj_r']}" for r in results])


def cmd_coproduct(a):
    ws = find_coproducts(_category(a.file), a.a, a.b)
    results = [{"apex": label(w.apex), "inj_l": label(w.inj_l), "inj_r": label(w.inj_r)} for w in ws]
    return _found(results, [f"{r['apex']} {r['inj_l']} {r['inj_r']}" for r in results])


def _monoidal(a):
    if a.finset is not None:
        if a.file is not None:
            raise UsageError("give either a category file or --finset, not both")
        return finset_products_monoidal(a.finset)
    if a.file is None:
        raise UsageError("a category file or --finset CAP is required")
    return monoidal_from_products(_category(a.file))


def cmd_monoidal_from_products(a):
    M = monoidal_from_products(_category(a.file))
    obs = M.objects()
    tensor = {f"{label(x)}*{label(y)}": label(M.t(x, y)) for x in obs for y in obs}
    lines = [f"unit: {label(M.unit)}", f"strict: {str(M.strict).lower()}"]
    lines += [f"{k} = {v}" for k, v in tensor.items()]
    return Outcome(True, [{"strict": M.strict, "tensor": tensor, "unit": label(M.unit)}], lines=lines)


def cmd_check_monoidal(a):
    M = _monoidal(a)
    report = check_monoidal_structure(M).extend(check_interchange(M))
    return Outcome.from_report(report)


def cmd_check_symmetric(a):
    M = _monoidal(a)
    report = check_monoidal_structure(M).extend(check_interchange(M))
    report.extend(check_symmetric_structure(M, product_braiding(M)))
    return Outcome.from_report(report)


def cmd_cat(a):
    cats = [_category(p) for p in a.files]
    C = cat_category(cats)
    results = [
        {"source": x, "target": y, "functors": len(C.hom(x, y))} for x in C.objects for y in C.objects
    ]
    lines = [f"{r['source']} -> {r['target']}: {r['functors']}" for r in results]
    return Outcome.from_report(check_category_laws(C), results, lines)


def cmd_functors(a):
    fs = enumerate_functors(_category(a.source), _category(a.target))
    if a.count:
        return Outcome(True, [len(fs)], lines=[str(len(fs))])
    return Outcome(True, [str(F) for F in fs])


def _signature(path):
    return _load(path, "signature").payload


def cmd_smc_equal(a):
    sig = _signature(a.file)
    return _bool(diagrams_equal(parse_term(sig, a.term1), parse_term(sig, a.term2)))


def cmd_smc_enum(a):
    sig = _signature(a.file)
    w1, w2 = sig.check_word(parse_word(a.dom)), sig.check_word(parse_word(a.cod))
    ds = enumerate_homs(sig, w1, w2, a.max_boxes)
    if a.count:
        return Outcome(True, [len(ds)], lines=[str(len(ds))])
    return Outcome(True, [serialize(d) for d in ds])


def cmd_smc_check(a):
    sig = _signature(a.file)
    return Outcome.from_report(check_free_smc_laws(sig, a.max_boxes, a.max_word))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="catk", description="Check and search finite categorical structures.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    verb("check", cmd_check, "category laws").add_argument("file")
    verb("check-functor", cmd_check_functor, "functor laws").add_argument("file")
    p = verb("check-natural", cmd_check_natural, "naturality of components between two functors")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--component", action="append", default=[], metavar="OBJ=MOR")
    p = verb("compose", cmd_compose, "look up f ; g")
    p.add_argument("file")
    p.add_argument("f")
    p.add_argument("g")
    p = verb("commutes", cmd_commutes, "do two paths (f;g or @A) compose to the same morphism")
    p.add_argument("file")
    p.add_argument("path1")
    p.add_argument("path2")
    verb("opposite", cmd_opposite, "print the opposite category").add_argument("file")
    p = verb("paths", cmd_paths, "paths between two nodes of a quiver")
    p.add_argument("file")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--count", action="store_true")
    p = verb("free-eval", cmd_free_eval, "evaluate a path under an edge-table assignment")
    p.add_argument("quiver")
    p.add_argument("assignment")
    p.add_argument("path")
    verb("terminal", cmd_terminal, "terminal objects").add_argument("file")
    verb("initial", cmd_initial, "initial objects").add_argument("file")
    for name, fn in (("product", cmd_product), ("coproduct", cmd_coproduct)):
        p = verb(name, fn, f"{name} witnesses of two objects")
        p.add_argument("file")
        p.add_argument("a")
        p.add_argument("b")
    verb("monoidal-from-products", cmd_monoidal_from_products, "cartesian monoidal structure").add_argument("file")
    for name, fn in (("check-monoidal", cmd_check_monoidal), ("check-symmetric", cmd_check_symmetric)):
        p = verb(name, fn, "coherence of the product-induced structure")
        p.add_argument("file", nargs="?")
        p.add_argument("--finset", type=int, metavar="CAP", help="use finite sets of size at most CAP")
    verb("cat", cmd_cat, "category of the given categories and their functors").add_argument("files", nargs="+")
    p = verb("functors", cmd_functors, "enumerate functors")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--count", action="store_true")
    p = verb("smc-equal", cmd_smc_equal, "equality of two diagram terms")
    p.add_argument("file")
    p.add_argument("term1")
    p.add_argument("term2")
    p = verb("smc-enum", cmd_smc_enum, "enumerate distinct diagrams between two words")
    p.add_argument("file")
    p.add_argument("dom")
    p.add_argument("cod")
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--count", action="store_true")
    p = verb("smc-check", cmd_smc_check, "sweep the symmetric monoidal laws")
    p.add_argument("file")
    p.add_argument("--max-boxes", type=int, default=2)
    p.add_argument("--max-word", type=int, default=4)
    return parser


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        stderr.write(parser.format_usage())
        print(f"catk: error: {e}", file=stderr)
        return 2
    except SystemExit as e:  # --help
        return e.code if isinstance(e.code, int) else 0
    try:
        out = args.fn(args)
    except (MissingProduct, MissingTerminal) as e:
        print(f"catk: {e}", file=stderr)
        out = Outcome(False)
    except (DslSyntaxError, SemanticError) as e:
        where = getattr(e, "path", None)
        print(f"catk: {where}: {e}" if where else f"catk: {e}", file=stderr)
        return 2
    except (CatkError, OSError, ValueError, KeyError) as e:
        print(f"catk: error: {type(e).__name__}: {e}", file=stderr)
        return 2
    stdout.write(out.to_json() if args.format == "json" else out.to_text())
    return 0 if out.ok else 1


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
