"""Small standard categories used by the tests, the docs and the CLI."""
from __future__ import annotations

import itertools

from .kernel import FinCategory, build_fin_category
from .quiver import Quiver, build_finite_monoid, build_quiver, monoid_as_category


def trivial() -> FinCategory:
    return build_fin_category(["pt"], name="trivial")


def walking_arrow() -> FinCategory:
    return build_fin_category(["A", "B"], [("f", "A", "B")], name="arrow")


def discrete(n: int = 2) -> FinCategory:
    return build_fin_category([chr(ord("A") + i) for i in range(n)], name=f"discrete{n}")


def parallel() -> FinCategory:
    """Two parallel arrows ``f, g : A -> B`` and an idempotent ``h : B -> B``."""
    return build_fin_category(
        ["A", "B"],
        [("f", "A", "B"), ("g", "A", "B"), ("h", "B", "B")],
        [("f", "h", "f"), ("g", "h", "f"), ("h", "h", "h")],
        name="parallel",
    )


def chain() -> FinCategory:
    """``A -f-> B -g-> C`` with the composite named ``fg``."""
    return build_fin_category(
        ["A", "B", "C"],
        [("f", "A", "B"), ("g", "B", "C"), ("fg", "A", "C")],
        [("f", "g", "fg")],
        name="chain",
    )


def z2_monoid():
    return build_finite_monoid(
        ["e", "s"], "e", {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}
    )


def z2() -> FinCategory:
    return monoid_as_category(z2_monoid(), name="Z2")


def _perm_name(p) -> str:
    return "e" if p == (0, 1, 2) else "p" + "".join(map(str, p))


def s3_monoid():
    """Permutations of three points; ``p * q`` applies ``p`` first."""
    perms = list(itertools.permutations(range(3)))
    names = {p: _perm_name(p) for p in perms}
    table = {
        (names[p], names[q]): names[tuple(q[p[i]] for i in range(3))] for p in perms for q in perms
    }
    return build_finite_monoid([names[p] for p in perms], "e", table)


def s3() -> FinCategory:
    return monoid_as_category(s3_monoid(), name="S3")


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def divisor_poset(n: int) -> FinCategory:
    """Divisors of ``n`` with a morphism ``a -> b`` iff ``a`` divides ``b``."""
    ds = divisors(n)
    obs = [str(d) for d in ds]

    def name(a, b):
        return f"id_{a}" if a == b else f"m{a}_{b}"

    mors = [(name(a, b), str(a), str(b)) for a in ds for b in ds if a != b and b % a == 0]
    comp = [
        (name(a, b), name(b, c), name(a, c))
        for a in ds for b in ds for c in ds
        if a != b and b != c and b % a == 0 and c % b == 0
    ]
    return build_fin_category(obs, mors, comp, name=f"div{n}")


def ab_quiver() -> Quiver:
    """``a : A -> B`` and ``b : B -> A``."""
    return build_quiver(["A", "B"], [("a", "A", "B"), ("b", "B", "A")])


def law_fixtures() -> list:
    from .monoidal import product_category

    arrow = walking_arrow()
    return [
        trivial(),
        arrow,
        z2(),
        s3(),
        divisor_poset(12),
        divisor_poset(30),
        product_category(arrow, arrow),
    ]
