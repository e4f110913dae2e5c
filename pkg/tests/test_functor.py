import itertools

import pytest

from catk.errors import CapExceeded, DuplicateId, IllTypedEdgeImage, NotComposable, SourceTargetMismatch
from catk.examples import ab_quiver, chain, discrete, parallel, s3, trivial, walking_arrow, z2
from catk.functor import (
    FunctorData,
    cat_category,
    check_functor_laws,
    check_naturality,
    compose_functors,
    enumerate_functors,
    free_functor_extend,
    identity_functor,
    identity_transformation,
    make_functor,
    make_nat_trans,
)
from catk.kernel import build_fin_category, check_category_laws
from catk.quiver import free_category, hom_paths, path_compose

from oracles import brute_force_functor_count

SMALL = [trivial(), walking_arrow(), z2(), discrete(2), chain(), parallel()]


def test_identity_and_constant_functors():
    for C in SMALL + [s3()]:
        assert check_functor_laws(identity_functor(C)).ok
    arrow = walking_arrow()
    const = make_functor(arrow, arrow, {"A": "B", "B": "B"}, {"f": "id_B"})
    assert check_functor_laws(const).ok


def test_functor_composition_violation():
    ZZ = z2()
    F = make_functor(walking_arrow(), ZZ, {"A": "pt", "B": "pt"}, {"f": "s"})
    assert check_functor_laws(F).ok
    G = make_functor(chain(), ZZ, {"A": "pt", "B": "pt", "C": "pt"}, {"f": "s", "g": "s", "fg": "s"})
    report = check_functor_laws(G)
    assert [(v.law, v.witnesses) for v in report] == [("functor-composition", ("f", "g"))]


def test_make_functor_rejects_ill_typed():
    arrow = walking_arrow()
    with pytest.raises(SourceTargetMismatch):
        make_functor(arrow, arrow, {"A": "B", "B": "A"}, {"f": "f"})
    with pytest.raises(SourceTargetMismatch):
        make_functor(arrow, arrow, {"A": "A"}, {"f": "f"})
    with pytest.raises(SourceTargetMismatch):
        make_functor(arrow, arrow, {"A": "A", "B": "B"}, {})


def test_compose_functors_unit_and_associativity():
    arrow = walking_arrow()
    fs = enumerate_functors(arrow, arrow)
    Id = identity_functor(arrow)
    for F in fs:
        assert compose_functors(F, Id) == F
        assert compose_functors(Id, F) == F
    for F, G, H in itertools.product(fs, repeat=3):
        assert compose_functors(compose_functors(F, G), H) == compose_functors(F, compose_functors(G, H))
        assert check_functor_laws(compose_functors(F, G)).ok
    with pytest.raises(NotComposable):
        compose_functors(identity_functor(z2()), Id)


def test_inclusion_then_collapse_is_constant():
    arrow, T = walking_arrow(), trivial()
    inc = make_functor(T, arrow, {"pt": "A"}, {})
    collapse = make_functor(arrow, T, {"A": "pt", "B": "pt"}, {"f": "id_pt"})
    direct = make_functor(T, T, {"pt": "pt"}, {})
    assert compose_functors(inc, collapse) == direct


def test_enumeration_examples():
    arrow, T = walking_arrow(), trivial()
    fs = enumerate_functors(arrow, arrow)
    assert [(F.obj("A"), F.obj("B")) for F in fs] == [("A", "A"), ("A", "B"), ("B", "B")]
    for C in SMALL:
        assert len(enumerate_functors(C, T)) == 1
    assert len(enumerate_functors(T, arrow)) == 2


@pytest.mark.parametrize("C,D", list(itertools.product(SMALL, repeat=2)), ids=lambda c: c.name)
def test_enumeration_matches_brute_force(C, D):
    fs = enumerate_functors(C, D)
    assert len(fs) == brute_force_functor_count(C, D)
    assert len(set(fs)) == len(fs)
    assert all(check_functor_laws(F).ok for F in fs)


def test_rejected_maps_fail_a_law():
    for C, D in [(chain(), z2()), (parallel(), parallel()), (z2(), z2()), (walking_arrow(), parallel())]:
        accepted = set(enumerate_functors(C, D))
        for omap in itertools.product(D.objects, repeat=len(C.objects)):
            om = dict(zip(C.objects, omap))
            choices = [D.hom(om[C.src[f]], om[C.tgt[f]]) for f in C.morphisms]
            for mm in itertools.product(*choices):
                F = FunctorData(C, D, om, dict(zip(C.morphisms, mm)))
                assert (F in accepted) == check_functor_laws(F).ok


def test_cat_category():
    T, arrow = trivial(), walking_arrow()
    C = cat_category([T, arrow])
    assert len(C.hom("trivial", "arrow")) == 2
    assert len(C.hom("arrow", "trivial")) == 1
    big = cat_category([T, arrow, z2()])
    assert check_category_laws(big).ok
    empty = cat_category([])
    assert empty.objects == () and empty.morphisms == ()
    with pytest.raises(CapExceeded):
        cat_category([T, arrow, z2()], cap=5)
    with pytest.raises(DuplicateId):
        cat_category([T, T])


def test_free_functor_extend_examples():
    q, ZZ = ab_quiver(), z2()
    F = free_functor_extend(q, ZZ, {"A": "pt", "B": "pt"}, {"a": "s", "b": "s"})
    for e in q.edges:
        assert F.mor(hom_paths(q, e.src, e.tgt, 1)[-1]) == "s"
    P = free_category(q)
    assert F.mor(P.identity("A")) == "e"
    abab = hom_paths(q, "A", "A", 4)[-1]
    assert abab.steps == ("a", "b", "a", "b") and F.mor(abab) == "e"
    assert check_functor_laws(F, 4).ok
    with pytest.raises(IllTypedEdgeImage):
        free_functor_extend(q, walking_arrow(), {"A": "A", "B": "B"}, {"a": "f", "b": "f"})


def test_free_functor_extend_is_unique():
    # every path assignment into Z/2 that agrees on edges and respects
    # identities and composition (paths up to length 3) is the extension
    q, ZZ = ab_quiver(), z2()
    nodes = {"A": "pt", "B": "pt"}
    edges = {"a": "s", "b": "s"}
    F = free_functor_extend(q, ZZ, nodes, edges)
    paths = [p for x in q.nodes for y in q.nodes for p in hom_paths(q, x, y, 3)]
    survivors = []
    for vals in itertools.product(ZZ.morphisms, repeat=len(paths)):
        m = dict(zip(paths, vals))
        if any(m[p] != edges[p.steps[0]] for p in paths if len(p) == 1):
            continue
        if any(m[p] != "e" for p in paths if len(p) == 0):
            continue
        if all(
            m[path_compose(p, r)] == ZZ.compose(m[p], m[r])
            for p in paths for r in paths
            if p.end == r.anchor and len(p) + len(r) <= 3
        ):
            survivors.append(m)
    assert survivors == [{p: F.mor(p) for p in paths}]


def test_naturality_examples():
    arrow = walking_arrow()
    for F in enumerate_functors(arrow, arrow):
        assert check_naturality(identity_transformation(F)).ok
    # poset-valued target: any typed family is natural
    from catk.examples import divisor_poset
    d = divisor_poset(12)
    F = make_functor(arrow, d, {"A": "2", "B": "4"}, {"f": "m2_4"})
    G = make_functor(arrow, d, {"A": "6", "B": "12"}, {"f": "m6_12"})
    assert check_naturality(make_nat_trans(F, G, {"A": "m2_6", "B": "m4_12"})).ok


def test_naturality_breaks_exactly_one_square():
    P = parallel()
    Id = identity_functor(P)
    t = make_nat_trans(Id, Id, {"A": "id_A", "B": "h"})
    report = check_naturality(t)
    assert [(v.law, v.witnesses) for v in report] == [("naturality", ("g",))]


def test_naturality_component_mutation():
    # mutating any single component of the identity transformation on the
    # parallel fixture breaks some square
    P = parallel()
    Id = identity_functor(P)
    base = {a: P.identities[a] for a in P.objects}
    mutated = 0
    for a in P.objects:
        for m in P.hom(a, a):
            if m == base[a]:
                continue
            t = make_nat_trans(Id, Id, {**base, a: m})
            assert not check_naturality(t).ok
            mutated += 1
    assert mutated == 1


def test_central_components_are_natural():
    # Z/2 is commutative, so s is a natural endo-transformation of the identity
    ZZ = z2()
    Id = identity_functor(ZZ)
    assert check_naturality(make_nat_trans(Id, Id, {"pt": "s"})).ok


def test_nat_trans_typing():
    arrow = walking_arrow()
    Id = identity_functor(arrow)
    with pytest.raises(SourceTargetMismatch):
        make_nat_trans(Id, Id, {"A": "f", "B": "id_B"})
    with pytest.raises(SourceTargetMismatch):
        make_nat_trans(Id, identity_functor(z2()), {})


def test_view_source_functor_check_is_bounded():
    q = ab_quiver()
    two = build_fin_category(["X"], [("t", "X", "X")], [("t", "t", "id_X")])
    F = free_functor_extend(q, two, {"A": "X", "B": "X"}, {"a": "t", "b": "t"})
    assert check_functor_laws(F, 3).ok
