import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catk.errors import CapExceeded, ComposeDomainMismatch, IllTypedEdgeImage, NotAPath
from catk.examples import ab_quiver
from catk.finset import (
    FinFunction,
    FinSetObj,
    compose_functions,
    evaluate_free_functor,
    fin_function,
    finset_category,
    finset_products_monoidal,
    identity_function,
    pair_witness,
)
from catk.monoidal import check_interchange, check_monoidal_structure, check_symmetric_structure, product_braiding
from catk.quiver import Path, hom_paths, path_compose
from catk.universal import check_product
from catk.views import check_view_laws

from oracles import all_tables, compose_tables

SIZES = range(4)


def _all_functions(m, n):
    return [fin_function(t, n) for t in all_tables(m, n)]


def test_compose_examples():
    f = fin_function([1, 0, 1], 2)
    g = fin_function([2, 0], 3)
    assert compose_functions(f, g).table == (0, 2, 0)
    with pytest.raises(ComposeDomainMismatch):
        compose_functions(f, f)
    with pytest.raises(ValueError):
        fin_function([0, 3], 2)


def test_identity_sweep():
    for m, n in itertools.product(SIZES, repeat=2):
        for f in _all_functions(m, n):
            assert compose_functions(identity_function(m), f) == f
            assert compose_functions(f, identity_function(n)) == f


def test_associativity_sweep_against_oracle():
    for a, b, c, d in itertools.product(SIZES, repeat=4):
        if b ** a * c ** b * d ** c > 5000:
            continue
        for f, g, h in itertools.product(_all_functions(a, b), _all_functions(b, c), _all_functions(c, d)):
            left = compose_functions(compose_functions(f, g), h)
            assert left == compose_functions(f, compose_functions(g, h))
            assert list(left.table) == compose_tables(compose_tables(f.table, g.table), h.table)


def test_view_laws():
    assert check_view_laws(finset_category(), 3).ok


@pytest.mark.parametrize("m,n", list(itertools.product(range(5), repeat=2)))
def test_hom_cardinality(m, n):
    hs = finset_category().hom(FinSetObj(m), FinSetObj(n))
    assert len(hs) == n ** m
    assert len(set(hs)) == len(hs)


def test_hom_budget():
    with pytest.raises(CapExceeded):
        finset_category(budget=100).hom(FinSetObj(5), FinSetObj(3))


def test_pair_witness_is_product():
    C = finset_category()
    for a, b in itertools.product(range(3), repeat=2):
        assert check_product(C, pair_witness(a, b), bound=2).ok


def test_cap_two_monoidal_coherence():
    M = finset_products_monoidal(2)
    assert check_monoidal_structure(M).ok
    assert check_symmetric_structure(M, product_braiding(M)).ok
    assert check_interchange(M).ok


def test_cap_validation():
    with pytest.raises(ValueError):
        finset_products_monoidal(0)
    with pytest.raises(CapExceeded):
        finset_products_monoidal(3, budget=50)


@pytest.mark.slow
def test_cap_three_monoidal_coherence():
    M = finset_products_monoidal(3)
    assert check_monoidal_structure(M).ok
    assert check_symmetric_structure(M, product_braiding(M)).ok
    assert check_interchange(M).ok


SIZES_AB = {"A": 2, "B": 2}
TABLES_AB = {"a": [1, 0], "b": [0, 0]}


def test_evaluate_examples():
    q = ab_quiver()
    assert evaluate_free_functor(q, SIZES_AB, TABLES_AB, ["a", "b"]).table == (0, 0)
    assert evaluate_free_functor(q, SIZES_AB, TABLES_AB, ["a", "b", "a"]).table == (1, 1)
    assert evaluate_free_functor(q, SIZES_AB, TABLES_AB, Path("A")) == identity_function(2)


def test_evaluate_errors():
    q = ab_quiver()
    with pytest.raises(NotAPath):
        evaluate_free_functor(q, SIZES_AB, TABLES_AB, ["a", "a"])
    with pytest.raises(NotAPath):
        evaluate_free_functor(q, SIZES_AB, TABLES_AB, [])
    with pytest.raises(NotAPath):
        evaluate_free_functor(q, SIZES_AB, TABLES_AB, ["c"])
    with pytest.raises(IllTypedEdgeImage):
        evaluate_free_functor(q, SIZES_AB, {"a": [2, 0], "b": [0, 0]}, ["a"])
    with pytest.raises(IllTypedEdgeImage):
        evaluate_free_functor(q, {"A": 2}, TABLES_AB, ["a"])
    with pytest.raises(IllTypedEdgeImage):
        evaluate_free_functor(q, SIZES_AB, {"a": [1, 0]}, ["a"])


def _paths(q, n):
    return [p for x in q.nodes for y in q.nodes for p in hom_paths(q, x, y, n)]


def _functoriality(sizes, tables):
    q = ab_quiver()
    ps = _paths(q, 4)
    for p in ps:
        got = evaluate_free_functor(q, sizes, tables, p)
        assert (got.dom.size, got.cod.size) == (sizes[p.anchor], sizes[p.end])
    for p, r in itertools.product(ps, repeat=2):
        if p.end != r.anchor or len(p) + len(r) > 4:
            continue
        pr = evaluate_free_functor(q, sizes, tables, path_compose(p, r))
        assert pr == compose_functions(
            evaluate_free_functor(q, sizes, tables, p), evaluate_free_functor(q, sizes, tables, r)
        )


def test_functoriality_on_fixture():
    _functoriality(SIZES_AB, TABLES_AB)


@st.composite
def ab_models(draw):
    na, nb = draw(st.integers(1, 3)), draw(st.integers(1, 3))
    a = draw(st.lists(st.integers(0, nb - 1), min_size=na, max_size=na))
    b = draw(st.lists(st.integers(0, na - 1), min_size=nb, max_size=nb))
    return {"A": na, "B": nb}, {"a": a, "b": b}


@given(ab_models())
def test_functoriality_random_models(model):
    sizes, tables = model
    _functoriality(sizes, tables)
    # the composite table agrees with pointwise evaluation
    q = ab_quiver()
    for p in _paths(q, 4):
        got = evaluate_free_functor(q, sizes, tables, p)
        for x in range(sizes[p.anchor]):
            y = x
            for e in p.steps:
                y = tables[e][y]
            assert got(x) == y
