"""Independent reference implementations used to cross-check the library.

Nothing here calls into the code under test except to read plain data off
its values (tables, edge lists, wiring tuples).
"""
import itertools
import math

import networkx as nx
import numpy as np


def adjacency_path_count(nodes, edges, a, b, max_len):
    """Sum of (A^k)[a, b] for k <= max_len, A the edge-count matrix."""
    idx = {n: i for i, n in enumerate(nodes)}
    A = np.zeros((len(nodes), len(nodes)), dtype=np.int64)
    for _, s, t in edges:
        A[idx[s], idx[t]] += 1
    total, P = 0, np.eye(len(nodes), dtype=np.int64)
    for _ in range(max_len + 1):
        total += int(P[idx[a], idx[b]])
        P = P @ A
    return total


def table_law_failures(objects, src, tgt, ident, comp):
    """Plain-loop category law check over a composition dict ``(f, g) -> h``."""
    mors = list(src)
    bad = []
    for f in mors:
        if comp[(ident[src[f]], f)] != f:
            bad.append(("left", f))
        if comp[(f, ident[tgt[f]])] != f:
            bad.append(("right", f))
    for f, g, h in itertools.product(mors, repeat=3):
        if tgt[f] == src[g] and tgt[g] == src[h]:
            if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                bad.append(("assoc", f, g, h))
    return bad


def brute_force_functor_count(C, D):
    """Count every raw (object map, morphism map) pair that respects typing,
    identities and composition, by listing all of them."""
    c_obs, c_mors = list(C.objects), list(C.morphisms)
    count = 0
    for omap in itertools.product(D.objects, repeat=len(c_obs)):
        om = dict(zip(c_obs, omap))
        for mmap in itertools.product(D.morphisms, repeat=len(c_mors)):
            mm = dict(zip(c_mors, mmap))
            if any(D.src[mm[f]] != om[C.src[f]] or D.tgt[mm[f]] != om[C.tgt[f]] for f in c_mors):
                continue
            if any(mm[C.identities[a]] != D.identities[om[a]] for a in c_obs):
                continue
            if any(D.comp[(mm[f], mm[g])] != mm[h] for (f, g), h in C.comp.items()):
                continue
            count += 1
    return count


def compose_tables(f, g):
    """f then g on plain lists."""
    return [g[x] for x in f]


def all_tables(m, n):
    return [list(t) for t in itertools.product(range(n), repeat=m)]


def permutation_count(n):
    return math.factorial(n)


def diagram_graph(d):
    """Labelled directed graph of a diagram, built straight from its wiring tuple.

    Boundary ports become nodes labelled by side and position; each box
    becomes a node labelled by generator name, with one node per box port so
    that port positions are part of the structure.
    """
    G = nx.DiGraph()
    for i in range(len(d.dom)):
        G.add_node(("in", i), label=("in", i, d.dom[i]))
    for k in range(len(d.cod)):
        G.add_node(("cod", k), label=("cod", k, d.cod[k]))
    for b, g in enumerate(d.boxes):
        G.add_node(("box", b), label=("box", g.name))
        for j in range(len(g.dom)):
            G.add_node(("arg", b, j), label=("arg", j))
            G.add_edge(("arg", b, j), ("box", b))
        for j in range(len(g.cod)):
            G.add_node(("out", b, j), label=("out", j))
            G.add_edge(("box", b), ("out", b, j))
    in_ports = [("cod", k) for k in range(len(d.cod))]
    for b, g in enumerate(d.boxes):
        in_ports += [("arg", b, j) for j in range(len(g.dom))]
    for p, q in zip(in_ports, d.wiring):
        G.add_edge(q, p)
    return G


def diagrams_isomorphic(d1, d2):
    if d1.dom != d2.dom or d1.cod != d2.cod or len(d1.boxes) != len(d2.boxes):
        return False
    return nx.is_isomorphic(
        diagram_graph(d1), diagram_graph(d2), node_match=lambda x, y: x["label"] == y["label"]
    )


def permutation_of(d):
    """For a box-free diagram, the map codomain position -> domain position."""
    assert not d.boxes
    return tuple(q[1] for q in d.wiring)
