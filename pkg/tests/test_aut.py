import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from oracles import aut_count_numpy, aut_elements_backtrack, random_graph
from vtcert.aut import (_Partition, are_isomorphic, automorphism_group, edge_orbits,
                        equitable_partition, is_arc_transitive, is_edge_transitive, is_equitable,
                        is_vertex_transitive, refine, root_trace)
from vtcert.graph import Graph, bicayley, complete, cycle, disjoint_union, empty, generalized_petersen, lexicographic, line_graph, named, path, x_m1m2t
from vtcert.groups import cyclic
from vtcert.perm import Permutation


def relabel(X, perm):
    return Graph(X.n, [(perm[u], perm[v]) for u, v in X.edges()])


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_c6_order():
    assert automorphism_group(cycle(6)).order() == 12


def test_empty5_order():
    assert automorphism_group(empty(5)).order() == 120


def test_petersen_against_backtracking_oracle():
    X = named("petersen")
    brute = aut_elements_backtrack(X.n, X.edges())
    A = automorphism_group(X)
    assert len(brute) == 120 == A.order()
    assert all(A.contains(Permutation(p)) for p in brute)


def test_single_vertex_and_empty_graph():
    assert automorphism_group(Graph(1)).order() == 1
    with pytest.raises(ValueError):
        automorphism_group(Graph(0))


def test_generators_preserve_edges():
    for X in (named("coxeter"), line_graph(named("desargues")), x_m1m2t(3, 13, 5)[0]):
        A = automorphism_group(X)
        edges = set(X.edges())
        for g in A.generators:
            assert {tuple(sorted((g[u], g[v]))) for u, v in edges} == edges


def test_atlas_sample_against_numpy_oracle():
    # every 7th graph of the <= 7 vertex atlas; the full catalogue runs in the acceptance suite
    for G in nx.graph_atlas_g()[1::7]:
        X = Graph(G.number_of_nodes(), G.edges())
        assert automorphism_group(X).order() == aut_count_numpy(X.n, X.edges())


def test_random_8_vertex_sample():
    rng = random.Random(8)
    for _ in range(15):
        edges = random_graph(8, rng.choice([0.2, 0.5, 0.8]), rng)
        X = Graph(8, edges)
        assert automorphism_group(X).order() == aut_count_numpy(8, edges)


@pytest.mark.parametrize("X,order", [
    (named("desargues"), 240), (named("dodecahedron"), 120), (named("coxeter"), 336),
    (complete(8), 40320), (named("complete_bipartite(4,4)"), 1152),
    (lexicographic(cycle(33), empty(2)), 2 ** 33 * 66), (line_graph(named("petersen")), 120),
    (x_m1m2t(3, 5, 2)[0], 120), (x_m1m2t(3, 13, 5)[0], 312),
], ids=["desargues", "dodecahedron", "coxeter", "K8", "K44", "C33[2K1]", "L(P)", "X352", "X3135"])
def test_known_orders(X, order):
    assert automorphism_group(X).order() == order


@settings(max_examples=60, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabelling_invariance(X, rnd):
    perm = list(range(X.n))
    rnd.shuffle(perm)
    Y = relabel(X, perm)
    assert automorphism_group(Y).order() == automorphism_group(X).order()
    iso = are_isomorphic(X, Y)
    assert iso is not None and X.is_isomorphism_to(Y, iso)
    assert root_trace(X) == root_trace(Y)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_symmetric_and_sound(X, Y):
    a, b = are_isomorphic(X, Y), are_isomorphic(Y, X)
    assert (a is None) == (b is None)
    if a is not None:
        assert X.is_isomorphism_to(Y, a)
    else:
        # cross-check with networkx
        assert not nx.is_isomorphic(_nx(X), _nx(Y))


def _nx(X):
    G = nx.Graph()
    G.add_nodes_from(range(X.n))
    G.add_edges_from(X.edges())
    return G


def test_isomorphism_reflexive_on_catalogue():
    for name in ("petersen", "desargues", "dodecahedron", "coxeter", "octahedron"):
        X = named(name)
        assert are_isomorphic(X, X) is not None


def test_isomorphism_examples():
    P, _ = bicayley(cyclic(5), {1, 4}, {2, 3}, {0})
    assert are_isomorphic(generalized_petersen(5, 2), P) is not None
    assert are_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))) is None
    assert are_isomorphic(line_graph(complete(4)), named("octahedron")) is not None
    assert are_isomorphic(named("desargues"), named("dodecahedron")) is None


def test_different_traces_imply_nonisomorphic():
    X, Y = named("desargues"), named("dodecahedron")
    assert root_trace(X) == root_trace(Y)  # both cubic: degree refinement is blind here
    assert root_trace(path(4)) != root_trace(cycle(4))
    assert are_isomorphic(path(4), cycle(4)) is None


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_refinement_is_equitable(X):
    cells = equitable_partition(X)
    assert sorted(v for c in cells for v in c) == list(range(X.n))
    assert is_equitable(X, cells)


def test_individualized_refinement_is_equitable():
    X = named("petersen")
    P = _Partition.unit(X.n)
    refine(X.adj, P, [0])
    s = P.individualize(0)
    refine(X.adj, P, [s])
    assert is_equitable(X, P.cells())
    assert len(P.cells()) == 3


def test_transitivity_examples():
    P = named("petersen")
    assert is_vertex_transitive(P) and is_edge_transitive(P) and is_arc_transitive(P)
    assert not is_vertex_transitive(path(3))
    assert is_vertex_transitive(lexicographic(cycle(33), empty(2)))
    assert is_arc_transitive(cycle(6))
    assert is_arc_transitive(line_graph(P))


def test_x_graphs_not_arc_transitive():
    X = x_m1m2t(3, 5, 2)[0]
    assert is_vertex_transitive(X)
    assert not is_edge_transitive(X)
    assert not is_arc_transitive(X)
    assert sum(len(o) for o in edge_orbits(X)) == X.m


def test_petersen_stabilizer_on_neighbours():
    A = automorphism_group(named("petersen"))
    S = A.stabilizer(0)
    assert S.order() == 12
    assert set(named("petersen").adj[0]) <= set(S.orbit(named("petersen").adj[0][0]))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_arc_implies_edge_and_vertex(X):
    if is_arc_transitive(X):
        assert is_vertex_transitive(X)
        assert is_edge_transitive(X)
