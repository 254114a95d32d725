import itertools
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cpgraphs import (
    Edge,
    EdgeSet,
    Graph,
    GraphError,
    VertexCapExceeded,
    add_twin,
    complement,
    connected_components,
    contract_edge,
    contract_set,
    induced_subgraph,
)
from cpgraphs.enumeration import are_isomorphic
from cpgraphs.families import clique, hole, path, random_graph

from helpers import graphs, relabel


def test_edge_normalizes_order():
    assert Edge(3, 1) == (1, 3)
    assert Edge(1, 3).u == 1 and Edge(1, 3).v == 3
    with pytest.raises(GraphError):
        Edge(2, 2)


def test_edgeset_matching_flag():
    assert EdgeSet.of([(0, 1), (2, 3)]).is_matching
    assert not EdgeSet.of([(0, 1), (1, 2)]).is_matching
    assert EdgeSet.of([]).is_matching


def test_graph_construction_validates():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(VertexCapExceeded):
        Graph(65)
    g = Graph(3, [(0, 1), (1, 2)])
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.edge_count == 2
    assert g.edges() == [Edge(0, 1), Edge(1, 2)]


def test_complement_of_c5_is_c5():
    c5 = hole(5)
    co = complement(c5)
    assert sorted(co.degree(v) for v in range(5)) == [2, 2, 2, 2, 2]
    assert are_isomorphic(co, c5)


def test_complement_of_clique_is_empty():
    assert complement(clique(4)).edge_count == 0


@given(graphs(max_n=12))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=8), st.integers(0, 255))
def test_induced_subgraph_commutes_with_complement(g, pick):
    vs = [v for v in range(g.n) if (pick >> v) & 1]
    assert complement(induced_subgraph(g, vs)).masks == \
        induced_subgraph(complement(g), vs).masks


def test_induced_subgraph_of_c6_is_path():
    c6 = hole(6)
    p5 = path(5)
    for drop in range(6):
        sub = induced_subgraph(c6, [v for v in range(6) if v != drop])
        assert are_isomorphic(sub, p5)


def test_induced_subgraph_identity_and_empty():
    g = random_graph(6, Random(1), 0.5)
    assert induced_subgraph(g, range(6)) == g
    assert induced_subgraph(g, []).n == 0
    with pytest.raises(GraphError):
        induced_subgraph(g, [7])


def test_induced_subgraph_keeps_labels():
    g = path(4)
    sub = induced_subgraph(g, [1, 3])
    assert sub.labels == (frozenset({1}), frozenset({3}))


def test_contract_edge_examples():
    assert are_isomorphic(contract_edge(hole(4), (0, 1)), clique(3))
    assert are_isomorphic(contract_edge(hole(6), (2, 3)), hole(5))
    assert are_isomorphic(contract_edge(clique(4), (1, 3)), clique(3))
    with pytest.raises(GraphError):
        contract_edge(hole(6), (0, 2))  # not an edge


def test_contract_edge_merges_labels():
    g = contract_edge(path(3), (1, 2))
    assert g.labels == (frozenset({0}), frozenset({1, 2}))
    assert g.vertex_with_label(2) == 1


def test_contract_set_examples():
    c6 = hole(6)
    assert are_isomorphic(contract_set(c6, [(0, 1), (3, 4)]), hole(4))
    assert contract_set(c6, []) == c6
    assert contract_set(path(4), [(0, 1), (1, 2), (2, 3)]).n == 1


def test_contract_set_component_collapse():
    # a triangle of contraction edges collapses to one vertex
    g = clique(4)
    got = contract_set(g, [(0, 1), (1, 2), (0, 2)])
    assert got.n == 2 and got.adjacent(0, 1)
    assert got.labels[0] == frozenset({0, 1, 2})


def test_contract_set_order_independent():
    rng = Random(5)
    for _ in range(60):
        g = random_graph(rng.randint(2, 7), rng, 0.6)
        edges = g.edges()
        if not edges:
            continue
        f = rng.sample(edges, min(len(edges), rng.randint(1, 4)))
        base = contract_set(g, f)
        for perm in itertools.permutations(f):
            step = g
            for e in perm:
                # follow the edge through earlier merges via its labels
                u = step.vertex_with_label(min(g.labels[e.u]))
                v = step.vertex_with_label(min(g.labels[e.v]))
                if u == v:
                    continue
                step = contract_edge(step, (u, v))
            assert step == base


def test_contraction_reduces_by_spanning_forest_size():
    rng = Random(11)
    for _ in range(40):
        g = random_graph(rng.randint(2, 8), rng, 0.5)
        edges = g.edges()
        if not edges:
            continue
        f = rng.sample(edges, rng.randint(1, min(4, len(edges))))
        ends = set()
        for e in f:
            ends.add(e.u)
            ends.add(e.v)
        fgraph = Graph(g.n, f)
        comps = [c for c in connected_components(fgraph) if len(c) > 1]
        forest_edges = sum(len(c) - 1 for c in comps)
        assert contract_set(g, f).n == g.n - forest_edges


def test_add_twin_examples():
    k2 = clique(2)
    assert are_isomorphic(add_twin(k2, 0, True), clique(3))
    assert are_isomorphic(add_twin(k2, 0, False), path(3))
    with pytest.raises(GraphError):
        add_twin(k2, 5, True)


@given(graphs(min_n=1, max_n=8), st.booleans(), st.integers(0, 7))
def test_twin_neighbourhood_equation_and_removal(g, kind, pick):
    v = pick % g.n
    tw = add_twin(g, v, kind)
    t = g.n
    if kind:
        assert tw.masks[t] | (1 << t) == tw.masks[v] | (1 << v)  # closed equal
    else:
        assert tw.masks[t] == tw.masks[v]  # open equal
    assert induced_subgraph(tw, range(g.n)) == g


def test_connected_components_examples():
    assert connected_components(hole(6)) == [[0, 1, 2, 3, 4, 5]]
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert connected_components(two) == [[0, 1, 2], [3, 4, 5]]
    assert connected_components(Graph(0)) == []


def test_isomorphism_under_relabelling():
    rng = Random(2)
    for _ in range(30):
        g = random_graph(rng.randint(1, 8), rng, 0.5)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert are_isomorphic(g, relabel(g, perm))
