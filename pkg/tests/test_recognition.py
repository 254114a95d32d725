import itertools
from random import Random

import pytest

from cpgraphs import (
    Edge,
    Graph,
    NotPerfectError,
    add_twin,
    complement,
    contract_edge,
    contract_set,
    diagnose_edge,
    induced_subgraph,
    is_contraction_perfect,
    is_contraction_perfect_forbidden,
    is_contraction_perfect_single_edge,
    is_minimally_non_cp,
    is_perfect,
    recognize_both,
    validate_certificate,
)
from cpgraphs.enumeration import connected_graphs
from cpgraphs.families import (
    antihole,
    antipath,
    clique,
    expanded_antihole,
    hole,
    path,
    random_graph,
)


def test_single_edge_on_c6():
    v = is_contraction_perfect_single_edge(hole(6))
    assert not v.contraction_perfect
    assert v.culprit_edge == Edge(0, 1)  # first edge in ascending order
    host = v.host_graph(hole(6))
    assert validate_certificate(host, v.certificate)
    assert v.certificate.kind == "hole" and len(v.certificate.vertices) == 5


def test_single_edge_on_imperfect_graph_reports_input_witness():
    v = is_contraction_perfect_single_edge(hole(5))
    assert not v.contraction_perfect
    assert v.culprit_edge is None
    assert validate_certificate(hole(5), v.certificate)


def test_antipaths_are_contraction_perfect():
    for n in range(1, 11):
        assert is_contraction_perfect_single_edge(antipath(n)).contraction_perfect
        assert is_contraction_perfect_forbidden(antipath(n)).contraction_perfect


def test_c6_complement_versus_c6():
    assert is_contraction_perfect_single_edge(complement(hole(6))).contraction_perfect
    assert not is_contraction_perfect_single_edge(hole(6)).contraction_perfect


def test_forbidden_on_expanded_antihole():
    v = is_contraction_perfect_forbidden(expanded_antihole(6))
    assert not v.contraction_perfect
    assert v.certificate.kind == "expanded-antihole"
    assert validate_certificate(expanded_antihole(6), v.certificate)


def test_forbidden_on_trees_and_c7():
    tree = Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert is_contraction_perfect_forbidden(tree).contraction_perfect
    v = is_contraction_perfect_forbidden(hole(7))
    assert not v.contraction_perfect
    assert v.certificate.kind == "hole" and len(v.certificate.vertices) == 7


def test_methods_agree_small_exhaustive():
    for n in range(1, 7):
        for g in connected_graphs(n):
            single, forbidden = recognize_both(g)
            assert single.contraction_perfect == forbidden.contraction_perfect


def test_methods_agree_on_disconnected_inputs():
    rng = Random(40)
    for _ in range(120):
        g = random_graph(rng.randint(2, 9), rng, 0.25)
        single, forbidden = recognize_both(g)
        assert single.contraction_perfect == forbidden.contraction_perfect


def test_verdict_certificates_always_validate():
    rng = Random(41)
    for _ in range(150):
        g = random_graph(rng.randint(2, 8), rng, 0.5)
        for v in (
            is_contraction_perfect_single_edge(g),
            is_contraction_perfect_forbidden(g),
        ):
            if v.certificate is not None:
                assert validate_certificate(v.host_graph(g), v.certificate)


def test_diagnose_edge_examples():
    c6 = hole(6)
    cert = diagnose_edge(c6, (0, 1))
    assert cert.kind == "hole" and len(cert.vertices) == 6
    assert validate_certificate(c6, cert)

    g = expanded_antihole(6)
    # the expanded antihole itself is imperfect-free, i.e. perfect
    assert is_perfect(g)
    cert = diagnose_edge(g, (0, 1))
    assert cert.kind == "expanded-antihole"
    assert set(cert.vertices[:2]) == {0, 1}

    for e in clique(4).edges():
        assert diagnose_edge(clique(4), e) is None


def test_diagnose_edge_preconditions():
    with pytest.raises(NotPerfectError):
        diagnose_edge(hole(5), (0, 1))
    from cpgraphs import GraphError

    with pytest.raises(GraphError):
        diagnose_edge(hole(6), (0, 2))


def test_diagnose_edge_matches_reality_exhaustively_small():
    for n in range(2, 7):
        for g in connected_graphs(n):
            if not is_perfect(g):
                continue
            for e in g.edges():
                cert = diagnose_edge(g, e)
                safe = is_perfect(contract_edge(g, e))
                assert (cert is None) == safe
                if cert is None:
                    continue
                assert validate_certificate(g, cert)
                if cert.kind == "hole":
                    assert len(cert.vertices) >= 6
                    assert len(cert.vertices) % 2 == 0
                    assert e.u in cert.vertices and e.v in cert.vertices
                else:
                    assert set(cert.vertices[:2]) == {e.u, e.v}


def test_minimally_non_cp_examples():
    assert is_minimally_non_cp(hole(5))
    assert is_minimally_non_cp(expanded_antihole(6))
    assert is_minimally_non_cp(antihole(7))
    pendant = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
    assert not is_minimally_non_cp(pendant)  # deleting the pendant leaves C6
    assert not is_minimally_non_cp(path(4))  # contraction perfect already


def test_contraction_perfect_is_hereditary():
    rng = Random(90)
    checked = 0
    for _ in range(200):
        g = random_graph(rng.randint(2, 8), rng, 0.3)
        if not is_contraction_perfect(g):
            continue
        checked += 1
        for v in range(g.n):
            rest = [u for u in range(g.n) if u != v]
            assert is_contraction_perfect(induced_subgraph(g, rest))
    assert checked > 20


def test_twins_preserve_contraction_perfection():
    rng = Random(91)
    checked = 0
    for _ in range(150):
        g = random_graph(rng.randint(1, 7), rng, 0.3)
        if not is_contraction_perfect(g):
            continue
        checked += 1
        for v in range(g.n):
            for kind in (True, False):
                assert is_contraction_perfect(add_twin(g, v, kind))
    assert checked > 20


def test_contraction_closure_on_samples():
    # contraction perfect graphs stay perfect under every small edge-set
    # contraction; the acceptance suite runs this exhaustively on n <= 7
    rng = Random(92)
    checked = 0
    for _ in range(120):
        g = random_graph(rng.randint(2, 7), rng, 0.35)
        if not is_contraction_perfect(g):
            continue
        checked += 1
        edges = g.edges()
        for f in itertools.chain(
            itertools.combinations(edges, 1), itertools.combinations(edges, 2)
        ):
            assert is_perfect(contract_set(g, f))
    assert checked > 20
