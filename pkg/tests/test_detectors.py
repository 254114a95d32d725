from itertools import combinations
from random import Random

import pytest

from cpgraphs import (
    Certificate,
    GraphError,
    chromatic_number,
    clique_number,
    complement,
    contract_edge,
    contract_set,
    find_expanded_antihole,
    find_expanded_antihole_involving,
    find_hole_at_least,
    find_odd_antihole,
    find_odd_hole,
    induced_subgraph,
    is_perfect,
    perfection_certificate,
    validate_certificate,
)
from cpgraphs.enumeration import all_graphs
from cpgraphs.families import (
    antihole,
    antipath,
    clique,
    expanded_antihole,
    hole,
    path,
    random_chordal,
    random_graph,
)
from cpgraphs.graph import Graph

from helpers import brute_has_hole, brute_hole_sizes


def certify(g, cert):
    assert cert is not None
    assert validate_certificate(g, cert)
    return cert


def test_find_hole_at_least_on_c6():
    cert = certify(hole(6), find_hole_at_least(hole(6), 5))
    assert cert.kind == "hole" and len(cert.vertices) == 6


def test_find_hole_on_chordal_is_none():
    rng = Random(4)
    for _ in range(25):
        g = random_chordal(rng.randint(2, 9), rng)
        assert find_hole_at_least(g, 4) is None


def test_find_hole_c6_with_chord():
    # the chord 0-3 splits C6 into two squares; brute enumeration confirms
    # there is no induced cycle of size 5 or more
    g = Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    assert brute_hole_sizes(g, 5) == set()
    assert find_hole_at_least(g, 5) is None
    assert find_hole_at_least(g, 4) is not None  # the squares remain


def test_find_odd_hole_examples():
    cert = certify(hole(5), find_odd_hole(hole(5)))
    assert len(cert.vertices) == 5
    bip = Graph(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)])
    assert find_odd_hole(bip) is None
    assert find_odd_hole(hole(6)) is None


def test_find_odd_antihole_examples():
    cert = certify(antihole(7), find_odd_antihole(antihole(7)))
    assert cert.kind == "odd-antihole" and len(cert.vertices) == 7
    # C5 is self-complementary: it is its own odd antihole
    cert = certify(hole(5), find_odd_antihole(hole(5)))
    assert len(cert.vertices) == 5
    for g in all_graphs(4):
        assert find_odd_antihole(g) is None


def test_is_perfect_examples():
    assert is_perfect(hole(6))
    cert = certify(hole(5), perfection_certificate(hole(5)))
    assert cert.kind == "hole" and len(cert.vertices) == 5
    for e in hole(6).edges():
        assert not is_perfect(contract_edge(hole(6), e))


def test_antihole_certificates_start_at_seven():
    # the hole search runs first, so an antihole certificate implies p >= 7
    from cpgraphs import add_twin

    rng = Random(12)
    cases = [antihole(7), antihole(9)]
    cases.extend(add_twin(antihole(7), v, True) for v in range(3))
    for _ in range(200):
        cases.append(random_graph(rng.randint(5, 9), rng, 0.7))
    seen = 0
    for g in cases:
        cert = perfection_certificate(g)
        if cert is not None and cert.kind == "odd-antihole":
            assert len(cert.vertices) >= 7
            seen += 1
    assert seen >= 5  # the seeded antiholes all land in the antihole branch


def test_find_expanded_antihole_on_family():
    for p in (6, 8):
        g = expanded_antihole(p)
        assert g.n == p + 2
        cert = certify(g, find_expanded_antihole(g))
        assert cert.kind == "expanded-antihole"
        assert len(cert.vertices) == p + 2


def test_antipaths_contain_no_expanded_antihole():
    for n in range(1, 11):
        assert find_expanded_antihole(antipath(n)) is None


def test_small_graphs_contain_no_expanded_antihole():
    for n in range(8):
        for g in all_graphs(n):
            assert find_expanded_antihole(g) is None


def test_expanded_antihole_involving_distinguished_edge():
    g = expanded_antihole(6)
    cert = certify(g, find_expanded_antihole_involving(g, (0, 1)))
    assert set(cert.vertices[:2]) == {0, 1}


def test_expanded_antihole_involving_w1_wp_edge():
    # the antipath ends w_1, w_p (vertices 2 and 7 for p = 6) are adjacent,
    # and that edge is involved in an expanded antihole of the same graph
    g = expanded_antihole(6)
    assert g.adjacent(2, 7)
    cert = certify(g, find_expanded_antihole_involving(g, (2, 7)))
    assert set(cert.vertices[:2]) == {2, 7}


def test_expanded_antihole_involving_rejects_non_edges():
    g = expanded_antihole(6)
    with pytest.raises(GraphError):
        find_expanded_antihole_involving(g, (0, 2))


def test_c6_involves_nothing():
    for e in hole(6).edges():
        assert find_expanded_antihole_involving(hole(6), e) is None


def test_expanded_antihole_detection_predicts_contraction():
    # wherever the search finds a witness, contracting its edge must
    # destroy perfection
    rng = Random(8)
    from helpers import graphs  # noqa: F401  (documentation of provenance)

    hits = 0
    for _ in range(150):
        g = random_graph(rng.randint(8, 10), rng, 0.55)
        cert = find_expanded_antihole(g)
        if cert is None:
            continue
        hits += 1
        u, v = cert.vertices[:2]
        assert not is_perfect(contract_edge(g, (u, v)))
    g = expanded_antihole(6)
    cert = find_expanded_antihole(g)
    assert not is_perfect(contract_edge(g, tuple(cert.vertices[:2])))


def test_contracting_the_edge_of_an_expanded_antihole_gives_odd_antihole():
    for p in (6, 8):
        g = expanded_antihole(p)
        got = contract_edge(g, (0, 1))
        cert = certify(got, find_odd_antihole(got, min_size=7))
        assert len(cert.vertices) == p + 1


def test_clique_and_chromatic_numbers():
    assert (clique_number(hole(5)), chromatic_number(hole(5))) == (2, 3)
    assert (clique_number(hole(6)), chromatic_number(hole(6))) == (2, 2)
    assert (clique_number(clique(5)), chromatic_number(clique(5))) == (5, 5)
    assert (clique_number(Graph(0)), chromatic_number(Graph(0))) == (0, 0)
    assert (clique_number(Graph(3)), chromatic_number(Graph(3))) == (1, 1)


def test_perfection_matches_definitional_oracle_small():
    # is_perfect(g) iff clique number equals chromatic number on every
    # induced subgraph; exhaustive on five vertices, the acceptance suite
    # pushes this further
    for n in range(6):
        for g in all_graphs(n):
            definitional = all(
                clique_number(h) == chromatic_number(h)
                for h in (
                    induced_subgraph(g, [v for v in range(g.n) if (sub >> v) & 1])
                    for sub in range(1 << g.n)
                )
            )
            assert is_perfect(g) == definitional


def test_perfection_closed_under_complement_small():
    rng = Random(77)
    for n in range(6):
        for g in all_graphs(n):
            assert is_perfect(g) == is_perfect(complement(g))
    for _ in range(120):
        g = random_graph(rng.randint(6, 8), rng, 0.5)
        assert is_perfect(g) == is_perfect(complement(g))


def test_hole_survives_contraction_in_reverse():
    # any hole size found after contracting survives as a hole at least as
    # large in the original graph
    rng = Random(31)
    for _ in range(150):
        g = random_graph(rng.randint(5, 9), rng, 0.45)
        edges = g.edges()
        if not edges:
            continue
        f = rng.sample(edges, rng.randint(1, min(3, len(edges))))
        h = contract_set(g, f)
        for size in range(4, h.n + 1):
            if find_hole_at_least(h, size) is not None:
                assert find_hole_at_least(g, size) is not None


def test_odd_antihole_after_contraction_iff_involving():
    # on a perfect graph, contracting uv creates an odd antihole of size
    # >= 7 exactly when uv is involved in an expanded antihole
    rng = Random(7)
    tried = 0
    positives = 0
    while tried < 120:
        g = random_graph(rng.randint(4, 7), rng, 0.5)
        if not is_perfect(g):
            continue
        tried += 1
        for e in g.edges():
            lhs = find_odd_antihole(contract_edge(g, e), min_size=7) is not None
            rhs = find_expanded_antihole_involving(g, e) is not None
            assert lhs == rhs
    for p in (6, 8):
        g = expanded_antihole(p)
        assert find_odd_antihole(contract_edge(g, (0, 1)), min_size=7) is not None
        assert find_expanded_antihole_involving(g, (0, 1)) is not None
        positives += 1
    assert positives == 2


def test_certificates_validate_against_foreign_graphs():
    # the validator is strict: a hole of C5 is not a hole of C6
    cert = find_odd_hole(hole(5))
    assert not validate_certificate(hole(6), cert)
    assert not validate_certificate(path(5), cert)
    bogus = Certificate("hole", (0, 1, 2, 9))
    assert not validate_certificate(hole(6), bogus)
    dup = Certificate("hole", (0, 1, 2, 2))
    assert not validate_certificate(hole(6), dup)


def test_search_agrees_with_subset_oracle_randomized():
    rng = Random(600)
    for _ in range(80):
        g = random_graph(rng.randint(4, 8), rng, 0.5)
        assert (find_hole_at_least(g, 4) is not None) == brute_has_hole(g, 4)
        assert (find_odd_hole(g) is not None) == brute_has_hole(g, 5, parity=1)
