"""Subgraph containment against brute force, plus the paper's freeness
anchors."""

import random

from conftest import brute_contains, brute_max_clique
from qturan import families as F
from qturan.graphs import from_edges
from qturan.search import enumerate_graphs, sample_gnp
from qturan.subgraph import clique_number, contains_subgraph, has_clique, is_free


def test_agrees_with_bruteforce_exhaustively():
    fs = [g for n in range(1, 5) for g in enumerate_graphs(n)]
    gs = [g for n in range(1, 7) for g in enumerate_graphs(n)]
    for f in fs:
        for g in gs:
            found, phi = contains_subgraph(g, f)
            assert found == brute_contains(g, f), (g, f)
            if found:
                assert len(set(phi)) == f.n
                for i, j in f.edges():
                    assert g.has_edge(phi[i], phi[j])


def test_clique_number_vs_bruteforce_exhaustive_n7():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            w = brute_max_clique(g)
            assert clique_number(g) == w
            for r in range(1, n + 1):
                assert is_free(g, F.complete(r + 1)) == (w <= r)


def test_turan_is_clique_free():
    for n in range(2, 11):
        for r in range(2, n + 1):
            assert is_free(F.turan(n, r), F.complete(r + 1))


def test_split_graph_is_odd_cycle_free():
    # S_{n,k} contains no C_{2k+1}
    for k in range(1, 6):
        cyc = F.cycle(2 * k + 1)
        for n in range(2 * k + 1, 13):
            assert is_free(F.split(n, k), cyc), (n, k)


def test_wheel_and_multipartite_anchors():
    assert is_free(F.wheel(1, 5), F.complete(4))  # rim C5 has no triangle
    assert not is_free(F.wheel(1, 5), F.complete(3))
    assert is_free(F.turan(6, 3), F.complete(4))
    assert not is_free(F.complete(5), F.cycle(4))
    assert is_free(F.cycle(5), F.complete(3))


def test_monotone_under_subgraph_removal():
    rng = random.Random(37)
    for _ in range(60):
        g = sample_gnp(rng.randrange(3, 9), 0.7, rng)
        f = sample_gnp(rng.randrange(2, 5), 0.8, rng)
        if contains_subgraph(g, f)[0]:
            edges = f.edges()
            if edges:
                e = edges[rng.randrange(len(edges))]
                rows = list(f.rows)
                rows[e[0]] &= ~(1 << e[1])
                rows[e[1]] &= ~(1 << e[0])
                weaker = from_edges(f.n, [(i, j) for i in range(f.n) for j in range(i + 1, f.n) if (rows[i] >> j) & 1])
                assert contains_subgraph(g, weaker)[0]


def test_embedding_with_isolated_vertices():
    f = from_edges(3, [(0, 1)])  # edge plus isolated vertex
    found, phi = contains_subgraph(F.complete(2), f)
    assert not found  # not enough vertices
    found, phi = contains_subgraph(F.path(3), f)
    assert found and len(set(phi)) == 3
    found, phi = contains_subgraph(F.empty(4), from_edges(2, []))
    assert found


def test_clique_witness():
    found, phi = contains_subgraph(F.complete(6), F.complete(4))
    assert found and phi == (0, 1, 2, 3)
    assert has_clique(F.turan(9, 3), 3)
    assert not has_clique(F.turan(9, 3), 4)
