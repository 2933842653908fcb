"""Enumeration, corpus ingestion, extremal scans, density, exploration."""

import json
import random

import pytest

from conftest import burnside_graph_count, labeled_orbit_count
from qturan import families as F
from qturan.bounds import CriterionParams
from qturan.graphs import Graph6Error, is_isomorphic, parse_graph6
from qturan.search import (
    count_classes,
    enumerate_graphs,
    explore_kst_conjecture,
    extremal_edges,
    extremal_q,
    in_family_L,
    in_family_Y,
    ingest_corpus,
    min_degree_family,
    sample_gnp,
    turan_density_estimate,
)
from qturan.spectral import q_value


def test_counts_match_both_independent_oracles():
    # Burnside (cycle-index) count for 1..8; labeled union-find for 1..6
    assert [burnside_graph_count(n) for n in range(1, 9)] == [
        1, 2, 4, 11, 34, 156, 1044, 12346,
    ]
    for n in range(1, 7):
        assert count_classes(n) == labeled_orbit_count(n)
    for n in range(1, 9):
        assert count_classes(n) == burnside_graph_count(n)


def test_enumeration_is_isomorph_free_and_deterministic():
    for n in range(1, 7):
        graphs = list(enumerate_graphs(n))
        forms = {g.rows for g in graphs}
        assert len(forms) == len(graphs)
        assert list(enumerate_graphs(n)) == graphs  # stable order
        for g in graphs:
            assert g.n == n


def test_enumeration_cap_directs_to_corpus():
    with pytest.raises(ValueError, match="ingest_corpus"):
        list(enumerate_graphs(10))


def test_ingest_corpus(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_bytes(b"A_\nBw\n\n")
    got = list(ingest_corpus(str(path)))
    assert got == [F.complete(2), F.complete(3)]
    path.write_bytes(b"")
    assert list(ingest_corpus(str(path))) == []
    # malformed line reported with its line number, stream continues
    path.write_bytes(b"A_\n!!bad!!\nBw\n")
    errs = []
    got = list(ingest_corpus(str(path), errors=errs))
    assert got == [F.complete(2), F.complete(3)]
    assert len(errs) == 1 and errs[0][0] == 2
    with pytest.raises(Graph6Error, match="line 2"):
        list(ingest_corpus(str(path), strict=True))


def test_corpus_dir_env(tmp_path, monkeypatch):
    sub = tmp_path / "corpora"
    sub.mkdir()
    (sub / "two.g6").write_bytes(b"A_\n")
    monkeypatch.setenv("QTURAN_CORPUS_DIR", str(sub))
    assert list(ingest_corpus("two.g6")) == [F.complete(2)]


def test_mantel_and_turan_edge_searches():
    rep = extremal_edges(5, F.complete(3))
    assert rep.ex_edges == 6 and rep.scanned == 34
    assert len(rep.extremal_graphs) == 1
    assert is_isomorphic(parse_graph6(rep.extremal_graphs[0]), F.turan(5, 2))
    rep = extremal_edges(7, F.complete(4))
    assert rep.ex_edges == 16
    assert len(rep.extremal_graphs) == 1
    assert is_isomorphic(parse_graph6(rep.extremal_graphs[0]), F.turan(7, 3))


def test_w6_edge_search_report_only():
    rep = extremal_edges(6, F.wheel(1, 5))
    # report-only regime: value recorded, every winner is W6-free
    assert rep.ex_edges is not None and rep.scanned == 156
    from qturan.subgraph import is_free

    for g6 in rep.extremal_graphs:
        assert is_free(parse_graph6(g6), F.wheel(1, 5))


def test_extremal_q_r2_and_r3():
    rep = extremal_q(6, F.complete(3))
    assert rep.max_q == pytest.approx(6.0, abs=1e-9)
    got = [parse_graph6(g) for g in rep.extremal_graphs]
    assert len(got) == 3  # K_{1,5}, K_{2,4}, K_{3,3}
    for g in got:
        assert any(is_isomorphic(g, F.complete_bipartite(a, 6 - a)) for a in (1, 2, 3))
    rep = extremal_q(6, F.complete(4))
    assert rep.max_q == pytest.approx(8.0, abs=1e-9)
    assert len(rep.extremal_graphs) == 1
    assert is_isomorphic(parse_graph6(rep.extremal_graphs[0]), F.turan(6, 3))


def test_search_report_json():
    rep = extremal_edges(5, F.complete(3))
    payload = json.loads(rep.to_json())
    for key in ("n", "forbidden", "mode", "ex_edges", "max_q", "extremal_graphs", "scanned", "elapsed"):
        assert key in payload


def test_density_estimates():
    de = turan_density_estimate(F.complete(3), 8)
    assert [(n, ex) for n, ex, _ in de.points] == [(n, n * n // 4) for n in range(3, 9)]
    assert de.non_increasing()
    assert de.limit_hint == pytest.approx(0.5)
    de = turan_density_estimate(F.complete(4), 7)
    assert de.non_increasing() and de.limit_hint == pytest.approx(2 / 3)
    payload = json.loads(de.to_json())
    assert payload["non_increasing"] is True


def test_min_degree_family():
    out = min_degree_family(6, F.complete(3), CriterionParams.default(r=2))
    assert out["turan_in_family"] and not out["family_empty"]
    assert out["max_q"] == pytest.approx(6.0, abs=1e-9)
    assert any(
        is_isomorphic(parse_graph6(g), F.complete_bipartite(3, 3)) for g in out["maximizers"]
    )
    out = min_degree_family(7, F.complete(4), CriterionParams.default(r=3))
    assert out["turan_in_family"]
    assert out["max_q"] == pytest.approx(q_value(F.turan(7, 3)), abs=1e-9)
    # a tiny epsilon empties the family at small n
    strict = CriterionParams(epsilon=1e-3, sigma=1e-6, r=3)
    out = min_degree_family(4, F.complete(4), strict)
    assert out["family_empty"]


def test_family_membership_decomposition():
    assert in_family_L(F.family_L_sample(8, 2, 3), 2, 3)
    assert in_family_L(F.family_L_sample(10, 3, 4), 3, 4)
    assert in_family_Y(F.family_Y_sample(8, 3), 3)
    assert not in_family_Y(F.turan(8, 2), 3)
    assert not in_family_L(F.complete(6), 2, 3)


def test_explore_kst_conjecture_small():
    out = explore_kst_conjecture(7, 2, 2)
    assert out["max_q"] is not None
    assert out["conjecture_consistent"] in (True, False)
    assert out["family_lead"] in ("L", "Y", "tie", None)
    for mem in out["maximizer_membership"]:
        assert set(mem) == {"graph6", "in_L", "in_Y"}
    out = explore_kst_conjecture(8, 2, 3)
    assert out["q_Y_sample"] == pytest.approx(q_value(F.family_Y_sample(8, 3)), abs=1e-12)
    assert out["family_lead"] == "Y"  # the book case: the Y family leads


def test_sample_gnp_deterministic():
    a = sample_gnp(12, 0.4, random.Random(99))
    b = sample_gnp(12, 0.4, random.Random(99))
    assert a == b


def test_scan_results_independent_of_job_count():
    seq = extremal_edges(6, F.complete(3), jobs=1)
    par = extremal_edges(6, F.complete(3), jobs=2)
    assert (seq.ex_edges, seq.extremal_graphs, seq.scanned) == (
        par.ex_edges,
        par.extremal_graphs,
        par.scanned,
    )
    seq = extremal_q(6, F.complete(4), jobs=1)
    par = extremal_q(6, F.complete(4), jobs=2)
    assert seq.extremal_graphs == par.extremal_graphs
    assert seq.max_q == pytest.approx(par.max_q, abs=1e-12)
