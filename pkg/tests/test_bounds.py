"""Bounds ledger: per-check anchors, serialization schema, criterion params."""

import io
import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from qturan import bounds as B
from qturan import families as F
from qturan.graphs import from_edges
from qturan.spectral import q_value


def test_turan_edges_check():
    es = B.check_turan_edges(F.turan(6, 3), 3)
    assert es[0].equality and es[1].equality
    es = B.check_turan_edges(F.cycle(5), 2)
    assert es[0].holds and not es[0].equality
    assert es[1].rhs == 6.0 and es[1].slack == 1.0  # e(T_{5,2}) = 6
    es = B.check_turan_edges(F.empty(4), 2)
    assert es[0].holds
    with pytest.raises(ValueError, match="K_4"):
        B.check_turan_edges(F.complete(4), 3)


def test_wilf_check():
    assert B.check_wilf(F.turan(6, 3), 3).equality
    assert B.check_wilf(F.complete_bipartite(3, 3), 2).equality
    e = B.check_wilf(F.cycle(5), 2)
    assert e.holds and e.lhs == pytest.approx(2.0, abs=1e-9) and e.rhs == 2.5


def test_chain_check():
    assert all(e.equality for e in B.check_bound_chain(F.complete(4)))
    es = B.check_bound_chain(F.star(4))
    assert es[0].lhs == pytest.approx(3.0)
    assert es[0].rhs == pytest.approx(2 * math.sqrt(3), abs=1e-9)
    assert es[1].rhs == pytest.approx(4.0, abs=1e-9)
    assert es[2].rhs == 6.0
    assert all(e.holds for e in es)
    assert all(e.holds and e.equality for e in B.check_bound_chain(F.complete(1)))


def test_abreu_nikiforov_check():
    es = B.check_abreu_nikiforov(F.turan(6, 3), 3)
    assert es[0].equality and es[1].equality
    es = B.check_abreu_nikiforov(F.cycle(5), 2)
    assert es[0].holds and es[1].rhs == pytest.approx(5.0, abs=1e-9)
    es = B.check_abreu_nikiforov(F.turan(7, 3), 3)
    assert es[1].equality  # sharp form is an equality on the Turan graph itself


def test_merris_check():
    e = B.check_merris(F.complete(5))
    assert e.equality and e.rhs == pytest.approx(8.0)
    e = B.check_merris(F.star(4))
    assert e.equality and e.rhs == pytest.approx(4.0)
    e = B.check_merris(F.cycle(6))
    assert e.equality and e.rhs == pytest.approx(4.0)
    # isolated vertices skipped in the max
    g = from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert B.check_merris(g).holds
    with pytest.raises(ValueError, match="isolated"):
        B.check_merris(F.empty(3))


def test_q_lower_degree_check():
    e, const = B.check_q_lower_degree(F.star(4))
    assert e.equality and const and e.lhs == pytest.approx(4.0)
    e, const = B.check_q_lower_degree(F.path(4))
    assert e.holds and not e.equality and not const
    # frozen oracle value: q(P4) = 2 + sqrt(2)
    assert e.rhs == pytest.approx(2 + math.sqrt(2), abs=1e-9)
    e, const = B.check_q_lower_degree(F.cycle(5))
    assert e.equality and const
    with pytest.raises(ValueError):
        B.check_q_lower_degree(F.empty(3))


def test_hofmeister_check():
    e, flag = B.check_hofmeister(F.star(4))
    assert e.equality and flag  # bipartite semiregular
    e, flag = B.check_hofmeister(F.path(4))
    assert e.holds and not e.equality and not flag
    e, flag = B.check_hofmeister(F.turan(6, 3))
    assert e.equality and flag  # regular
    e, flag = B.check_hofmeister(F.empty(4))
    assert e.equality and flag


def test_semiregular_bipartite_predicate():
    assert B.is_semiregular_bipartite(F.complete_bipartite(2, 5))
    assert B.is_semiregular_bipartite(F.cycle(6))
    assert not B.is_semiregular_bipartite(F.cycle(5))
    assert not B.is_semiregular_bipartite(F.path(4))
    two_stars = from_edges(6, [(0, 1), (0, 2), (3, 4), (3, 5)])
    assert B.is_semiregular_bipartite(two_stars)
    mixed = from_edges(6, [(0, 1), (0, 2), (3, 4)])  # K_{1,2} + K_2
    assert not B.is_semiregular_bipartite(mixed)
    assert not B.is_semiregular_bipartite(from_edges(3, [(0, 1)]))  # isolated + edge


def test_degree_power_check():
    es = B.check_degree_power(F.turan(6, 3), 3)
    assert es[0].equality and es[0].rhs == pytest.approx(96.0)
    assert es[1].equality  # (2/3)^2 * 216 = 96
    es = B.check_degree_power(F.turan(7, 3), 3)
    assert es[0].holds and es[0].lhs == 148.0 and not es[0].equality
    es = B.check_degree_power(F.complete(4), 3)
    assert not es[0].holds  # negative control: K4 is not K4-free
    es = B.check_degree_power(F.empty(5), 3)
    assert es[0].equality and es[0].lhs == es[0].rhs == 0.0


def test_fact21_margin():
    e = B.check_fact21_margin(6, 3)
    assert e.holds and e.lhs == pytest.approx(12.0, abs=1e-8) and e.rhs == 13.0
    e = B.check_fact21_margin(7, 3)
    assert e.holds and e.rhs == 17.0
    for n in (5, 40, 100):
        assert B.check_fact21_margin(n, 2).holds


def test_criterion_params():
    p = B.CriterionParams.default(r=3)
    assert p.pi == pytest.approx(2 / 3)
    with pytest.raises(ValueError, match="sigma"):
        B.CriterionParams(epsilon=0.1, sigma=0.01, r=3)
    with pytest.raises(ValueError, match="epsilon"):
        B.CriterionParams(epsilon=0.7, sigma=0.001, r=3)
    with pytest.raises(ValueError, match="r must"):
        B.CriterionParams(epsilon=0.1, sigma=0.001, r=1)


def test_dl1_dl2_checks():
    params = B.CriterionParams.default(r=3)
    ex = {n: F.turan_edges(n, 3) for n in range(3, 101)}
    # the integer identity behind the deviation bound
    for n in range(4, 101):
        assert ex[n] - ex[n - 1] == n - -(n // -3)
        assert B.check_dl1(ex, params, n).lhs < 1.0
    with pytest.raises(ValueError):
        B.check_dl1({5: 6}, params, 5)
    assert B.check_dl2(8.0, 12, params, 6).lhs < 1e-12
    e = B.check_dl2(q_value(F.turan(7, 3)), 16, params, 7)
    assert e.lhs == pytest.approx(abs(9.274917217635373 - 64 / 7), abs=1e-9)
    # degenerate sigma = 0 fails unless the deviation vanishes
    p0 = B.CriterionParams(epsilon=0.1, sigma=0.0, r=3)
    assert not B.check_dl1(ex, p0, 7).holds
    assert B.check_dl1(ex, p0, 6).holds  # 3 | 6: deviation exactly 0


def test_qn_and_beg_are_report_only():
    params = B.CriterionParams.default(r=3)
    e = B.check_qn_estimate(8.0, params, 6)
    assert e.report_only and e.rhs is None and e.lhs < 1e-12
    e = B.check_qn_estimate(q_value(F.turan(7, 3)), params, 7)
    assert e.lhs > 0
    e = B.check_beg_gap(q_value(F.turan(7, 3)), 8.0, params)
    assert e.report_only
    huge = B.CriterionParams(epsilon=0.4, sigma=0.01, r=3)
    assert B.check_beg_gap(100.0, 0.0, huge).holds is False  # recorded, not asserted


def test_min_degree_stability_entry():
    e = B.check_min_degree_stability(F.turan(9, 3), 3)
    assert e.holds and "r_partite=True" in e.note
    e = B.check_min_degree_stability(F.cycle(5), 2)
    assert e.holds and "vacuous" in e.note  # delta = 2 is not strictly above 2n/5


def test_facts():
    assert B.check_fact1(0.5, 0.25)
    assert B.check_fact1(0.999, 0.499)
    assert B.check_fact1(1e-12, 0.4)  # limit a -> 0: x^2 > 0
    with pytest.raises(ValueError):
        B.check_fact1(1.5, 0.2)
    with pytest.raises(ValueError):
        B.check_fact1(0.5, 0.7)
    assert B.check_fact2(2.0)
    assert B.check_fact2(1.001)
    assert B.check_fact2(1e6)
    with pytest.raises(ValueError):
        B.check_fact2(1.0)


@given(
    st.floats(min_value=1e-9, max_value=1 - 1e-9, exclude_min=True, exclude_max=True),
    st.floats(min_value=1e-9, max_value=0.5 - 1e-9, exclude_min=True, exclude_max=True),
)
@settings(max_examples=300, deadline=None)
def test_fact1_property(a, x):
    assert B.check_fact1(a, x)


@given(st.floats(min_value=1 + 1e-9, max_value=1e15))
@settings(max_examples=300, deadline=None)
def test_fact2_property(x):
    assert B.check_fact2(x)


def test_report_serialization_schema():
    rep = B.BoundReport("Bw")
    rep.extend(B.check_bound_chain(F.complete(3)))
    rep.extend(B.check_qn_estimate(4.0, B.CriterionParams.default(2), 3))
    lines = rep.to_jsonl().splitlines()
    assert len(lines) == 4
    for line in lines:
        rec = json.loads(line)
        for key in ("graph6", "bound_name", "lhs", "rhs", "slack", "holds", "equality"):
            assert key in rec
    assert json.loads(lines[-1])["reportOnly"] is True
    buf = io.StringIO()
    B.write_reports_csv([rep], buf)
    rows = buf.getvalue().splitlines()
    assert rows[0] == "graph6,bound_name,lhs,rhs,slack,holds,equality"
    assert len(rows) == 5
    assert not rep.hard_violations()


def test_merge_reports_is_deterministic_by_key():
    a = B.BoundReport("Bw")
    a.extend(B.check_merris(F.complete(3)))
    b = B.BoundReport("A_")
    b.extend(B.check_merris(F.complete(2)))
    c = B.BoundReport("Bw")
    c.extend(B.check_bound_chain(F.complete(3)))
    merged = B.merge_reports([a, b, c])
    assert [r.graph_id for r in merged] == ["A_", "Bw"]
    assert len(merged[1].entries) == 4
    again = B.merge_reports([c, a, b])
    assert [r.graph_id for r in again] == ["A_", "Bw"]
    assert {e.name for e in again[1].entries} == {e.name for e in merged[1].entries}
