"""Named verification suites: exhaustive and sampled checks of every bound,
shared by the CLI and the acceptance tests.

A suite returns a VerifyResult; ``violations`` are hard failures (an
inequality that is proven for all n failed), ``findings`` are report-only
observations that never affect exit codes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bounds as B
from . import families as F
from .chromatic import is_r_partite
from .graphs import Graph, is_isomorphic, parse_graph6, to_graph6
from .search import enumerate_graphs, extremal_edges, extremal_q, sample_gnp, turan_density_estimate
from .spectral import DEFAULT_TOL, Tolerance, q_value
from .subgraph import has_clique, is_free
from .descent import lemma_min_check

RANDOM_SEED = 20250810


@dataclass
class VerifyResult:
    suite: str
    checked: int
    violations: List[str] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)
    reports: List[B.BoundReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"[{self.suite}] checked {self.checked}: {status}"


def _chunks(items: Sequence, k: int) -> List[Sequence]:
    size = max(1, (len(items) + k - 1) // k)
    return [items[i: i + size] for i in range(0, len(items), size)]


def _pmap_chunked(worker: Callable, items: Sequence, jobs: int) -> List:
    """Order-preserving chunked map; results merge deterministically
    regardless of worker count."""
    if jobs <= 1 or len(items) < 64:
        return [worker(items)] if items else []
    parts = _chunks(items, jobs * 4)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(worker, parts))


def _all_graphs(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n)


# -- per-chunk workers (top level so they pickle) -----------------------------


def _w_chain(graphs: Sequence[Graph], collect: bool = False):
    out = []
    reports = []
    for g in graphs:
        entries = B.check_bound_chain(g)
        for e in entries:
            if not e.holds:
                out.append(f"{to_graph6(g).decode()}: {e.name} slack={e.slack:.3e}")
        if collect:
            reports.append(B.BoundReport(to_graph6(g).decode(), entries))
    return out, reports


def _w_merris(graphs: Sequence[Graph], collect: bool = False):
    out = []
    reports = []
    for g in graphs:
        e = B.check_merris(g)
        if not e.holds:
            out.append(f"{to_graph6(g).decode()}: merris slack={e.slack:.3e}")
        if collect:
            reports.append(B.BoundReport(to_graph6(g).decode(), [e]))
    return out, reports


def _w_lower_degree(graphs: Sequence[Graph], collect: bool = False):
    out = []
    reports = []
    for g in graphs:
        e, constant = B.check_q_lower_degree(g)
        if not e.holds:
            out.append(f"{to_graph6(g).decode()}: q_lower_degree slack={e.slack:.3e}")
        if e.equality != constant:
            out.append(
                f"{to_graph6(g).decode()}: equality flag {e.equality} != "
                f"edge-degree-sum constant {constant}"
            )
        if collect:
            reports.append(B.BoundReport(to_graph6(g).decode(), [e]))
    return out, reports


def _w_hofmeister(graphs: Sequence[Graph], collect: bool = False):
    out = []
    reports = []
    for g in graphs:
        e, flag = B.check_hofmeister(g)
        if not e.holds:
            out.append(f"{to_graph6(g).decode()}: hofmeister slack={e.slack:.3e}")
        if e.equality != flag:
            out.append(
                f"{to_graph6(g).decode()}: equality flag {e.equality} != "
                f"regular/semiregular {flag}"
            )
        if collect:
            reports.append(B.BoundReport(to_graph6(g).decode(), [e]))
    return out, reports


def _w_lemma_min(graphs: Sequence[Graph]) -> List[str]:
    out = []
    for g in graphs:
        slack = lemma_min_check(g)
        if slack < -DEFAULT_TOL.cmp_tol:
            out.append(f"{to_graph6(g).decode()}: lemma-min slack={slack:.3e}")
    return out


def _w_stability(graphs: Sequence[Graph]) -> List[str]:
    out = []
    for g in graphs:
        n = g.n
        degs = g.degrees()
        delta = min(degs) if degs else 0
        if not has_clique(g, 3) and delta * 5 > 2 * n and not is_r_partite(g, 2):
            out.append(f"{to_graph6(g).decode()}: triangle-free, delta>2n/5, not bipartite")
        if not has_clique(g, 4) and delta * 8 > 5 * n and not is_r_partite(g, 3):
            out.append(f"{to_graph6(g).decode()}: K4-free, delta>5n/8, not 3-partite")
    return out


def _w_degree_power(graphs: Sequence[Graph]) -> Tuple[List[str], List[str]]:
    viol, equal = [], []
    for g in graphs:
        if not is_free(g, F.complete(4)):
            continue
        e = B.check_degree_power(g, 3)[0]
        if not e.holds:
            viol.append(f"{to_graph6(g).decode()}: degree_power slack={e.slack:.3e}")
        if e.equality and g.m >= 1:
            equal.append(to_graph6(g).decode())
            # equality clause: only regular complete 3-partite graphs qualify
            if g.n % 3 != 0 or not is_isomorphic(g, F.turan(g.n, 3)):
                viol.append(
                    f"{to_graph6(g).decode()}: degree-power equality on a graph "
                    f"that is not regular complete 3-partite"
                )
    return viol, equal


def _w_graph6(graphs: Sequence[Graph]) -> List[str]:
    out = []
    for g in graphs:
        back = parse_graph6(to_graph6(g))
        if back != g:
            out.append(f"round-trip failed at {to_graph6(g)!r}")
    return out


# -- suites -------------------------------------------------------------------


def _run_entry_sweep(name, worker, graphs, jobs, collect, per_graph=1) -> VerifyResult:
    res = VerifyResult(name, len(graphs) * per_graph)
    for viol, reports in _pmap_chunked(partial(worker, collect=collect), graphs, jobs):
        res.violations.extend(viol)
        res.reports.extend(reports)
    return res


def suite_chain(n_max: int = 7, jobs: int = 1, collect_reports: bool = False, **_) -> VerifyResult:
    graphs = list(_all_graphs(n_max))
    return _run_entry_sweep("chain", _w_chain, graphs, jobs, collect_reports, per_graph=3)


def suite_merris(n_max: int = 7, jobs: int = 1, collect_reports: bool = False, **_) -> VerifyResult:
    graphs = [g for g in _all_graphs(n_max) if g.n and min(g.degrees()) >= 1]
    return _run_entry_sweep("merris", _w_merris, graphs, jobs, collect_reports)


def suite_lower_degree(n_max: int = 7, jobs: int = 1, collect_reports: bool = False, **_) -> VerifyResult:
    graphs = [g for g in _all_graphs(n_max) if g.m >= 1]
    return _run_entry_sweep("lower-degree", _w_lower_degree, graphs, jobs, collect_reports)


def suite_hofmeister(n_max: int = 7, jobs: int = 1, collect_reports: bool = False, **_) -> VerifyResult:
    graphs = list(_all_graphs(n_max))
    return _run_entry_sweep("hofmeister", _w_hofmeister, graphs, jobs, collect_reports)


def suite_turan(n_max: int = 8, r: Optional[int] = None, jobs: int = 1, **_) -> VerifyResult:
    res = VerifyResult("turan", 0)
    for n in range(3, n_max + 1):
        rs = [r] if r else range(2, n)
        for rr in rs:
            if not (2 <= rr < n):
                continue
            rep = extremal_edges(n, F.complete(rr + 1), jobs=jobs)
            res.checked += 1
            want = F.turan_edges(n, rr)
            if rep.ex_edges != want:
                res.violations.append(f"ex({n},K_{rr + 1}) = {rep.ex_edges} != {want}")
            elif len(rep.extremal_graphs) != 1 or not is_isomorphic(
                parse_graph6(rep.extremal_graphs[0]), F.turan(n, rr)
            ):
                res.violations.append(
                    f"ex({n},K_{rr + 1}): maximizer set {rep.extremal_graphs} "
                    f"is not exactly the Turan graph"
                )
    return res


def suite_q_turan(
    n_max: int = 8, r: Optional[int] = None, tol: Tolerance = DEFAULT_TOL, jobs: int = 1, **_
) -> VerifyResult:
    res = VerifyResult("q-turan", 0)
    for n in range(3, n_max + 1):
        rs = [r] if r else range(2, n)
        for rr in rs:
            if not (2 <= rr < n):
                continue
            rep = extremal_q(n, F.complete(rr + 1), tol=tol, jobs=jobs)
            res.checked += 1
            want = q_value(F.turan(n, rr), tol)
            if abs(rep.max_q - want) > 1e-9:
                res.violations.append(
                    f"q-max({n},K_{rr + 1}) = {rep.max_q!r} != q(T) = {want!r}"
                )
                continue
            maxers = [parse_graph6(g) for g in rep.extremal_graphs]
            if rr >= 3:
                if len(maxers) != 1 or not is_isomorphic(maxers[0], F.turan(n, rr)):
                    res.violations.append(
                        f"q-max({n},K_{rr + 1}): maximizers {rep.extremal_graphs} "
                        f"not exactly the Turan graph"
                    )
            else:
                bipartites = [F.complete_bipartite(a, n - a) for a in range(1, n // 2 + 1)]
                if len(maxers) != len(bipartites) or not all(
                    any(is_isomorphic(g, b) for b in bipartites) for g in maxers
                ):
                    res.violations.append(
                        f"q-max({n},K_3): maximizer set is not exactly the "
                        f"complete bipartite graphs ({rep.extremal_graphs})"
                    )
    return res


def suite_degree_power(n_max: int = 8, jobs: int = 1, **_) -> VerifyResult:
    res = VerifyResult("degree-power", 0)
    equality_at_6: List[str] = []
    for n in range(1, n_max + 1):
        graphs = list(enumerate_graphs(n))
        res.checked += len(graphs)
        for viol, equal in _pmap_chunked(_w_degree_power, graphs, jobs):
            res.violations.extend(viol)
            if n == 6:
                equality_at_6.extend(equal)
    if n_max >= 6:
        from .graphs import canonical_graph

        canon_want = {to_graph6(canonical_graph(F.turan(6, 3))).decode()}
        got = set(equality_at_6)
        if got != canon_want:
            res.violations.append(
                f"degree-power equality set at n=6 (m>=1) is {sorted(got)}, "
                f"expected exactly the regular complete 3-partite graph"
            )
    res.findings.append("non-clique color-critical F: asymptotic, report-only")
    return res


def suite_stability(n_max: int = 8, jobs: int = 1, **_) -> VerifyResult:
    graphs = list(_all_graphs(n_max))
    res = VerifyResult("stability", len(graphs))
    for part in _pmap_chunked(_w_stability, graphs, jobs):
        res.violations.extend(part)
    return res


def suite_lemma_min(n_max: int = 7, jobs: int = 1, samples: int = 1000, **_) -> VerifyResult:
    graphs = list(_all_graphs(n_max))
    rng = random.Random(RANDOM_SEED)
    for _ in range(samples):
        n = rng.randrange(8, 61)
        p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.85])
        graphs.append(sample_gnp(n, p, rng))
    res = VerifyResult("lemma-min", len(graphs))
    for part in _pmap_chunked(_w_lemma_min, graphs, jobs):
        res.violations.extend(part)
    return res


def suite_facts(samples: int = 10_000, **_) -> VerifyResult:
    rng = random.Random(RANDOM_SEED + 1)
    res = VerifyResult("facts", 2 * samples)
    # quasi-random: seeded uniform draws plus near-boundary points
    pts1 = [(rng.uniform(1e-9, 1 - 1e-9), rng.uniform(1e-9, 0.5 - 1e-9)) for _ in range(samples - 4)]
    pts1 += [(1e-12, 0.25), (1 - 1e-12, 0.25), (0.5, 1e-12), (0.999999, 0.4999999)]
    for a, x in pts1:
        if not B.check_fact1(a, x):
            res.violations.append(f"fact1 failed at a={a!r}, x={x!r}")
    pts2 = [1 + abs(rng.gauss(0, 1)) * 10 ** rng.uniform(-6, 6) for _ in range(samples - 3)]
    pts2 += [1 + 1e-9, 2.0, 1e12]
    for x in pts2:
        if not B.check_fact2(x):
            res.violations.append(f"fact2 failed at x={x!r}")
    return res


def suite_graph6(n_max: int = 7, jobs: int = 1, **_) -> VerifyResult:
    graphs = list(_all_graphs(n_max, n_min=1))
    res = VerifyResult("graph6", len(graphs) + 3)
    for part in _pmap_chunked(_w_graph6, graphs, jobs):
        res.violations.extend(part)
    for text, expect in [(b"@", F.complete(1)), (b"A_", F.complete(2)), (b"Bw", F.complete(3))]:
        if parse_graph6(text) != expect:
            res.violations.append(f"hand vector {text!r} did not parse to K_{expect.n}")
    return res


def suite_density(n_max: int = 8, **_) -> VerifyResult:
    res = VerifyResult("density", 0)
    for f, name in [
        (F.complete(3), "K3"),
        (F.complete(4), "K4"),
        (F.wheel(1, 5), "W6"),
    ]:
        if f.n > n_max:
            continue
        de = turan_density_estimate(f, n_max)
        res.checked += len(de.points)
        if not de.non_increasing():
            res.violations.append(f"density quotient increased for {name}: {de.points}")
        res.findings.append(
            f"{name}: ratios {[f'{p[1]}/{p[2]}' for p in de.points]} -> hint {de.limit_hint:.4f}"
        )
    return res


SUITES: Dict[str, Callable[..., VerifyResult]] = {
    "chain": suite_chain,
    "merris": suite_merris,
    "lower-degree": suite_lower_degree,
    "hofmeister": suite_hofmeister,
    "turan": suite_turan,
    "q-turan": suite_q_turan,
    "degree-power": suite_degree_power,
    "stability": suite_stability,
    "lemma-min": suite_lemma_min,
    "facts": suite_facts,
    "graph6": suite_graph6,
    "density": suite_density,
}


def run_suite(name: str, **kwargs) -> VerifyResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; valid: {', '.join(sorted(SUITES))}")
    return SUITES[name](**kwargs)
