"""The inequality ledger: every closed-form bound and criterion condition,
evaluated with explicit slack.

Every entry is normalized to the form lhs <= rhs, so slack = rhs - lhs,
holds = slack >= -cmp_tol and equality = |slack| <= cmp_tol hold uniformly
(lower bounds store the bound as lhs and the dominating quantity as rhs).
Asymptotic statements are emitted with ``report_only`` set: their slack is
recorded but a violation at small order is not an implementation bug.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from .chromatic import is_r_partite
from .families import turan, turan_edges
from .graphs import Graph
from .spectral import (
    DEFAULT_TOL,
    Tolerance,
    degree_power,
    lambda_value,
    q_value,
)
from .subgraph import contains_subgraph
from . import families


@dataclass(frozen=True)
class BoundEntry:
    """One checked inequality. ``rhs``/``slack`` are None for report-only
    quantities that have no bounding side (e.g. o(1) estimates)."""

    name: str
    lhs: float
    rhs: Optional[float]
    slack: Optional[float]
    holds: bool
    equality: bool
    report_only: bool = False
    note: str = ""

    def as_record(self, graph_id: str) -> Dict[str, object]:
        rec: Dict[str, object] = {
            "graph6": graph_id,
            "bound_name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "equality": self.equality,
        }
        if self.report_only:
            rec["reportOnly"] = True
        if self.note:
            rec["note"] = self.note
        return rec


@dataclass
class BoundReport:
    """Per-graph ledger of checked inequalities, keyed by graph6."""

    graph_id: str
    entries: List[BoundEntry] = field(default_factory=list)

    def extend(self, entries) -> None:
        if isinstance(entries, BoundEntry):
            self.entries.append(entries)
        else:
            self.entries.extend(entries)

    def hard_violations(self) -> List[BoundEntry]:
        return [e for e in self.entries if not e.report_only and not e.holds]

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(e.as_record(self.graph_id)) for e in self.entries)


CSV_COLUMNS = ["graph6", "bound_name", "lhs", "rhs", "slack", "holds", "equality"]


def write_reports_csv(reports, stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, extrasaction="ignore")
    writer.writeheader()
    for rep in reports:
        for e in rep.entries:
            writer.writerow({k: v for k, v in e.as_record(rep.graph_id).items()})


def merge_reports(reports) -> List[BoundReport]:
    """Deterministic merge of per-graph reports by graph6 key."""
    by_key: Dict[str, BoundReport] = {}
    for rep in reports:
        agg = by_key.setdefault(rep.graph_id, BoundReport(rep.graph_id))
        agg.entries.extend(rep.entries)
    return [by_key[k] for k in sorted(by_key)]


@dataclass(frozen=True)
class CriterionParams:
    """Parameters of the spectral criterion: 0 < epsilon < 1/2 and
    sigma < epsilon/36; pi = 1 - 1/r is the Turan density of the target
    family. r >= 2 is accepted (the criterion theorem itself needs r >= 3,
    but the min-degree machinery is also exercised at r = 2)."""

    epsilon: float
    sigma: float
    r: int

    def __post_init__(self):
        if not (0 < self.epsilon < 0.5):
            raise ValueError(f"epsilon must be in (0, 1/2), got {self.epsilon}")
        if not (self.sigma < self.epsilon / 36):
            raise ValueError(
                f"sigma must satisfy sigma < epsilon/36, got sigma={self.sigma}"
            )
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")

    @property
    def pi(self) -> float:
        return 1.0 - 1.0 / self.r

    @classmethod
    def default(cls, r: int = 3, epsilon: float = 0.1) -> "CriterionParams":
        return cls(epsilon=epsilon, sigma=epsilon / 40.0, r=r)


def _entry(
    name: str,
    lhs: float,
    rhs: float,
    tol: Tolerance,
    strict: bool = False,
    report_only: bool = False,
    note: str = "",
) -> BoundEntry:
    slack = rhs - lhs
    holds = slack > 0 if strict else slack >= -tol.cmp_tol
    return BoundEntry(
        name=name,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        holds=holds,
        equality=abs(slack) <= tol.cmp_tol,
        report_only=report_only,
        note=note,
    )


def _require_clique_free(g: Graph, r: int) -> None:
    found, phi = contains_subgraph(g, families.complete(r + 1))
    if found:
        raise ValueError(
            f"precondition violated: graph contains K_{r + 1} on vertices {phi}"
        )


def check_turan_edges(g: Graph, r: int, tol: Tolerance = DEFAULT_TOL) -> List[BoundEntry]:
    """e(G) <= (1 - 1/r) n^2 / 2 and the sharp form e(G) <= e(T_{n,r}),
    for K_{r+1}-free G."""
    _require_clique_free(g, r)
    m = g.m
    weak = _entry("turan_edges", m, (1 - 1 / r) * g.n * g.n / 2, tol)
    sharp = _entry("turan_edges_sharp", m, float(turan_edges(g.n, min(r, g.n))), tol)
    return [weak, sharp]


def check_wilf(g: Graph, r: int, tol: Tolerance = DEFAULT_TOL) -> BoundEntry:
    """lambda(G) <= (1 - 1/r) n for K_{r+1}-free G."""
    _require_clique_free(g, r)
    return _entry("wilf", lambda_value(g, tol), (1 - 1 / r) * g.n, tol)


def check_bound_chain(g: Graph, tol: Tolerance = DEFAULT_TOL) -> List[BoundEntry]:
    """4e(G)/n <= 2 lambda(G) <= q(G) <= 2 Delta(G), for every graph."""
    if g.n < 1:
        raise ValueError("chain bound needs n >= 1")
    lam2 = 2 * lambda_value(g, tol)
    q = q_value(g, tol)
    dmax = max(g.degrees()) if g.n else 0
    return [
        _entry("chain_edges_vs_lambda", 4 * g.m / g.n, lam2, tol),
        _entry("chain_lambda_vs_q", lam2, q, tol),
        _entry("chain_q_vs_maxdeg", q, 2.0 * dmax, tol),
    ]


def check_abreu_nikiforov(g: Graph, r: int, tol: Tolerance = DEFAULT_TOL) -> List[BoundEntry]:
    """q(G) <= 2 (1 - 1/r) n and the sharp form q(G) <= q(T_{n,r}),
    for K_{r+1}-free G."""
    _require_clique_free(g, r)
    q = q_value(g, tol)
    weak = _entry("abreu_nikiforov", q, 2 * (1 - 1 / r) * g.n, tol)
    sharp = _entry("q_turan_sharp", q, q_value(turan(g.n, min(r, g.n)), tol), tol)
    return [weak, sharp]


def check_merris(g: Graph, tol: Tolerance = DEFAULT_TOL) -> BoundEntry:
    """q(G) <= max over v of d(v) + (1/d(v)) sum of d(w) over neighbors.

    Isolated vertices are skipped (the term is undefined at d(v) = 0 and
    cannot attain the max); an all-isolated graph is rejected.
    """
    degs = g.degrees()
    best = None
    for v in range(g.n):
        if degs[v] == 0:
            continue
        s = sum(degs[w] for w in g.neighbors(v))
        val = degs[v] + s / degs[v]
        best = val if best is None else max(best, val)
    if best is None:
        raise ValueError("Merris bound undefined: every vertex is isolated")
    return _entry("merris", q_value(g, tol), best, tol)


def edge_degree_sums_constant(g: Graph) -> bool:
    """True iff d(u) + d(v) is the same for every edge uv."""
    degs = g.degrees()
    sums = {degs[u] + degs[v] for u, v in g.edges()}
    return len(sums) <= 1


def check_q_lower_degree(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Tuple[BoundEntry, bool]:
    """q(G) >= (1/m) sum of d^2, equality iff the edge degree sums are
    constant; returns the entry plus the combinatorial constancy flag."""
    m = g.m
    if m < 1:
        raise ValueError("lower degree bound needs at least one edge")
    lhs = degree_power(g, 2) / m
    entry = _entry("q_lower_degree", lhs, q_value(g, tol), tol)
    return entry, edge_degree_sums_constant(g)


def is_semiregular_bipartite(g: Graph) -> bool:
    """True iff G has a bipartition with constant degree on each side.

    A graph with both an edge and an isolated vertex never qualifies (the
    isolated vertex would force a side constant of 0), so degree-0 vertices
    reduce the test to the edgeless case.
    """
    degs = g.degrees()
    if 0 in degs:
        return g.m == 0
    side = [-1] * g.n
    comps = g.components()
    for comp in comps:
        side[comp[0]] = 0
        queue = [comp[0]]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False  # odd cycle
    pairs = []  # per-component side-degree constants
    for comp in comps:
        a = {degs[v] for v in comp if side[v] == 0}
        b = {degs[v] for v in comp if side[v] == 1}
        if len(a) > 1 or len(b) > 1:
            return False
        pairs.append((a.pop(), b.pop()))
    x, y = pairs[0]
    return all(p in ((x, y), (y, x)) for p in pairs)


def check_hofmeister(g: Graph, tol: Tolerance = DEFAULT_TOL) -> Tuple[BoundEntry, bool]:
    """lambda(G)^2 >= (1/n) sum of d^2, equality iff G is regular or
    bipartite semi-regular; returns the entry plus that combinatorial flag."""
    if g.n < 1:
        raise ValueError("Hofmeister bound needs n >= 1")
    lam = lambda_value(g, tol)
    lhs = degree_power(g, 2) / g.n
    entry = _entry("hofmeister", lhs, lam * lam, tol)
    degs = set(g.degrees())
    flag = len(degs) <= 1 or is_semiregular_bipartite(g)
    return entry, flag


def check_degree_power(g: Graph, r: int, tol: Tolerance = DEFAULT_TOL) -> List[BoundEntry]:
    """sum of d^2 <= 2 (1 - 1/r) m n, plus the cubic form vs (1-1/r)^2 n^3.

    The F-freeness context is the caller's responsibility; at m = 0 both
    sides vanish and equality is flagged.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    s2 = degree_power(g, 2)
    main = _entry("degree_power", s2, 2 * (1 - 1 / r) * g.m * g.n, tol)
    cubic = _entry("degree_power_cubic", s2, (1 - 1 / r) ** 2 * g.n ** 3, tol)
    return [main, cubic]


def check_fact21_margin(n: int, r: int, tol: Tolerance = DEFAULT_TOL) -> BoundEntry:
    """(n/4) q(T_{n,r}) < e(T_{n,r}) + 1, strictly."""
    if not (2 <= r <= n):
        raise ValueError(f"needs 2 <= r <= n, got n={n}, r={r}")
    lhs = n / 4 * q_value(turan(n, r), tol)
    return _entry("fact21_margin", lhs, float(turan_edges(n, r) + 1), tol, strict=True)


def check_dl1(
    ex_seq: Mapping[int, int], params: CriterionParams, n: int, tol: Tolerance = DEFAULT_TOL
) -> BoundEntry:
    """|ex(n,F) - ex(n-1,F) - pi(F) n| <= sigma n."""
    if n not in ex_seq or (n - 1) not in ex_seq:
        raise ValueError(f"Turan-number sequence missing values at {n} or {n - 1}")
    dev = abs(ex_seq[n] - ex_seq[n - 1] - params.pi * n)
    return _entry("criterion_dl1", dev, params.sigma * n, tol)


def check_dl2(
    q_gn: float, ex_n: int, params: CriterionParams, n: int, tol: Tolerance = DEFAULT_TOL
) -> BoundEntry:
    """|q(G_n) - 4 ex(n,F) / n| <= sigma."""
    if n < 1:
        raise ValueError("needs n >= 1")
    dev = abs(q_gn - 4 * ex_n / n)
    return _entry("criterion_dl2", dev, params.sigma, tol)


def check_qn_estimate(
    q_gn: float, params: CriterionParams, n: int, tol: Tolerance = DEFAULT_TOL
) -> BoundEntry:
    """Report-only: |q(G_n)/n - 2 pi|, the o(1) defect of the asymptotic
    radius estimate. There is no pass/fail side."""
    if n < 1:
        raise ValueError("needs n >= 1")
    dev = abs(q_gn / n - 2 * params.pi)
    return BoundEntry(
        name="qn_estimate",
        lhs=dev,
        rhs=None,
        slack=None,
        holds=True,
        equality=dev <= tol.cmp_tol,
        report_only=True,
    )


def check_beg_gap(
    q_gn: float, q_gn1: float, params: CriterionParams, tol: Tolerance = DEFAULT_TOL
) -> BoundEntry:
    """Report-only at small n: |q(G_n) - q(G_{n-1}) - 2 pi| <= 7 sigma."""
    dev = abs(q_gn - q_gn1 - 2 * params.pi)
    return _entry("criterion_beg_gap", dev, 7 * params.sigma, tol, report_only=True)


def check_min_degree_stability(g: Graph, r: int, tol: Tolerance = DEFAULT_TOL) -> BoundEntry:
    """Degree stability: min degree above (3r-4)/(3r-1) n forces G to be
    r-partite (for the clique case the implication is unconditional).

    The entry stores lhs = threshold and rhs = min degree, so slack > 0
    means the premise fires; ``holds`` is the implication itself.
    """
    if r < 2:
        raise ValueError(f"needs r >= 2, got {r}")
    if g.n < 1:
        raise ValueError("needs n >= 1")
    delta = min(g.degrees())
    # strict premise decided in integer arithmetic
    premise = delta * (3 * r - 1) > (3 * r - 4) * g.n
    threshold = (3 * r - 4) / (3 * r - 1) * g.n
    if not premise:
        holds = True
        note = "premise=False (vacuous)"
    else:
        partite = is_r_partite(g, r)
        holds = partite
        note = f"premise=True, r_partite={partite}"
    slack = delta - threshold
    return BoundEntry(
        name="degree_stability",
        lhs=threshold,
        rhs=float(delta),
        slack=slack,
        holds=holds,
        equality=abs(slack) <= tol.cmp_tol,
        note=note,
    )


def check_fact1(a: float, x: float) -> bool:
    """ln(1 - a x) + a x + x^2 > 0 on 0 < x < 1/2, 0 < a < 1."""
    if not (0 < x < 0.5):
        raise ValueError(f"x must be in (0, 1/2), got {x}")
    if not (0 < a < 1):
        raise ValueError(f"a must be in (0, 1), got {a}")
    return math.log1p(-a * x) + a * x + x * x > 0


def check_fact2(x: float) -> bool:
    """1/x < ln x - ln(x-1) and 1/x^2 < 1/(x-1) - 1/x, for x > 1.

    log1p and the factored difference keep both sides accurate for large x.
    """
    if not (x > 1):
        raise ValueError(f"x must be > 1, got {x}")
    first = 1.0 / x < -math.log1p(-1.0 / x)
    second = 1.0 / (x * x) < 1.0 / ((x - 1.0) * x)
    return first and second
