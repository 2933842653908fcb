"""Isomorph-free enumeration, graph6 corpus ingestion, extremal searches,
Turan density estimation, and conjecture exploration."""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import _kernels
from .bounds import CriterionParams
from .chromatic import chromatic_number
from .families import turan
from .graphs import Graph, Graph6Error, parse_graph6, to_graph6
from .spectral import DEFAULT_TOL, Tolerance, q_value
from .subgraph import is_free

ENUMERATION_CAP = 9
CORPUS_DIR_ENV = "QTURAN_CORPUS_DIR"


@dataclass
class SearchReport:
    """Extremal scan result for (n, F).

    ``mode`` says which quantity was maximized; the other field reports the
    corresponding value over the winning graphs. ``extremal_graphs`` holds
    canonical graph6 strings.
    """

    n: int
    forbidden: str
    mode: str
    ex_edges: Optional[int]
    max_q: Optional[float]
    extremal_graphs: List[str]
    scanned: int
    elapsed: float

    def to_json(self) -> str:
        return json.dumps(vars(self), indent=2)


@dataclass
class DensityEstimate:
    """Exact points of ex(n,F)/C(n,2) with the chromatic limit hint."""

    forbidden: str
    points: List[Tuple[int, int, int]]  # (n, ex_edges, n choose 2)
    limit_hint: float

    def ratios(self) -> List[Fraction]:
        return [Fraction(ex, pairs) for (_, ex, pairs) in self.points]

    def non_increasing(self) -> bool:
        r = self.ratios()
        return all(r[i + 1] <= r[i] for i in range(len(r) - 1))

    def to_json(self) -> str:
        payload = {
            "forbidden": self.forbidden,
            "limit_hint": self.limit_hint,
            "points": [
                {"n": n, "ex": ex, "pairs": pairs, "ratio": ex / pairs}
                for (n, ex, pairs) in self.points
            ],
            "non_increasing": self.non_increasing(),
        }
        return json.dumps(payload, indent=2)


# -- enumeration ---------------------------------------------------------------


def _delete_rows(n: int, rows: Sequence[int], v: int) -> Tuple[int, ...]:
    low = (1 << v) - 1
    out = []
    for u in range(n):
        if u == v:
            continue
        r = rows[u]
        out.append((r & low) | ((r >> (v + 1)) << v))
    return tuple(out)


@lru_cache(maxsize=16)
def _classes(n: int) -> Tuple[Graph, ...]:
    """All isomorphism classes of order n, canonically labeled, generated by
    canonical augmentation: a child of a parent survives iff deleting the
    vertex at its last canonical position reproduces the parent, with
    per-parent deduplication absorbing automorphic extensions."""
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    out: List[Graph] = []
    k = n - 1
    for parent in _classes(k):
        seen: set = set()
        prows = parent.rows
        for subset in range(1 << k):
            rows = list(prows)
            for j in range(k):
                if (subset >> j) & 1:
                    rows[j] |= 1 << k
            rows.append(subset)
            order, canon = _kernels.canonical_labeling(n, tuple(rows))
            if canon in seen:
                continue
            last = order[n - 1]
            if last == k:
                # deleting the new vertex trivially reproduces the parent
                seen.add(canon)
                out.append(Graph(n, canon))
                continue
            reduced = _delete_rows(n, rows, last)
            if _kernels.canonical_form(k, reduced) == prows:
                seen.add(canon)
                out.append(Graph(n, canon))
    return tuple(out)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order n, in a
    deterministic order. Capped at n = 9; ingest an external corpus beyond."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > ENUMERATION_CAP:
        raise ValueError(
            f"built-in enumeration capped at n={ENUMERATION_CAP}; "
            f"use ingest_corpus() with an external graph6 file for n={n}"
        )
    return iter(_classes(n))


def count_classes(n: int) -> int:
    return len(_classes(n))


def ingest_corpus(
    path: str, strict: bool = False, errors: Optional[List[Tuple[int, str]]] = None
) -> Iterator[Graph]:
    """Stream graphs from a newline-separated graph6 file.

    Malformed lines: in strict mode the error (with line number) aborts the
    stream; otherwise it is appended to ``errors`` and the stream continues.
    """
    resolved = resolve_corpus_path(path)

    def gen():
        with open(resolved, "rb") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield parse_graph6(line)
                except Graph6Error as exc:
                    if strict:
                        raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None
                    if errors is not None:
                        errors.append((lineno, str(exc)))

    return gen()


def resolve_corpus_path(path: str) -> str:
    if os.path.exists(path) or os.path.isabs(path):
        return path
    base = os.environ.get(CORPUS_DIR_ENV)
    if base:
        joined = os.path.join(base, path)
        if os.path.exists(joined):
            return joined
    return path


def _graph_source(n: int, corpus: Optional[str]) -> Iterable[Graph]:
    if corpus is not None:
        # corpus files may bundle several orders; an (n, F) report only
        # concerns order-n entries
        return (g for g in ingest_corpus(corpus) if g.n == n)
    return enumerate_graphs(n)


# -- extremal scans --------------------------------------------------------------


def _edge_chunk_worker(chunk: Sequence[Graph], f: Graph) -> Tuple[int, List[Graph], int]:
    best = -1
    winners: List[Graph] = []
    for g in chunk:
        m = g.m
        if m < best or not is_free(g, f):
            continue
        if m > best:
            best = m
            winners = [g]
        else:
            winners.append(g)
    return best, winners, len(chunk)


def _q_chunk_worker(
    chunk: Sequence[Graph],
    f: Graph,
    tol: Tolerance,
    min_degree_above: Optional[float],
) -> Tuple[float, List[Graph], int]:
    best = float("-inf")
    winners: List[Graph] = []
    for g in chunk:
        if min_degree_above is not None:
            degs = g.degrees()
            if not degs or min(degs) <= min_degree_above:
                continue
        if not is_free(g, f):
            continue
        q = q_value(g, tol)
        if q > best + tol.cmp_tol:
            best = q
            winners = [g]
        elif q >= best - tol.cmp_tol:
            winners.append(g)
            best = max(best, q)
    return best, winners, len(chunk)


def _scan_chunks(worker, source: Iterable[Graph], jobs: int):
    """Run a chunk worker over the stream; the merge (max plus argmax set)
    is associative, so the result is identical for any worker count."""
    items = list(source)
    if jobs <= 1 or len(items) < 256:
        return [worker(items)]
    size = max(1, (len(items) + 4 * jobs - 1) // (4 * jobs))
    chunks = [items[i: i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(worker, chunks))


def extremal_edges(
    n: int,
    f: Graph,
    corpus: Optional[str] = None,
    tol: Tolerance = DEFAULT_TOL,
    jobs: int = 1,
) -> SearchReport:
    """ex(n, F) with every extremal isomorphism class.

    Graphs already below the running record are skipped without a
    containment test; the record and ties use exact integer comparison.
    """
    t0 = time.perf_counter()
    best = -1
    winners: List[Graph] = []
    scanned = 0
    for part_best, part_winners, part_scanned in _scan_chunks(
        partial(_edge_chunk_worker, f=f), _graph_source(n, corpus), jobs
    ):
        scanned += part_scanned
        if part_best > best:
            best = part_best
            winners = list(part_winners)
        elif part_best == best and part_best >= 0:
            winners.extend(part_winners)
    qmax = max((q_value(g, tol) for g in winners), default=None)
    return SearchReport(
        n=n,
        forbidden=to_graph6(f).decode("ascii"),
        mode="edges",
        ex_edges=best if best >= 0 else None,
        max_q=qmax,
        extremal_graphs=[to_graph6(g).decode("ascii") for g in winners],
        scanned=scanned,
        elapsed=time.perf_counter() - t0,
    )


def extremal_q(
    n: int,
    f: Graph,
    corpus: Optional[str] = None,
    tol: Tolerance = DEFAULT_TOL,
    min_degree_above: Optional[float] = None,
    jobs: int = 1,
) -> SearchReport:
    """Max q(G) over F-free classes with all maximizers at cmp_tol, then an
    exact re-ranking of the tied set at eig_tol/100 to guard tolerance ties.

    No edge pruning: q is not monotone in the edge count across classes.
    ``min_degree_above`` restricts the scan to delta(G) > that value.
    """
    t0 = time.perf_counter()
    best = float("-inf")
    winners: List[Graph] = []
    scanned = 0
    for part_best, part_winners, part_scanned in _scan_chunks(
        partial(_q_chunk_worker, f=f, tol=tol, min_degree_above=min_degree_above),
        _graph_source(n, corpus),
        jobs,
    ):
        scanned += part_scanned
        for g in part_winners:
            q = q_value(g, tol)
            if q > best + tol.cmp_tol:
                best = q
                winners = [g]
            elif q >= best - tol.cmp_tol:
                winners.append(g)
                best = max(best, q)
    if winners:
        fine = Tolerance(eig_tol=tol.eig_tol / 100, cmp_tol=tol.cmp_tol)
        refined = [(q_value(g, fine), g) for g in winners]
        best = max(q for q, _ in refined)
        winners = [g for q, g in refined if q >= best - tol.cmp_tol]
    return SearchReport(
        n=n,
        forbidden=to_graph6(f).decode("ascii"),
        mode="q",
        ex_edges=max((g.m for g in winners), default=None),
        max_q=best if winners else None,
        extremal_graphs=[to_graph6(g).decode("ascii") for g in winners],
        scanned=scanned,
        elapsed=time.perf_counter() - t0,
    )


def turan_density_estimate(
    f: Graph, n_max: int, corpus_by_n: Optional[Dict[int, str]] = None
) -> DensityEstimate:
    """Exact ex(n,F)/C(n,2) for n from |F| to n_max, with the limit hint
    1 - 1/(chi(F) - 1)."""
    if f.n < 2:
        raise ValueError("forbidden graph needs at least 2 vertices")
    points = []
    for n in range(f.n, n_max + 1):
        corpus = corpus_by_n.get(n) if corpus_by_n else None
        rep = extremal_edges(n, f, corpus=corpus)
        points.append((n, rep.ex_edges, n * (n - 1) // 2))
    chi = chromatic_number(f)
    hint = 1.0 - 1.0 / (chi - 1) if chi >= 2 else 0.0
    return DensityEstimate(
        forbidden=to_graph6(f).decode("ascii"), points=points, limit_hint=hint
    )


def min_degree_family(
    n: int,
    f: Graph,
    params: CriterionParams,
    corpus: Optional[str] = None,
    tol: Tolerance = DEFAULT_TOL,
) -> Dict[str, object]:
    """q over the family of F-free graphs with min degree > (pi - eps) n.

    Also verifies the Turan membership arithmetic: delta(T_{n,r}) =
    floor((r-1) n / r) exceeds the threshold and T_{n,r} is F-free.
    """
    threshold = (params.pi - params.epsilon) * n
    rep = extremal_q(n, f, corpus=corpus, tol=tol, min_degree_above=threshold)
    r = params.r
    turan_delta = ((r - 1) * n) // r
    tg = turan(n, min(r, n))
    turan_in_family = turan_delta > threshold and is_free(tg, f)
    return {
        "n": n,
        "forbidden": rep.forbidden,
        "threshold": threshold,
        "family_empty": not rep.extremal_graphs,
        "max_q": rep.max_q,
        "maximizers": rep.extremal_graphs,
        "scanned": rep.scanned,
        "turan_min_degree": turan_delta,
        "turan_in_family": turan_in_family,
    }


# -- conjecture exploration -------------------------------------------------------


def _universal_mask(g: Graph) -> int:
    full = (1 << g.n) - 1
    mask = 0
    for v in range(g.n):
        if g.rows[v] == full & ~(1 << v):
            mask |= 1 << v
    return mask


def _block_degree_ok(degrees: Sequence[int], d: int) -> bool:
    """(nearly) d-regular: all degrees d, or one d-1 when d*n is odd."""
    ds = sorted(degrees)
    n = len(ds)
    if all(x == d for x in ds):
        return (d * n) % 2 == 0
    if (d * n) % 2 == 1:
        return ds[0] == d - 1 and all(x == d for x in ds[1:])
    return False


def _has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return True
    return False


def in_family_L(g: Graph, s: int, t: int) -> bool:
    """Is G the join of a clique K_{s-1} with a (nearly) (t-1)-regular
    triangle-free block? Peels s-1 universal vertices and checks the rest."""
    from .graphs import delete_vertex

    uni = _universal_mask(g)
    if uni.bit_count() < s - 1:
        return False
    peel = []
    m = uni
    while m and len(peel) < s - 1:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        peel.append(v)
    h = g
    for v in sorted(peel, reverse=True):
        h = delete_vertex(h, v)
    return _block_degree_ok(h.degrees(), t - 1) and not _has_triangle(h)


def in_family_Y(g: Graph, t: int) -> bool:
    """Is G the join of an independent set I_{t-1} with a (nearly)
    (t-1)-regular triangle-free block?"""
    from itertools import combinations

    from .graphs import delete_vertex

    k = t - 1
    if g.n < k:
        return False
    want = g.n - k  # degree of each joined independent vertex
    cands = [v for v in range(g.n) if g.degree(v) == want]
    for subset in combinations(cands, k):
        smask = 0
        for v in subset:
            smask |= 1 << v
        ok = True
        for v in subset:
            if g.rows[v] != ((1 << g.n) - 1) & ~smask:
                ok = False
                break
        if not ok:
            continue
        h = g
        for v in sorted(subset, reverse=True):
            h = delete_vertex(h, v)
        if _block_degree_ok(h.degrees(), t - 1) and not _has_triangle(h):
            return True
    return False


def explore_kst_conjecture(
    n: int,
    s: int,
    t: int,
    corpus: Optional[str] = None,
    tol: Tolerance = DEFAULT_TOL,
) -> Dict[str, object]:
    """Max q over K_{s,t}^+-free classes, compared against the two candidate
    families; reports whether every maximizer decomposes into one of them.
    Report-only: the conjecture is asymptotic."""
    from .families import family_L_sample, family_Y_sample, kst_plus

    if not (2 <= s <= t):
        raise ValueError(f"needs 2 <= s <= t, got s={s}, t={t}")
    f = kst_plus(s, t)
    rep = extremal_q(n, f, corpus=corpus, tol=tol)
    out: Dict[str, object] = {
        "n": n,
        "s": s,
        "t": t,
        "max_q": rep.max_q,
        "maximizers": rep.extremal_graphs,
        "scanned": rep.scanned,
    }
    try:
        ls = family_L_sample(n, s, t)
        out["q_L_sample"] = q_value(ls, tol) if ls is not None else None
    except ValueError:
        out["q_L_sample"] = None
    try:
        ys = family_Y_sample(n, t)
        out["q_Y_sample"] = q_value(ys, tol) if ys is not None else None
    except ValueError:
        out["q_Y_sample"] = None
    # which family currently leads is recorded per order (the asymptotic
    # direction flips with s), so sign changes across n are visible
    ql, qy = out["q_L_sample"], out["q_Y_sample"]
    if ql is not None and qy is not None:
        if abs(ql - qy) <= tol.cmp_tol:
            out["family_lead"] = "tie"
        else:
            out["family_lead"] = "L" if ql > qy else "Y"
    else:
        out["family_lead"] = None
    membership = []
    for g6 in rep.extremal_graphs:
        g = parse_graph6(g6.encode("ascii"))
        membership.append(
            {"graph6": g6, "in_L": in_family_L(g, s, t), "in_Y": in_family_Y(g, t)}
        )
    out["maximizer_membership"] = membership
    out["conjecture_consistent"] = all(m["in_L"] or m["in_Y"] for m in membership)
    return out


# -- seeded random graphs (verification sweeps) -----------------------------------


def sample_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) sample from the given RNG (deterministic under a fixed seed)."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
