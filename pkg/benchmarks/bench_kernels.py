#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-Python fallback.

Times the three hot kernels (canonical labeling, clique search, subgraph
embedding) on representative workloads, plus an end-to-end enumeration of
all order-8 isomorphism classes through each backend.

Usage:
    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import random
import time

from qturan._kernels import pure

try:
    from qturan._kernels import _speed as speed
except ImportError:
    speed = None

from qturan import families as F


def rand_rows(rng, n, p):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def timeit(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_canonical(backend, graphs):
    for n, rows in graphs:
        backend.canonical_labeling(n, rows)


def bench_clique(backend, graphs):
    for n, rows in graphs:
        backend.find_clique(n, rows, 4)


def bench_embedding(backend, pairs):
    for (fn_, f_rows), (gn, g_rows) in pairs:
        backend.find_embedding(fn_, f_rows, gn, g_rows)


def bench_enumeration(backend, n_max):
    """Canonical-augmentation enumeration driven directly through a backend."""

    def delete_rows(n, rows, v):
        low = (1 << v) - 1
        return tuple(
            (r & low) | ((r >> (v + 1)) << v) for u, r in enumerate(rows) if u != v
        )

    level = [(1, (0,))]
    for k in range(1, n_max):
        nxt = []
        for pn, prows in level:
            seen = set()
            for subset in range(1 << k):
                rows = list(prows)
                for j in range(k):
                    if (subset >> j) & 1:
                        rows[j] |= 1 << k
                rows.append(subset)
                order, canon = backend.canonical_labeling(k + 1, tuple(rows))
                if canon in seen:
                    continue
                last = order[k]
                if last == k or backend.canonical_form(k, delete_rows(k + 1, rows, last)) == prows:
                    seen.add(canon)
                    nxt.append((k + 1, canon))
        level = nxt
    return len(level)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    rng = random.Random(2024)
    n_rand = 400 if args.quick else 2000
    canon_graphs = [(8, rand_rows(rng, 8, p)) for p in (0.2, 0.5, 0.8) for _ in range(n_rand // 3)]
    canon_graphs += [
        (8, F.complete(8).rows),
        (8, F.turan(8, 2).rows),
        (10, F.petersen().rows),
        (12, F.turan(12, 3).rows),
    ]
    clique_graphs = [(12, rand_rows(rng, 12, p)) for p in (0.3, 0.6) for _ in range(n_rand // 2)]
    w6 = F.wheel(1, 5)
    embed_pairs = [
        ((w6.n, w6.rows), (10, rand_rows(rng, 10, p)))
        for p in (0.4, 0.7)
        for _ in range(n_rand // 4)
    ]
    enum_n = 7 if args.quick else 8

    backends = [("pure", pure)]
    if speed is not None:
        backends.append(("cython", speed))
    else:
        print("compiled core not built; benchmarking pure backend only")

    rows = []
    for label, fn, work in [
        ("canonical labeling", bench_canonical, canon_graphs),
        ("clique search (k=4)", bench_clique, clique_graphs),
        ("W6 embedding", bench_embedding, embed_pairs),
    ]:
        times = {}
        for name, backend in backends:
            times[name] = timeit(lambda b=backend: fn(b, work))
        rows.append((f"{label} x{len(work)}", times))

    times = {}
    counts = {}
    for name, backend in backends:
        t0 = time.perf_counter()
        counts[name] = bench_enumeration(backend, enum_n)
        times[name] = time.perf_counter() - t0
    rows.append((f"enumerate all classes n={enum_n} ({counts[backends[0][0]]})", times))
    if len(counts) == 2 and counts["pure"] != counts["cython"]:
        raise SystemExit("backend disagreement during enumeration!")

    width = max(len(r[0]) for r in rows) + 2
    header = f"{'workload':{width}s}" + "".join(f"{name:>12s}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for label, times in rows:
        line = f"{label:{width}s}"
        for name, _ in backends:
            line += f"{times[name] * 1000:>10.1f}ms"
        if len(backends) == 2:
            line += f"{times['pure'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
