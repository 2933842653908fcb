"""Pure-Python combinatorial kernels: canonical labeling, clique search,
subgraph embedding.

Graphs enter as ``(n, rows)`` where ``rows[v]`` is an integer bitmask of the
neighbors of ``v``. These three routines dominate the runtime of enumeration
and extremal sweeps; the compiled backend in ``_speed.pyx`` mirrors them
operation-for-operation, so both must produce bit-identical output.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

BACKEND_NAME = "pure"


def canonical_labeling(n: int, rows: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return ``(order, canon_rows)`` for the canonical labeling of a graph.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``canon_rows`` is the relabeled adjacency. The canonical key is the
    per-position token sequence ``(degree, adjacency-bits-to-placed)``,
    maximized lexicographically, so two graphs are isomorphic iff their
    ``canon_rows`` agree. Branches tied on tokens are pruned when two
    candidates are twins (swapping them is an automorphism).
    """
    if n == 0:
        return (), ()
    if n == 1:
        return (0,), (0,)
    degs = [rows[v].bit_count() for v in range(n)]
    full = (1 << n) - 1

    # best token prefix found so far; valid entries are [0:valid)
    best_deg = [0] * n
    best_bits = [0] * n
    state = {"valid": 0, "order": None}

    order = [0] * n
    # bits[v] = adjacency of v to already-placed positions, updated incrementally
    bits = [0] * n

    def dfs(i: int, used: int, improved: bool) -> None:
        if i == n:
            if improved:
                state["order"] = order.copy()
            return
        rem = full & ~used
        # find the maximal token (deg, bits) among unused vertices
        tdeg = -1
        tbits = -1
        cands = []
        m = rem
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = degs[v]
            if d < tdeg:
                continue
            b = bits[v]
            if d > tdeg or b > tbits:
                tdeg, tbits = d, b
                cands = [v]
            elif b == tbits:
                cands.append(v)
        if not improved:
            if i < state["valid"]:
                bd, bb = best_deg[i], best_bits[i]
                if tdeg < bd or (tdeg == bd and tbits < bb):
                    return
                improved = tdeg > bd or tbits > bb
            else:
                improved = True
        if improved:
            best_deg[i] = tdeg
            best_bits[i] = tbits
            state["valid"] = i + 1
        # twin pruning: branch on one representative per interchangeable class
        reps = []
        for v in cands:
            rv = rows[v]
            bv = 1 << v
            for u in reps:
                mask = rem & ~bv & ~(1 << u)
                if (rv & mask) == (rows[u] & mask):
                    break
            else:
                reps.append(v)
        # once the first child's subtree has recorded a best completion, the
        # shared prefix merely ties it, so later siblings must re-compare
        pos = 1 << i
        first = True
        for v in reps:
            order[i] = v
            rv = rows[v]
            touched = []
            m = rem & ~(1 << v) & rv
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                bits[w] |= pos
                touched.append(w)
            dfs(i + 1, used | (1 << v), improved if first else False)
            first = False
            for w in touched:
                bits[w] &= ~pos
        return

    dfs(0, 0, False)
    best_order = state["order"]
    canon = []
    inv = [0] * n
    for i, v in enumerate(best_order):
        inv[v] = i
    for v in best_order:
        row = 0
        m = rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            row |= 1 << inv[w]
        canon.append(row)
    return tuple(best_order), tuple(canon)


def canonical_form(n: int, rows: Sequence[int]) -> Tuple[int, ...]:
    """Canonical adjacency rows only (see :func:`canonical_labeling`)."""
    return canonical_labeling(n, rows)[1]


def find_clique(n: int, rows: Sequence[int], k: int) -> Optional[Tuple[int, ...]]:
    """Find a k-clique, returned as an ascending vertex tuple, or None.

    Vertices of degree < k-1 are excluded up front; the search enumerates
    candidate extensions in ascending index order, so the witness is the
    lexicographically first clique over the pruned graph.
    """
    if k <= 0:
        return ()
    if k > n:
        return None
    if k == 1:
        return (0,)
    allowed = 0
    for v in range(n):
        if rows[v].bit_count() >= k - 1:
            allowed |= 1 << v
    if allowed.bit_count() < k:
        return None

    chosen = []

    def rec(cand: int) -> bool:
        if len(chosen) == k:
            return True
        if len(chosen) + cand.bit_count() < k:
            return False
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            if len(chosen) + 1 + (c & rows[v]).bit_count() < k:
                continue
            chosen.append(v)
            if rec(c & rows[v]):
                return True
            chosen.pop()
        return False

    if rec(allowed):
        return tuple(chosen)
    return None


def find_embedding(
    fn: int,
    f_rows: Sequence[int],
    gn: int,
    g_rows: Sequence[int],
) -> Optional[Tuple[int, ...]]:
    """Find an injective map embedding F into G as a (not necessarily
    induced) subgraph; returns ``phi`` with ``phi[f_vertex] = g_vertex``.

    F-vertices are processed in descending-degree order. Candidates are
    filtered by degree and by adjacency to already-mapped F-neighbors, plus a
    count check that enough unused G-neighbors remain for the unmapped ones.
    """
    if fn == 0:
        return ()
    if fn > gn:
        return None
    fdeg = [f_rows[v].bit_count() for v in range(fn)]
    gdeg = [g_rows[v].bit_count() for v in range(gn)]
    order = sorted(range(fn), key=lambda v: (-fdeg[v], v))
    pos = [0] * fn
    for i, v in enumerate(order):
        pos[v] = i
    # per position: mask of earlier positions that must be G-adjacent, count
    # of F-neighbors not yet placed, and degree-feasible base candidates
    need_prev = [0] * fn
    later_deg = [0] * fn
    base = [0] * fn
    for i, v in enumerate(order):
        m = f_rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if pos[w] < i:
                need_prev[i] |= 1 << pos[w]
            else:
                later_deg[i] += 1
        bmask = 0
        for g in range(gn):
            if gdeg[g] >= fdeg[v]:
                bmask |= 1 << g
        base[i] = bmask

    phi_pos = [0] * fn

    def rec(i: int, used: int) -> bool:
        if i == fn:
            return True
        cand = base[i] & ~used
        m = need_prev[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            cand &= g_rows[phi_pos[j]]
        need_later = later_deg[i]
        c = cand
        while c:
            g = (c & -c).bit_length() - 1
            c &= c - 1
            if need_later and (g_rows[g] & ~used).bit_count() < need_later:
                continue
            phi_pos[i] = g
            if rec(i + 1, used | (1 << g)):
                return True
        return False

    if not rec(0, 0):
        return None
    phi = [0] * fn
    for i, v in enumerate(order):
        phi[v] = phi_pos[i]
    return tuple(phi)
