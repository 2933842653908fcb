# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical labeling, clique search, subgraph embedding.

Mirrors ``pure.py`` operation-for-operation (same candidate order, twin
pruning and tie-breaking) for graphs with at most 64 vertices; the dispatcher
in ``__init__`` guarantees both backends return identical results.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int qt_popcount64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int qt_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int qt_popcount64(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static inline int qt_ctz64(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c;
    }
    #endif
    """
    int qt_popcount64(unsigned long long x) nogil
    int qt_ctz64(unsigned long long x) nogil

BACKEND_NAME = "cython"


# -- canonical labeling ------------------------------------------------------

cdef struct CanonState:
    int n
    int valid
    uint64_t full
    uint64_t rows[64]
    uint64_t bits[64]
    uint64_t best_bits[64]
    int degs[64]
    int order[64]
    int best_deg[64]
    int best_order[64]


cdef void canon_dfs(CanonState* st, int i, uint64_t used, bint improved) noexcept:
    cdef int n = st.n
    cdef int j, v, w, u, d, idx, tdeg, bd, nc, nreps
    cdef uint64_t rem, m, c, b, rv, bv, mask, pos, touched, tbits, bb
    cdef bint any_c, is_twin, first
    cdef int cands[64]
    cdef int reps[64]

    if i == n:
        if improved:
            for j in range(n):
                st.best_order[j] = st.order[j]
        return

    rem = st.full & ~used
    tdeg = -1
    tbits = 0
    any_c = False
    nc = 0
    m = rem
    while m:
        v = qt_ctz64(m)
        m &= m - 1
        d = st.degs[v]
        if any_c and d < tdeg:
            continue
        b = st.bits[v]
        if (not any_c) or d > tdeg or b > tbits:
            tdeg = d
            tbits = b
            cands[0] = v
            nc = 1
            any_c = True
        elif d == tdeg and b == tbits:
            cands[nc] = v
            nc += 1

    if not improved:
        if i < st.valid:
            bd = st.best_deg[i]
            bb = st.best_bits[i]
            if tdeg < bd or (tdeg == bd and tbits < bb):
                return
            improved = tdeg > bd or (tdeg == bd and tbits > bb)
        else:
            improved = True
    if improved:
        st.best_deg[i] = tdeg
        st.best_bits[i] = tbits
        st.valid = i + 1

    nreps = 0
    for idx in range(nc):
        v = cands[idx]
        rv = st.rows[v]
        bv = (<uint64_t>1) << v
        is_twin = False
        for j in range(nreps):
            u = reps[j]
            mask = rem & ~bv & ~((<uint64_t>1) << u)
            if (rv & mask) == (st.rows[u] & mask):
                is_twin = True
                break
        if not is_twin:
            reps[nreps] = v
            nreps += 1

    pos = (<uint64_t>1) << i
    first = True
    for idx in range(nreps):
        v = reps[idx]
        st.order[i] = v
        touched = rem & ~((<uint64_t>1) << v) & st.rows[v]
        m = touched
        while m:
            w = qt_ctz64(m)
            m &= m - 1
            st.bits[w] |= pos
        canon_dfs(st, i + 1, used | ((<uint64_t>1) << v), improved if first else False)
        first = False
        m = touched
        while m:
            w = qt_ctz64(m)
            m &= m - 1
            st.bits[w] &= ~pos


def canonical_labeling(int n, rows):
    if n == 0:
        return (), ()
    if n == 1:
        return (0,), (0,)
    if n > 64:
        raise ValueError("compiled kernel capped at 64 vertices")
    cdef CanonState st
    cdef int v, j
    st.n = n
    st.full = ((<uint64_t>1 << n) - 1) if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    st.valid = 0
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
        st.bits[v] = 0
        st.degs[v] = qt_popcount64(st.rows[v])
    canon_dfs(&st, 0, 0, False)
    cdef int inv[64]
    for j in range(n):
        inv[st.best_order[j]] = j
    cdef uint64_t row, m
    canon = []
    for j in range(n):
        row = 0
        m = st.rows[st.best_order[j]]
        while m:
            v = qt_ctz64(m)
            m &= m - 1
            row |= (<uint64_t>1) << inv[v]
        canon.append(int(row))
    return tuple(st.best_order[j] for j in range(n)), tuple(canon)


def canonical_form(int n, rows):
    return canonical_labeling(n, rows)[1]


# -- clique search -----------------------------------------------------------

cdef struct CliqueState:
    int n
    int k
    int nchosen
    uint64_t rows[64]
    int chosen[64]


cdef bint clique_rec(CliqueState* st, uint64_t cand) noexcept:
    cdef uint64_t c
    cdef int v
    if st.nchosen == st.k:
        return True
    if st.nchosen + qt_popcount64(cand) < st.k:
        return False
    c = cand
    while c:
        v = qt_ctz64(c)
        c &= c - 1
        if st.nchosen + 1 + qt_popcount64(c & st.rows[v]) < st.k:
            continue
        st.chosen[st.nchosen] = v
        st.nchosen += 1
        if clique_rec(st, c & st.rows[v]):
            return True
        st.nchosen -= 1
    return False


def find_clique(int n, rows, int k):
    if k <= 0:
        return ()
    if k > n:
        return None
    if k == 1:
        return (0,)
    if n > 64:
        raise ValueError("compiled kernel capped at 64 vertices")
    cdef CliqueState st
    cdef int v
    cdef uint64_t allowed = 0
    st.n = n
    st.k = k
    st.nchosen = 0
    for v in range(n):
        st.rows[v] = <uint64_t>rows[v]
        if qt_popcount64(st.rows[v]) >= k - 1:
            allowed |= (<uint64_t>1) << v
    if qt_popcount64(allowed) < k:
        return None
    if clique_rec(&st, allowed):
        return tuple(st.chosen[v] for v in range(k))
    return None


# -- subgraph embedding --------------------------------------------------------

cdef struct EmbedState:
    int fn
    int gn
    uint64_t g_rows[64]
    uint64_t need_prev[64]
    uint64_t base[64]
    int later_deg[64]
    int phi_pos[64]


cdef bint embed_rec(EmbedState* st, int i, uint64_t used) noexcept:
    cdef uint64_t cand, m, c
    cdef int j, g, need_later
    if i == st.fn:
        return True
    cand = st.base[i] & ~used
    m = st.need_prev[i]
    while m:
        j = qt_ctz64(m)
        m &= m - 1
        cand &= st.g_rows[st.phi_pos[j]]
    need_later = st.later_deg[i]
    c = cand
    while c:
        g = qt_ctz64(c)
        c &= c - 1
        if need_later and qt_popcount64(st.g_rows[g] & ~used) < need_later:
            continue
        st.phi_pos[i] = g
        if embed_rec(st, i + 1, used | ((<uint64_t>1) << g)):
            return True
    return False


def find_embedding(int fn, f_rows, int gn, g_rows):
    if fn == 0:
        return ()
    if fn > gn:
        return None
    if fn > 64 or gn > 64:
        raise ValueError("compiled kernel capped at 64 vertices")
    cdef EmbedState st
    cdef int v, i, j, w, g
    cdef uint64_t frow_c[64]
    cdef int fdeg[64]
    cdef int gdeg[64]
    cdef int order[64]
    cdef int pos[64]
    st.fn = fn
    st.gn = gn
    for v in range(fn):
        frow_c[v] = <uint64_t>f_rows[v]
        fdeg[v] = qt_popcount64(frow_c[v])
    for v in range(gn):
        st.g_rows[v] = <uint64_t>g_rows[v]
        gdeg[v] = qt_popcount64(st.g_rows[v])
    # descending degree, ascending index (insertion sort: fn <= 64)
    for v in range(fn):
        i = v
        while i > 0 and (fdeg[order[i - 1]] < fdeg[v]
                         or (fdeg[order[i - 1]] == fdeg[v] and order[i - 1] > v)):
            order[i] = order[i - 1]
            i -= 1
        order[i] = v
    for i in range(fn):
        pos[order[i]] = i
    cdef uint64_t m, bmask
    for i in range(fn):
        v = order[i]
        st.need_prev[i] = 0
        st.later_deg[i] = 0
        m = frow_c[v]
        while m:
            w = qt_ctz64(m)
            m &= m - 1
            if pos[w] < i:
                st.need_prev[i] |= (<uint64_t>1) << pos[w]
            else:
                st.later_deg[i] += 1
        bmask = 0
        for g in range(gn):
            if gdeg[g] >= fdeg[v]:
                bmask |= (<uint64_t>1) << g
        st.base[i] = bmask
    if not embed_rec(&st, 0, 0):
        return None
    phi = [0] * fn
    for i in range(fn):
        phi[order[i]] = st.phi_pos[i]
    return tuple(phi)
