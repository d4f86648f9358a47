# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; drop-in replacement for bei._purepy.

Same functions, same results: the pure module is the executable reference and
the parity test suite holds the two together.  Hot paths are the 2^n subset
sweeps (component counts, toughness, cut surplus, minimal primes) and the
all-graphs enumerations used by the verification sweeps.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    static inline int bei_popcount(unsigned int x) { return __builtin_popcount(x); }
    static inline int bei_ctz(unsigned int x) { return __builtin_ctz(x); }
    """
    int bei_popcount(unsigned int x) nogil
    int bei_ctz(unsigned int x) nogil

BACKEND = "compiled"

cdef enum:
    MAXN = 32
    MAXE = 496  # 32*31/2


cdef int _load_adj(object adj, unsigned int* out) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > 30:
        raise ValueError("kernel supports n <= 30")
    for i in range(n):
        out[i] = adj[i]
    return n


cdef inline int _ncomp_c(unsigned int* adj, int n, unsigned int removed) nogil:
    cdef unsigned int full = (1u << n) - 1u
    cdef unsigned int todo = full & ~removed
    cdef unsigned int comp, frontier, nxt, f
    cdef int cnt = 0
    while todo:
        comp = todo & (0u - todo)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                nxt |= adj[bei_ctz(f)]
                f &= f - 1u
            frontier = nxt & todo & ~comp
            comp |= frontier
        todo &= ~comp
        cnt += 1
    return cnt


cdef inline int _blocks_c(unsigned int* adj, int n, unsigned int removed,
                          unsigned int* out) nogil:
    cdef unsigned int full = (1u << n) - 1u
    cdef unsigned int todo = full & ~removed
    cdef unsigned int comp, frontier, nxt, f
    cdef int cnt = 0
    while todo:
        comp = todo & (0u - todo)
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                nxt |= adj[bei_ctz(f)]
                f &= f - 1u
            frontier = nxt & todo & ~comp
            comp |= frontier
        todo &= ~comp
        out[cnt] = comp
        cnt += 1
    return cnt


def ncomponents(adj, removed=0):
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    return _ncomp_c(a, n, <unsigned int> removed)


def blocks(adj, removed=0):
    """Component masks of G minus the ``removed`` vertex set."""
    cdef unsigned int a[MAXN]
    cdef unsigned int out[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef int cnt = _blocks_c(a, n, <unsigned int> removed, out)
    cdef int i
    return [out[i] for i in range(cnt)]


def cut_counts(adj):
    """c(S) for every subset S of vertices, indexed by bitmask."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    buf = bytearray(1 << n)
    cdef unsigned char[::1] view = buf
    cdef unsigned long long s, size = 1ull << n
    with nogil:
        for s in range(size):
            view[s] = <unsigned char> _ncomp_c(a, n, <unsigned int> s)
    return buf


def toughness_scan(adj):
    """Minimize |S|/c(S) over subsets with c(S) >= 2; smallest |S| then
    smallest mask on ties.  None when the graph is complete."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned long long s, size = 1ull << n
    cdef int c, sz
    cdef int best_sz = 0, best_c = 0
    cdef unsigned int best_mask = 0
    cdef bint have = False
    with nogil:
        for s in range(1, size):
            c = _ncomp_c(a, n, <unsigned int> s)
            if c < 2:
                continue
            sz = bei_popcount(<unsigned int> s)
            if not have:
                best_sz = sz
                best_c = c
                best_mask = <unsigned int> s
                have = True
            elif sz * best_c < best_sz * c or (sz * best_c == best_sz * c and sz < best_sz):
                best_sz = sz
                best_c = c
                best_mask = <unsigned int> s
    if not have:
        return None
    return (best_sz, best_c, best_mask)


def max_cut_surplus(adj):
    """max over subsets S of c(S) - |S|."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned long long s, size = 1ull << n
    cdef int best, val
    with nogil:
        best = _ncomp_c(a, n, 0)
        for s in range(1, size):
            val = _ncomp_c(a, n, <unsigned int> s) - bei_popcount(<unsigned int> s)
            if val > best:
                best = val
    return best


def _popcount_mask_key(s):
    return (s.bit_count(), s)


def top_masks(adj, surplus):
    """All S with c(S) - |S| equal to ``surplus``, sorted by (|S|, mask)."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef int want = surplus
    cdef unsigned long long s, size = 1ull << n
    hits = []
    for s in range(size):
        if _ncomp_c(a, n, <unsigned int> s) - bei_popcount(<unsigned int> s) == want:
            hits.append(s)
    hits.sort(key=_popcount_mask_key)
    return hits


def minimal_prime_masks(adj):
    """Separators whose attached prime is inclusion-minimal (local criterion),
    sorted by (|S|, mask)."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned long long s, size = 1ull << n
    cdef unsigned char* counts = <unsigned char*> malloc(size)
    cdef unsigned int t, bit
    cdef int c
    cdef bint ok
    if counts is NULL:
        raise MemoryError()
    out = [0]
    try:
        with nogil:
            for s in range(size):
                counts[s] = <unsigned char> _ncomp_c(a, n, <unsigned int> s)
        for s in range(1, size):
            c = counts[s]
            t = <unsigned int> s
            ok = True
            while t:
                bit = t & (0u - t)
                t &= t - 1u
                if counts[s ^ bit] >= c:
                    ok = False
                    break
            if ok:
                out.append(s)
    finally:
        free(counts)
    out.sort(key=_popcount_mask_key)
    return out


cdef bint _is_complete_c(unsigned int* adj, int n) nogil:
    cdef unsigned int full = (1u << n) - 1u
    cdef int v
    for v in range(n):
        if adj[v] != (full ^ (1u << v)):
            return False
    return True


cdef int _vertex_maxflow_c(unsigned int* adj, int n, int u, int v, int cutoff) nogil:
    # node 2i: in-copy, 2i+1: out-copy; unit capacities throughout
    cdef signed char res[2 * MAXN][2 * MAXN]
    cdef int prev[2 * MAXN]
    cdef int queue[2 * MAXN]
    cdef int nn = 2 * n
    cdef int i, j, x, y, qh, qt, flow
    cdef unsigned int m
    for i in range(nn):
        memset(res[i], 0, nn)
    for i in range(n):
        res[2 * i][2 * i + 1] = 1
        m = adj[i]
        while m:
            j = bei_ctz(m)
            m &= m - 1u
            res[2 * i + 1][2 * j] = 1
    cdef int src = 2 * u + 1
    cdef int snk = 2 * v
    flow = 0
    while flow < cutoff:
        for i in range(nn):
            prev[i] = -1
        prev[src] = src
        queue[0] = src
        qh = 0
        qt = 1
        while qh < qt and prev[snk] < 0:
            x = queue[qh]
            qh += 1
            for y in range(nn):
                if res[x][y] > 0 and prev[y] < 0:
                    prev[y] = x
                    queue[qt] = y
                    qt += 1
        if prev[snk] < 0:
            break
        y = snk
        while y != src:
            x = prev[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow


def kappa_flow(adj):
    """Vertex connectivity via max-flow on the vertex-split digraph; caller
    guarantees connectivity."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef int best, u, v, f
    if n == 1:
        return 0
    if _is_complete_c(a, n):
        return n - 1
    best = n - 1
    with nogil:
        for u in range(n):
            for v in range(u + 1, n):
                if (a[u] >> v) & 1u:
                    continue
                f = _vertex_maxflow_c(a, n, u, v, best)
                if f < best:
                    best = f
    return best


def kappa_bruteforce(adj):
    """Vertex connectivity by increasing-cardinality subset enumeration with
    an independent BFS connectivity test."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef int k
    cdef unsigned int s, limit, low, carry
    cdef int found = -1
    limit = 1u << n
    with nogil:
        for k in range(n - 1):
            if found >= 0:
                break
            if k == 0:
                if _ncomp_c(a, n, 0) >= 2:
                    found = 0
            else:
                # Gosper: masks of popcount k in increasing order
                s = (1u << k) - 1u
                while s < limit:
                    if _ncomp_c(a, n, s) >= 2:
                        found = k
                        break
                    low = s & (0u - s)
                    carry = s + low
                    s = (((s ^ carry) >> 2) / low) | carry
    if found >= 0:
        return found
    return n - 1


cdef void _bk(unsigned int* adj, unsigned int r, unsigned int p, unsigned int x,
              list out):
    cdef unsigned int cand, t, ext, vbit, nb
    cdef int u, best, cnt, pivot
    if p == 0 and x == 0:
        out.append(<object> int(r))
        return
    cand = p | x
    pivot = -1
    best = -1
    t = cand
    while t:
        u = bei_ctz(t)
        t &= t - 1u
        cnt = bei_popcount(p & adj[u])
        if cnt > best:
            best = cnt
            pivot = u
    ext = p & ~adj[pivot]
    while ext:
        vbit = ext & (0u - ext)
        ext &= ext - 1u
        nb = adj[bei_ctz(vbit)]
        _bk(adj, r | vbit, p & nb, x & nb, out)
        p &= ~vbit
        x |= vbit


def max_cliques(adj):
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting), unsorted."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    out = []
    _bk(a, 0, (1u << n) - 1u, 0, out)
    return out


def mcs_order(adj):
    """Maximum cardinality search visit order (ties broken by vertex index)."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef int weights[MAXN]
    cdef unsigned int visited = 0, m
    cdef int i, v, pick
    order = []
    for i in range(n):
        weights[i] = 0
    for i in range(n):
        pick = -1
        for v in range(n):
            if not (visited >> v) & 1u and (pick < 0 or weights[v] > weights[pick]):
                pick = v
        order.append(pick)
        visited |= 1u << pick
        m = a[pick] & ~visited
        while m:
            weights[bei_ctz(m)] += 1
            m &= m - 1u
    return order


def peo_ok(adj, order):
    """Check a perfect elimination ordering: later neighbors pairwise adjacent."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned int later = (1u << n) - 1u
    cdef unsigned int m, t
    cdef int v, w
    for v in order:
        later &= ~(1u << v)
        m = a[v] & later
        t = m
        while t:
            w = bei_ctz(t)
            t &= t - 1u
            if (m & ~(1u << w)) & ~a[w]:
                return False
    return True


def has_chordless_cycle(adj):
    """Brute-force oracle: some vertex subset induces a cycle of length >= 4."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned int full = (1u << n) - 1u
    cdef unsigned long long s, size = 1ull << n
    cdef unsigned int t, sm
    cdef bint ok
    cdef bint found = False
    with nogil:
        for s in range(size):
            sm = <unsigned int> s
            if bei_popcount(sm) < 4:
                continue
            t = sm
            ok = True
            while t:
                if bei_popcount(a[bei_ctz(t)] & sm) != 2:
                    ok = False
                    break
                t &= t - 1u
            if ok and _ncomp_c(a, n, full & (~sm)) == 1:
                found = True
                break
    return found


def edge_pairs(n):
    """Upper-triangle edge order shared with graph6: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def adj_from_edge_mask(n, mask):
    cdef int cn = n
    cdef int i, j, k
    cdef unsigned long long m64
    cdef unsigned int a[MAXN]
    if cn > 30:
        raise ValueError("kernel supports n <= 30")
    if cn <= 11:  # whole mask fits in 64 bits
        m64 = mask
        for i in range(cn):
            a[i] = 0
        k = 0
        for j in range(1, cn):
            for i in range(j):
                if (m64 >> k) & 1ull:
                    a[i] |= 1u << j
                    a[j] |= 1u << i
                k += 1
        return [a[i] for i in range(cn)]
    out = [0] * cn
    k = 0
    for j in range(1, cn):
        for i in range(j):
            if (mask >> k) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
            k += 1
    return out


def connected_graph_masks(n):
    """Edge masks (upper-triangle bit order) of all connected labeled graphs on [n]."""
    cdef int cn = n
    cdef int nedges
    cdef unsigned long long em, total
    cdef unsigned int m32
    cdef unsigned int a[MAXN]
    cdef int ei[MAXE]
    cdef int ej[MAXE]
    cdef int i, j, k
    if cn > 8:
        raise ValueError("exhaustive graph enumeration capped at n <= 8")
    nedges = cn * (cn - 1) // 2
    k = 0
    for j in range(1, cn):
        for i in range(j):
            ei[k] = i
            ej[k] = j
            k += 1
    total = 1ull << nedges
    out = []
    for em in range(total):
        for i in range(cn):
            a[i] = 0
        m32 = <unsigned int> em
        while m32:
            k = bei_ctz(m32)
            m32 &= m32 - 1u
            a[ei[k]] |= 1u << ej[k]
            a[ej[k]] |= 1u << ei[k]
        if _ncomp_c(a, cn, 0) == 1:
            out.append(em)
    return out


def structure_selfcheck(adj):
    """Exhaustive component sanity over all subsets; 0 when everything holds."""
    cdef unsigned int a[MAXN]
    cdef int n = _load_adj(adj, a)
    cdef unsigned long long size, s
    cdef unsigned int full, seen, b, bit, t_mask
    cdef int prev_min, low, i, cnt, idx, jdx, ok
    cdef unsigned int* store
    cdef int* offsets
    cdef int code = 0
    if n > 16:
        raise ValueError("selfcheck capped at n <= 16")
    size = 1ull << n
    full = (1u << n) - 1u
    store = <unsigned int*> malloc(size * n * sizeof(unsigned int))
    offsets = <int*> malloc((size + 1) * sizeof(int))
    if store is NULL or offsets is NULL:
        free(store)
        free(offsets)
        raise MemoryError()
    try:
        with nogil:
            offsets[0] = 0
            for s in range(size):
                cnt = _blocks_c(a, n, <unsigned int> s, store + offsets[s])
                offsets[s + 1] = offsets[s] + cnt
                seen = 0
                prev_min = -1
                for i in range(cnt):
                    b = store[offsets[s] + i]
                    if b & seen:
                        code = 1
                        break
                    seen |= b
                    low = bei_ctz(b)
                    if low <= prev_min:
                        code = 2
                        break
                    prev_min = low
                if code:
                    break
                if seen != (full & ~(<unsigned int> s)):
                    code = 3
                    break
            if code == 0:
                for s in range(1, size):
                    t_mask = <unsigned int> s
                    while t_mask:
                        bit = t_mask & (0u - t_mask)
                        t_mask &= t_mask - 1u
                        for idx in range(offsets[s], offsets[s + 1]):
                            b = store[idx]
                            ok = 0
                            for jdx in range(offsets[s ^ bit], offsets[(s ^ bit) + 1]):
                                if (b & ~store[jdx]) == 0:
                                    ok = 1
                                    break
                            if not ok:
                                code = 4
                                break
                        if code:
                            break
                    if code:
                        break
    finally:
        free(store)
        free(offsets)
    return code
