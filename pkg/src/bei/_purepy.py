"""Pure-Python bitmask kernels.

Fallback used when the compiled extension (bei._core) is unavailable; the two
modules expose identical functions with identical results.  Graphs enter as a
sequence ``adj`` of neighbor bitmasks, one int per vertex.  Vertex subsets are
plain ints with bit i <-> vertex i.  Functions that enumerate all 2^n subsets
are exponential by design; callers enforce the size cap.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "pure"


def _component_masks(adj, removed):
    """Connected components of the graph minus ``removed``, as bitmasks.

    Ordered by smallest contained vertex (lowest bit extraction is ascending).
    """
    n = len(adj)
    todo = ((1 << n) - 1) & ~removed
    out = []
    while todo:
        comp = todo & -todo
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[v]
            frontier = nxt & todo & ~comp
            comp |= frontier
        out.append(comp)
        todo &= ~comp
    return out


def _ncomp(adj, removed):
    return len(_component_masks(adj, removed))


def blocks(adj, removed=0):
    """Component masks of G minus the ``removed`` vertex set."""
    return _component_masks(adj, removed)


def ncomponents(adj, removed=0):
    return _ncomp(adj, removed)


def cut_counts(adj):
    """c(S) for every subset S of vertices, indexed by bitmask."""
    n = len(adj)
    counts = bytearray(1 << n)
    for s in range(1 << n):
        counts[s] = _ncomp(adj, s)
    return counts


def toughness_scan(adj):
    """Minimize |S|/c(S) over subsets with c(S) >= 2.

    Returns (|S|, c(S), witness_mask) for the minimizing S, smallest |S| then
    smallest mask on ties; None when no subset disconnects (complete graph).
    """
    n = len(adj)
    best = None  # (size, ncomp, mask)
    for s in range(1, 1 << n):
        c = _ncomp(adj, s)
        if c < 2:
            continue
        size = s.bit_count()
        if best is None:
            best = (size, c, s)
            continue
        lhs = size * best[1]
        rhs = best[0] * c
        if lhs < rhs or (lhs == rhs and size < best[0]):
            best = (size, c, s)
    return best


def max_cut_surplus(adj):
    """max over subsets S of c(S) - |S|."""
    n = len(adj)
    return max(_ncomp(adj, s) - s.bit_count() for s in range(1 << n))


def top_masks(adj, surplus):
    """All S with c(S) - |S| equal to ``surplus``, sorted by (|S|, mask)."""
    n = len(adj)
    hits = [s for s in range(1 << n) if _ncomp(adj, s) - s.bit_count() == surplus]
    hits.sort(key=lambda s: (s.bit_count(), s))
    return hits


def minimal_prime_masks(adj):
    """Separators S whose attached prime is inclusion-minimal.

    Local criterion: S empty, or dropping any single vertex of S strictly
    decreases the component count of the remainder.  Sorted by (|S|, mask).
    """
    n = len(adj)
    counts = cut_counts(adj)
    out = [0]
    for s in range(1, 1 << n):
        c = counts[s]
        t = s
        ok = True
        while t:
            bit = t & -t
            t &= t - 1
            if counts[s ^ bit] >= c:
                ok = False
                break
        if ok:
            out.append(s)
    out.sort(key=lambda s: (s.bit_count(), s))
    return out


def _is_complete(adj):
    n = len(adj)
    full = (1 << n) - 1
    return all(adj[v] == full ^ (1 << v) for v in range(n))


def kappa_flow(adj):
    """Vertex connectivity via unit-capacity max-flow on the vertex-split digraph.

    Caller guarantees the graph is connected.  n-1 for complete graphs.
    """
    n = len(adj)
    if n == 1:
        return 0
    if _is_complete(adj):
        return n - 1
    best = n - 1
    for u in range(n):
        for v in range(u + 1, n):
            if adj[u] >> v & 1:
                continue
            f = _vertex_maxflow(adj, u, v, best)
            if f < best:
                best = f
    return best


def _vertex_maxflow(adj, u, v, cutoff):
    # Node 2i = "in" copy, 2i+1 = "out" copy; in->out capacity 1 models the
    # vertex; each edge {i,j} gives out_i->in_j and out_j->in_i.
    n = len(adj)
    nn = 2 * n
    res = [[0] * nn for _ in range(nn)]
    for i in range(n):
        res[2 * i][2 * i + 1] = 1
        m = adj[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            res[2 * i + 1][2 * j] = 1
    src = 2 * u + 1
    snk = 2 * v
    flow = 0
    while flow < cutoff:
        prev = [-1] * nn
        prev[src] = src
        queue = [src]
        qi = 0
        while qi < len(queue) and prev[snk] < 0:
            x = queue[qi]
            qi += 1
            rx = res[x]
            for y in range(nn):
                if rx[y] > 0 and prev[y] < 0:
                    prev[y] = x
                    queue.append(y)
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


def kappa_bruteforce(adj):
    """Vertex connectivity by enumerating removal sets in increasing size.

    Independent of the flow path: does its own BFS connectivity test per set.
    """
    n = len(adj)
    for k in range(n - 1):
        for combo in combinations(range(n), k):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if _ncomp(adj, mask) >= 2:
                return k
    return n - 1


def max_cliques(adj):
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting), unsorted."""
    n = len(adj)
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        cand = p | x
        pivot, best = -1, -1
        t = cand
        while t:
            u = (t & -t).bit_length() - 1
            t &= t - 1
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                best, pivot = cnt, u
        ext = p & ~adj[pivot]
        while ext:
            vbit = ext & -ext
            ext &= ext - 1
            v = vbit.bit_length() - 1
            bk(r | vbit, p & adj[v], x & adj[v])
            p &= ~vbit
            x |= vbit

    bk(0, (1 << n) - 1, 0)
    return out


def mcs_order(adj):
    """Maximum cardinality search visit order (ties broken by vertex index)."""
    n = len(adj)
    weights = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        pick = -1
        for v in range(n):
            if not visited >> v & 1 and (pick < 0 or weights[v] > weights[pick]):
                pick = v
        order.append(pick)
        visited |= 1 << pick
        m = adj[pick] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            weights[w] += 1
    return order


def peo_ok(adj, order):
    """Check that ``order`` is a perfect elimination ordering.

    For each vertex, its neighbors that occur later in the order must be
    pairwise adjacent.
    """
    n = len(adj)
    later = (1 << n) - 1
    for v in order:
        later &= ~(1 << v)
        m = adj[v] & later
        t = m
        while t:
            a = (t & -t).bit_length() - 1
            t &= t - 1
            if (m & ~(1 << a)) & ~adj[a]:
                return False
    return True


def has_chordless_cycle(adj):
    """Brute-force oracle: does any vertex subset induce a cycle of length >= 4?"""
    n = len(adj)
    full = (1 << n) - 1
    for s in range(1 << n):
        if s.bit_count() < 4:
            continue
        t = s
        ok = True
        while t:
            v = (t & -t).bit_length() - 1
            t &= t - 1
            if (adj[v] & s).bit_count() != 2:
                ok = False
                break
        if ok and _ncomp(adj, full & ~s) == 1:
            return True
    return False


def edge_pairs(n):
    """Upper-triangle edge order shared with graph6: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def adj_from_edge_mask(n, mask):
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return adj


def connected_graph_masks(n):
    """Edge masks (upper-triangle bit order) of all connected labeled graphs on [n]."""
    if n > 8:
        raise ValueError("exhaustive graph enumeration capped at n <= 8")
    m = n * (n - 1) // 2
    out = []
    for em in range(1 << m):
        if _ncomp(adj_from_edge_mask(n, em), 0) == 1:
            out.append(em)
    return out


def structure_selfcheck(adj):
    """Exhaustive component sanity over all subsets; 0 when everything holds.

    Checks, for every S: blocks partition the complement of S and come out in
    min-vertex order; and for every cover pair S < S+{i}: each block of the
    bigger cut lies inside exactly one block of the smaller cut.
    """
    n = len(adj)
    if n > 16:
        raise ValueError("selfcheck capped at n <= 16")
    full = (1 << n) - 1
    all_blocks = []
    for s in range(1 << n):
        bl = _component_masks(adj, s)
        seen = 0
        prev_min = -1
        for b in bl:
            if b & seen:
                return 1  # overlap
            seen |= b
            low = (b & -b).bit_length() - 1
            if low <= prev_min:
                return 2  # ordering
            prev_min = low
        if seen != full & ~s:
            return 3  # not a partition of the complement
        all_blocks.append(bl)
    for t in range(1, 1 << n):
        small = t
        while small:
            bit = small & -small
            small &= small - 1
            s = t ^ bit
            for b in all_blocks[t]:
                if not any(b & ~bb == 0 for bb in all_blocks[s]):
                    return 4  # refinement failure
    return 0
