"""Executable property suites: the structural and arithmetic facts the engine
relies on, run exhaustively over all labeled graphs up to a size bound.

Each check returns a PropertyResult; counterexamples are reported as graph6
strings so failures can be replayed.  `run_all` drives the whole battery and
is what the `bei verify` subcommand executes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Optional

from bei import invariants as inv
from bei._kernel import kernel
from bei.connectivity import is_t_tough, vertex_connectivity
from bei.graphs import (
    Graph,
    encode_graph6,
    from_edge_mask,
    is_chordal,
    maximal_cliques,
    parse_graph6,
)
from bei.survey import (
    ConnectedSurvey,
    F_COMPLETE,
    F_EQUIDIM,
    F_ONE_TOUGH_PRIMES,
    F_STATUS_CERT,
    F_STATUS_NOTCERT,
    F_T1_TOUGH,
    F_WITNESS_OK,
    build_survey,
)

MAX_FAILURES_KEPT = 5


@dataclass
class PropertyResult:
    name: str
    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    note: str = ""

    def record_failure(self, G: Graph, detail: str = "") -> None:
        self.ok = False
        if len(self.failures) < MAX_FAILURES_KEPT:
            tag = encode_graph6(G)
            if detail:
                tag += f"  [{detail}]"
            self.failures.append(tag)


def all_graphs(n: int) -> Iterator[Graph]:
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_edge_mask(n, mask)


def _graph_sizes(max_n: int) -> range:
    return range(1, max_n + 1)


# ---------------------------------------------------------------------------
# graph structure
# ---------------------------------------------------------------------------

def check_component_structure(max_n: int, surveys=None) -> PropertyResult:
    """Blocks of every cut partition the remainder, in min-vertex order, and
    refine when the cut grows by one vertex."""
    res = PropertyResult("component-structure", True, 0)
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            res.checked += 1
            code = kernel.structure_selfcheck(G.adj)
            if code != 0:
                res.record_failure(G, f"selfcheck code {code}")
    return res


def check_graph6_roundtrip(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("graph6-roundtrip", True, 0)
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            res.checked += 1
            if parse_graph6(encode_graph6(G), max_n=n) != G:
                res.record_failure(G)
    return res


def brute_force_cliques(G: Graph) -> list[frozenset[int]]:
    """Subset-enumeration oracle for inclusion-maximal cliques."""
    cliques = []
    for s in range(1, 1 << G.n):
        verts = [v for v in range(G.n) if s >> v & 1]
        if all(G.has_edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]):
            cliques.append(s)
    maximal = [
        s for s in cliques if not any(t != s and t & s == s for t in cliques)
    ]
    return sorted(
        (frozenset(v for v in range(G.n) if s >> v & 1) for s in maximal),
        key=lambda c: tuple(sorted(c)),
    )


def check_cliques_bruteforce(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("maximal-cliques-vs-bruteforce", True, 0)
    for n in _graph_sizes(min(max_n, 6)):
        for G in all_graphs(n):
            res.checked += 1
            if maximal_cliques(G) != brute_force_cliques(G):
                res.record_failure(G)
    res.note = "capped at n <= 6"
    return res


def check_chordal_bruteforce(max_n: int, surveys=None) -> PropertyResult:
    """MCS-based recognition vs direct chordless-cycle enumeration."""
    res = PropertyResult("chordality-vs-bruteforce", True, 0)
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            res.checked += 1
            if is_chordal(G) != (not kernel.has_chordless_cycle(G.adj)):
                res.record_failure(G)
    return res


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def check_kappa_oracle(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("vertex-connectivity-flow-vs-bruteforce", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            res.checked += 1
            if sv.kappa[row] != sv.kappa_bf[row]:
                res.record_failure(sv.graph(row))
    return res


def check_kappa_toughness_ceiling(max_n: int, surveys=None) -> PropertyResult:
    """kappa >= ceil(2 * toughness) for connected non-complete graphs."""
    res = PropertyResult("connectivity-vs-toughness-ceiling", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            if sv.flags[row] & F_COMPLETE:
                continue
            res.checked += 1
            num, den = sv.tough_num[row], sv.tough_den[row]
            if sv.kappa[row] < -((-2 * num) // den):  # ceil(2*num/den)
                res.record_failure(sv.graph(row))
    return res


def check_toughness_witness(max_n: int, surveys=None) -> PropertyResult:
    """Witness sets disconnect and realize the reported ratio exactly."""
    res = PropertyResult("toughness-witness-validity", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            res.checked += 1
            if not sv.flags[row] & F_WITNESS_OK:
                res.record_failure(sv.graph(row))
    return res


def check_toughness_boundary(max_n: int, surveys=None) -> PropertyResult:
    """is_t_tough is tight: true at the toughness, false epsilon above it."""
    res = PropertyResult("toughness-boundary", True, 0)
    eps_cache = {}
    for sv in surveys.values():
        n = sv.n
        eps = eps_cache.setdefault(n, Fraction(1, n * (n + 1)))
        for row in range(len(sv)):
            tau = sv.toughness_fraction(row)
            if tau is None:
                continue
            res.checked += 1
            G = sv.graph(row)
            if not is_t_tough(G, tau) or is_t_tough(G, tau + eps):
                res.record_failure(G)
    return res


def _hamiltonian_fixtures() -> list[Graph]:
    out = []
    for n in range(4, 9):
        out.append(Graph(n, [(i, (i + 1) % n) for i in range(n)]))  # cycles
    for n in range(3, 9):
        out.append(Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)]))
    for m in (2, 3, 4):  # balanced complete bipartite
        out.append(Graph(2 * m, [(i, m + j) for i in range(m) for j in range(m)]))
    prism = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    cube = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
                     (0, 4), (1, 5), (2, 6), (3, 7)])
    out.extend([prism, cube])
    return out


def check_hamiltonian_fixtures(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("hamiltonian-fixtures", True, 0)
    for G in _hamiltonian_fixtures():
        res.checked += 1
        if not is_t_tough(G, 1) or vertex_connectivity(G) < 2:
            res.record_failure(G)
    res.note = "fixed fixture list"
    return res


# ---------------------------------------------------------------------------
# minimal primes / dimension / multiplicities
# ---------------------------------------------------------------------------

def containment_minimal_masks(G: Graph) -> list[int]:
    """Inclusion-minimal primes by the generator-level containment test.

    P(S) <= P(T) iff S <= T and any two vertices outside T that share a
    component of G-S also share a component of G-T.  Completely independent
    of the local single-vertex criterion used in production.
    """
    n = G.n
    full = (1 << n) - 1
    blocks_by_mask = [kernel.blocks(G.adj, s) for s in range(1 << n)]

    def contained(s: int, t: int) -> bool:
        if s & ~t:
            return False
        for b in blocks_by_mask[s]:
            rest = b & ~t
            if rest and not any(rest & ~bb == 0 for bb in blocks_by_mask[t]):
                return False
        return True

    minimal = []
    for s in range(1 << n):
        # only subsets of s can give a smaller prime
        sub = (s - 1) & s
        is_min = True
        while True:
            if sub != s and contained(sub, s):
                is_min = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & s
        if is_min:
            minimal.append(s)
    minimal.sort(key=lambda m: (m.bit_count(), m))
    return minimal


def check_minimal_primes_oracle(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("minimal-primes-vs-containment-oracle", True, 0)
    for n in _graph_sizes(min(max_n, 6)):
        for G in all_graphs(n):
            res.checked += 1
            local = [sum(1 << v for v in p.separator) for p in inv.minimal_primes(G)]
            if local != containment_minimal_masks(G):
                res.record_failure(G)
    res.note = "capped at n <= 6"
    return res


def check_krull_equals_max_prime_dim(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("krull-dimension-vs-prime-maximum", True, 0)
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            res.checked += 1
            if inv.krull_dimension(G) != max(p.dimension for p in inv.minimal_primes(G)):
                res.record_failure(G)
    return res


def check_dim_sandwich(max_n: int, surveys=None) -> PropertyResult:
    """Toughness < 1 squeezes the dimension between two exact rational bounds."""
    res = PropertyResult("dimension-sandwich-from-toughness", True, 0)
    for sv in surveys.values():
        n = sv.n
        for row in range(len(sv)):
            tau = sv.toughness_fraction(row)
            if tau is None or tau >= 1:
                continue
            res.checked += 1
            dim = n + sv.surplus[row]
            lower = n + (1 - tau) / tau
            upper = n + (n - 1) * (1 - tau)
            if not lower <= dim <= upper:
                res.record_failure(sv.graph(row))
    return res


def check_toughness_bounds(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("toughness-bounds-from-dimension", True, 0)
    for sv in surveys.values():
        n = sv.n
        for row in range(len(sv)):
            res.checked += 1
            dim = n + sv.surplus[row]
            tau = sv.toughness_fraction(row)
            lower = Fraction(1, dim - n + 1)
            if tau is not None and tau < lower:
                res.record_failure(sv.graph(row))
                continue
            if not sv.flags[row] & F_T1_TOUGH:
                if tau > Fraction(dim - 1, n - 1):
                    res.record_failure(sv.graph(row))
    return res


def check_one_tough_equivalence(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("one-tough-via-primes-equivalence", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            res.checked += 1
            if bool(sv.flags[row] & F_ONE_TOUGH_PRIMES) != bool(sv.flags[row] & F_T1_TOUGH):
                res.record_failure(sv.graph(row))
    return res


def check_equidimensional_window(max_n: int, surveys=None) -> PropertyResult:
    """Equidimensional and not complete forces toughness into [1/2, 1)."""
    res = PropertyResult("equidimensional-toughness-window", True, 0)
    half = Fraction(1, 2)
    for sv in surveys.values():
        for row in range(len(sv)):
            flags = sv.flags[row]
            if flags & F_COMPLETE or not flags & F_EQUIDIM:
                continue
            res.checked += 1
            tau = sv.toughness_fraction(row)
            if not (half <= tau < 1):
                res.record_failure(sv.graph(row))
    return res


def check_one_tough_equidim_complete(max_n: int, surveys=None) -> PropertyResult:
    res = PropertyResult("one-tough-equidimensional-implies-complete", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            flags = sv.flags[row]
            if flags & F_T1_TOUGH and flags & F_EQUIDIM:
                res.checked += 1
                if not flags & F_COMPLETE:
                    res.record_failure(sv.graph(row))
    return res


def top_prime_multiplicities(G: Graph) -> tuple[int, Fraction]:
    """Additivity route: sum per-block factors over top-dimensional minimal primes."""
    primes = inv.minimal_primes(G)
    top = max(p.dimension for p in primes)
    hs = 0
    hk = Fraction(0)
    for p in primes:
        if p.dimension != top:
            continue
        prod_hs = 1
        prod_hk = Fraction(1)
        for b in p.blocks:
            size = len(b)
            prod_hs *= size
            prod_hk *= Fraction(size, 2) + Fraction(size, factorial(size + 1))
        hs += prod_hs
        hk += prod_hk
    return hs, hk


def check_multiplicity_additivity(max_n: int, surveys=None) -> PropertyResult:
    """Top-surplus enumeration equals the top-dimensional minimal-prime sum."""
    res = PropertyResult("multiplicity-additivity", True, 0)
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            res.checked += 1
            hs, hk = top_prime_multiplicities(G)
            if inv.hilbert_samuel(G) != hs or inv.hilbert_kunz(G) != hk:
                res.record_failure(G)
    return res


def two_component_graphs(max_n: int) -> Iterator[tuple[Graph, Graph, Graph]]:
    """All labeled graphs with exactly two connected components, with the
    components as standalone graphs."""
    conn_cache = {k: kernel.connected_graph_masks(k) for k in range(1, max_n)}
    for n in range(2, max_n + 1):
        for pick in range(1 << (n - 1)):  # vertices joining vertex 0's side
            side = 1 | (pick << 1)
            k = side.bit_count()
            if k == n:
                continue
            verts1 = [v for v in range(n) if side >> v & 1]
            verts2 = [v for v in range(n) if not side >> v & 1]
            for m1 in conn_cache[k]:
                g1 = from_edge_mask(k, m1)
                for m2 in conn_cache[n - k]:
                    g2 = from_edge_mask(n - k, m2)
                    edges = [(verts1[a], verts1[b]) for a, b in g1.edges()]
                    edges += [(verts2[a], verts2[b]) for a, b in g2.edges()]
                    yield Graph(n, edges), g1, g2


def edge_mask_of(G: Graph) -> int:
    """Edge bitmask of G in the shared upper-triangle order."""
    mask = 0
    k = 0
    for j in range(1, G.n):
        for i in range(j):
            if G.has_edge(i, j):
                mask |= 1 << k
            k += 1
    return mask


def check_multiplicativity(max_n: int, surveys=None) -> PropertyResult:
    """Multiplicities multiply across connected components."""
    res = PropertyResult("multiplicativity-over-components", True, 0)
    cache: dict[tuple[int, int], tuple[int, Fraction]] = {}

    def component_values(g: Graph) -> tuple[int, Fraction]:
        key = (g.n, edge_mask_of(g))
        if key not in cache:
            cache[key] = (inv.hilbert_samuel(g), inv.hilbert_kunz(g))
        return cache[key]

    for G, g1, g2 in two_component_graphs(max_n):
        res.checked += 1
        hs1, hk1 = component_values(g1)
        hs2, hk2 = component_values(g2)
        if inv.hilbert_samuel(G) != hs1 * hs2 or inv.hilbert_kunz(G) != hk1 * hk2:
            res.record_failure(G)
    return res


def check_complete_fixtures(max_n: int, surveys=None) -> PropertyResult:
    """e = n and the exact factorial formula for complete graphs up to n=10."""
    res = PropertyResult("complete-graph-multiplicities", True, 0)
    for n in range(1, 11):
        G = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
        res.checked += 1
        expect_hk = Fraction(n, 2) + Fraction(n, factorial(n + 1))
        if inv.hilbert_samuel(G) != n or inv.hilbert_kunz(G) != expect_hk:
            res.record_failure(G)
    res.note = "n = 1..10"
    return res


def check_screener_exclusivity(max_n: int, surveys=None) -> PropertyResult:
    """No graph may fire both certification branches (connected graphs come
    from the survey; disconnected ones are screened here)."""
    res = PropertyResult("screener-exclusivity", True, 0)
    for sv in surveys.values():
        for row in range(len(sv)):
            res.checked += 1
            flags = sv.flags[row]
            if flags & F_STATUS_CERT and flags & F_STATUS_NOTCERT:
                res.record_failure(sv.graph(row))
    for n in _graph_sizes(max_n):
        for G in all_graphs(n):
            if kernel.ncomponents(G.adj, 0) == 1:
                continue
            res.checked += 1
            try:
                inv.cm_screen(G)
            except RuntimeError:
                res.record_failure(G, "contradiction raised")
    return res


ALL_CHECKS: list[Callable[..., PropertyResult]] = [
    check_component_structure,
    check_graph6_roundtrip,
    check_cliques_bruteforce,
    check_chordal_bruteforce,
    check_kappa_oracle,
    check_kappa_toughness_ceiling,
    check_toughness_witness,
    check_toughness_boundary,
    check_hamiltonian_fixtures,
    check_minimal_primes_oracle,
    check_krull_equals_max_prime_dim,
    check_dim_sandwich,
    check_toughness_bounds,
    check_one_tough_equivalence,
    check_equidimensional_window,
    check_one_tough_equidim_complete,
    check_multiplicity_additivity,
    check_multiplicativity,
    check_complete_fixtures,
    check_screener_exclusivity,
]


def run_all(
    max_n: int,
    progress: Optional[Callable[[str], None]] = None,
    surveys: Optional[dict[int, ConnectedSurvey]] = None,
) -> list[PropertyResult]:
    if surveys is None:
        surveys = {}
        for n in range(1, max_n + 1):
            if progress:
                progress(f"surveying connected graphs on {n} vertices")
            surveys[n] = build_survey(n)
    results = []
    for check in ALL_CHECKS:
        if progress:
            progress(f"checking {check.__name__.removeprefix('check_')}")
        results.append(check(max_n, surveys=surveys))
    return results
