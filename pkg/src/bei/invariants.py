"""Combinatorial invariants of the binomial edge ideal of a graph.

Everything here is driven by cut data: for a vertex subset S, the quotient by
the prime attached to S has Krull dimension n + c(S) - |S| in the 2n-variable
ring, where c(S) counts connected components of G minus S.  The inclusion-
minimal primes, the dimension, both multiplicities, and the Cohen-Macaulayness
screeners all reduce to exact arithmetic over that quantity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional

from bei._kernel import kernel
from bei.connectivity import (
    ToughnessValue,
    is_t_tough,
    toughness,
    vertex_connectivity,
)
from bei.graphs import (
    Graph,
    _mask_of,
    _set_of,
    components,
    is_chordal,
    is_complete,
    is_connected,
)


@dataclass(frozen=True)
class CutProfile:
    """A separator S together with c(S) and the surplus c(S) - |S|."""

    separator: frozenset[int]
    ncomponents: int
    surplus: int


@dataclass(frozen=True)
class MinimalPrime:
    """An inclusion-minimal prime: separator, blocks of G minus it, dimension."""

    separator: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    dimension: int


@dataclass(frozen=True)
class MultiplicityReport:
    max_cut_surplus: int
    top_separators: tuple[frozenset[int], ...]
    hilbert_samuel: int
    hilbert_kunz: Fraction


def prime_dimension(G: Graph, separator: Iterable[int] = ()) -> int:
    """Krull dimension n + c(S) - |S| of the quotient by the prime of S."""
    mask = _mask_of(G, separator)
    return G.n + kernel.ncomponents(G.adj, mask) - mask.bit_count()


def max_cut_surplus(G: Graph) -> int:
    """Largest value of c(S) - |S| over all vertex subsets S."""
    return kernel.max_cut_surplus(G.adj)


def top_cut_profiles(G: Graph) -> list[CutProfile]:
    """All separators achieving the maximal surplus, sorted by (|S|, bitmask)."""
    surplus = kernel.max_cut_surplus(G.adj)
    out = []
    for mask in kernel.top_masks(G.adj, surplus):
        out.append(
            CutProfile(_set_of(mask), surplus + mask.bit_count(), surplus)
        )
    return out


def minimal_primes(G: Graph) -> list[MinimalPrime]:
    """The inclusion-minimal primes among the cut-attached primes.

    A nonempty separator qualifies exactly when dropping any one of its
    vertices strictly decreases the component count; the empty separator
    always qualifies.  Sorted by (|S|, bitmask).
    """
    out = []
    for mask in kernel.minimal_prime_masks(G.adj):
        bl = tuple(_set_of(b) for b in kernel.blocks(G.adj, mask))
        dim = G.n + len(bl) - mask.bit_count()
        out.append(MinimalPrime(_set_of(mask), bl, dim))
    return out


def krull_dimension(G: Graph) -> int:
    """dim of the full quotient: n plus the maximal cut surplus."""
    return G.n + kernel.max_cut_surplus(G.adj)


def is_equidimensional(G: Graph) -> bool:
    """True iff all minimal primes share the same dimension."""
    dims = {p.dimension for p in minimal_primes(G)}
    return len(dims) == 1


def _hk_block_factor(size: int) -> Fraction:
    # the 2 x b determinantal quotient contributes b/2 + b/(b+1)!
    return Fraction(size, 2) + Fraction(size, factorial(size + 1))


def hilbert_samuel(G: Graph) -> int:
    """Hilbert-Samuel multiplicity: over all top-surplus separators, the sum
    of products of block sizes (each 2 x b determinantal factor has multiplicity b)."""
    surplus = kernel.max_cut_surplus(G.adj)
    total = 0
    for mask in kernel.top_masks(G.adj, surplus):
        prod = 1
        for b in kernel.blocks(G.adj, mask):
            prod *= b.bit_count()
        total += prod
    return total


def hilbert_kunz(G: Graph) -> Fraction:
    """Hilbert-Kunz multiplicity (positive-characteristic invariant), exact.

    Same sum as hilbert_samuel with per-block factor b/2 + b/(b+1)!.
    """
    surplus = kernel.max_cut_surplus(G.adj)
    total = Fraction(0)
    for mask in kernel.top_masks(G.adj, surplus):
        prod = Fraction(1)
        for b in kernel.blocks(G.adj, mask):
            prod *= _hk_block_factor(b.bit_count())
        total += prod
    return total


def multiplicities(G: Graph) -> MultiplicityReport:
    surplus = kernel.max_cut_surplus(G.adj)
    tops = kernel.top_masks(G.adj, surplus)
    hs = 0
    hk = Fraction(0)
    for mask in tops:
        prod_hs = 1
        prod_hk = Fraction(1)
        for b in kernel.blocks(G.adj, mask):
            size = b.bit_count()
            prod_hs *= size
            prod_hk *= _hk_block_factor(size)
        hs += prod_hs
        hk += prod_hk
    return MultiplicityReport(
        max_cut_surplus=surplus,
        top_separators=tuple(_set_of(m) for m in tops),
        hilbert_samuel=hs,
        hilbert_kunz=hk,
    )


def joint_dim_with_empty(G: Graph, separator: Iterable[int]) -> int:
    """Dimension of the quotient by (empty-cut prime + prime of S): n - |S| + 1.

    S must be a nonempty minimal-prime separator of a connected graph.  For
    non-complete graphs the value is checked against the vertex-connectivity
    bound n - kappa + 1.
    """
    if not is_connected(G):
        raise ValueError("joint dimension undefined for disconnected graphs")
    mask = _mask_of(G, separator)
    if mask == 0:
        raise ValueError("separator must be nonempty")
    if mask not in kernel.minimal_prime_masks(G.adj):
        raise ValueError("separator does not yield a minimal prime")
    value = G.n - mask.bit_count() + 1
    if not is_complete(G):
        bound = G.n - vertex_connectivity(G) + 1
        if value > bound:
            raise AssertionError(
                f"joint dimension {value} exceeds connectivity bound {bound}"
            )
    return value


def dim_bounds_from_toughness(G: Graph) -> tuple[Fraction, Fraction]:
    """For connected G with toughness t < 1:
    n + (1-t)/t <= dim <= n + (n-1)(1-t), both exact."""
    if not is_connected(G):
        raise ValueError("bounds undefined for disconnected graphs")
    tv = toughness(G)
    if tv.is_infinite or tv.value >= 1:
        raise ValueError("dimension bounds require toughness < 1")
    t = tv.value
    lower = G.n + (1 - t) / t
    upper = G.n + (G.n - 1) * (1 - t)
    return lower, upper


def toughness_bounds_from_dimension(G: Graph) -> tuple[Fraction, Optional[Fraction]]:
    """1/(dim - n + 1) <= toughness always; toughness <= (dim - 1)/(n - 1)
    when the graph is not 1-tough (upper bound omitted otherwise)."""
    if not is_connected(G):
        raise ValueError("bounds undefined for disconnected graphs")
    dim = krull_dimension(G)
    lower = Fraction(1, dim - G.n + 1)
    if is_t_tough(G, 1):
        return lower, None
    return lower, Fraction(dim - 1, G.n - 1)


def one_tough_via_primes(G: Graph) -> bool:
    """1-toughness read off the prime list: dimension n+1 and the empty
    separator is the only minimal prime reaching it."""
    if not is_connected(G):
        raise ValueError("1-toughness undefined for disconnected graphs")
    primes = minimal_primes(G)
    top = G.n + 1
    if max(p.dimension for p in primes) != top:
        return False
    return sum(1 for p in primes if p.dimension == top) == 1


def depth_upper_bound(G: Graph) -> int:
    """depth <= n - kappa + 2 for connected non-complete graphs."""
    _require_non_complete(G, "depth bound")
    return G.n - vertex_connectivity(G) + 2


def pd_lower_bound(G: Graph) -> int:
    """projective dimension >= n + kappa - 2 for connected non-complete graphs."""
    _require_non_complete(G, "projective-dimension bound")
    return G.n + vertex_connectivity(G) - 2


def _require_non_complete(G: Graph, what: str) -> None:
    if not is_connected(G):
        raise ValueError(f"{what} requires a connected graph")
    if is_complete(G):
        raise ValueError(f"{what} requires a non-complete graph")


def is_disjoint_union_of_paths(G: Graph) -> bool:
    """True iff every connected component is a path (single vertices count)."""
    if any(G.degree(v) > 2 for v in range(G.n)):
        return False
    ncomp = kernel.ncomponents(G.adj, 0)
    return G.edge_count() == G.n - ncomp  # acyclic given degrees <= 2


def chordal_cm_sufficient(G: Graph) -> bool:
    """Chordal, maximal cliques pairwise share at most one vertex, and every
    vertex lies in at most two maximal cliques."""
    if not is_chordal(G):
        return False
    masks = kernel.max_cliques(G.adj)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] & masks[j]).bit_count() > 1:
                return False
    for v in range(G.n):
        bit = 1 << v
        if sum(1 for m in masks if m & bit) > 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Cohen-Macaulayness screening
# ---------------------------------------------------------------------------

class CertRule(str, Enum):
    COMPLETE = "complete"
    DISJOINT_PATHS_CI = "disjoint-paths-CI"
    CHORDAL_CLIQUES = "chordal-clique-condition"


class ViolationRule(str, Enum):
    TOUGHNESS_NOT_HALF = "toughness-not-half"
    TWO_VERTEX_CONNECTED = "two-vertex-connected"
    NOT_EQUIDIMENSIONAL = "not-equidimensional"
    ONE_TOUGH_NON_COMPLETE = "one-tough-non-complete"


RULE_CITATIONS: dict[Enum, str] = {
    CertRule.COMPLETE: (
        "complete graph: the quotient is a 2 x n determinantal ring, "
        "which is Cohen-Macaulay"
    ),
    CertRule.DISJOINT_PATHS_CI: (
        "all components are paths, so the edge binomials form a regular "
        "sequence (complete intersection)"
    ),
    CertRule.CHORDAL_CLIQUES: (
        "chordal with pairwise clique intersections of size at most one and "
        "every vertex in at most two maximal cliques"
    ),
    ViolationRule.TOUGHNESS_NOT_HALF: (
        "an S2 (in particular Cohen-Macaulay) quotient forces toughness "
        "exactly 1/2 unless the component is complete"
    ),
    ViolationRule.TWO_VERTEX_CONNECTED: (
        "a 2-vertex-connected non-complete component rules out the S2 property"
    ),
    ViolationRule.NOT_EQUIDIMENSIONAL: (
        "graded Cohen-Macaulay quotients are equidimensional"
    ),
    ViolationRule.ONE_TOUGH_NON_COMPLETE: (
        "a 1-tough component with Cohen-Macaulay quotient must be complete"
    ),
}

CM_CERTIFIED = "cm-certified"
NOT_CM_CERTIFIED = "not-cm-certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ScreenVerdict:
    """Outcome of the Cohen-Macaulayness screen, with the evidence it used.

    ``certifications`` are the sufficient rules that fired, ``violations`` the
    necessary conditions that failed.  Both firing at once would be a soundness
    bug; cm_screen raises instead of returning such a verdict.
    """

    status: str
    certifications: tuple[CertRule, ...]
    violations: tuple[ViolationRule, ...]
    toughness: Optional[ToughnessValue]  # None when disconnected
    kappa: Optional[int]  # None when disconnected
    dimension: int
    equidimensional: bool

    @property
    def reason(self) -> Optional[CertRule]:
        """Primary certification (precedence: complete, paths, chordal)."""
        return self.certifications[0] if self.certifications else None


def cm_screen(G: Graph) -> ScreenVerdict:
    """Apply every screening rule and report the combined verdict.

    Sufficient rules certify Cohen-Macaulayness of the full quotient; failed
    necessary conditions certify the opposite.  Disconnected graphs are
    screened component by component (the quotient is the tensor product of the
    component quotients), so the necessary conditions run per component while
    the sufficient rules are global.  All rules are always evaluated; a
    simultaneous firing of both kinds raises rather than guessing.
    """
    comps = components(G)
    connected = len(comps) == 1

    certs = []
    if connected and is_complete(G):
        certs.append(CertRule.COMPLETE)
    if is_disjoint_union_of_paths(G):
        certs.append(CertRule.DISJOINT_PATHS_CI)
    if chordal_cm_sufficient(G):
        certs.append(CertRule.CHORDAL_CLIQUES)

    tau = toughness(G) if connected else None
    kappa = vertex_connectivity(G) if connected else None
    dim = krull_dimension(G)
    equi = is_equidimensional(G)

    violations = []
    for comp in comps:
        sub = G if connected else G.induced(comp)
        if is_complete(sub):
            continue
        sub_tau = tau if connected else toughness(sub)
        sub_kappa = kappa if connected else vertex_connectivity(sub)
        if sub_tau.is_infinite or sub_tau.value != Fraction(1, 2):
            _add_once(violations, ViolationRule.TOUGHNESS_NOT_HALF)
        if sub_kappa >= 2:
            _add_once(violations, ViolationRule.TWO_VERTEX_CONNECTED)
        if not sub_tau.is_infinite and sub_tau.value >= 1:
            _add_once(violations, ViolationRule.ONE_TOUGH_NON_COMPLETE)
    if not equi:
        _add_once(violations, ViolationRule.NOT_EQUIDIMENSIONAL)

    if certs and violations:
        raise RuntimeError(
            f"screener contradiction: {certs} vs {violations} "
            "(soundness bug, please report)"
        )
    if certs:
        status = CM_CERTIFIED
    elif violations:
        status = NOT_CM_CERTIFIED
    else:
        status = INCONCLUSIVE
    return ScreenVerdict(
        status=status,
        certifications=tuple(certs),
        violations=tuple(violations),
        toughness=tau,
        kappa=kappa,
        dimension=dim,
        equidimensional=equi,
    )


def _add_once(seq: list, item) -> None:
    if item not in seq:
        seq.append(item)
