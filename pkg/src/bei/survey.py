"""Columnar per-graph invariant survey over all connected labeled graphs.

One pass per vertex count: every connected graph (enumerated by edge bitmask)
is pushed through the production operations once and the results are packed
into flat arrays.  The property suites and the acceptance checks then read
these columns instead of re-running the exponential sweeps per property.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from bei import invariants as inv
from bei._kernel import kernel
from bei.connectivity import is_t_tough, vertex_connectivity_bruteforce
from bei.graphs import Graph, from_edge_mask, is_complete

# flag bits
F_COMPLETE = 1 << 0
F_PATH = 1 << 1
F_CHORDAL_CM = 1 << 2
F_EQUIDIM = 1 << 3
F_ONE_TOUGH_PRIMES = 1 << 4
F_T1_TOUGH = 1 << 5
F_WITNESS_OK = 1 << 6
F_CERT_COMPLETE = 1 << 7
F_CERT_PATHS = 1 << 8
F_CERT_CHORDAL = 1 << 9
F_VIOL_TOUGH_HALF = 1 << 10
F_VIOL_2VC = 1 << 11
F_VIOL_NOT_EQUIDIM = 1 << 12
F_VIOL_1TOUGH = 1 << 13
F_STATUS_CERT = 1 << 14
F_STATUS_NOTCERT = 1 << 15

_CERT_BIT = {
    inv.CertRule.COMPLETE: F_CERT_COMPLETE,
    inv.CertRule.DISJOINT_PATHS_CI: F_CERT_PATHS,
    inv.CertRule.CHORDAL_CLIQUES: F_CERT_CHORDAL,
}
_VIOL_BIT = {
    inv.ViolationRule.TOUGHNESS_NOT_HALF: F_VIOL_TOUGH_HALF,
    inv.ViolationRule.TWO_VERTEX_CONNECTED: F_VIOL_2VC,
    inv.ViolationRule.NOT_EQUIDIMENSIONAL: F_VIOL_NOT_EQUIDIM,
    inv.ViolationRule.ONE_TOUGH_NON_COMPLETE: F_VIOL_1TOUGH,
}


@dataclass
class ConnectedSurvey:
    """Invariants of every connected labeled graph on [n], one row per graph."""

    n: int
    masks: array = field(default_factory=lambda: array("Q"))
    tough_num: array = field(default_factory=lambda: array("b"))  # den 0: infinite
    tough_den: array = field(default_factory=lambda: array("b"))
    kappa: array = field(default_factory=lambda: array("b"))
    kappa_bf: array = field(default_factory=lambda: array("b"))
    surplus: array = field(default_factory=lambda: array("b"))
    max_prime_dim: array = field(default_factory=lambda: array("b"))
    flags: array = field(default_factory=lambda: array("H"))

    def __len__(self) -> int:
        return len(self.masks)

    def graph(self, row: int) -> Graph:
        return from_edge_mask(self.n, self.masks[row])

    def toughness_fraction(self, row: int) -> Optional[Fraction]:
        den = self.tough_den[row]
        if den == 0:
            return None
        return Fraction(self.tough_num[row], den)


def build_survey(
    n: int, progress: Optional[Callable[[int, int], None]] = None
) -> ConnectedSurvey:
    """Run the production operations over every connected graph on [n]."""
    sv = ConnectedSurvey(n)
    masks = kernel.connected_graph_masks(n)
    total = len(masks)
    for idx, mask in enumerate(masks):
        G = from_edge_mask(n, mask)
        verdict = inv.cm_screen(G)
        tau = verdict.toughness
        primes = inv.minimal_primes(G)

        flags = 0
        if is_complete(G):
            flags |= F_COMPLETE
        if inv.is_disjoint_union_of_paths(G):
            flags |= F_PATH
        if inv.chordal_cm_sufficient(G):
            flags |= F_CHORDAL_CM
        if verdict.equidimensional:
            flags |= F_EQUIDIM
        if inv.one_tough_via_primes(G):
            flags |= F_ONE_TOUGH_PRIMES
        if is_t_tough(G, 1):
            flags |= F_T1_TOUGH
        if tau.is_infinite:
            num, den = 0, 0
            flags |= F_WITNESS_OK
        else:
            num, den = tau.value.numerator, tau.value.denominator
            wit = tau.witness
            c = kernel.ncomponents(G.adj, sum(1 << v for v in wit))
            if c >= 2 and Fraction(len(wit), c) == tau.value:
                flags |= F_WITNESS_OK
        for rule in verdict.certifications:
            flags |= _CERT_BIT[rule]
        for rule in verdict.violations:
            flags |= _VIOL_BIT[rule]
        if verdict.status == inv.CM_CERTIFIED:
            flags |= F_STATUS_CERT
        elif verdict.status == inv.NOT_CM_CERTIFIED:
            flags |= F_STATUS_NOTCERT

        sv.masks.append(mask)
        sv.tough_num.append(num)
        sv.tough_den.append(den)
        sv.kappa.append(verdict.kappa)
        sv.kappa_bf.append(vertex_connectivity_bruteforce(G))
        sv.surplus.append(verdict.dimension - n)
        sv.max_prime_dim.append(max(p.dimension for p in primes))
        sv.flags.append(flags)

        if progress is not None and (idx & 0xFFFF) == 0:
            progress(idx, total)
    if progress is not None:
        progress(total, total)
    return sv
