"""Exact connectivity measures: vertex connectivity and graph toughness.

Toughness is NP-hard in general; it is computed here by exhaustive subset
enumeration in exact rational arithmetic, which is why the package carries a
size cap.  Vertex connectivity runs unit-capacity max-flow on the vertex-split
digraph (the disjoint-path count equals the cut size), with a brute-force
enumeration kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from bei._kernel import kernel
from bei.graphs import Graph, _set_of, is_connected

RationalLike = Union[Fraction, int]


@dataclass(frozen=True)
class ToughnessValue:
    """Graph toughness: minimum |S|/c(S) over disconnecting sets, or infinite.

    ``value`` and ``witness`` are None exactly when the graph is complete and
    no vertex set disconnects it.
    """

    value: Optional[Fraction]
    witness: Optional[frozenset[int]]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        if self.value is None:
            return "infinite"
        return f"{self.value.numerator}/{self.value.denominator}"


INFINITE_TOUGHNESS = ToughnessValue(None, None)


def _require_connected(G: Graph, what: str) -> None:
    if not is_connected(G):
        raise ValueError(f"{what} undefined for disconnected graphs")


def vertex_connectivity(G: Graph) -> int:
    """kappa(G): the largest l < n such that no set of fewer than l vertices
    disconnects G.  n-1 for complete graphs, 0 for the one-vertex graph."""
    _require_connected(G, "connectivity")
    return kernel.kappa_flow(G.adj)


def vertex_connectivity_bruteforce(G: Graph) -> int:
    """Same value as vertex_connectivity, by increasing-cardinality enumeration."""
    _require_connected(G, "connectivity")
    return kernel.kappa_bruteforce(G.adj)


def is_l_vertex_connected(G: Graph, l: int) -> bool:
    """True iff l < n and removing any fewer than l vertices leaves G connected."""
    if l < 1:
        raise ValueError(f"connectivity level must be >= 1, got {l}")
    _require_connected(G, "connectivity")
    return l < G.n and vertex_connectivity(G) >= l


def toughness(G: Graph) -> ToughnessValue:
    """Exact toughness with a minimizing witness set.

    Ties are broken toward the smallest witness, then the smallest bitmask,
    so reports are reproducible.
    """
    _require_connected(G, "toughness")
    hit = kernel.toughness_scan(G.adj)
    if hit is None:
        return INFINITE_TOUGHNESS
    size, ncomp, mask = hit
    return ToughnessValue(Fraction(size, ncomp), _set_of(mask))


def is_t_tough(G: Graph, t: RationalLike) -> bool:
    """True iff every S with c(S) >= 2 satisfies t * c(S) <= |S| (exact)."""
    t = Fraction(t)
    if t < 0:
        raise ValueError(f"toughness level must be >= 0, got {t}")
    _require_connected(G, "toughness")
    tv = toughness(G)
    return tv.is_infinite or t <= tv.value


__all__ = [
    "ToughnessValue",
    "INFINITE_TOUGHNESS",
    "vertex_connectivity",
    "vertex_connectivity_bruteforce",
    "is_l_vertex_connected",
    "toughness",
    "is_t_tough",
]
