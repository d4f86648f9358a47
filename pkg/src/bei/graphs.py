"""Simple undirected graphs on vertices 0..n-1 and their structural primitives.

Graphs are immutable, adjacency is kept as one neighbor bitmask per vertex.
Textual formats (edge lists, graph6) use 1-based vertex labels; everything
in-process is 0-based.
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, Optional

from bei._kernel import kernel

DEFAULT_MAX_N = 24
HARD_MAX_N = 30  # subset enumeration is 2^n; refuse anything beyond this

_PARSE_ERROR_KINDS = frozenset(
    {"bad-header", "bad-char", "out-of-range-vertex", "self-loop", "truncated", "oversize"}
)


class GraphParseError(ValueError):
    """Raised on malformed graph input; carries a kind tag and byte offset."""

    def __init__(self, kind: str, offset: int, message: str):
        assert kind in _PARSE_ERROR_KINDS
        self.kind = kind
        self.offset = offset
        self.message = message
        super().__init__(f"{message} (at byte {offset})")


def configured_max_n() -> int:
    """Size cap: BEI_MAX_N env var when set, otherwise 24.  Hard cap 30."""
    raw = os.environ.get("BEI_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"BEI_MAX_N must be an integer, got {raw!r}") from None
    if not 1 <= value <= HARD_MAX_N:
        raise ValueError(f"BEI_MAX_N must be in 1..{HARD_MAX_N}, got {value}")
    return value


class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of vertex v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        if n > HARD_MAX_N:
            raise ValueError(f"vertex count {n} exceeds the hard cap {HARD_MAX_N}")
        masks = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges())})"

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for j in range(1, self.n):
            m = self.adj[j] & ((1 << j) - 1)
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                yield (i, j)

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled to 0..k-1 in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[i], index[j]) for i, j in self.edges() if i in index and j in index
        ]
        return Graph(len(keep), edges)


def _mask_of(G: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
        mask |= 1 << v
    return mask


def _set_of(mask: int) -> frozenset[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return frozenset(out)


def components(G: Graph, separator: Iterable[int] = ()) -> tuple[frozenset[int], ...]:
    """Connected components of G minus the separator, ordered by minimum vertex."""
    removed = _mask_of(G, separator)
    return tuple(_set_of(b) for b in kernel.blocks(G.adj, removed))


def component_count(G: Graph, separator: Iterable[int] = ()) -> int:
    return kernel.ncomponents(G.adj, _mask_of(G, separator))


def is_connected(G: Graph) -> bool:
    return kernel.ncomponents(G.adj, 0) == 1


def is_complete(G: Graph) -> bool:
    """Every distinct pair adjacent; the one-vertex graph counts as complete."""
    full = (1 << G.n) - 1
    return all(G.adj[v] == full ^ (1 << v) for v in range(G.n))


def maximal_cliques(G: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques, sorted by their sorted vertex tuples."""
    masks = kernel.max_cliques(G.adj)
    cliques = [_set_of(m) for m in masks]
    cliques.sort(key=lambda c: tuple(sorted(c)))
    return cliques


def perfect_elimination_order(G: Graph) -> Optional[tuple[int, ...]]:
    """A perfect elimination ordering when G is chordal, else None.

    Built by maximum cardinality search and then verified, so the returned
    order is a genuine witness.
    """
    order = list(reversed(kernel.mcs_order(G.adj)))
    if kernel.peo_ok(G.adj, order):
        return tuple(order)
    return None


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_order(G) is not None


# ---------------------------------------------------------------------------
# Edge-list format: first token is n, then 1-based "i j" pairs, '#' comments.
# ---------------------------------------------------------------------------

def parse_edge_list(data: bytes | str, max_n: Optional[int] = None) -> Graph:
    if isinstance(data, str):
        data = data.encode("utf-8")
    cap = configured_max_n() if max_n is None else max_n
    tokens = _tokenize(data)
    if not tokens:
        raise GraphParseError("bad-header", 0, "missing vertex count")
    head, off = tokens[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphParseError(
            "bad-header", off, f"vertex count expected, got {head!r}"
        ) from None
    if n < 1:
        raise GraphParseError("bad-header", off, f"vertex count must be >= 1, got {n}")
    if n > cap:
        raise GraphParseError("oversize", off, f"vertex count {n} exceeds cap {cap}")
    body = tokens[1:]
    if len(body) % 2:
        tok, toff = body[-1]
        raise GraphParseError("truncated", toff, f"dangling endpoint {tok!r}")
    edges = []
    for k in range(0, len(body), 2):
        (ti, oi), (tj, oj) = body[k], body[k + 1]
        i = _vertex_token(ti, oi, n)
        j = _vertex_token(tj, oj, n)
        if i == j:
            raise GraphParseError("self-loop", oi, f"self-loop at vertex {ti}")
        edges.append((i - 1, j - 1))
    return Graph(n, edges)


def _tokenize(data: bytes) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    size = len(data)
    while i < size:
        b = data[i]
        if b == 0x23:  # '#': skip to end of line
            while i < size and data[i] != 0x0A:
                i += 1
            continue
        if b in (0x20, 0x09, 0x0D, 0x0A):
            i += 1
            continue
        start = i
        while i < size and data[i] not in (0x20, 0x09, 0x0D, 0x0A, 0x23):
            i += 1
        try:
            text = data[start:i].decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphParseError(
                "bad-char", start + exc.start, "non-ASCII byte in input"
            ) from None
        tokens.append((text, start))
    return tokens


def _vertex_token(tok: str, off: int, n: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise GraphParseError("bad-char", off, f"vertex label expected, got {tok!r}") from None
    if not 1 <= v <= n:
        raise GraphParseError(
            "out-of-range-vertex", off, f"vertex {v} outside 1..{n}"
        )
    return v


# ---------------------------------------------------------------------------
# graph6: 6 bits per byte (byte value 63..126), upper-triangle column order
# (0,1),(0,2),(1,2),(0,3),... with the first bit in the high position.
# ---------------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def parse_graph6(line: bytes | str, max_n: Optional[int] = None) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="surrogateescape")
    cap = configured_max_n() if max_n is None else max_n
    base = 0
    if line.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        line = line[base:]
    line = line.rstrip(b"\r\n")
    if not line:
        raise GraphParseError("truncated", base, "empty graph6 string")
    if line[0] == 0x3A:  # ':' starts sparse6
        raise GraphParseError("bad-header", base, "sparse6 input not supported")
    for k, b in enumerate(line):
        if not 63 <= b <= 126:
            raise GraphParseError(
                "bad-char", base + k, f"byte {b} outside graph6 range 63..126"
            )
    n, used = _g6_read_n(line, base)
    if n < 1:
        raise GraphParseError("bad-header", base, "graph on zero vertices")
    if n > cap:
        raise GraphParseError("oversize", base, f"vertex count {n} exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[used:]
    if len(body) < nbytes:
        raise GraphParseError(
            "truncated",
            base + len(line),
            f"need {nbytes} adjacency bytes for n={n}, got {len(body)}",
        )
    if len(body) > nbytes:
        raise GraphParseError(
            "bad-char", base + used + nbytes, "trailing bytes after adjacency bits"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits after the triangle must be zero
    while k < 6 * nbytes:
        if (body[k // 6] - 63) >> (5 - k % 6) & 1:
            raise GraphParseError(
                "bad-char", base + used + k // 6, "nonzero padding bit"
            )
        k += 1
    return Graph(n, edges)


def _g6_read_n(line: bytes, base: int) -> tuple[int, int]:
    if line[0] != 126:
        return line[0] - 63, 1
    if len(line) >= 2 and line[1] != 126:
        if len(line) < 4:
            raise GraphParseError("truncated", base + len(line), "truncated vertex count")
        n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63)
        return n, 4
    if len(line) < 8:
        raise GraphParseError("truncated", base + len(line), "truncated vertex count")
    n = 0
    for b in line[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def encode_graph6(G: Graph) -> str:
    """graph6 string for G (single-byte header; n <= 62 always holds here)."""
    if G.n > 62:
        raise ValueError("encoder supports n <= 62")
    out = [G.n + 63]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        for i in range(j):
            acc = (acc << 1) | (G.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6_lines(data: bytes) -> Iterator[tuple[int, bytes]]:
    """(1-based line number, stripped line) for each non-blank line."""
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        stripped = raw.strip()
        if stripped:
            yield lineno, stripped


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph from an upper-triangle edge bitmask (same bit order as graph6)."""
    g = Graph.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(kernel.adj_from_edge_mask(n, mask)))
    return g
