"""Simple undirected graphs on up to 64 vertices with bitmask adjacency.

Vertices are the dense integers 0..order-1.  A vertex subset is a plain
``int`` bitmask over those positions, so a subset fits in one machine word
and set algebra is bit algebra.  Graphs are immutable values; every
operation here is pure.

The interchange format is graph6: an N(n) header byte (or the four-byte
``~``-prefixed form for n >= 63) followed by the upper triangle of the
adjacency matrix in column-major order, packed six bits per printable byte
at offset 63, zero-padded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptySubset,
    LoopEdge,
    MalformedHeader,
    OrderOutOfRange,
    TrailingGarbage,
    TruncatedBits,
    VertexOutOfRange,
)

MAX_ORDER = 64

# A vertex subset: bit v set <=> vertex v is in the subset.
VertexSubset = int


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitmask of v."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise OrderOutOfRange(
                f"graph order must be in 1..{MAX_ORDER}, got {self.order}"
            )
        if len(self.adj) != self.order:
            raise ValueError("adjacency tuple length does not match order")
        full = (1 << self.order) - 1
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise LoopEdge(f"vertex {v} is adjacent to itself")
            if mask & ~full:
                raise VertexOutOfRange(
                    f"adjacency of vertex {v} sets bits beyond position {self.order - 1}"
                )
        for v, mask in enumerate(self.adj):
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adj))

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v) for u in range(self.order) for v in iter_bits(self.adj[u]) if u < v
        ]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


def from_edge_list(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 1 <= order <= MAX_ORDER:
        raise OrderOutOfRange(f"graph order must be in 1..{MAX_ORDER}, got {order}")
    adj = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge ({u},{v}) leaves 0..{order - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def complement(g: Graph) -> Graph:
    """Edge uv present in the result iff absent in ``g``; an involution."""
    full = g.full_mask
    return Graph(
        g.order, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj))
    )


def _component(adj: tuple[int, ...], mask: int, seed: int) -> int:
    """Bitmask of the component of ``seed`` inside the induced subgraph on ``mask``."""
    reached = seed
    frontier = seed
    while frontier:
        nbrs = 0
        for v in iter_bits(frontier):
            nbrs |= adj[v]
        frontier = nbrs & mask & ~reached
        reached |= frontier
    return reached


def is_connected_subset(g: Graph, subset: VertexSubset) -> bool:
    """True iff the subgraph induced by ``subset`` is connected.

    A single vertex counts as connected.  Raises EmptySubset for the empty
    mask and VertexOutOfRange for bits beyond the host graph.
    """
    if subset == 0:
        raise EmptySubset("cannot test connectivity of the empty vertex set")
    if subset & ~g.full_mask:
        raise VertexOutOfRange("subset has bits beyond the host graph")
    return _component(g.adj, subset, subset & -subset) == subset


def is_connected(g: Graph) -> bool:
    return _component(g.adj, g.full_mask, 1) == g.full_mask


def connected_components(g: Graph) -> list[VertexSubset]:
    """Partition of the vertex set into maximal connected subsets.

    Ordered by smallest contained vertex index.
    """
    remaining = g.full_mask
    out = []
    while remaining:
        comp = _component(g.adj, remaining, remaining & -remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def induced_subgraph(g: Graph, subset: VertexSubset) -> Graph:
    """Subgraph induced by ``subset``, vertices relabelled densely in order."""
    if subset == 0:
        raise EmptySubset("cannot induce on the empty vertex set")
    if subset & ~g.full_mask:
        raise VertexOutOfRange("subset has bits beyond the host graph")
    verts = list(iter_bits(subset))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in iter_bits(g.adj[v] & subset):
            adj[i] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


# ---------------------------------------------------------------------------
# graph6 encoding
# ---------------------------------------------------------------------------


def _decode_order(data: str) -> tuple[int, int]:
    """Decode the N(n) header; return (n, index of first body byte)."""
    first = ord(data[0]) - 63
    if not 0 <= first <= 63:
        raise MalformedHeader(f"byte {data[0]!r} is outside the graph6 range")
    if data[0] != "~":
        return first, 1
    if len(data) >= 2 and data[1] == "~":
        # eight-byte header encodes n >= 258048, far past this library's cap
        raise OrderOutOfRange("graph6 order exceeds 64")
    if len(data) < 4:
        raise MalformedHeader("extended order header is shorter than four bytes")
    vals = [ord(c) - 63 for c in data[1:4]]
    if any(not 0 <= v <= 63 for v in vals):
        raise MalformedHeader("extended order header has bytes outside the graph6 range")
    return vals[0] << 12 | vals[1] << 6 | vals[2], 4


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string, bit-exactly.

    Raises MalformedHeader for a broken N(n) header, OrderOutOfRange for
    n outside 1..64, TruncatedBits when the body is short or unreadable,
    and TrailingGarbage for extra bytes or nonzero padding bits.
    """
    if not text:
        raise MalformedHeader("empty graph6 string")
    n, start = _decode_order(text)
    if not 1 <= n <= MAX_ORDER:
        raise OrderOutOfRange(f"graph6 order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[start:]
    if len(body) < nbytes:
        raise TruncatedBits(f"need {nbytes} data bytes for order {n}, got {len(body)}")
    if len(body) > nbytes:
        raise TrailingGarbage(f"{len(body) - nbytes} extra bytes after the bit data")
    vals = []
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise TruncatedBits(f"byte {c!r} is outside the graph6 range")
        vals.append(v)
    adj = [0] * n
    j = 0
    for col in range(1, n):
        for row in range(col):
            if vals[j // 6] >> (5 - j % 6) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            j += 1
    # remaining bits of the last byte must be zero padding
    while j < 6 * nbytes:
        if vals[j // 6] >> (5 - j % 6) & 1:
            raise TrailingGarbage("nonzero padding bits")
        j += 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as graph6; inverse of :func:`parse_graph6`."""
    n = g.order
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> k & 63)) for k in (12, 6, 0))
    vals = []
    acc = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            acc = acc << 1 | (g.adj[row] >> col & 1)
            filled += 1
            if filled == 6:
                vals.append(acc)
                acc = 0
                filled = 0
    if filled:
        vals.append(acc << (6 - filled))
    return head + "".join(chr(63 + v) for v in vals)
