"""Exhaustive, deterministic, shardable generators.

Three families of streams, each emitting every isomorphism class exactly
once in a fixed order:

* canonical cotrees with a given number of leaves (optionally filtered to
  connected or disconnected realizations), built by recursive composition
  over integer partitions rather than by filtering graphs;
* non-isomorphic graphs of small order, built by extending each class of
  order n-1 with every possible neighborhood of a new vertex and keeping
  the canonical representative (lexicographically minimal upper-triangle
  bitstring over all vertex permutations);
* caterpillar trees, encoded by spine length plus per-spine leaf counts,
  deduplicated under reversal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import chain, combinations_with_replacement, product
from typing import Iterator, Union

from .cotree import JOIN, LEAF_TREE, UNION, Cotree, canonicalize, format_cotree
from .errors import OrderOutOfRange, UnknownFamily
from .graph import Graph, _component, from_edge_list

MAX_COTREE_LEAVES = 20
MAX_GRAPH_ENUM_ORDER = 8
MAX_CATERPILLAR_ORDER = 20


class Family(str, Enum):
    COGRAPHS = "cographs"
    CONNECTED_COGRAPHS = "connected-cographs"
    DISCONNECTED_COGRAPHS = "disconnected-cographs"
    CONNECTED_GRAPHS = "connected-graphs"
    CATERPILLARS = "caterpillars"


@dataclass(frozen=True)
class GeneratorSpec:
    """A family, an order, and an optional (index, count) shard."""

    family: Family
    order: int
    shard: tuple[int, int] = (0, 1)

    def __post_init__(self):
        if self.order < 1:
            raise OrderOutOfRange(f"order must be >= 1, got {self.order}")
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise ValueError(f"invalid shard {self.shard}")


# ---------------------------------------------------------------------------
# cotrees
# ---------------------------------------------------------------------------


def _partitions(total: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into descending parts each at most ``cap``."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, cap), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


@lru_cache(maxsize=None)
def _cotree_pool(leaves: int, root_kind: str) -> tuple[Cotree, ...]:
    """All canonical cotrees with the given root kind, sorted by printed form."""
    other = JOIN if root_kind == UNION else UNION
    out = []
    for parts in _partitions(leaves, leaves - 1):
        if len(parts) < 2:
            continue
        per_size = []
        for size, mult in sorted(Counter(parts).items()):
            candidates = (LEAF_TREE,) if size == 1 else _cotree_pool(size, other)
            per_size.append(list(combinations_with_replacement(candidates, mult)))
        for combo in product(*per_size):
            children = tuple(chain.from_iterable(combo))
            out.append(canonicalize(Cotree(root_kind, children)))
    out.sort(key=format_cotree)
    return tuple(out)


def enumerate_cotrees(order: int, connectivity: str = "all") -> Iterator[Cotree]:
    """Every canonical cotree with ``order`` leaves, in printed lexicographic order.

    ``connectivity`` is "all", "connected" (Join-rooted, plus the lone leaf
    at order 1), or "disconnected" (Union-rooted).
    """
    if connectivity not in ("all", "connected", "disconnected"):
        raise UnknownFamily(f"unknown connectivity filter {connectivity!r}")
    if not 1 <= order <= MAX_COTREE_LEAVES:
        raise OrderOutOfRange(
            f"cotree enumeration supports 1..{MAX_COTREE_LEAVES} leaves, got {order}"
        )
    if order == 1:
        if connectivity != "disconnected":
            yield LEAF_TREE
        return
    if connectivity == "connected":
        yield from _cotree_pool(order, JOIN)
    elif connectivity == "disconnected":
        yield from _cotree_pool(order, UNION)
    else:
        yield from sorted(
            _cotree_pool(order, JOIN) + _cotree_pool(order, UNION), key=format_cotree
        )


# ---------------------------------------------------------------------------
# non-isomorphic graphs of small order
# ---------------------------------------------------------------------------


def _adj_to_code(n: int, adj: tuple[int, ...]) -> int:
    """Pack the upper triangle, column-major, first bit most significant."""
    code = 0
    for col in range(1, n):
        for row in range(col):
            code = code << 1 | (adj[row] >> col & 1)
    return code


def _code_to_adj(n: int, code: int) -> tuple[int, ...]:
    adj = [0] * n
    pos = n * (n - 1) // 2 - 1
    for col in range(1, n):
        for row in range(col):
            if code >> pos & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            pos -= 1
    return tuple(adj)


def _min_code(n: int, adj: tuple[int, ...]) -> int:
    """Lexicographically minimal triangle code over all vertex permutations.

    Grows the permutation one position at a time, keeping every prefix that
    still attains the minimal bit string.  Surviving prefixes that present
    the same view to the unplaced vertices are interchangeable, so the
    frontier is deduplicated on (placed set, per-vertex adjacency columns);
    this keeps highly symmetric graphs cheap.
    """
    if n == 1:
        return 0
    code = 0
    frontier: list[tuple[tuple[int, ...], int]] = [((v,), 1 << v) for v in range(n)]
    for pos in range(1, n):
        best_col = -1
        chosen: list[tuple[tuple[int, ...], int]] = []
        for perm, used in frontier:
            for w in range(n):
                if used >> w & 1:
                    continue
                aw = adj[w]
                col = 0
                for i, p in enumerate(perm):
                    col |= (aw >> p & 1) << (pos - 1 - i)
                if best_col < 0 or col < best_col:
                    best_col = col
                    chosen = [(perm + (w,), used | 1 << w)]
                elif col == best_col:
                    chosen.append((perm + (w,), used | 1 << w))
        code = code << pos | best_col
        if pos == n - 1:
            break
        dedup: dict[tuple, tuple[tuple[int, ...], int]] = {}
        for perm, used in chosen:
            views = []
            for w in range(n):
                if used >> w & 1:
                    continue
                aw = adj[w]
                view = 0
                for i, p in enumerate(perm):
                    view |= (aw >> p & 1) << i
                views.append(view)
            dedup.setdefault((used, tuple(views)), (perm, used))
        frontier = list(dedup.values())
    return code


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of a graph's isomorphism class."""
    return Graph(g.order, _code_to_adj(g.order, _min_code(g.order, g.adj)))


@lru_cache(maxsize=None)
def _graph_classes(order: int) -> tuple[int, ...]:
    """Sorted canonical codes of every isomorphism class of the given order."""
    if order == 1:
        return (0,)
    seen: set[int] = set()
    for code in _graph_classes(order - 1):
        base = _code_to_adj(order - 1, code)
        for nbrs in range(1 << (order - 1)):
            adj = tuple(
                base[v] | ((nbrs >> v & 1) << (order - 1)) for v in range(order - 1)
            ) + (nbrs,)
            seen.add(_min_code(order, adj))
    return tuple(sorted(seen))


def enumerate_connected_graphs(order: int) -> Iterator[Graph]:
    """One canonical representative per connected isomorphism class."""
    if not 1 <= order <= MAX_GRAPH_ENUM_ORDER:
        raise OrderOutOfRange(
            f"graph enumeration supports 1..{MAX_GRAPH_ENUM_ORDER}, got {order}"
        )
    full = (1 << order) - 1
    for code in _graph_classes(order):
        adj = _code_to_adj(order, code)
        if _component(adj, full, 1) == full:
            yield Graph(order, adj)


# ---------------------------------------------------------------------------
# caterpillars
# ---------------------------------------------------------------------------


def _leaf_profiles(spine: int, total: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` over ``spine`` slots, end slots >= 1."""

    def rec(prefix: list[int], i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == spine - 1:
            if rem >= 1:
                yield tuple(prefix) + (rem,)
            return
        lo = 1 if i == 0 else 0
        for v in range(lo, rem):
            yield from rec(prefix + [v], i + 1, rem - v)

    yield from rec([], 0, total)


def _caterpillar_graph(spine: int, leaves: tuple[int, ...]) -> Graph:
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, cnt in enumerate(leaves):
        for _ in range(cnt):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def enumerate_caterpillars(order: int) -> Iterator[Graph]:
    """One tree per isomorphism class of caterpillars of the given order.

    A caterpillar is a tree whose non-leaf vertices form a path (the spine).
    Spine length k with leaf counts (l_1..l_k), l_1 and l_k positive, is a
    complete invariant up to reversal.
    """
    if not 2 <= order <= MAX_CATERPILLAR_ORDER:
        raise OrderOutOfRange(
            f"caterpillar enumeration supports 2..{MAX_CATERPILLAR_ORDER}, got {order}"
        )
    for spine in range(1, order):
        extra = order - spine
        if spine == 1:
            yield _caterpillar_graph(1, (extra,))
            continue
        if extra < 2:
            continue
        for leaves in _leaf_profiles(spine, extra):
            if leaves[::-1] < leaves:
                continue
            yield _caterpillar_graph(spine, leaves)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_COTREE_FILTER = {
    Family.COGRAPHS: "all",
    Family.CONNECTED_COGRAPHS: "connected",
    Family.DISCONNECTED_COGRAPHS: "disconnected",
}


def generate(spec: GeneratorSpec) -> Iterator[Union[Cotree, Graph]]:
    """Stream the family named by ``spec``, restricted to its shard."""
    family = Family(spec.family)
    if family is Family.CONNECTED_GRAPHS:
        stream: Iterator[Union[Cotree, Graph]] = enumerate_connected_graphs(spec.order)
    elif family is Family.CATERPILLARS:
        stream = enumerate_caterpillars(spec.order)
    else:
        stream = enumerate_cotrees(spec.order, _COTREE_FILTER[family])
    index, count = spec.shard
    for i, item in enumerate(stream):
        if i % count == index:
            yield item
