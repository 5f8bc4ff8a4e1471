"""Shared fixtures and tiny independent oracles.

The oracles here deliberately avoid the library's bitset machinery: BFS
over adjacency lists, permutation scans, and four-subset checks, so that
agreement with the package is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from cographmean import Graph, from_edge_list
from cographmean.cotree import JOIN, LEAF_TREE, UNION, Cotree, canonicalize
from cographmean.graph import iter_bits


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="also run the opt-in long-running checks (order-8 graph sweeps)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: opt-in long-running check")


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def oracle_connected(g: Graph, subset: int) -> bool:
    """List-based BFS connectivity, independent of the bitset flood fill."""
    verts = [v for v in range(g.order) if subset >> v & 1]
    if not verts:
        raise ValueError("empty subset")
    seen = {verts[0]}
    queue = [verts[0]]
    vset = set(verts)
    while queue:
        v = queue.pop()
        for u in iter_bits(g.adj[v]):
            if u in vset and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == vset


def oracle_phi_coeffs(g: Graph) -> tuple[int, ...]:
    """Subset scan over index tuples rather than masks."""
    counts = [0] * g.order
    for k in range(1, g.order + 1):
        for sub in combinations(range(g.order), k):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if oracle_connected(g, mask):
                counts[k - 1] += 1
    return tuple(counts)


def has_induced_p4(g: Graph) -> bool:
    """Four-subset scan; the path is the unique 4-vertex graph with degrees 1,1,2,2."""
    for sub in combinations(range(g.order), 4):
        degs = sorted(
            sum(1 for u in sub if u != v and g.has_edge(u, v)) for v in sub
        )
        if degs == [1, 1, 2, 2]:
            return True
    return False


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices, one per edge-set bitmask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edge_list(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def oracle_min_code(g: Graph) -> int:
    """Minimal upper-triangle bitstring over all n! permutations, directly."""
    best = None
    for perm in permutations(range(g.order)):
        code = 0
        for col in range(1, g.order):
            for row in range(col):
                code = code << 1 | (g.adj[perm[row]] >> perm[col] & 1)
        if best is None or code < best:
            best = code
    return best


def random_cotree(rng: random.Random, n: int, kind: str | None = None) -> Cotree:
    """A uniform-ish random canonical cotree with n leaves."""
    if n == 1:
        return LEAF_TREE
    if kind is None:
        kind = rng.choice((UNION, JOIN))
    k = rng.randint(2, n)
    cuts = sorted(rng.sample(range(1, n), k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    other = JOIN if kind == UNION else UNION
    children = tuple(random_cotree(rng, p, other) for p in parts)
    return canonicalize(Cotree(kind, children))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0C0A)
