"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own search code: distances
come from networkx and colourings from plain enumeration of all k^n maps.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from spackcrit.graph import Graph
from spackcrit.seq import Constant, Identity, PackingSequence, truncate

ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def nx_distances(G: Graph) -> dict:
    return dict(nx.all_pairs_shortest_path_length(to_nx(G)))


def brute_colorable(G: Graph, S: PackingSequence, k: int, dist=None) -> bool:
    """Try every map V -> [k]."""
    if G.n == 0:
        return True
    if k == 0:
        return False
    s = truncate(S, k)
    d = dist or nx_distances(G)
    close = [(u, v, d[u][v]) for u in range(G.n) for v in range(u + 1, G.n)
             if v in d[u] and d[u][v] <= s[-1]]
    for c in itertools.product(range(k), repeat=G.n):
        if all(c[u] != c[v] or dd > s[c[u]] for u, v, dd in close):
            return True
    return False


def brute_chi(G: Graph, S: PackingSequence) -> int:
    d = nx_distances(G)
    k = 0
    while not brute_colorable(G, S, k, d):
        k += 1
    return k


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    p = rng.random() * 0.6
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def random_caterpillar(rng: random.Random, n_max: int) -> Graph:
    """Spine path plus leaves, at most n_max vertices in total."""
    spine = rng.randint(1, max(1, n_max // 2))
    edges = [(i, i + 1) for i in range(spine - 1)]
    n = spine
    while n < n_max and rng.random() < 0.85:
        edges.append((rng.randrange(spine), n))
        n += 1
    return Graph.from_edges(n, edges)


def random_sequence(rng: random.Random, max_term: int = 4) -> PackingSequence:
    """Random infinite packing sequence (Constant or Identity tail)."""
    if rng.random() < 0.2:
        return PackingSequence((1,) * rng.randint(0, 2), Identity())
    prefix = sorted(rng.randint(1, max_term) for _ in range(rng.randint(0, 3)))
    tail = rng.randint(prefix[-1] if prefix else 1, max_term)
    if not prefix and tail == 1:
        tail = 2
    return PackingSequence(tuple(prefix), Constant(tail))


@pytest.fixture
def rng():
    return random.Random(20240607)
