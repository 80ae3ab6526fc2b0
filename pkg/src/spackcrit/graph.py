"""Small simple undirected graphs on bitset adjacency.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set when
``uv`` is an edge.  Graphs are immutable and hashable.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .errors import BadParameter, IndexOutOfRange, MalformedGraph6, TooLarge

UNREACHABLE = math.inf
"""Distance between vertices in different components (compares > any hop count)."""

CANONICAL_MAX_N = 9
GRAPH6_MAX_N = 62


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise BadParameter(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise BadParameter(f"bad adjacency row for vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise BadParameter(f"adjacency not symmetric at ({v},{u})")
                r ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph._unchecked, (self.n, self.adj))

    @classmethod
    def _unchecked(cls, n: int, adj) -> "Graph":
        # hot paths only; caller guarantees a symmetric, loop-free adjacency
        G = object.__new__(cls)
        adj = tuple(adj)
        object.__setattr__(G, "n", n)
        object.__setattr__(G, "adj", adj)
        object.__setattr__(G, "_hash", hash((n, adj)))
        return G

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise BadParameter(f"bad edge ({u},{v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return component_mask(self, 0) == (1 << self.n) - 1

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices relabelled in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            row = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        return Graph._unchecked(len(vs), adj)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph whose vertex ``i`` is old vertex ``perm[i]``."""
        return self.induced(perm)

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def component_mask(G: Graph, v: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(G: Graph) -> list[list[int]]:
    left = (1 << G.n) - 1
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = component_mask(G, v)
        out.append(bits(comp))
        left &= ~comp
    return out


def delete_vertex(G: Graph, u: int) -> Graph:
    """G - u; vertices above ``u`` shift down by one."""
    if not 0 <= u < G.n:
        raise IndexOutOfRange(f"vertex {u} not in graph with n={G.n}")
    low = (1 << u) - 1
    adj = []
    for v, row in enumerate(G.adj):
        if v == u:
            continue
        adj.append((row & low) | (row >> (u + 1) << u))
    return Graph._unchecked(G.n - 1, adj)


# ---------------------------------------------------------------- distances

class DistanceMatrix:
    """All-pairs hop distances; ``UNREACHABLE`` across components."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, uv):
        u, v = uv
        return self.rows[u][v]

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def max_finite(self) -> int:
        return max((d for r in self.rows for d in r if d != UNREACHABLE), default=0)


def bfs_layers(G: Graph, v: int) -> list[int]:
    """Bitmasks of vertices at distance exactly 0, 1, 2, ... from ``v``."""
    layers = [1 << v]
    seen = 1 << v
    frontier = 1 << v
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def bfs_all_pairs(G: Graph) -> DistanceMatrix:
    rows = []
    for v in range(G.n):
        row = [UNREACHABLE] * G.n
        for d, layer in enumerate(bfs_layers(G, v)):
            for u in bits(layer):
                row[u] = d
        rows.append(row)
    return DistanceMatrix(rows)


def balls(G: Graph, radius: int) -> list[int]:
    """Mask of vertices ``u != v`` with ``d(u, v) <= radius``, per vertex v."""
    out = []
    for v in range(G.n):
        mask = 0
        for layer in bfs_layers(G, v)[1:radius + 1]:
            mask |= layer
        out.append(mask)
    return out


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    diameter: Optional[int]
    max_degree: int
    degree_sequence: tuple[int, ...]


def basic_stats(G: Graph) -> GraphStats:
    """Connectivity, diameter (None when disconnected or n <= 1), max degree."""
    degs = tuple(sorted(G.degrees(), reverse=True))
    connected = G.is_connected()
    diameter = None
    if connected and G.n > 1:
        diameter = max(len(bfs_layers(G, v)) - 1 for v in range(G.n))
    return GraphStats(connected, diameter, degs[0] if degs else 0, degs)


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.is_connected() and G.num_edges() == G.n - 1


def is_bipartite(G: Graph) -> bool:
    side = [-1] * G.n
    for start in range(G.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_star(G: Graph) -> bool:
    """K_{1,m} with m >= 1 (K_2 counts as a star)."""
    if G.n < 2 or not G.is_connected():
        return False
    return max(G.degrees()) == G.n - 1 and G.num_edges() == G.n - 1


def is_path(G: Graph) -> bool:
    if G.n == 0 or not G.is_connected():
        return False
    return G.num_edges() == G.n - 1 and max(G.degrees(), default=0) <= 2


def is_cycle(G: Graph) -> bool:
    return G.n >= 3 and G.is_connected() and all(d == 2 for d in G.degrees())


# ---------------------------------------------------------------- generators

def path(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def clique(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"clique needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(m: int) -> Graph:
    """K_{1,m}; the center is vertex 0."""
    if m < 1:
        raise BadParameter(f"star needs m >= 1 leaves, got {m}")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def z1() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 2."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def k4_minus_e() -> Graph:
    """K_4 without the edge 2-3."""
    return clique(4).without_edge(2, 3)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0: 0-1-2 and 0-3-4."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "clique": (clique, 1),
    "star": (star, 1),
    "z1": (z1, 0),
    "k4-e": (k4_minus_e, 0),
    "bowtie": (bowtie, 0),
    "empty": (Graph.empty, 1),
}


def generate(family: str, *params: int) -> Graph:
    """Build a named graph: ``generate("cycle", 5)``, ``generate("z1")``."""
    try:
        fn, arity = _FAMILIES[family.lower()]
    except KeyError:
        raise BadParameter(f"unknown family {family!r}; "
                           f"known: {', '.join(sorted(_FAMILIES))}") from None
    if len(params) != arity:
        raise BadParameter(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_family(text: str) -> Graph:
    """Generator grammar ``name[:param[,param]]``, e.g. ``path:4``."""
    name, _, rest = text.partition(":")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        raise BadParameter(f"bad family parameters in {text!r}") from None
    return generate(name.strip(), *params)


_NAME = re.compile(r"^(?:([PCK])(\d+)|K1,(\d+)|Z1|K4-e)$")


def named_graph(name: str) -> Graph:
    """Graph from textbook notation: P5, C4, K4, K1,3, Z1, K4-e."""
    m = _NAME.match(name.strip())
    if m is None:
        raise BadParameter(f"unknown graph name {name!r}")
    if name.strip() == "Z1":
        return z1()
    if name.strip() == "K4-e":
        return k4_minus_e()
    if m.group(3):
        return star(int(m.group(3)))
    letter, size = m.group(1), int(m.group(2))
    return {"P": path, "C": cycle, "K": clique}[letter](size)


# ---------------------------------------------------------------- graph6

def write_graph6(G: Graph) -> str:
    """Short-form graph6 (n <= 62)."""
    n = G.n
    if n > GRAPH6_MAX_N:
        raise TooLarge(f"only short-form graph6 supported (n <= 62), got n={n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = G.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"byte out of graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise MalformedGraph6("long-form graph6 (n > 62) is not supported")
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    body = codes[1:]
    if len(body) != need:
        raise MalformedGraph6(f"n={n} needs {need} data bytes, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = need * 6 - m
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, adj)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------- canonical form

@lru_cache(maxsize=None)
def _perm_table(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    I = np.array([i for i, _ in pairs], dtype=np.intp)
    J = np.array([j for _, j in pairs], dtype=np.intp)
    rows = perms[:, I].astype(np.intp)
    cols = perms[:, J].astype(np.intp)
    weights = (1 << np.arange(len(pairs) - 1, -1, -1, dtype=np.int64)).astype(np.int64)
    return perms, rows, cols, weights


def _canonical_perm(G: Graph) -> tuple[np.ndarray, int]:
    n = G.n
    if n > CANONICAL_MAX_N:
        raise TooLarge(f"canonical form is brute force; n={n} > {CANONICAL_MAX_N}")
    perms, rows, cols, weights = _perm_table(n)
    A = np.zeros((n, n), dtype=np.int64)
    for u, v in G.edges():
        A[u, v] = A[v, u] = 1
    values = A[rows, cols] @ weights
    best = int(np.argmin(values))
    return perms[best], int(values[best])


def canonical_form(G: Graph) -> str:
    """Lexicographically least upper-triangle bit string over all relabellings.

    Bits run in graph6 order x(0,1), x(0,2), x(1,2), x(0,3), ...  Equal for
    two graphs exactly when they are isomorphic.
    """
    if G.n <= 1:
        return ""
    _, value = _canonical_perm(G)
    return format(value, f"0{G.n * (G.n - 1) // 2}b")


def canonical_graph(G: Graph) -> Graph:
    """The relabelling of G that realises its canonical form."""
    if G.n <= 1:
        return G
    perm, _ = _canonical_perm(G)
    return G.relabel(int(p) for p in perm)


def canonical_graph6(G: Graph) -> str:
    return write_graph6(canonical_graph(G))


def graph_name(G: Graph) -> Optional[str]:
    """Textbook name for the small graphs that appear in characterizations."""
    n = G.n
    if n == 0 or not G.is_connected():
        return None
    if is_path(G):
        return f"P{n}"
    if n >= 3 and is_cycle(G):
        return f"C{n}"
    if G.num_edges() == n * (n - 1) // 2:
        return f"K{n}"
    if is_star(G):
        return f"K1,{n - 1}"
    if n == 4:
        c = canonical_form(G)
        if c == canonical_form(z1()):
            return "Z1"
        if c == canonical_form(k4_minus_e()):
            return "K4-e"
    return None


# ---------------------------------------------------------------- enumeration

def _extend(classes: list[Graph], require_neighbor: bool) -> list[Graph]:
    """Add one vertex in every possible way and keep one graph per class."""
    seen: dict[int, Graph] = {}
    for H in classes:
        n = H.n
        for mask in range(1 if require_neighbor else 0, 1 << n):
            adj = list(H.adj)
            for u in bits(mask):
                adj[u] |= 1 << n
            adj.append(mask)
            G = Graph._unchecked(n + 1, adj)
            perm, key = _canonical_perm(G)
            if key not in seen:
                seen[key] = G.relabel(int(p) for p in perm)
    return [seen[k] for k in sorted(seen)]


@lru_cache(maxsize=None)
def _classes(n: int, connected: bool) -> tuple[Graph, ...]:
    if n > CANONICAL_MAX_N:
        raise TooLarge(f"isomorphism classes are generated only for n <= {CANONICAL_MAX_N}")
    if n <= 1:
        return (Graph.empty(n),)
    # every connected graph has a non-cut vertex, so connected graphs on n
    # vertices all arise from connected graphs on n-1 vertices
    return tuple(_extend(list(_classes(n - 1, connected)), require_neighbor=connected))


def connected_graphs(n: int) -> list[Graph]:
    """One canonically labelled representative per connected graph on n vertices."""
    return list(_classes(n, True))


def all_graphs(n: int) -> list[Graph]:
    """One canonically labelled representative per graph on n vertices."""
    return list(_classes(n, False))


def labeled_graphs(n: int, lo: int = 0, hi: Optional[int] = None) -> Iterator[Graph]:
    """Every labelled graph on n vertices, by upper-triangle bitmask in [lo, hi)."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    m = len(pairs)
    hi = (1 << m) if hi is None else hi
    for mask in range(lo, hi):
        adj = [0] * n
        for t in bits(mask):
            i, j = pairs[m - 1 - t]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        yield Graph._unchecked(n, adj)
