"""Exact S-packing colouring: decision, optimisation and helper invariants.

An S-packing k-colouring maps every vertex to a colour in 1..k so that two
distinct vertices sharing colour i lie at distance greater than s_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import BadColoring, NoFiniteColoring, PreconditionViolated
from .graph import Graph, UNREACHABLE, basic_stats, bfs_all_pairs, bfs_layers, bits
from .seq import PackingSequence, all_ones, term, truncate


class Violation(NamedTuple):
    u: int
    v: int
    color: int
    distance: int


@dataclass(frozen=True)
class SolveResult:
    chi: int
    certificate: Optional[tuple[int, ...]]


def verify_coloring(G: Graph, S: PackingSequence, coloring: Sequence[int],
                    k: int) -> list[Violation]:
    """All pairs breaking the packing rule; empty iff ``coloring`` is valid."""
    if len(coloring) != G.n:
        raise BadColoring(f"coloring has {len(coloring)} entries for n={G.n}")
    for v, c in enumerate(coloring):
        if c is None or not 1 <= c <= k:
            raise BadColoring(f"vertex {v} has color {c!r}, expected 1..{k}")
    s = truncate(S, k)
    dist = bfs_all_pairs(G)
    out = []
    for u in range(G.n):
        for v in range(u + 1, G.n):
            c = coloring[u]
            if c == coloring[v] and dist[u, v] <= s[c - 1]:
                out.append(Violation(u, v, c, dist[u, v]))
    return out


class _Balls:
    """Per-graph cache of ``ball[r][v]``: vertices within distance r of v."""

    def __init__(self, G: Graph):
        self.G = G
        self.layers = [bfs_layers(G, v) for v in range(G.n)]
        self._cache: dict[int, list[int]] = {}

    def __call__(self, r: int) -> list[int]:
        got = self._cache.get(r)
        if got is None:
            got = []
            for lay in self.layers:
                mask = 0
                for layer in lay[1:r + 1]:
                    mask |= layer
                got.append(mask)
            self._cache[r] = got
        return got


def _search_order(G: Graph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))


def exists_coloring(G: Graph, S: PackingSequence, k: int,
                    _balls: Optional[_Balls] = None) -> Optional[list[int]]:
    """Return an S-packing k-colouring (colours 1..k) or None if none exists.

    Backtracking over vertices in descending-degree order.  Colours with
    equal s-values are interchangeable, so within such a group a colour is
    only opened once every lower colour of the group is in use.
    """
    n = G.n
    if k <= 0:
        return [] if n == 0 else None
    if n == 0:
        return []
    s = truncate(S, k)
    balls = _balls or _Balls(G)
    conflict = [balls(r) for r in s]

    # contiguous runs of equal s-values; used colours of a run form a prefix
    groups = []
    start = 0
    for c in range(1, k + 1):
        if c == k or s[c] != s[start]:
            groups.append((start, c))
            start = c
    used = [0] * len(groups)

    order = _search_order(G)
    classes = [0] * k
    color = [0] * n

    def options(v: int) -> list[int]:
        opts = []
        for g, (lo, hi) in enumerate(groups):
            top = lo + used[g]
            for c in range(lo, top):
                if not conflict[c][v] & classes[c]:
                    opts.append(c)
            if top < hi:
                opts.append(top)
        return opts

    group_of = [g for g, (lo, hi) in enumerate(groups) for _ in range(lo, hi)]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << order[i]

    def room(i: int) -> bool:
        # each uncoloured vertex needs a class; a class takes at most one
        # vertex from each set of candidates lying pairwise within its s-value
        rest = suffix[i]
        need = n - i
        total = 0
        for g, (lo, hi) in enumerate(groups):
            near = conflict[lo]
            free = hi - lo - used[g]
            if free:
                total += free * _cover_number(rest, near)
                if total >= need:
                    return True
            for c in range(lo, lo + used[g]):
                cls = classes[c]
                fits = 0
                for w in bits(rest):
                    if not near[w] & cls:
                        fits |= 1 << w
                total += _cover_number(fits, near)
                if total >= need:
                    return True
        return False

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        for c in options(v):
            g = group_of[c]
            opened = c == groups[g][0] + used[g]
            if opened:
                used[g] += 1
            classes[c] |= bit
            color[v] = c + 1
            if room(i + 1) and rec(i + 1):
                return True
            classes[c] &= ~bit
            color[v] = 0
            if opened:
                used[g] -= 1
        return False

    return list(color) if room(0) and rec(0) else None


def _cover_number(mask: int, near: list[int]) -> int:
    """Greedy partition of ``mask`` into sets that are pairwise within range."""
    parts: list[int] = []
    for w in bits(mask):
        reach = near[w]
        for idx, p in enumerate(parts):
            if not p & ~reach:
                parts[idx] = p | 1 << w
                break
        else:
            parts.append(1 << w)
    return len(parts)


def _distance_clique_bound(G: Graph, radius: int, balls: _Balls) -> int:
    """Size of a greedily grown vertex set that is pairwise within ``radius``.

    Every colour has s_i >= s_1, so such a set needs pairwise distinct colours
    when ``radius == s_1``.
    """
    near = balls(radius)
    best = 1 if G.n else 0
    for v in range(G.n):
        cand = near[v]
        size = 1
        while cand:
            # take the candidate compatible with most of the remaining pool
            u = max(bits(cand), key=lambda w: ((near[w] & cand).bit_count(), -w))
            size += 1
            cand &= near[u]
        best = max(best, size)
    return best


def lower_bound(G: Graph, S: PackingSequence, balls: Optional[_Balls] = None) -> int:
    if G.n == 0:
        return 0
    balls = balls or _Balls(G)
    lb = _distance_clique_bound(G, term(S, 1), balls)
    if term(S, 1) >= 2:
        lb = max(lb, max(G.degrees()) + 1)
    return lb


def chi_S(G: Graph, S: PackingSequence) -> SolveResult:
    """The S-packing chromatic number, with a colouring as certificate.

    Ascends from a valid lower bound.  Raises NoFiniteColoring when S is
    finite and none of its prefixes suffices.
    """
    if G.n == 0:
        return SolveResult(0, None)
    balls = _Balls(G)
    lb = lower_bound(G, S, balls)
    hi = G.n if S.length is None else min(G.n, S.length)
    for k in range(lb, hi + 1):
        found = exists_coloring(G, S, k, balls)
        if found is not None:
            return SolveResult(k, tuple(found))
    raise NoFiniteColoring(
        f"no S-packing coloring of an n={G.n} graph with the {S.length} "
        f"terms of S={S}")


def chromatic_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    balls = _Balls(G)
    ones = all_ones()
    for k in range(1, G.n + 1):
        if exists_coloring(G, ones, k, balls) is not None:
            return k
    raise AssertionError("unreachable: n colours always suffice")


def _greedy_colors(G: Graph, vertices: list[int]) -> int:
    color: dict[int, int] = {}
    for v in vertices:
        taken = {color[u] for u in bits(G.adj[v]) if u in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return max(color.values(), default=-1) + 1


def alpha_k(G: Graph, ell: int) -> int:
    """Largest number of vertices inducing a subgraph with chromatic number <= ell."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    n = G.n
    if ell >= n:
        return n
    order = _search_order(G)
    verdicts: dict[int, bool] = {}
    ones = all_ones(ell)

    def colorable(mask: int, v: int) -> bool:
        if ell == 1:
            return not G.adj[v] & mask
        got = verdicts.get(mask)
        if got is None:
            vs = bits(mask)
            sub = G.induced(vs)
            got = (_greedy_colors(sub, _search_order(sub)) <= ell
                   or exists_coloring(sub, ones, ell) is not None)
            verdicts[mask] = got
        return got

    best = 0

    def rec(i: int, chosen: int, size: int) -> None:
        nonlocal best
        if size + n - i <= best:
            return
        if i == n:
            best = size
            return
        v = order[i]
        grown = chosen | 1 << v
        if colorable(grown, v):
            rec(i + 1, grown, size + 1)
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return best


def chi_S_diam2_formula(G: Graph, S: PackingSequence) -> int:
    """n(G) - alpha_l(G) + min(l, chi(G)) for S = (1^l, s_{l+1} >= 2, ...), diam(G) = 2."""
    stats = basic_stats(G)
    if stats.diameter != 2:
        raise PreconditionViolated(f"needs diameter 2, got {stats.diameter}")
    if S.is_all_ones:
        raise PreconditionViolated("sequence must leave the all-ones prefix")
    ell = S.ones_prefix_length()
    if ell < 1 or not S.has_term(ell + 1):
        raise PreconditionViolated(f"sequence {S} is not of the form (1^l, s_l+1 >= 2, ...)")
    return G.n - alpha_k(G, ell) + min(ell, chromatic_number(G))


__all__ = [
    "SolveResult", "Violation", "verify_coloring", "exists_coloring", "chi_S",
    "lower_bound", "chromatic_number", "alpha_k", "chi_S_diam2_formula",
    "UNREACHABLE",
]
