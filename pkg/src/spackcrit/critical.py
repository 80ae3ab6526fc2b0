"""Vertex-criticality: deletion differences, critical-graph enumeration and
exhaustive checks of known characterizations on small graphs.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import BadParameter, PreconditionViolated, TooLarge
from .graph import (
    CANONICAL_MAX_N, Graph, canonical_graph6, connected_graphs, cycle,
    delete_vertex, is_tree, labeled_graphs, named_graph, parse_graph6,
    write_graph6,
)
from .seq import PackingSequence, term
from .solver import _Balls, chi_S, exists_coloring, lower_bound

BUILTIN_MAX_N = 7


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    per_vertex: tuple[tuple[int, int], ...]
    delta_set: frozenset
    critical: bool

    def difference(self, v: int) -> int:
        return self.chi - self.per_vertex[v][1]


def criticality_report(G: Graph, S: PackingSequence) -> CriticalityReport:
    if G.n < 1:
        raise PreconditionViolated("criticality needs at least one vertex")
    chi = chi_S(G, S).chi
    per_vertex = tuple((u, chi_S(delete_vertex(G, u), S).chi) for u in range(G.n))
    diffs = [chi - c for _, c in per_vertex]
    return CriticalityReport(chi, per_vertex, frozenset(diffs), all(d >= 1 for d in diffs))


def is_k_critical(G: Graph, S: PackingSequence, k: int) -> bool:
    """True iff chi_S(G) = k and every vertex deletion lowers chi_S.

    Decides the same thing as ``criticality_report`` but only runs the
    decisions it needs: G not (k-1)-colourable, G k-colourable, and every
    G - u (k-1)-colourable.
    """
    if G.n < 1:
        raise PreconditionViolated("criticality needs at least one vertex")
    if k < 1 or not S.has_term(k):
        return False
    balls = _Balls(G)
    if lower_bound(G, S, balls) > k:
        return False
    if exists_coloring(G, S, k - 1, balls) is not None:
        return False
    for u in range(G.n):
        if exists_coloring(delete_vertex(G, u), S, k - 1) is None:
            return False
    return exists_coloring(G, S, k, balls) is not None


def _critical_among(graphs: Sequence[Graph], S: PackingSequence, k: int) -> list[str]:
    return [canonical_graph6(G) for G in graphs
            if G.is_connected() and is_k_critical(G, S, k)]


def _critical_labeled(args) -> list[str]:
    n, lo, hi, S, k = args
    out = set()
    for G in labeled_graphs(n, lo, hi):
        if G.is_connected() and is_k_critical(G, S, k):
            out.add(canonical_graph6(G))
    return sorted(out)


def _chunks(items: list, parts: int) -> list[list]:
    size = -(-len(items) // parts) if items else 0
    return [items[i:i + size] for i in range(0, len(items), size)] if size else []


def enumerate_critical(n_max: int, S: PackingSequence, k: int, *,
                       stream: Optional[Iterable[Union[str, Graph]]] = None,
                       method: str = "classes", jobs: int = 1) -> list[str]:
    """Sorted canonical graph6 strings of the connected k-critical graphs.

    Built-in enumeration covers 1 <= n <= ``n_max`` <= 7.  ``method``
    chooses what is scanned: ``"classes"`` tests one representative per
    isomorphism class, ``"labeled"`` tests every labelled graph (2^(n(n-1)/2)
    adjacency masks per n) and deduplicates afterwards.  Both give the same
    answer; the labelled scan is only practical up to n = 6 in pure Python.

    With ``stream`` (graph6 lines or graphs) the given graphs are tested
    instead and ``n_max`` only filters by order.  Graphs above 9 vertices
    cannot be canonicalised and are reported in their input labelling.
    """
    if stream is not None:
        return _enumerate_stream(stream, n_max, S, k, jobs)
    if not 1 <= n_max <= BUILTIN_MAX_N:
        raise TooLarge(f"built-in enumeration covers n_max <= {BUILTIN_MAX_N}; "
                       f"pass a graph6 stream for larger graphs")
    jobs = max(1, jobs)
    if method == "classes":
        work = [G for n in range(1, n_max + 1) for G in connected_graphs(n)]
        tasks = [(chunk, S, k) for chunk in _chunks(work, jobs)]
        results = _run(_critical_among_star, tasks, jobs)
    elif method == "labeled":
        tasks = []
        for n in range(1, n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            step = -(-total // jobs)
            tasks += [(n, lo, min(lo + step, total), S, k) for lo in range(0, total, step)]
        results = _run(_critical_labeled, tasks, jobs)
    else:
        raise BadParameter(f"unknown enumeration method {method!r}")
    return sorted(set().union(*results)) if results else []


def _critical_among_star(task) -> list[str]:
    return _critical_among(*task)


def _run(fn, tasks, jobs):
    # tasks are disjoint slices; each worker returns its own list, merged by caller
    if jobs == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _enumerate_stream(stream, n_max, S, k, jobs) -> list[str]:
    found = set()
    graphs = []
    for item in stream:
        G = parse_graph6(item) if isinstance(item, str) else item
        if 1 <= G.n <= n_max:
            graphs.append(G)
    big = [G for G in graphs if G.n > CANONICAL_MAX_N]
    small = [G for G in graphs if G.n <= CANONICAL_MAX_N]
    tasks = [(chunk, S, k) for chunk in _chunks(small, max(1, jobs))]
    for part in _run(_critical_among_star, tasks, jobs):
        found.update(part)
    for G in big:
        if G.is_connected() and is_k_critical(G, S, k):
            found.add(write_graph6(G))
    return sorted(found)


# ---------------------------------------------------------------- characterizations

@dataclass(frozen=True)
class ExpectedFamily:
    """Answer set of a characterization: named graphs and/or all odd cycles."""

    names: tuple[str, ...] = ()
    odd_cycles: bool = False

    def members(self, n_max: int) -> dict[str, str]:
        """Canonical graph6 -> name, for members with at most n_max vertices."""
        out = {}
        for name in self.names:
            G = named_graph(name)
            if G.n <= n_max:
                out[canonical_graph6(G)] = name
        if self.odd_cycles:
            for n in range(3, n_max + 1, 2):
                out[canonical_graph6(cycle(n))] = f"C{n}"
        return out

    def describe(self) -> str:
        parts = list(self.names) + (["C_{2k+1}"] if self.odd_cycles else [])
        return "{" + ", ".join(parts) + "}"


@dataclass
class VerificationReport:
    sequence: str
    k: int
    n_max: int
    expected: str
    found: list[str]
    missing: list[str]
    extra: list[str]
    elapsed_ms: float = 0.0
    names: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence,
            "k": self.k,
            "n_max": self.n_max,
            "expected": self.expected,
            "count": len(self.found),
            "graphs": self.found,
            "names": {g: self.names[g] for g in self.found if g in self.names},
            "pass": self.passed,
            "missing": self.missing,
            "extra": self.extra,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def verify_characterization(S: PackingSequence, k: int, n_max: int,
                            expected: ExpectedFamily, **kwargs) -> VerificationReport:
    """Compare the enumerated k-critical graphs with ``expected`` up to n_max."""
    t0 = time.perf_counter()
    found = enumerate_critical(n_max, S, k, **kwargs)
    want = expected.members(n_max)
    names = dict(want)
    return VerificationReport(
        sequence=str(S),
        k=k,
        n_max=n_max,
        expected=expected.describe(),
        found=found,
        missing=sorted(set(want) - set(found)),
        extra=sorted(set(found) - set(want)),
        elapsed_ms=(time.perf_counter() - t0) * 1000,
        names=names,
    )


_FOUR_CRITICAL_BASE = ("K1,3", "C4", "Z1", "K4-e", "K4")


def expected_3_critical(S: PackingSequence) -> ExpectedFamily:
    """The 3-critical graphs for S, by the shape of s_1, s_2."""
    s1, s2 = term(S, 1), term(S, 2)
    if s1 == s2 == 1:
        return ExpectedFamily(odd_cycles=True)
    if s1 == 1:
        return ExpectedFamily(names=("C3", "C4", "P4"))
    return ExpectedFamily(names=("C3", "P3"))


def expected_4_critical(S: PackingSequence) -> ExpectedFamily:
    """The 4-critical graphs for S with s_1 >= 2."""
    s1, s2, s3 = term(S, 1), term(S, 2), term(S, 3)
    if s1 < 2:
        raise PreconditionViolated(f"4-critical characterization needs s_1 >= 2, got {S}")
    if s3 == 2:
        return ExpectedFamily(names=_FOUR_CRITICAL_BASE)
    if s2 == 2:
        return ExpectedFamily(names=_FOUR_CRITICAL_BASE + ("P6", "C6"))
    if s1 == 2:
        return ExpectedFamily(names=_FOUR_CRITICAL_BASE + ("P5",))
    return ExpectedFamily(names=_FOUR_CRITICAL_BASE + ("P4",))


# ---------------------------------------------------------------- trees

def reduce_to_critical_tree(T: Graph, S: PackingSequence) -> tuple[Graph, int]:
    """Delete leaves that keep chi_S until no such leaf is left.

    Returns the resulting tree and its chi_S.  A leaf deletion lowers chi_S
    by at most one, and once every leaf deletion lowers it, deleting an
    inner vertex does too (each component of T - v misses some leaf of T),
    so the result is chi_S(T)-critical.
    """
    if not is_tree(T):
        raise BadParameter("leaf reduction needs a tree")
    chi = chi_S(T, S).chi
    while T.n > 1:
        for u in range(T.n):
            if T.degree(u) == 1 and chi_S(delete_vertex(T, u), S).chi == chi:
                T = delete_vertex(T, u)
                break
        else:
            break
    return T, chi
