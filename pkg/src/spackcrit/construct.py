"""Graph families with prescribed S-packing behaviour.

Each constructor returns a ``ConstructionResult`` carrying the graph, a role
label per vertex and, inside the regime where a closed formula is known,
the predicted chi_S and deletion-difference set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import BadParameter, HypothesisViolated
from .graph import Graph
from .seq import Constant, PackingSequence


@dataclass(frozen=True)
class ConstructionResult:
    family: str
    params: dict
    graph: Graph
    roles: tuple[str, ...]
    predicted_chi: Optional[int] = None
    predicted_delta: Optional[frozenset] = None
    sequence: Optional[PackingSequence] = field(default=None, compare=False)

    def vertices_with_role(self, prefix: str) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r.split("/")[0] == prefix]


class _Builder:
    def __init__(self):
        self.roles: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, role: str) -> int:
        self.roles.append(role)
        return len(self.roles) - 1

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def clique(self, vs: Iterable[int]) -> None:
        self.edges.extend(itertools.combinations(list(vs), 2))

    def graph(self) -> Graph:
        return Graph.from_edges(len(self.roles), self.edges)


def _delta_values(A: Iterable[int]) -> list[int]:
    """Sorted a_1 < ... < a_k from a difference set that may include 1."""
    values = sorted(set(int(a) for a in A))
    if values and values[0] == 1:
        values = values[1:]
    if not values:
        raise BadParameter("need at least one value a_i >= 2")
    if values[0] < 2:
        raise BadParameter(f"difference values must be positive, got {values}")
    return values


def realization_cycle_cliques(ell: int, A: Iterable[int]) -> ConstructionResult:
    """Odd cycle with attached cliques realising Delta = {1} u A under (1^ell, 2^inf).

    Cycle vertices ``x1..x_{2k+1}`` come first, then cliques ``Q1..Q_{2k+1}``.
    Every vertex of ``Q_i`` is joined to x_i, x_{i+1} and to x_{i+o} for the
    odd offsets o = 3, 5, ..., 2k-1 (indices mod 2k+1).
    """
    if ell < 1:
        raise BadParameter(f"ell must be >= 1, got {ell}")
    a = _delta_values(A)
    k = len(a)
    m = 2 * k + 1
    b = _Builder()
    xs = [b.add(f"x{i}") for i in range(1, m + 1)]
    for i in range(m):
        b.join(xs[i], xs[(i + 1) % m])
    for i in range(1, m + 1):
        size = (a[(i + 1) // 2 - 1] if i <= 2 * k else a[-1]) + ell - 1
        q = [b.add(f"Q{i}") for _ in range(size)]
        b.clique(q)
        targets = [i, i + 1] + [i + o for o in range(3, 2 * k, 2)]
        for x in q:
            for t in targets:
                b.join(x, xs[(t - 1) % m])
    seq = PackingSequence((1,) * ell, Constant(2))
    return ConstructionResult(
        family="realization1",
        params={"ell": ell, "a": a},
        graph=b.graph(),
        roles=tuple(b.roles),
        predicted_chi=2 * sum(a) + a[-1] + ell,
        predicted_delta=frozenset([1, *a]),
        sequence=seq,
    )


def realization_clique_of_cliques(S: PackingSequence, A: Iterable[int]) -> ConstructionResult:
    """Cliques glued onto a clique (k >= 2) or two cliques sharing a vertex (k = 1).

    For k >= 2, ``x1..x_k`` span K_k and vertex ``x_i`` also lies in a clique
    ``X_i`` of order a_i + l - 1, where l is the least index with s_l >= 3.
    For k = 1, l is the least index with s_l >= 2 and the graph is two copies
    of K_{a+l-1} sharing the vertex ``x``.
    """
    a = _delta_values(A)
    k = len(a)
    b = _Builder()
    if k == 1:
        ell = S.first_index_at_least(2)
        if ell is None:
            raise BadParameter(f"sequence {S} has no term >= 2")
        size = a[0] + ell - 1
        x = b.add("x")
        left = [b.add("X1") for _ in range(size - 1)]
        right = [b.add("X2") for _ in range(size - 1)]
        b.clique([x, *left])
        b.clique([x, *right])
        chi = 2 * a[0] + ell - 2
    else:
        ell = S.first_index_at_least(3)
        if ell is None:
            raise BadParameter(f"sequence {S} has no term >= 3")
        total = sum(a)
        for ai in a:
            if total - ai < ai - 1:
                raise HypothesisViolated(
                    f"sum of the other values must be >= {ai - 1} for a_i={ai}")
        xs = [b.add(f"x{i}") for i in range(1, k + 1)]
        b.clique(xs)
        for i, ai in enumerate(a, start=1):
            extra = [b.add(f"X{i}") for _ in range(ai + ell - 2)]
            b.clique([xs[i - 1], *extra])
        chi = (ell - 1) + total
    return ConstructionResult(
        family="realization2",
        params={"sequence": str(S), "a": a, "ell": ell},
        graph=b.graph(),
        roles=tuple(b.roles),
        predicted_chi=chi,
        predicted_delta=frozenset([1, *a]),
        sequence=S,
    )


def tree_T(k: int) -> ConstructionResult:
    """Star K_{1,k-1} (center ``u``, leaves ``w_i``) with k-2 leaves hung on each w_i.

    chi_S = k whenever s_1 = 1 and s_2 >= 2.
    """
    if k < 2:
        raise BadParameter(f"tree_T needs k >= 2, got {k}")
    b = _Builder()
    u = b.add("u")
    ws = [b.add(f"w{i}") for i in range(1, k)]
    for i, w in enumerate(ws, start=1):
        b.join(u, w)
    for i, w in enumerate(ws, start=1):
        for _ in range(k - 2):
            b.join(w, b.add(f"leaf/w{i}"))
    return ConstructionResult(
        family="treeT",
        params={"k": k},
        graph=b.graph(),
        roles=tuple(b.roles),
        predicted_chi=k,
        sequence=PackingSequence((1,), Constant(2)),
    )


_CATERPILLAR_REGIME = {
    # variant: (minimum k, default s2 as a function of k, regime test)
    "G1": (2, lambda k: k, lambda k, s2: k <= s2),
    "G2": (2, lambda k: k - 1, lambda k, s2: k == s2 + 1),
    "G3": (6, lambda k: k - 2, lambda k, s2: k == s2 + 2),
}


def caterpillar(variant: str, k: int, s2: Optional[int] = None) -> ConstructionResult:
    """Critical caterpillars for S = (1, s2^{k-1}).

    All variants have spine ``x1..x_{k-1}``.  G1 hangs one leaf ``y_i`` on
    every spine vertex.  G2 adds a second leaf ``z_{k-1}`` on ``x_{k-1}``.  G3
    hangs ``y_i`` on x_3..x_{k-3} and two leaves ``y_i, z_i`` on x_1, x_2,
    x_{k-2}, x_{k-1}; it is only defined for k >= 6.

    ``s2`` defaults to the value for which the variant is critical (G1: k,
    G2: k-1, G3: k-2).  Outside that regime no prediction is attached.
    """
    variant = variant.upper()
    if variant not in _CATERPILLAR_REGIME:
        raise BadParameter(f"unknown caterpillar variant {variant!r}")
    k_min, default_s2, in_regime = _CATERPILLAR_REGIME[variant]
    if k < k_min:
        raise BadParameter(f"{variant} needs k >= {k_min}, got {k}")
    if s2 is None:
        s2 = default_s2(k)
    if s2 < 1:
        raise BadParameter(f"s2 must be >= 1, got {s2}")

    b = _Builder()
    spine = [b.add(f"x{i}") for i in range(1, k)]
    for u, v in zip(spine, spine[1:]):
        b.join(u, v)
    for i, x in enumerate(spine, start=1):
        if variant == "G3" and i not in (1, 2, k - 2, k - 1):
            leaves = ["y"] if 3 <= i <= k - 3 else []
        elif variant == "G3":
            leaves = ["y", "z"]
        elif variant == "G2" and i == k - 1:
            leaves = ["y", "z"]
        else:
            leaves = ["y"]
        for name in leaves:
            b.join(x, b.add(f"{name}{i}"))

    seq = PackingSequence((1,) + (s2,) * (k - 1))
    regime = s2 >= 2 and in_regime(k, s2)
    return ConstructionResult(
        family=f"cat{variant[1]}",
        params={"variant": variant, "k": k, "s2": s2},
        graph=b.graph(),
        roles=tuple(b.roles),
        predicted_chi=k if regime else None,
        sequence=seq,
    )
