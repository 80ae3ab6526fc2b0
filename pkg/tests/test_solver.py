import itertools

import networkx as nx
import pytest

from spackcrit.errors import BadColoring, NoFiniteColoring, PreconditionViolated
from spackcrit.graph import (
    Graph, basic_stats, bowtie, clique, cycle, delete_vertex, labeled_graphs, path, star,
)
from spackcrit.seq import Constant, PackingSequence, parse_sequence
from spackcrit.solver import (
    Violation, alpha_k, chi_S, chi_S_diam2_formula, chromatic_number,
    exists_coloring, lower_bound, verify_coloring,
)

from conftest import (
    brute_chi, brute_colorable, random_connected_graph, random_graph, random_sequence, to_nx,
)

P = parse_sequence


def test_verify_coloring_examples():
    assert verify_coloring(clique(3), P("1,2,2"), [1, 2, 3], 3) == []
    assert verify_coloring(path(3), P("1,2^inf"), [1, 2, 1], 2) == []
    assert verify_coloring(path(3), P("1,2^inf"), [2, 1, 2], 2) == [Violation(0, 2, 2, 2)]


def test_verify_coloring_errors():
    with pytest.raises(BadColoring):
        verify_coloring(path(3), P("1,2^inf"), [1, 2], 2)
    with pytest.raises(BadColoring):
        verify_coloring(path(3), P("1,2^inf"), [1, 3, 1], 2)
    with pytest.raises(BadColoring):
        verify_coloring(path(3), P("1,2^inf"), [1, None, 1], 2)


def test_exists_coloring_examples():
    c = exists_coloring(cycle(6), P("2,2,2"), 3)
    assert c is not None and verify_coloring(cycle(6), P("2,2,2"), c, 3) == []
    assert exists_coloring(cycle(4), P("2,2,2"), 3) is None
    assert exists_coloring(clique(3), P("1,1"), 2) is None
    assert exists_coloring(Graph.empty(0), P("1^inf"), 0) == []
    assert exists_coloring(clique(1), P("1^inf"), 0) is None


def test_chi_examples():
    assert chi_S(path(4), P("1,2^inf")).chi == 3
    assert chi_S(path(5), P("2,3^inf")).chi == 4
    assert chi_S(cycle(6), P("2,2,3^inf")).chi == 4
    for S in ["1^inf", "2^inf", "id", "5,7"]:
        assert chi_S(clique(1), P(S)).chi == 1
    assert chi_S(Graph.empty(0), P("1^inf")).chi == 0


def test_no_finite_coloring():
    with pytest.raises(NoFiniteColoring):
        chi_S(cycle(4), P("2^3"))
    assert chi_S(path(7), P("2^3")).chi == 3


def test_alpha_examples():
    assert alpha_k(cycle(5), 1) == 2
    assert alpha_k(cycle(5), 2) == 4
    assert alpha_k(clique(4), 2) == 2
    with pytest.raises(ValueError):
        alpha_k(cycle(5), 0)


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(clique(4)) == 4
    assert chromatic_number(path(4)) == 2
    assert chromatic_number(Graph.empty(0)) == 0


def test_diam2_formula_examples():
    assert chi_S_diam2_formula(cycle(4), P("1,2^inf")) == 3
    assert chi_S_diam2_formula(clique(4).without_edge(0, 1), P("1^2,2^inf")) == \
        chi_S(clique(4).without_edge(0, 1), P("1^2,2^inf")).chi
    assert chi_S_diam2_formula(bowtie(), P("1,2^inf")) == 4
    assert chi_S(bowtie(), P("1,2^inf")).chi == 4


def test_diam2_formula_on_k4():
    # K4 has diameter 1, outside the formula's hypothesis; chi_S is still n
    with pytest.raises(PreconditionViolated):
        chi_S_diam2_formula(clique(4), P("1^2,2^inf"))
    assert chi_S(clique(4), P("1^2,2^inf")).chi == 4


def test_diam2_formula_preconditions():
    with pytest.raises(PreconditionViolated):
        chi_S_diam2_formula(path(5), P("1,2^inf"))
    with pytest.raises(PreconditionViolated):
        chi_S_diam2_formula(cycle(4), P("1^inf"))
    with pytest.raises(PreconditionViolated):
        chi_S_diam2_formula(cycle(4), P("2^inf"))


def test_diam2_formula_matches_solver_random(rng):
    hits = 0
    while hits < 60:
        G = random_connected_graph(rng, rng.randint(3, 8))
        if basic_stats(G).diameter != 2:
            continue
        hits += 1
        S = PackingSequence((1,) * rng.randint(1, 3), Constant(rng.randint(2, 3)))
        assert chi_S_diam2_formula(G, S) == chi_S(G, S).chi


def test_oracle_equivalence_exhaustive_small():
    """Every labelled graph with n <= 4 against all k^n maps."""
    seqs = [P(t) for t in ["1^inf", "1,2^inf", "2^inf", "1,1,2,3^inf", "id", "2,3^inf"]]
    for n in range(1, 5):
        for G in labeled_graphs(n):
            for S in seqs:
                for k in range(1, 5):
                    got = exists_coloring(G, S, k)
                    assert (got is not None) == brute_colorable(G, S, k)
                    if got is not None:
                        assert verify_coloring(G, S, got, k) == []


def test_oracle_equivalence_random(rng):
    for _ in range(400):
        G = random_graph(rng, rng.randint(1, 5))
        S = random_sequence(rng)
        k = rng.randint(1, 4)
        assert (exists_coloring(G, S, k) is not None) == brute_colorable(G, S, k)


def test_chi_matches_brute_force(rng):
    for _ in range(150):
        G = random_graph(rng, rng.randint(1, 6))
        S = random_sequence(rng)
        assert chi_S(G, S).chi == brute_chi(G, S)


def test_certificate_soundness(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 9))
        S = random_sequence(rng)
        res = chi_S(G, S)
        assert len(res.certificate) == G.n
        assert verify_coloring(G, S, res.certificate, res.chi) == []
        assert exists_coloring(G, S, res.chi - 1) is None


def test_subgraph_monotonicity(rng):
    for _ in range(150):
        G = random_graph(rng, rng.randint(2, 8))
        S = random_sequence(rng)
        chi = chi_S(G, S).chi
        H = delete_vertex(G, rng.randrange(G.n))
        assert chi_S(H, S).chi <= chi
        edges = list(G.edges())
        if edges:
            u, v = rng.choice(edges)
            assert chi_S(G.without_edge(u, v), S).chi <= chi


def test_sequence_monotonicity(rng):
    for _ in range(150):
        G = random_graph(rng, rng.randint(1, 7))
        prefix = sorted(rng.randint(1, 3) for _ in range(3))
        tail = rng.randint(prefix[-1], 4)
        big = PackingSequence(tuple(prefix), Constant(tail))
        small_prefix = [max(1, x - rng.randint(0, 1)) for x in prefix]
        for i in range(1, 3):
            small_prefix[i] = max(small_prefix[i], small_prefix[i - 1])
        small = PackingSequence(tuple(small_prefix),
                                Constant(max(small_prefix[-1], tail - rng.randint(0, 1))))
        assert chi_S(G, small).chi <= chi_S(G, big).chi


def test_max_degree_lower_bound(rng):
    for _ in range(150):
        G = random_connected_graph(rng, rng.randint(2, 9))
        S = random_sequence(rng)
        if S[1] >= 2:
            chi = chi_S(G, S).chi
            assert chi >= max(G.degrees()) + 1
            assert lower_bound(G, S) <= chi


def _brute_mis(G):
    H = nx.complement(to_nx(G))
    return max((len(c) for c in nx.find_cliques(H)), default=0)


def test_alpha_one_is_independence_number(rng):
    for _ in range(150):
        G = random_graph(rng, rng.randint(1, 10))
        assert alpha_k(G, 1) == _brute_mis(G)


def _brute_alpha(G, ell):
    for size in range(G.n, -1, -1):
        for vs in itertools.combinations(range(G.n), size):
            if brute_colorable(G.induced(list(vs)), P("1^inf"), ell):
                return size
    return 0


def test_alpha_monotone_and_brute(rng):
    for _ in range(60):
        G = random_graph(rng, rng.randint(1, 7))
        vals = [alpha_k(G, ell) for ell in range(1, G.n + 2)]
        assert vals == sorted(vals)
        assert vals[-1] == G.n and all(v <= G.n for v in vals)
        ell = rng.randint(1, 3)
        assert alpha_k(G, ell) == _brute_alpha(G, ell)


def test_chromatic_matches_brute_force(rng):
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 7))
        chi = chromatic_number(G)
        assert brute_colorable(G, P("1^inf"), chi)
        assert chi == 0 or not brute_colorable(G, P("1^inf"), chi - 1)


def test_star_values():
    for m in range(1, 6):
        assert chi_S(star(m), P("1,2^inf")).chi == 2
        assert chi_S(star(m), P("2^inf")).chi == m + 1
