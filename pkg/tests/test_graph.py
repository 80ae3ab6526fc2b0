import random

import networkx as nx
import pytest

from spackcrit.errors import BadParameter, IndexOutOfRange, MalformedGraph6, TooLarge
from spackcrit.graph import (
    UNREACHABLE, Graph, all_graphs, basic_stats, bfs_all_pairs, bowtie,
    canonical_form, canonical_graph, canonical_graph6, clique, connected_graphs,
    cycle, delete_vertex, generate, graph_name, is_bipartite, is_star,
    k4_minus_e, labeled_graphs, named_graph, parse_family, parse_graph6, path,
    star, write_graph6, z1,
)

from conftest import nx_distances, random_graph, to_nx


def test_bfs_examples():
    assert bfs_all_pairs(path(4))[0, 3] == 3
    d = bfs_all_pairs(clique(4))
    assert all(d[u, v] == (0 if u == v else 1) for u in range(4) for v in range(4))
    assert bfs_all_pairs(Graph.empty(2))[0, 1] == UNREACHABLE


def test_bfs_matches_networkx(rng):
    for _ in range(300):
        G = random_graph(rng, rng.randint(1, 10))
        d = bfs_all_pairs(G)
        ref = nx_distances(G)
        for u in range(G.n):
            assert d[u, u] == 0
            for v in range(G.n):
                assert d[u, v] == d[v, u]
                assert d[u, v] == ref[u].get(v, UNREACHABLE)


def test_delete_vertex_examples():
    for u in range(4):
        assert canonical_form(delete_vertex(cycle(4), u)) == canonical_form(path(3))
    assert delete_vertex(clique(2), 0) == Graph.empty(1)
    assert canonical_form(delete_vertex(z1(), 3)) == canonical_form(cycle(3))
    with pytest.raises(IndexOutOfRange):
        delete_vertex(path(3), 3)


def test_delete_vertex_is_induced_subgraph(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 9))
        u = rng.randrange(G.n)
        H = delete_vertex(G, u)
        keep = [v for v in range(G.n) if v != u]
        assert H.n == G.n - 1
        for i, a in enumerate(keep):
            for j, b in enumerate(keep):
                assert H.has_edge(i, j) == G.has_edge(a, b)


def test_generate_examples():
    C5 = generate("cycle", 5)
    assert C5.n == 5 and C5.num_edges() == 5
    Z = generate("z1")
    assert (Z.n, Z.num_edges(), sorted(Z.degrees())) == (4, 4, [1, 2, 2, 3])
    K13 = generate("star", 3)
    assert K13.degrees() == [3, 1, 1, 1]
    K4e = generate("k4-e")
    assert K4e.num_edges() == 5
    with pytest.raises(BadParameter):
        generate("cycle", 2)
    with pytest.raises(BadParameter):
        generate("hypercube", 3)


def test_parse_family_and_names():
    assert parse_family("path:4") == path(4)
    assert parse_family("bowtie") == bowtie()
    assert named_graph("K1,3") == star(3)
    assert named_graph("K4-e") == k4_minus_e()
    for name in ["P4", "C6", "K4", "K1,3", "Z1", "K4-e"]:
        assert graph_name(named_graph(name)) == name
    with pytest.raises(BadParameter):
        parse_family("path:x")


@pytest.mark.parametrize("n", range(3, 12, 2))
def test_odd_cycle_girth(n):
    assert nx.girth(to_nx(cycle(n))) == n
    assert not is_bipartite(cycle(n))


@pytest.mark.parametrize("k", range(1, 10))
def test_path_edges(k):
    assert path(k).num_edges() == k - 1


def _hand_graph6(G):
    # direct transcription of the format: N+63, then x(0,1) x(0,2) x(1,2) ...
    bitstr = "".join("1" if G.has_edge(i, j) else "0" for j in range(G.n) for i in range(j))
    bitstr += "0" * (-len(bitstr) % 6)
    return chr(G.n + 63) + "".join(chr(int(bitstr[i:i + 6], 2) + 63)
                                   for i in range(0, len(bitstr), 6))


def test_graph6_examples():
    assert write_graph6(clique(1)) == "@"
    assert write_graph6(clique(2)) == "A_"
    assert write_graph6(clique(3)) == "Bw"
    assert parse_graph6("@") == clique(1)
    assert parse_graph6("A_") == clique(2)
    assert parse_graph6("Bw") == clique(3)
    assert write_graph6(Graph.empty(0)) == "?"
    assert parse_graph6("?") == Graph.empty(0)
    assert parse_graph6(">>graph6<<Bw\n") == clique(3)


def test_graph6_round_trip_and_oracles():
    rng = random.Random(6)
    for _ in range(10_000):
        G = random_graph(rng, rng.randint(0, 12))
        text = write_graph6(G)
        assert parse_graph6(text) == G
        assert text == _hand_graph6(G)
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 12))
        assert write_graph6(G) == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


@pytest.mark.parametrize("text", ["", "B", "Bww", "B~", "~~~~", "A`"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedGraph6):
        parse_graph6(text)


def test_graph6_size_guard():
    with pytest.raises(TooLarge):
        write_graph6(Graph.empty(63))


def test_canonical_examples():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(cycle(4)) != canonical_form(path(4))
    assert canonical_form(clique(3)) == "111"
    with pytest.raises(TooLarge):
        canonical_form(path(10))


def test_canonical_is_minimum_over_permutations(rng):
    import itertools
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 6))
        best = min("".join("1" if G.has_edge(p[i], p[j]) else "0"
                           for j in range(G.n) for i in range(j))
                   for p in itertools.permutations(range(G.n)))
        assert canonical_form(G) == best


def test_canonical_invariant_and_complete(rng):
    for _ in range(300):
        n = rng.randint(1, 8)
        G = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        H = G.relabel(perm)
        assert canonical_form(G) == canonical_form(H)
        assert canonical_graph(G) == canonical_graph(H)
        u = rng.randrange(n)
        # deletion commutes with relabelling
        assert canonical_form(delete_vertex(H, perm.index(u))) == \
            canonical_form(delete_vertex(G, u))
        other = random_graph(rng, n)
        same = nx.is_isomorphic(to_nx(G), to_nx(other))
        assert (canonical_form(G) == canonical_form(other)) == same


def test_basic_stats_examples():
    s = basic_stats(cycle(4))
    assert (s.connected, s.diameter, s.max_degree) == (True, 2, 2)
    s = basic_stats(star(3))
    assert (s.diameter, s.max_degree, s.degree_sequence) == (2, 3, (3, 1, 1, 1))
    s = basic_stats(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert (s.connected, s.diameter) == (False, None)
    assert basic_stats(clique(1)).diameter is None


def test_class_counts():
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_classes_cover_labeled_graphs():
    for n in range(1, 6):
        from_labeled = {canonical_graph6(G) for G in labeled_graphs(n)}
        assert from_labeled == {write_graph6(G) for G in all_graphs(n)}


def test_star_and_bipartite_predicates():
    assert is_star(clique(2)) and is_star(star(4))
    assert not is_star(path(4))
    assert is_bipartite(cycle(6)) and not is_bipartite(clique(3))


def test_graph_pickles():
    import pickle
    G = cycle(5)
    H = pickle.loads(pickle.dumps(G))
    assert H == G and hash(H) == hash(G)
