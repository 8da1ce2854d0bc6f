"""Structural graph operations: chordality, components, cores, classification."""

import random
from itertools import combinations

import pytest

from mecsize import (
    GENERAL,
    ISOLATED_EDGES,
    NULL,
    TREE,
    TREE_PLUS,
    InvalidGraphError,
    UndirectedGraph,
    add_dominating_vertices,
    canonical_key,
    classify,
    complement,
    connected_components,
    core_decomposition,
    dominating_vertices,
    induced_subgraph,
    is_chordal,
    is_connected,
    random_chordal,
    validate_core_graph,
)


def naive_is_chordal(g):
    """Chordal iff no induced cycle on 4+ vertices; checked subset by subset."""
    for size in range(4, g.p + 1):
        for subset in combinations(range(g.p), size):
            sub, _ = induced_subgraph(g, subset)
            if is_connected(sub) and all(sub.degree(v) == 2 for v in range(size)):
                return False
    return True


def all_graphs(p):
    pairs = list(combinations(range(p), 2))
    for bits in range(1 << len(pairs)):
        yield UndirectedGraph(p, [e for i, e in enumerate(pairs) if bits >> i & 1])


def cycle(p):
    return UndirectedGraph(p, [(i, (i + 1) % p) for i in range(p)])


def path(p):
    return UndirectedGraph(p, [(i, i + 1) for i in range(p - 1)])


def complete(p):
    return UndirectedGraph(p, list(combinations(range(p), 2)))


def test_construction_rejects_bad_edges():
    with pytest.raises(InvalidGraphError):
        UndirectedGraph(3, [(0, 0)])
    with pytest.raises(InvalidGraphError):
        UndirectedGraph(3, [(0, 3)])
    with pytest.raises(InvalidGraphError):
        UndirectedGraph(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidGraphError):
        UndirectedGraph(-1)


def test_edges_and_degrees():
    g = UndirectedGraph(4, [(2, 0), (3, 1)])
    assert g.edges == [(0, 2), (1, 3)]
    assert g.edge_count == 2
    assert g.degree(0) == 1 and g.degree(2) == 1
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert not g.has_edge(0, 1)
    assert g.neighbors(3) == [1]


def test_chordality_examples():
    assert is_chordal(UndirectedGraph(0))
    assert is_chordal(UndirectedGraph(1))
    assert is_chordal(UndirectedGraph(5))
    assert is_chordal(path(6))
    assert is_chordal(complete(6))
    assert is_chordal(cycle(3))
    assert not is_chordal(cycle(4))
    assert not is_chordal(cycle(5))
    assert not is_chordal(cycle(6))
    # 4-cycle plus one chord is chordal again
    assert is_chordal(UndirectedGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]))
    # 6-cycle with one long chord still has an induced 4-cycle
    assert not is_chordal(
        UndirectedGraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
    )


def test_chordality_matches_naive_exhaustively():
    for p in range(6):
        for g in all_graphs(p):
            assert is_chordal(g) == naive_is_chordal(g)


def test_chordality_matches_naive_sampled():
    rng = random.Random(1801)
    for p in (6, 7):
        pairs = list(combinations(range(p), 2))
        for _ in range(150):
            edges = [e for e in pairs if rng.random() < rng.choice((0.3, 0.5, 0.7))]
            g = UndirectedGraph(p, edges)
            assert is_chordal(g) == naive_is_chordal(g)


def test_connected_components_examples():
    g = UndirectedGraph(6, [(0, 2), (2, 4), (1, 5)])
    assert connected_components(g) == [[0, 2, 4], [1, 5], [3]]
    assert connected_components(UndirectedGraph(0)) == []
    assert is_connected(UndirectedGraph(0))
    assert is_connected(UndirectedGraph(1))
    assert not is_connected(UndirectedGraph(2))
    assert is_connected(path(5))


def test_connected_components_partition_property():
    rng = random.Random(4242)
    for _ in range(100):
        p = rng.randrange(1, 9)
        pairs = list(combinations(range(p), 2))
        g = UndirectedGraph(p, [e for e in pairs if rng.random() < 0.25])
        comps = connected_components(g)
        flat = [v for comp in comps for v in comp]
        assert sorted(flat) == list(range(p))
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            assert is_connected(sub)
        # no edge crosses components
        index = {v: i for i, comp in enumerate(comps) for v in comp}
        for u, v in g.edges:
            assert index[u] == index[v]


def test_dominating_vertices_examples():
    assert dominating_vertices(complete(4)) == [0, 1, 2, 3]
    assert dominating_vertices(UndirectedGraph(1)) == [0]
    assert dominating_vertices(path(3)) == [1]
    assert dominating_vertices(path(4)) == []
    assert dominating_vertices(UndirectedGraph(3, [(0, 1)])) == []
    assert dominating_vertices(UndirectedGraph(0)) == []


def test_core_decomposition_examples():
    dec = core_decomposition(complete(5))
    assert dec.core.p == 0
    assert dec.dominating_count == 5
    assert dec.dominating_vertices == (0, 1, 2, 3, 4)

    dec = core_decomposition(path(3))
    assert dec.dominating_vertices == (1,)
    assert dec.core == UndirectedGraph(2)

    dec = core_decomposition(path(4))
    assert dec.dominating_count == 0
    assert dec.core == path(4)


def test_core_decomposition_fixpoint_and_roundtrip():
    rng = random.Random(90125)
    for _ in range(200):
        p = rng.randrange(1, 9)
        n = rng.randrange(p - 1, p * (p - 1) // 2 + 1)
        g = random_chordal(p, n, seed=rng.randrange(1 << 30))
        dec = core_decomposition(g)
        # stripping is a fixpoint: the core has no dominating vertex
        assert dominating_vertices(dec.core) == []
        assert dec.core.p + dec.dominating_count == p
        # re-attaching dominating vertices strips back to the same core
        back = core_decomposition(
            add_dominating_vertices(dec.core, dec.dominating_count)
        )
        assert back.core == dec.core
        assert back.dominating_count == dec.dominating_count


def test_complement_involution_and_edge_split():
    rng = random.Random(777)
    for _ in range(100):
        p = rng.randrange(0, 9)
        pairs = list(combinations(range(p), 2))
        g = UndirectedGraph(p, [e for e in pairs if rng.random() < 0.5])
        c = complement(g)
        assert complement(c) == g
        assert g.edge_count + c.edge_count == len(pairs)
        assert not set(g.edges) & set(c.edges)


def test_induced_subgraph_examples():
    g = UndirectedGraph(5, [(0, 1), (1, 3), (3, 4), (0, 4)])
    sub, labels = induced_subgraph(g, [4, 1, 3])
    assert labels == (1, 3, 4)
    assert sub.edges == [(0, 1), (1, 2)]
    empty, labels = induced_subgraph(g, [])
    assert empty.p == 0 and labels == ()
    with pytest.raises(InvalidGraphError):
        induced_subgraph(g, [0, 5])


def test_induced_subgraph_preserves_chordality():
    # chordality is hereditary
    rng = random.Random(56789)
    for _ in range(100):
        p = rng.randrange(2, 9)
        g = random_chordal(p, rng.randrange(p - 1, p * (p - 1) // 2 + 1),
                           seed=rng.randrange(1 << 30))
        subset = [v for v in range(p) if rng.random() < 0.6]
        sub, _ = induced_subgraph(g, subset)
        assert is_chordal(sub)


def test_add_dominating_vertices_structure():
    g = path(3)
    ext = add_dominating_vertices(g, 2)
    assert ext.p == 5
    assert dominating_vertices(ext) == [1, 3, 4]
    for v in (3, 4):
        assert ext.degree(v) == 4
    assert add_dominating_vertices(g, 0) == g
    with pytest.raises(ValueError):
        add_dominating_vertices(g, -1)


def test_classify_examples():
    assert classify(UndirectedGraph(0)) == NULL
    assert classify(UndirectedGraph(1)) == TREE
    assert classify(UndirectedGraph(2, [(0, 1)])) == TREE
    assert classify(path(5)) == TREE
    assert classify(UndirectedGraph(4, [(0, 1), (0, 2), (0, 3)])) == TREE
    assert classify(cycle(3)) == TREE_PLUS
    assert classify(UndirectedGraph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])) == TREE_PLUS
    assert classify(UndirectedGraph(2)) == GENERAL
    assert classify(UndirectedGraph(4, [(0, 1), (2, 3)])) == ISOLATED_EDGES
    assert classify(UndirectedGraph(6, [(0, 3), (1, 4), (2, 5)])) == ISOLATED_EDGES
    assert classify(complete(4)) == GENERAL
    assert classify(UndirectedGraph(3, [(0, 1)])) == GENERAL
    assert classify(UndirectedGraph(5, [(0, 1), (2, 3)])) == GENERAL


def test_validate_core_graph_reports():
    # every member of the published core list passes all four checks
    two_isolated = UndirectedGraph(2)
    rep = validate_core_graph(two_isolated)
    assert rep.all_pass and rep.is_core_graph

    rep = validate_core_graph(cycle(3))
    assert not rep.no_dominating_vertex
    assert not rep.is_core_graph

    rep = validate_core_graph(cycle(4))
    assert not rep.is_chordal
    assert not rep.is_core_graph

    rep = validate_core_graph(path(3))
    assert rep.is_chordal and not rep.no_dominating_vertex


def test_canonical_key_is_injective_on_labeled_graphs():
    seen = {}
    for p in range(5):
        for g in all_graphs(p):
            key = canonical_key(g)
            assert key not in seen, (g, seen[key])
            seen[key] = g
    assert canonical_key(UndirectedGraph(2)) == b"2:"
    assert canonical_key(UndirectedGraph(3, [(2, 0)])) == b"3:0,2"
