from __future__ import annotations

import random
from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromtools.errors import Disconnected, InvalidEdge, MalformedGraph6
from chromtools.families import ThetaSpec, build
from chromtools.graph import (Graph, blocks, canonical_form, canonical_graph, chromatic_number,
                              clique_number, complete, complete_bipartite, connectivity_class, cycle,
                              from_graph6, greedy_coloring, is_colorable, is_isomorphic, is_planar,
                              path, read_graph6_lines, star, to_graph6)

from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_chromatic_number(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    return 0


def edge_glued_c3_c4_k4() -> Graph:
    # C3, C4 and K4 glued along the common edge 0-1
    edges = [(0, 1), (0, 2), (1, 2),             # triangle
             (0, 3), (3, 4), (4, 1),             # 4-cycle through 0-1
             (0, 5), (0, 6), (1, 5), (1, 6), (5, 6)]  # K4 on 0,1,5,6
    return Graph.from_edges(7, edges)


# construction

def test_parallel_edges_collapse_and_normalize():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_invalid_edges():
    with pytest.raises(InvalidEdge):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        Graph.from_edges(3, [(0, 3)])


def test_json_round_trip():
    g = cycle(5)
    assert Graph.from_json(g.to_json()) == g


# edits

def test_contract_triangle_edge_gives_k2():
    assert complete(3).contract_edge(0, 1) == complete(2)


def test_delete_cycle_edge_gives_path():
    assert is_isomorphic(cycle(4).delete_edge(0, 1), path(4))


def test_contract_c5_edge_gives_c4():
    assert is_isomorphic(cycle(5).contract_edge(1, 2), cycle(4))


def test_edit_preconditions():
    with pytest.raises(InvalidEdge):
        cycle(4).add_edge(0, 1)
    with pytest.raises(InvalidEdge):
        cycle(4).delete_edge(0, 2)
    with pytest.raises(InvalidEdge):
        cycle(4).contract_edge(0, 2)


@given(graphs(min_n=2, max_n=7))
def test_contraction_matches_networkx(g):
    if not g.edges:
        return
    u, v = min(g.edges)
    ours = g.contract_edge(u, v)
    theirs = nx.contracted_nodes(to_nx(g), u, v, self_loops=False)
    assert ours.m == theirs.number_of_edges()
    assert nx.is_isomorphic(to_nx(ours), nx.convert_node_labels_to_integers(theirs))


# blocks

def test_triangle_with_pendant_blocks():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    dec = blocks(g)
    assert sorted(map(sorted, dec.blocks)) == [[0, 1, 2], [2, 3]]
    assert dec.cut_vertices == frozenset({2})


def test_edge_glued_c3_c4_k4_is_one_block():
    assert len(blocks(edge_glued_c3_c4_k4()).blocks) == 1


def test_tree_blocks_are_bridges():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert len(blocks(tree).blocks) == 4


def test_blocks_require_connected():
    with pytest.raises(Disconnected):
        blocks(Graph(3))


@given(graphs(min_n=2, max_n=8, connected=True))
def test_blocks_match_networkx(g):
    dec = blocks(g)
    ours = sorted(sorted(b) for b in dec.blocks)
    theirs = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
    assert ours == theirs
    assert dec.cut_vertices == frozenset(nx.articulation_points(to_nx(g)))
    # every edge lies in exactly one block
    for u, v in g.edges:
        assert sum(1 for b in dec.blocks if u in b and v in b) == 1


# connectivity

def test_connectivity_examples():
    assert connectivity_class(cycle(5), 2)
    assert not connectivity_class(cycle(5), 3)
    assert connectivity_class(complete(4), 3)
    assert connectivity_class(complete_bipartite(3, 3), 3)


@given(graphs(min_n=5, max_n=8, connected=True), st.integers(1, 3))
def test_connectivity_matches_networkx(g, k):
    assert connectivity_class(g, k) == (nx.node_connectivity(to_nx(g)) >= k)


# cliques and coloring

def test_clique_and_chromatic_examples():
    assert clique_number(complete(4)) == 4 and chromatic_number(complete(4)) == 4
    assert clique_number(cycle(5)) == 2 and chromatic_number(cycle(5)) == 3
    assert chromatic_number(build(ThetaSpec(2, 1, 3))) == 3
    assert clique_number(edge_glued_c3_c4_k4()) == 4


@given(graphs(min_n=1, max_n=8))
def test_clique_number_matches_networkx(g):
    assert clique_number(g) == max(len(c) for c in nx.find_cliques(to_nx(g)))


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=60)
def test_chromatic_number_matches_brute_force(g):
    assert chromatic_number(g) == brute_chromatic_number(g)


@given(graphs(min_n=1, max_n=9))
def test_greedy_coloring_is_proper(g):
    colors = greedy_coloring(g)
    assert all(colors[u] != colors[v] for u, v in g.edges)
    assert max(colors) + 1 >= chromatic_number(g)
    assert is_colorable(g, chromatic_number(g))
    assert chromatic_number(g) == 1 or not is_colorable(g, chromatic_number(g) - 1)


@given(graphs(min_n=2, max_n=6), st.data())
@settings(max_examples=200)
def test_addition_contraction_chromatic_relations(g, data):
    non_edges = [e for e in combinations(range(g.n), 2) if e not in g.edges]
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    plus, merged = chromatic_number(g.add_edge(u, v)), chromatic_number(g.identify(u, v))
    assert abs(plus - merged) <= 1
    assert chromatic_number(g) == min(plus, merged)


# planarity

def test_planarity_examples():
    assert is_planar(complete(4))
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))


def test_planarity_of_petersen():
    petersen = Graph.from_edges(10, list(nx.petersen_graph().edges()))
    assert not is_planar(petersen)


@given(graphs(min_n=1, max_n=9))
def test_planarity_matches_networkx(g):
    assert is_planar(g) == nx.check_planarity(to_nx(g))[0]


# canonical form

def test_canonical_examples():
    c5 = cycle(5)
    assert canonical_form(c5) == canonical_form(c5.relabel([3, 0, 4, 1, 2]))
    assert canonical_form(c5) != canonical_form(path(5))
    assert canonical_form(path(4)) != canonical_form(star(3))


@given(graphs(min_n=1, max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_canonical_form_invariant_under_permutation(g, rnd):
    key = canonical_form(g)
    for _ in range(100):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == key


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_canonical_form_decides_isomorphism(g, h):
    assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(min_n=1, max_n=8))
def test_canonical_graph_is_isomorphic(g):
    assert nx.is_isomorphic(to_nx(canonical_graph(g)), to_nx(g))


def test_canonical_form_separates_the_atlas():
    # every graph on up to 7 vertices, pairwise non-isomorphic by construction
    atlas = nx.graph_atlas_g()
    keys = {canonical_form(Graph.from_edges(h.number_of_nodes(), h.edges())) for h in atlas}
    assert len(keys) == len(atlas)


def test_regular_graphs_with_equal_refinement():
    # both 3-regular on 6 vertices; refinement alone cannot split them
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = complete_bipartite(3, 3)
    assert canonical_form(prism) != canonical_form(k33)
    rnd = random.Random(7)
    perm = list(range(6))
    rnd.shuffle(perm)
    assert canonical_form(prism.relabel(perm)) == canonical_form(prism)


# graph6

def test_graph6_examples():
    assert to_graph6(Graph(1)) == "@"
    assert to_graph6(complete(4)) == "C~"
    assert is_isomorphic(from_graph6(to_graph6(complete(4))), complete(4))
    assert from_graph6(">>graph6<<C~") == complete(4)


@given(graphs(min_n=0, max_n=12))
def test_graph6_matches_networkx(g):
    text = to_graph6(g)
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert from_graph6(text) == g


def test_graph6_large_order():
    g = Graph.from_edges(70, [(0, 69), (3, 40)])
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize("bad", ["", "C", "C~~", "!!", "D?{\x01"])
def test_malformed_graph6(bad):
    with pytest.raises(MalformedGraph6):
        from_graph6(bad)


def test_graph6_stream():
    lines = ["Bw\n", "\n", "C~\n"]
    assert [g.n for g in read_graph6_lines(lines)] == [3, 4]
