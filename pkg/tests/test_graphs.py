import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fpcount.errors import ValidationError
from fpcount.functions import Var
from fpcount.graphs import (
    Digraph,
    TreeDecomposition,
    closure_graph,
    decomposition_problems,
    euler_characteristics,
    faces,
    graph_report,
    has_vertex_cover_one,
    is_planar,
    is_valid_decomposition,
    scc_condensation,
    strongly_connected_components,
    tree_decomposition,
    validate_rotation_system,
)
from fpcount.system import Network, System

from generators import random_network
from oracles import has_kuratowski_subdivision


def complete(n):
    return Network.from_edges(n, combinations(range(1, n + 1), 2))


def k33():
    return Network.from_edges(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])


def path(n):
    return Network.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n):
    return Network.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def star(leaves):
    return Network.from_edges(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


class TestCondensation:
    def test_two_cycle(self):
        c = scc_condensation(Digraph(2, frozenset({(1, 2), (2, 1)})))
        assert c.components == ((1, 2),) and c.self_witnessed == (True,)

    def test_loop_witness(self):
        c = scc_condensation(Digraph(2, frozenset({(2, 1), (2, 2)})))
        assert set(c.components) == {(1,), (2,)}
        a, b = c.component_of[2], c.component_of[1]
        assert c.self_witnessed[a] and not c.self_witnessed[b]
        assert set(c.dag_edges) == {(a, b)}

    def test_dag(self):
        c = scc_condensation(Digraph(3, frozenset({(1, 2), (2, 3), (1, 3)})))
        assert len(c) == 3 and not any(c.self_witnessed)
        assert [m[0] for m in c.components] == [1, 2, 3]  # topological, sources first

    @given(st.integers(min_value=0, max_value=10**9))
    @settings(max_examples=300, deadline=None)
    def test_matches_networkx_and_expands(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 15)
        arcs = frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1) if rng.random() < 0.15)
        d = Digraph(n, arcs)
        c = scc_condensation(d)
        G = nx.DiGraph()
        G.add_nodes_from(range(1, n + 1))
        G.add_edges_from(arcs)
        assert {frozenset(m) for m in c.components} == {frozenset(m) for m in nx.strongly_connected_components(G)}
        assert c.expand() == arcs
        for a, b in c.dag_edges:
            assert a < b
        assert len(strongly_connected_components(d)) == len(c)


class TestPlanarity:
    def test_kuratowski_graphs(self):
        assert not is_planar(complete(5))[0]
        assert not is_planar(k33())[0]
        ok, rotation = is_planar(complete(4))
        assert ok and euler_characteristics(rotation) == [2]

    def test_faces_of_cycle(self):
        ok, rotation = is_planar(cycle(5))
        assert sorted(len(w) for w in faces(rotation)) == [5, 5]

    def test_rejects_bad_rotation(self):
        g = complete(4)
        _, rotation = is_planar(g)
        with pytest.raises(ValidationError):
            validate_rotation_system(g, {**rotation, 1: rotation[1][:-1]})
        # reversing one vertex's cyclic order breaks the embedding of K4
        bad = dict(rotation)
        bad[1] = tuple(reversed(rotation[1]))
        with pytest.raises(ValidationError):
            validate_rotation_system(g, bad)

    @given(st.integers(min_value=0, max_value=10**9))
    @settings(max_examples=300, deadline=None)
    def test_euler_formula_per_component(self, seed):
        rng = random.Random(seed)
        g = random_network(rng, rng.randint(1, 14), p=rng.uniform(0.05, 0.35))
        ok, rotation = is_planar(g)
        if ok:
            assert all(chi == 2 for chi in euler_characteristics(rotation))
            validate_rotation_system(g, rotation)

    def test_agrees_with_subdivision_search(self):
        rng = random.Random(77)
        for _ in range(60):
            n = rng.randint(5, 9)
            g = random_network(rng, n, p=rng.uniform(0.3, 0.7))
            assert is_planar(g)[0] == (not has_kuratowski_subdivision(g.n, g.edges))


class TestVertexCoverOne:
    def test_examples(self):
        assert has_vertex_cover_one(star(5))
        assert not has_vertex_cover_one(complete(3))
        assert not has_vertex_cover_one(Network.from_edges(4, [(1, 2), (3, 4)]))
        assert has_vertex_cover_one(Network(3, frozenset()))

    @given(st.integers(min_value=0, max_value=10**9))
    @settings(max_examples=200, deadline=None)
    def test_brute_force(self, seed):
        rng = random.Random(seed)
        g = random_network(rng, rng.randint(1, 7), p=rng.uniform(0.05, 0.4))
        expected = any(all(v in e for e in g.edges) for v in g.vertices) or not g.edges
        assert has_vertex_cover_one(g) == expected


class TestClosure:
    def test_examples(self):
        assert closure_graph(path(3)).edges == {(1, 2), (2, 3), (1, 3)}
        assert closure_graph(Network(3, frozenset())).edges == frozenset()
        assert closure_graph(star(3)).edges == complete(4).edges

    def test_system_argument(self):
        s = System(path(3), (Var(1), Var(1), Var(1)))
        assert closure_graph(s) == closure_graph(path(3))

    @given(st.integers(min_value=0, max_value=10**9))
    @settings(max_examples=200, deadline=None)
    def test_scopes_are_cliques(self, seed):
        rng = random.Random(seed)
        g = random_network(rng, rng.randint(1, 12))
        c = closure_graph(g)
        assert g.edges <= c.edges
        for v in g.vertices:
            for a, b in combinations(g.scope(v), 2):
                assert (a, b) in c.edges


class TestTreeDecomposition:
    def test_widths(self):
        assert tree_decomposition(path(10)).width == 1
        assert tree_decomposition(cycle(6)).width == 2
        assert tree_decomposition(complete(5)).width == 4
        assert tree_decomposition(Network(0, frozenset())).width == -1

    def test_strategies(self):
        with pytest.raises(ValueError):
            tree_decomposition(path(3), "random")
        assert tree_decomposition(cycle(8), "min_degree").width == 2

    def test_detects_problems(self):
        g = path(3)
        assert decomposition_problems(g, TreeDecomposition((frozenset({1, 2}), frozenset({3})), ((0, 1),)))
        bad = TreeDecomposition(
            (frozenset({1, 2}), frozenset({2, 3}), frozenset({1})), ((0, 1), (1, 2))
        )
        assert any("not connected" in p for p in decomposition_problems(g, bad))

    @pytest.mark.parametrize("strategy", ["min_fill", "min_degree"])
    def test_always_valid(self, strategy):
        rng = random.Random(13)
        for _ in range(1000):
            g = random_network(rng, rng.randint(0, 40), p=rng.uniform(0.02, 0.3))
            assert is_valid_decomposition(g, tree_decomposition(g, strategy))


class TestReport:
    def test_examples(self):
        r = graph_report(star(4))
        assert (r.max_degree, r.planar, r.vertex_cover_one) == (4, True, True)
        r = graph_report(complete(5))
        assert (r.planar, r.vertex_cover_one, r.width) == (False, False, 4)
        r = graph_report(cycle(4))
        assert (r.max_degree, r.planar, r.vertex_cover_one, r.width) == (2, True, False, 2)
        assert r.as_dict()["components"] == 1
