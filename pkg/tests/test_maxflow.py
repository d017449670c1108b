import random

import pytest

from schedflow.graphs import FlowNetwork
from schedflow.maxflow import (
    ResidualState,
    bfs_augmenting_path,
    max_flow,
    saturated_edges,
)

from oracles import brute_force_unit_max_flow


def unit_network(vertex_count, source, sink, edges):
    net = FlowNetwork(vertex_count, source, sink)
    for u, v in edges:
        net.add_edge(u, v, 1)
    return net


def random_unit_network(rng, vertex_count=8, max_edges=14):
    """Random unit network, source 0 and sink last, small enough for the
    0/1-enumeration oracle."""
    candidates = [
        (u, v)
        for u in range(vertex_count)
        for v in range(vertex_count)
        if u != v and v != 0 and u != vertex_count - 1
    ]
    edges = rng.sample(candidates, rng.randint(0, max_edges))
    return unit_network(vertex_count, 0, vertex_count - 1, edges), edges


class TestBfsAugmentingPath:
    def test_unique_path(self):
        net = unit_network(3, 0, 2, [(0, 1), (1, 2)])
        assert bfs_augmenting_path(ResidualState(net), 0, 2) == [0, 1, 2]

    def test_saturated_network_has_no_path(self):
        net = unit_network(3, 0, 2, [(0, 1), (1, 2)])
        state = ResidualState(net)
        for u, v in [(0, 1), (1, 2)]:
            state.push(u, v, 1)
        assert bfs_augmenting_path(state, 0, 2) is None

    def test_shortest_path_wins(self):
        # length-2 route 0->4->5 vs length-3 route 0->1->2->5
        net = unit_network(6, 0, 5, [(0, 1), (1, 2), (2, 5), (0, 4), (4, 5)])
        assert bfs_augmenting_path(ResidualState(net), 0, 5) == [0, 4, 5]

    def test_ascending_id_tie_break(self):
        # two length-2 routes; vertex 1 is explored before vertex 2
        net = unit_network(4, 0, 3, [(0, 2), (2, 3), (0, 1), (1, 3)])
        assert bfs_augmenting_path(ResidualState(net), 0, 3) == [0, 1, 3]


class TestMaxFlow:
    def test_no_edges_out_of_source(self):
        net = unit_network(3, 0, 2, [(1, 2)])
        assert max_flow(net).value == 0

    def test_diamond(self):
        net = unit_network(4, 0, 3, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert max_flow(net).value == 2

    def test_needs_flow_rerouting(self):
        # greedy shortest path takes 0->1->3->5; reverse-edge push is needed
        # to reach value 2
        net = unit_network(
            6, 0, 5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 5), (1, 4), (4, 5)]
        )
        assert max_flow(net).value == 2

    def test_non_unit_capacities(self):
        net = FlowNetwork(4, 0, 3)
        net.add_edge(0, 1, 3)
        net.add_edge(0, 2, 2)
        net.add_edge(1, 3, 2)
        net.add_edge(2, 3, 4)
        net.add_edge(1, 2, 5)
        assert max_flow(net).value == 5

    @pytest.mark.parametrize("seed", range(40))
    def test_matches_enumeration_oracle(self, seed):
        rng = random.Random(seed)
        net, edges = random_unit_network(rng)
        expected = brute_force_unit_max_flow(8, 0, 7, edges)
        assert max_flow(net).value == expected

    @pytest.mark.parametrize("seed", range(20))
    def test_flow_invariants(self, seed):
        rng = random.Random(1000 + seed)
        net, edges = random_unit_network(rng)
        result = max_flow(net)
        for (u, v), f in result.edge_flow.items():
            assert isinstance(f, int)
            assert 0 <= f <= net.capacity(u, v)
        for v in range(1, 7):  # internal vertices
            inflow = sum(f for (a, b), f in result.edge_flow.items() if b == v)
            outflow = sum(f for (a, b), f in result.edge_flow.items() if a == v)
            assert inflow == outflow
        source_out = sum(
            f for (a, b), f in result.edge_flow.items() if a == 0
        ) - sum(f for (a, b), f in result.edge_flow.items() if b == 0)
        assert source_out == result.value

    @pytest.mark.parametrize("seed", range(10))
    def test_value_invariant_under_relabeling(self, seed):
        rng = random.Random(2000 + seed)
        net, edges = random_unit_network(rng)
        value = max_flow(net).value
        perm = list(range(8))
        rng.shuffle(perm)
        relabeled = unit_network(8, perm[0], perm[7], [(perm[u], perm[v]) for u, v in edges])
        assert max_flow(relabeled).value == value


class TestSaturatedEdges:
    def test_zero_flow(self):
        net = unit_network(3, 0, 2, [(1, 2)])
        result = max_flow(net)
        assert saturated_edges(net, result, {0, 1}, {2}) == []

    def test_perfect_matching_pairs(self):
        # 3 patients (1..3), 3 beds (4..6), identity compatibility
        edges = [(0, p) for p in (1, 2, 3)]
        edges += [(1, 4), (2, 5), (3, 6)]
        edges += [(b, 7) for b in (4, 5, 6)]
        net = unit_network(8, 0, 7, edges)
        result = max_flow(net)
        assert result.value == 3
        assert saturated_edges(net, result, {1, 2, 3}, {4, 5, 6}) == [(1, 4), (2, 5), (3, 6)]

    def test_disjointness_required(self):
        net = unit_network(3, 0, 2, [(0, 1), (1, 2)])
        result = max_flow(net)
        with pytest.raises(ValueError):
            saturated_edges(net, result, {0, 1}, {1, 2})
