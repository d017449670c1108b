"""Edmonds-Karp maximum flow: BFS-based Ford-Fulkerson over a residual graph.

BFS explores neighbors in ascending vertex-id order, so the sequence of
augmenting paths (and anything extracted from the resulting flow) is fully
deterministic for a given network.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import FlowNetwork


class ResidualState:
    """Residual capacities for one solve.

    Forward capacities are seeded from the network; reverse capacities start
    at zero (a missing entry reads as 0) and are first written when an
    augmentation pushes flow through the forward edge. The neighbor lists
    are fixed up front, sorted ascending, so BFS order never depends on
    augmentation history.
    """

    def __init__(self, net: FlowNetwork) -> None:
        self.net = net
        cap: list[dict[int, int]] = [{} for _ in range(net.vertex_count)]
        nbrs: list[set[int]] = [set() for _ in range(net.vertex_count)]
        for u, v, c in net.edges():
            cap[u][v] = cap[u].get(v, 0) + c
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._cap = cap
        self._adj: list[tuple[int, ...]] = [tuple(sorted(s)) for s in nbrs]

    def residual(self, u: int, v: int) -> int:
        return self._cap[u].get(v, 0)

    def push(self, u: int, v: int, amount: int) -> None:
        self._cap[u][v] = self._cap[u].get(v, 0) - amount
        self._cap[v][u] = self._cap[v].get(u, 0) + amount


def bfs_augmenting_path(state: ResidualState, s: int, t: int) -> Optional[list[int]]:
    """Shortest s->t path over residual edges with capacity > 0, or None.

    Equal-length paths are broken by ascending-id neighbor exploration.
    """
    parent = [-1] * state.net.vertex_count
    visited = bytearray(state.net.vertex_count)
    visited[s] = 1
    queue = deque([s])
    adj = state._adj
    cap = state._cap
    while queue:
        u = queue.popleft()
        cap_u = cap[u]
        for v in adj[u]:
            if not visited[v] and cap_u.get(v, 0) > 0:
                visited[v] = 1
                parent[v] = u
                if v == t:
                    path = [t]
                    while path[-1] != s:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(v)
    return None


@dataclass(frozen=True)
class FlowResult:
    """Value and per-edge flow of a maximum s-t flow."""

    value: int
    edge_flow: dict[tuple[int, int], int]


def max_flow(net: FlowNetwork) -> FlowResult:
    """Maximum s-t flow by repeated BFS augmentation.

    Each augmentation pushes the bottleneck (minimum residual along the
    path); with integer capacities every intermediate and final flow is
    integral.
    """
    state = ResidualState(net)
    value = 0
    while (path := bfs_augmenting_path(state, net.source, net.sink)) is not None:
        delta = min(state.residual(u, v) for u, v in zip(path, path[1:]))
        for u, v in zip(path, path[1:]):
            state.push(u, v, delta)
        value += delta
    # With antiparallel flow cancelled, residual below capacity means the
    # forward edge carries the difference.
    edge_flow = {
        (u, v): max(0, c - state.residual(u, v)) for u, v, c in net.edges()
    }
    return FlowResult(value=value, edge_flow=edge_flow)


def saturated_edges(
    net: FlowNetwork,
    result: FlowResult,
    from_set: Iterable[int],
    to_set: Iterable[int],
) -> list[tuple[int, int]]:
    """Edges u->v between the two vertex sets carrying full positive flow."""
    from_ids = set(from_set)
    to_ids = set(to_set)
    if from_ids & to_ids:
        raise ValueError("from_set and to_set must be disjoint")
    return [
        (u, v)
        for u, v, c in net.edges()
        if c > 0 and u in from_ids and v in to_ids and result.edge_flow[(u, v)] == c
    ]
