"""Graph containers shared by the flow and coloring solvers.

Vertices are dense 0-based integer ids. Human-readable names (patient ids,
bed ids, course names) are kept in legend mappings by the problem-level
modules so the kernels here stay allocation-lean.
"""

from __future__ import annotations


class GraphError(ValueError):
    """Structurally invalid graph construction or query."""


class FlowNetwork:
    """Directed graph with nonnegative integer capacities and a fixed
    source/sink pair.

    At most one forward edge exists per ordered vertex pair; inserting the
    same pair again sums the capacities. Self-loops are rejected. Networks
    are built once and treated as immutable while being solved.
    """

    def __init__(self, vertex_count: int, source: int, sink: int) -> None:
        if vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        for name, v in (("source", source), ("sink", sink)):
            if not 0 <= v < vertex_count:
                raise GraphError(f"{name} id {v} out of range [0, {vertex_count})")
        if source == sink:
            raise GraphError("source and sink must differ")
        self.vertex_count = vertex_count
        self.source = source
        self.sink = sink
        self._capacity: dict[tuple[int, int], int] = {}

    def add_edge(self, u: int, v: int, cap: int) -> "FlowNetwork":
        if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
            raise GraphError(f"edge ({u}, {v}) has an out-of-range endpoint")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} rejected")
        if cap < 0:
            raise GraphError(f"negative capacity {cap} on edge ({u}, {v})")
        self._capacity[(u, v)] = self._capacity.get((u, v), 0) + cap
        return self

    def capacity(self, u: int, v: int) -> int:
        return self._capacity.get((u, v), 0)

    def edges(self) -> list[tuple[int, int, int]]:
        """All (u, v, capacity) triples in ascending (u, v) order."""
        return [(u, v, c) for (u, v), c in sorted(self._capacity.items())]

    @property
    def edge_count(self) -> int:
        return len(self._capacity)


class ConflictGraph:
    """Undirected course-conflict graph over vertices 0..num_courses-1.

    No self-loops; duplicate pair inserts are idempotent (generators may
    propose the same pair twice).
    """

    def __init__(self, num_courses: int, conflicts=()) -> None:
        if num_courses < 0:
            raise GraphError("num_courses must be nonnegative")
        self.num_courses = num_courses
        self._adj: list[set[int]] = [set() for _ in range(num_courses)]
        self._num_conflicts = 0
        for u, v in conflicts:
            self.add_conflict(u, v)

    def add_conflict(self, u: int, v: int) -> "ConflictGraph":
        if not (0 <= u < self.num_courses and 0 <= v < self.num_courses):
            raise GraphError(f"conflict ({u}, {v}) has an out-of-range endpoint")
        if u == v:
            raise GraphError(f"self-conflict at vertex {u} rejected")
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._num_conflicts += 1
        return self

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        if self.num_courses == 0:
            return 0
        return max(len(nbrs) for nbrs in self._adj)

    def conflicts(self) -> list[tuple[int, int]]:
        """All conflict pairs as (min, max) tuples in ascending order."""
        return sorted((u, v) for u in range(self.num_courses) for v in self._adj[u] if u < v)

    @property
    def num_conflicts(self) -> int:
        return self._num_conflicts

    def has_conflict(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.num_courses:
            raise GraphError(f"vertex id {v} out of range [0, {self.num_courses})")
