"""Multigraph storage, contraction, cut evaluation, and the degree heap.

Vertices are dense integers in ``[0, n)`` with ``n`` fixed at construction.
Edges are unweighted, parallel edges are distinct records, self-loops are
rejected (contraction discards them).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable


class SelfLoopError(ValueError):
    """Raised when an edge would connect a vertex to itself."""


class EmptySideError(ValueError):
    """Raised when a cut side or its complement is empty."""


class IncompletePartitionError(ValueError):
    """Raised when a vertex partition misses or duplicates a vertex."""


class ContractionMap:
    """Total map from the vertices of a graph onto the vertices of its contraction."""

    def __init__(self, targets: list[int]):
        self.targets = targets

    def __call__(self, v: int) -> int:
        return self.targets[v]

    def map_edge(self, u: int, v: int) -> tuple[int, int]:
        """Image of an edge; the result may be a self-loop if both ends collapse."""
        return self.targets[u], self.targets[v]

    @classmethod
    def identity(cls, n: int) -> "ContractionMap":
        return cls(list(range(n)))


class Multigraph:
    """Unweighted undirected multigraph over a fixed vertex set.

    Edge ids are assigned sequentially and never reused; parallel edges are
    kept as distinct records.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        self.n = n
        self.edges: list[tuple[int, int, int]] = []
        self.degree = [0] * n
        self._next_eid = 0

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        g = cls(n)
        for u, v in pairs:
            g.add_edge(u, v)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def copy(self) -> "Multigraph":
        g = Multigraph(self.n)
        g.edges = list(self.edges)
        g.degree = list(self.degree)
        g._next_eid = self._next_eid
        return g

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")

    def add_edge(self, u: int, v: int) -> int:
        """Append one edge record and return its id."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop ({u}, {v}) rejected")
        eid = self._next_eid
        self._next_eid += 1
        self.edges.append((u, v, eid))
        self.degree[u] += 1
        self.degree[v] += 1
        return eid

    def cut_value(self, side: Iterable[int]) -> int:
        """Number of edge records crossing the bipartition, with multiplicity."""
        members = set(side)
        for v in members:
            self._check_vertex(v)
        if not members or len(members) == self.n:
            raise EmptySideError("cut side must be nonempty and proper")
        return sum(1 for u, v, _ in self.edges if (u in members) != (v in members))

    def contract(self, parts: Iterable[Iterable[int]]) -> tuple["Multigraph", ContractionMap]:
        """Contract each part to a single vertex.

        Edges between distinct parts survive (parallel records kept);
        intra-part edges are discarded.  Part order fixes the new vertex ids.
        """
        targets = [-1] * self.n
        part_list = [list(p) for p in parts]
        for pid, part in enumerate(part_list):
            for v in part:
                self._check_vertex(v)
                if targets[v] != -1:
                    raise IncompletePartitionError(f"vertex {v} appears in two parts")
                targets[v] = pid
        if any(t == -1 for t in targets):
            missing = [v for v, t in enumerate(targets) if t == -1]
            raise IncompletePartitionError(f"vertices {missing} missing from partition")
        h = Multigraph(len(part_list))
        for u, v, _ in self.edges:
            hu, hv = targets[u], targets[v]
            if hu != hv:
                h.add_edge(hu, hv)
        return h, ContractionMap(targets)

    def adjacency_counts(self) -> list[dict[int, int]]:
        """Per-vertex map neighbor -> multiplicity (parallel edges collapsed)."""
        adj: list[dict[int, int]] = [defaultdict(int) for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u][v] += 1
            adj[v][u] += 1
        return [dict(d) for d in adj]

    def connected_components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, list[int]] = defaultdict(list)
        for v in range(self.n):
            comps[find(v)].append(v)
        return list(comps.values())

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1


class DegreeHeap:
    """Indexed binary min-heap over vertices keyed by current degree.

    Supports O(1) min and O(log n) key increments; keys only grow because
    the graph is insert-only.
    """

    def __init__(self, n: int, degrees: list[int] | None = None):
        if n < 1:
            raise ValueError("heap needs at least one vertex")
        self.n = n
        keys = list(degrees) if degrees is not None else [0] * n
        if len(keys) != n:
            raise ValueError("degree list length mismatch")
        self._keys = keys
        self._heap = list(range(n))
        self._pos = list(range(n))
        for i in range(n // 2 - 1, -1, -1):
            self._sift_down(i)

    def _swap(self, i: int, j: int) -> None:
        h = self._heap
        h[i], h[j] = h[j], h[i]
        self._pos[h[i]] = i
        self._pos[h[j]] = j

    def _sift_down(self, i: int) -> None:
        h, keys, size = self._heap, self._keys, self.n
        while True:
            left, right, smallest = 2 * i + 1, 2 * i + 2, i
            if left < size and keys[h[left]] < keys[h[smallest]]:
                smallest = left
            if right < size and keys[h[right]] < keys[h[smallest]]:
                smallest = right
            if smallest == i:
                return
            self._swap(i, smallest)
            i = smallest

    def min(self) -> tuple[int, int]:
        """A vertex of minimum degree and that degree."""
        v = self._heap[0]
        return v, self._keys[v]

    def key(self, v: int) -> int:
        return self._keys[v]

    def _increment(self, v: int) -> None:
        self._keys[v] += 1
        self._sift_down(self._pos[v])

    def update_endpoints(self, u: int, v: int) -> None:
        """Record one inserted edge (u, v): both keys grow by one."""
        if not 0 <= u < self.n or not 0 <= v < self.n:
            raise ValueError("endpoint out of range")
        self._increment(u)
        self._increment(v)
