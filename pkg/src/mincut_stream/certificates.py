"""Maximal spanning forest decompositions and sparse connectivity certificates.

A decomposition of order m splits the edge set into forests F_1..F_m where
each F_i is a maximal spanning forest of the graph minus the earlier forests.
The union of the first k forests is a sparse k-certificate: it keeps every
cut of size below k at its exact value and keeps larger cuts at size >= k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import Multigraph


@dataclass
class Msfd:
    """Ordered edge-disjoint maximal spanning forests of one graph snapshot.

    ``forests[i]`` holds the edge records (u, v, eid) of F_{i+1}; trailing
    forests may be empty when a fixed order was requested.
    """

    n: int
    forests: list[list[tuple[int, int, int]]]

    @property
    def order(self) -> int:
        return len(self.forests)

    def prefix_edges(self, k: int) -> list[tuple[int, int, int]]:
        """Edges of F_1..F_k; indices beyond the order contribute nothing."""
        out: list[tuple[int, int, int]] = []
        for forest in self.forests[:k]:
            out.extend(forest)
        return out


class _UnionFind:
    __slots__ = ("parent", "rank")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def build_damsfd(g: Multigraph, order: int | None = None) -> Msfd:
    """Decompose ``g`` into maximal spanning forests via a degree-annotated scan.

    Vertices are visited in maximum-adjacency order; an edge scanned into a
    vertex that already received ``d`` edges lands in forest ``d + 1``.  Edges
    incident to the last-visited vertex therefore occupy distinct forests,
    which pins the certificate min cut to min(k, lambda(G)); an arbitrary
    msfd does not guarantee that clamp.

    With ``order`` unset the decomposition is exhaustive (defaults to the
    edge count); otherwise exactly ``order`` forests are returned and edges
    of higher rank are dropped.  Deterministic: ties broken by vertex id,
    edges processed in record order.
    """
    if order is not None and order < 0:
        raise ValueError("order must be nonnegative")
    n = g.n
    adj: list[list[tuple[int, tuple[int, int, int]]]] = [[] for _ in range(n)]
    for edge in g.edges:
        u, v, _ = edge
        adj[u].append((v, edge))
        adj[v].append((u, edge))
    d = [0] * n
    scanned = [False] * n
    forests: list[list[tuple[int, int, int]]] = []
    for _ in range(n):
        u = -1
        for v in range(n):
            if not scanned[v] and (u == -1 or d[v] > d[u]):
                u = v
        scanned[u] = True
        for v, edge in adj[u]:
            if scanned[v]:
                continue
            rank = d[v]  # edge joins forest d[v] + 1
            if rank == len(forests):
                forests.append([])
            forests[rank].append(edge)
            d[v] += 1
    target = order if order is not None else g.m
    forests = forests[:target]
    while len(forests) < target:
        forests.append([])
    return Msfd(n=g.n, forests=forests)


def certificate(d: Msfd, k: int) -> Multigraph:
    """Sparse k-certificate: the union of the first k forests as a multigraph."""
    if not 1 <= k <= d.order:
        raise ValueError(f"k={k} out of range [1, {d.order}]")
    return Multigraph.from_pairs(d.n, [(u, v) for u, v, _ in d.prefix_edges(k)])


def is_valid_msfd(d: Msfd, g: Multigraph) -> bool:
    """Check the decomposition invariants against its source graph.

    Forests must be edge-disjoint subsets of g, each acyclic, and each
    maximal in the residual graph left by the earlier forests (no residual
    edge may connect two distinct trees of F_i).
    """
    all_eids = {eid for _, _, eid in g.edges}
    seen: set[int] = set()
    for forest in d.forests:
        for _, _, eid in forest:
            if eid in seen or eid not in all_eids:
                return False
            seen.add(eid)
    residual = list(g.edges)
    for forest in d.forests:
        uf = _UnionFind(d.n)
        forest_eids = {eid for _, _, eid in forest}
        for u, v, _ in forest:
            if not uf.union(u, v):
                return False  # cycle inside a forest
        next_residual = []
        for edge in residual:
            if edge[2] in forest_eids:
                continue
            next_residual.append(edge)
            if uf.find(edge[0]) != uf.find(edge[1]):
                return False  # residual edge joining two trees: not maximal
        residual = next_residual
    return True
