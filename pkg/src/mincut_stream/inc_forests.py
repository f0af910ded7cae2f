"""Incremental forest hierarchies.

Two families live here:

* ``KConnectivityForests``: k+1 union-find structures routing each inserted
  edge into the first forest whose trees it joins; edges failing all levels
  are discarded.  Unweighted, insert-only.
* ``WeightedForestSet``: k+1 minimum spanning forests under random edge
  weights with an eviction cascade: an edge displaced from forest i is
  offered to forest i+1.  Path-maximum queries run on a link-cut tree by
  default; a naive walking forest with the same interface backs the
  randomized cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .certificates import _UnionFind

# weights are (p, insertion index) pairs; vertices carry a sentinel below
# every real weight, so path maxima are always edges
_SENTINEL = (-1.0, -1)


class EdgeRef(NamedTuple):
    u: int
    v: int
    weight: tuple[float, int]


@dataclass
class MsfEvent:
    """Outcome of offering one edge to a forest (or to the whole cascade)."""

    taken: bool
    evicted: EdgeRef | None


class KConnectivityForests:
    """k+1 edge-disjoint spanning forests maintained by union-find."""

    def __init__(self, n: int, k: int):
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.n = n
        self.k = k
        self.finds = [_UnionFind(n) for _ in range(k + 1)]
        self.forests: list[list[tuple[int, int]]] = [[] for _ in range(k + 1)]

    def insert(self, u: int, v: int) -> int | None:
        """Route an edge to the first forest where its endpoints are split.

        Returns the 1-based forest level, or None if the edge is discarded
        because its endpoints already touch in every forest.
        """
        for i, uf in enumerate(self.finds):
            if uf.find(u) != uf.find(v):
                uf.union(u, v)
                self.forests[i].append((u, v))
                return i + 1
        return None

    def retained_edges(self) -> int:
        return sum(len(f) for f in self.forests)

    def prefix_pairs(self, levels: int) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for forest in self.forests[:levels]:
            out.extend(forest)
        return out


class LinkCutForest:
    """Link-cut tree over a fixed vertex set with weighted edge nodes.

    Edges are materialized as their own nodes carrying the weight, so path
    maxima fall out of the splay-subtree aggregate.  All operations are
    amortized O(log n).
    """

    def __init__(self, n: int):
        self.n = n
        size = n
        self.left = [-1] * size
        self.right = [-1] * size
        self.par = [-1] * size
        self.flip = [False] * size
        self.key: list[tuple[float, int]] = [_SENTINEL] * size
        self.mx = list(range(size))  # node holding the max key in the splay subtree
        self._free: list[int] = []

    # -- splay machinery ---------------------------------------------------

    def _is_root(self, x: int) -> bool:
        p = self.par[x]
        return p == -1 or (self.left[p] != x and self.right[p] != x)

    def _push(self, x: int) -> None:
        if self.flip[x]:
            self.left[x], self.right[x] = self.right[x], self.left[x]
            for c in (self.left[x], self.right[x]):
                if c != -1:
                    self.flip[c] = not self.flip[c]
            self.flip[x] = False

    def _pull(self, x: int) -> None:
        best = x
        key = self.key
        l, r = self.left[x], self.right[x]
        if l != -1 and key[self.mx[l]] > key[best]:
            best = self.mx[l]
        if r != -1 and key[self.mx[r]] > key[best]:
            best = self.mx[r]
        self.mx[x] = best

    def _rotate(self, x: int) -> None:
        p = self.par[x]
        g = self.par[p]
        p_is_root = self._is_root(p)
        if self.left[p] == x:
            self.left[p] = self.right[x]
            if self.right[x] != -1:
                self.par[self.right[x]] = p
            self.right[x] = p
        else:
            self.right[p] = self.left[x]
            if self.left[x] != -1:
                self.par[self.left[x]] = p
            self.left[x] = p
        self.par[p] = x
        self.par[x] = g
        if not p_is_root:
            if self.left[g] == p:
                self.left[g] = x
            else:
                self.right[g] = x
        self._pull(p)
        self._pull(x)

    def _splay(self, x: int) -> None:
        stack = [x]
        node = x
        while not self._is_root(node):
            node = self.par[node]
            stack.append(node)
        while stack:
            self._push(stack.pop())
        while not self._is_root(x):
            p = self.par[x]
            if not self._is_root(p):
                g = self.par[p]
                if (self.left[g] == p) == (self.left[p] == x):
                    self._rotate(p)
                else:
                    self._rotate(x)
            self._rotate(x)

    def _access(self, x: int) -> None:
        self._splay(x)
        if self.right[x] != -1:
            self.right[x] = -1  # old child keeps x as path-parent
            self._pull(x)
        while self.par[x] != -1:
            w = self.par[x]
            self._splay(w)
            self.right[w] = x
            self._pull(w)
            self._rotate(x)

    # -- represented-tree operations ----------------------------------------

    def make_root(self, x: int) -> None:
        self._access(x)
        self.flip[x] = not self.flip[x]
        self._push(x)

    def find_root(self, x: int) -> int:
        self._access(x)
        while True:
            self._push(x)
            if self.left[x] == -1:
                break
            x = self.left[x]
        self._splay(x)
        return x

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        return self.find_root(u) == self.find_root(v)

    def _alloc(self, key: tuple[float, int]) -> int:
        if self._free:
            node = self._free.pop()
            self.left[node] = self.right[node] = -1
            self.par[node] = -1
            self.flip[node] = False
            self.key[node] = key
            self.mx[node] = node
            return node
        node = len(self.key)
        self.left.append(-1)
        self.right.append(-1)
        self.par.append(-1)
        self.flip.append(False)
        self.key.append(key)
        self.mx.append(node)
        return node

    def link_edge(self, u: int, v: int, key: tuple[float, int]) -> int:
        """Join the trees of u and v with a weighted edge node; returns its id."""
        e = self._alloc(key)
        self.make_root(u)
        self.par[u] = e
        self.make_root(v)
        self.par[v] = e
        return e

    def _cut_adjacent(self, a: int, b: int) -> None:
        # severs the represented edge a-b; they must be tree neighbors
        self.make_root(a)
        self._access(b)
        if self.left[b] != a or self.right[a] != -1 or self.left[a] != -1:
            raise RuntimeError("cut on non-adjacent nodes")
        self.left[b] = -1
        self.par[a] = -1
        self._pull(b)

    def remove_edge(self, e: int, u: int, v: int) -> None:
        self._cut_adjacent(u, e)
        self._cut_adjacent(v, e)
        self._free.append(e)

    def path_max(self, u: int, v: int) -> tuple[tuple[float, int], int]:
        """Maximum edge weight on the tree path u..v and its edge-node id."""
        self.make_root(u)
        self._access(v)
        node = self.mx[v]
        return self.key[node], node


class NaiveDynamicForest:
    """Walking-oracle forest with the LinkCutForest interface; O(n) per op."""

    def __init__(self, n: int):
        self.n = n
        self.adj: list[dict[int, tuple[tuple[float, int], int]]] = [dict() for _ in range(n)]
        self._next = 0

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def link_edge(self, u: int, v: int, key: tuple[float, int]) -> int:
        e = self._next
        self._next += 1
        self.adj[u][v] = (key, e)
        self.adj[v][u] = (key, e)
        return e

    def remove_edge(self, e: int, u: int, v: int) -> None:
        if v not in self.adj[u] or self.adj[u][v][1] != e:
            raise RuntimeError("removing unknown edge")
        del self.adj[u][v]
        del self.adj[v][u]

    def _path(self, u: int, v: int) -> list[int]:
        parent = {u: u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y in self.adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        return path

    def path_max(self, u: int, v: int) -> tuple[tuple[float, int], int]:
        path = self._path(u, v)
        best_key, best_edge = _SENTINEL, -1
        for a, b in zip(path, path[1:]):
            key, e = self.adj[a][b]
            if key > best_key:
                best_key, best_edge = key, e
        return best_key, best_edge


_FOREST_IMPLS = {"lct": LinkCutForest, "naive": NaiveDynamicForest}


class WeightedMsf:
    """One minimum spanning forest under insert-with-replacement."""

    def __init__(self, n: int, impl: str = "lct"):
        self.n = n
        self._forest = _FOREST_IMPLS[impl](n)
        self._records: dict[int, EdgeRef] = {}

    def __len__(self) -> int:
        return len(self._records)

    def edges(self) -> list[EdgeRef]:
        return list(self._records.values())

    def insert(self, u: int, v: int, weight: tuple[float, int]) -> MsfEvent:
        """Offer an edge: link if the endpoints are split, otherwise either
        reject the edge (heavier than the path max) or swap out one maximum
        edge of the cycle it closes."""
        f = self._forest
        if not f.connected(u, v):
            e = f.link_edge(u, v, weight)
            self._records[e] = EdgeRef(u, v, weight)
            return MsfEvent(True, None)
        path_key, path_edge = f.path_max(u, v)
        if weight > path_key:
            return MsfEvent(False, EdgeRef(u, v, weight))
        old = self._records.pop(path_edge)
        f.remove_edge(path_edge, old.u, old.v)
        e = f.link_edge(u, v, weight)
        self._records[e] = EdgeRef(u, v, weight)
        return MsfEvent(True, old)


class WeightedForestSet:
    """k+1 weighted spanning forests with the eviction cascade.

    The union of the forests is the retained edge set; an edge rejected by
    every forest is discarded for good.
    """

    def __init__(self, n: int, k: int, impl: str = "lct"):
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.n = n
        self.k = k
        self.forests = [WeightedMsf(n, impl) for _ in range(k + 1)]
        self.insert_msf_calls = 0
        self.last_cascade_length = 0

    def insert(self, u: int, v: int, weight: tuple[float, int]) -> MsfEvent:
        """Cascade an offered edge through the forests.

        Returns (taken flag for the offered edge, the edge that left the
        union entirely or None).  An edge every forest rejects reports
        (False, None): it was never stored.
        """
        offered = EdgeRef(u, v, weight)
        current: EdgeRef | None = offered
        taken = False
        calls = 0
        for forest in self.forests:
            if current is None:
                break
            event = forest.insert(current.u, current.v, current.weight)
            calls += 1
            if current.weight == offered.weight:
                taken = event.taken
            current = event.evicted
        self.insert_msf_calls += calls
        self.last_cascade_length = calls
        if current is not None and current.weight == offered.weight:
            current = None
        return MsfEvent(taken, current)

    def total_edges(self) -> int:
        return sum(len(f) for f in self.forests)

    def forest_edges(self, i: int) -> list[EdgeRef]:
        return self.forests[i].edges()

    def all_edges(self) -> list[EdgeRef]:
        out: list[EdgeRef] = []
        for f in self.forests:
            out.extend(f.edges())
        return out
