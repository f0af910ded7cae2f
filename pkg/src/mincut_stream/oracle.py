"""Static ground-truth algorithms: exact global min cut, local connectivity,
and exhaustive min-cut enumeration.

These are the reference implementations used by the test suite and by the
recomputation-based production paths (full rebuilds).  They favour
determinism and simplicity over speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import Multigraph

_EXHAUSTIVE_LIMIT = 24


class TooLargeError(ValueError):
    """Raised when a graph exceeds an oracle's exhaustive-search bound."""


@dataclass
class CutFamily:
    """All minimum cuts of a graph, each side normalized to exclude the last vertex."""

    cuts: list[frozenset[int]]
    value: int

    def __len__(self) -> int:
        return len(self.cuts)

    def as_sets(self) -> set[frozenset[int]]:
        return set(self.cuts)


def static_min_cut(g: Multigraph) -> tuple[int, frozenset[int]]:
    """Exact global min cut via deterministic maximum-adjacency contraction.

    Returns the cut size and one witness side.  Disconnected graphs yield 0
    with a component as witness.
    """
    if g.n < 2:
        raise ValueError("min cut needs at least two vertices")
    comps = g.connected_components()
    if len(comps) > 1:
        return 0, frozenset(comps[0])
    if g.n > 40:
        return _stoer_wagner_numpy(g)
    return _stoer_wagner_lists(g)


def _stoer_wagner_lists(g: Multigraph) -> tuple[int, frozenset[int]]:
    n = g.n
    w = [[0] * n for _ in range(n)]
    for u, v, _ in g.edges:
        w[u][v] += 1
        w[v][u] += 1
    groups: list[list[int]] = [[v] for v in range(n)]
    active = list(range(n))
    best_value, best_side = None, None
    while len(active) > 1:
        start = active[0]
        keys = {v: w[start][v] for v in active if v != start}
        order = [start]
        while keys:
            # deterministic tie-break on vertex id
            sel = min(keys, key=lambda v: (-keys[v], v))
            order.append(sel)
            del keys[sel]
            row = w[sel]
            for v in keys:
                keys[v] += row[v]
        t = order[-1]
        s = order[-2]
        phase_cut = sum(w[t][v] for v in active if v != t)
        if best_value is None or phase_cut < best_value:
            best_value = phase_cut
            best_side = frozenset(groups[t])
        # merge t into s
        for v in active:
            if v != t and v != s:
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        w[s][t] = w[t][s] = 0
        groups[s].extend(groups[t])
        active.remove(t)
    return best_value, best_side


def _stoer_wagner_numpy(g: Multigraph) -> tuple[int, frozenset[int]]:
    n = g.n
    w = np.zeros((n, n), dtype=np.int64)
    for u, v, _ in g.edges:
        w[u, v] += 1
        w[v, u] += 1
    groups: list[list[int]] = [[v] for v in range(n)]
    alive = np.ones(n, dtype=bool)
    best_value, best_side = None, None
    for _ in range(n - 1):
        active = np.flatnonzero(alive)
        start = active[0]
        in_a = np.zeros(n, dtype=bool)
        in_a[start] = True
        keys = w[start].astype(np.int64)
        order = [int(start)]
        for _ in range(len(active) - 1):
            masked = np.where(alive & ~in_a, keys, -1)
            sel = int(np.argmax(masked))
            order.append(sel)
            in_a[sel] = True
            keys = keys + w[sel]
        t, s = order[-1], order[-2]
        phase_cut = int(w[t][alive].sum() - w[t, t])
        if best_value is None or phase_cut < best_value:
            best_value = phase_cut
            best_side = frozenset(groups[t])
        w[s] += w[t]
        w[:, s] += w[:, t]
        w[s, s] = 0
        w[t, :] = 0
        w[:, t] = 0
        groups[s].extend(groups[t])
        alive[t] = False
    return best_value, best_side


def local_connectivity(g: Multigraph, x: int, y: int, cap: int | None = None) -> int:
    """Max number of edge-disjoint x-y paths (unit capacities, Menger).

    With ``cap`` given, stops early and returns ``min(true value, cap)``.
    """
    if x == y:
        raise ValueError("local connectivity needs distinct vertices")
    g._check_vertex(x)
    g._check_vertex(y)
    n = g.n
    # residual capacities with parallel edges collapsed
    res: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v, _ in g.edges:
        res[u][v] = res[u].get(v, 0) + 1
        res[v][u] = res[v].get(u, 0) + 1
    flow = 0
    while cap is None or flow < cap:
        parent = [-1] * n
        parent[x] = x
        queue = [x]
        qi = 0
        while qi < len(queue) and parent[y] == -1:
            u = queue[qi]
            qi += 1
            for v, c in res[u].items():
                if c > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[y] == -1:
            break
        # bottleneck along the path
        bottleneck = None
        v = y
        while v != x:
            u = parent[v]
            c = res[u][v]
            if bottleneck is None or c < bottleneck:
                bottleneck = c
            v = u
        if cap is not None:
            bottleneck = min(bottleneck, cap - flow)
        v = y
        while v != x:
            u = parent[v]
            res[u][v] -= bottleneck
            res[v][u] = res[v].get(u, 0) + bottleneck
            v = u
        flow += bottleneck
    return flow


def enumerate_min_cuts(g: Multigraph) -> CutFamily:
    """Complete family of global minimum cuts by exhaustive bipartition scan.

    Sides are normalized to exclude vertex ``n - 1`` so that each bipartition
    appears exactly once.  Exhaustive, so bounded to n <= 24.
    """
    if g.n < 2:
        raise ValueError("min cuts need at least two vertices")
    if g.n > _EXHAUSTIVE_LIMIT:
        raise TooLargeError(f"exhaustive enumeration limited to n <= {_EXHAUSTIVE_LIMIT}")
    n = g.n
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    values = np.zeros(masks.shape, dtype=np.int32)
    for u, v, _ in g.edges:
        values += (((masks >> u) ^ (masks >> v)) & 1).astype(np.int32)
    lam = int(values.min())
    cuts = [
        frozenset(v for v in range(n - 1) if (int(mask) >> v) & 1)
        for mask in masks[values == lam]
    ]
    return CutFamily(cuts=cuts, value=lam)
