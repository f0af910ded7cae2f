"""Exact min-cut maintenance clamped at a budget k, in O(kn) space.

Edges route through k+1 union-find forests; the retained union is a sparse
(k+1)-certificate of everything ever inserted.  A tracker over the first
lambda+1 forests watches the current minimum cuts; when an insertion kills
the last one, lambda steps up and the tracker is rebuilt from the wider
forest prefix.  At lambda = k the tracker freezes: queries clamp and edges
keep routing so the certificate stays intact.
"""

from __future__ import annotations

from .cactus import MinCutTracker, min_cut_family
from .graph_core import Multigraph
from .inc_forests import KConnectivityForests
from .stats import RunStats


class LimitedMinCut:
    """Maintains min(lambda(G), k) under edge insertions; O(1) query."""

    def __init__(self, n: int, k: int):
        if n < 2:
            raise ValueError("need at least two vertices")
        if k < 1:
            raise ValueError("k must be at least 1")
        self.n = n
        self.k = k
        self.lam = 0
        self.kforests = KConnectivityForests(n, k)
        self.tracker = MinCutTracker.degenerate(Multigraph(n))
        self.stats = RunStats()

    @classmethod
    def from_graph(cls, g: Multigraph, k: int) -> "LimitedMinCut":
        state = cls(g.n, k)
        for u, v, _ in g.edges:
            state.insert(u, v)
        return state

    def query(self) -> int:
        return self.lam

    def retained_edges(self) -> int:
        return self.kforests.retained_edges()

    def retained_pairs(self) -> list[tuple[int, int]]:
        return self.kforests.prefix_pairs(self.k + 1)

    def insert(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("self-loop rejected")
        self.stats.note_insertion()
        level = self.kforests.insert(u, v)
        self.stats.note_stored_edges(self.kforests.retained_edges())
        if level is None:
            return  # discarded: endpoints beyond (k+1)-connected already
        if self.lam >= self.k:
            return  # saturated: certificate keeps growing, value is pinned
        if level > self.lam + 1:
            # the edge sits outside the tracked certificate; its endpoints
            # are already more than lambda-connected, so no live cut moves
            return
        if not self.tracker.insert(u, v):
            return
        self.lam += 1
        self.stats.close_phase()
        self.stats.lambda_h_history.append((0, self.lam))
        if self.lam >= self.k:
            return  # clamp reached: freeze tracking
        self._rebuild_tracker()

    def _rebuild_tracker(self) -> None:
        self.stats.partial_rebuilds += 1
        cert_pairs = self.kforests.prefix_pairs(self.lam + 1)
        cert = Multigraph.from_pairs(self.n, cert_pairs)
        hint = self.kforests.forests[self.lam] if self.lam <= self.k else []
        self.tracker = MinCutTracker.from_family(
            min_cut_family(cert, lam_hint=self.lam, contract_pairs=list(hint))
        )
