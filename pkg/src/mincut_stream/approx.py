"""Randomized (1+eps)-approximate min cut in small space via edge sampling.

Two modes:

* multi-sample: a clamped exact state per sampling level; an edge joins
  level i with probability 2^-i (one geometric draw, nested levels).  A
  query scans for the first level still below its clamp and rescales.
* single-sample: one clamped exact state over the subsample of weight at
  most p, alongside the weighted forest hierarchy over all edges.  When the
  clamped state saturates, p halves and the state is rebuilt from the light
  edges of the forest union.

Seeded generators make every run reproducible; the weight of an edge is the
pair (uniform draw, insertion index) so comparisons are never ties.
"""

from __future__ import annotations

import bisect
import math
import random

from .graph_core import Multigraph
from .inc_forests import WeightedForestSet
from .limited_exact import LimitedMinCut
from .stats import RunStats

CLAMP_NUMERATOR = 48  # k = ceil(48 ln n / eps^2)
THRESHOLD_NUMERATOR = 12  # initial p = 12 ln n / eps^2


class SamplerRng:
    """Deterministic randomness source with a draw counter."""

    def __init__(self, seed: int):
        self.seed = seed
        self.position = 0
        self._rng = random.Random(seed)

    def uniform(self) -> float:
        self.position += 1
        return self._rng.random()

    def level(self, max_level: int) -> int:
        """Geometric draw: reaches level i with probability 2^-i."""
        level = 0
        while level < max_level and self.uniform() < 0.5:
            level += 1
        return level


def clamp_bound(n: int, eps: float) -> int:
    return math.ceil(CLAMP_NUMERATOR * math.log(n) / (eps * eps))


def initial_threshold(n: int, eps: float) -> float:
    return THRESHOLD_NUMERATOR * math.log(n) / (eps * eps)


def _scale(value: int, denom: float) -> float:
    if value == 0:
        return 0.0
    if denom == 0.0:
        return math.inf
    return value / denom


class MultiSampleMinCut:
    """Nested sampled subgraphs, each under a clamped exact state."""

    def __init__(self, n: int, eps: float, seed: int, override_k: int | None = None):
        if not 0 < eps <= 1:
            raise ValueError("eps must lie in (0, 1]")
        if n < 2:
            raise ValueError("need at least two vertices")
        self.n = n
        self.eps = eps
        self.rng = SamplerRng(seed)
        self.k = override_k if override_k is not None else clamp_bound(n, eps)
        self.level_count = int(math.floor(math.log2(n))) + 1
        self.levels = [LimitedMinCut(n, self.k) for _ in range(self.level_count)]
        self.stats = RunStats()

    def insert(self, u: int, v: int) -> None:
        depth = self.rng.level(self.level_count - 1)
        for i in range(depth + 1):
            self.levels[i].insert(u, v)
        self.stats.note_stored_edges(sum(s.retained_edges() for s in self.levels))

    def query(self) -> float:
        for j, state in enumerate(self.levels):
            value = state.query()
            if value < self.k:
                return _scale((1 << j) * value, 1.0 - self.eps)
        self.stats.approx_fallbacks += 1
        top = self.level_count - 1
        return _scale((1 << top) * self.levels[top].query(), 1.0 - self.eps)


class SingleSampleMinCut:
    """One sampled subgraph at an adaptive threshold plus the forest union."""

    def __init__(self, n: int, eps: float, seed: int,
                 override_k: int | None = None, override_p: float | None = None):
        if not 0 < eps <= 1:
            raise ValueError("eps must lie in (0, 1]")
        if n < 2:
            raise ValueError("need at least two vertices")
        self.n = n
        self.eps = eps
        self.rng = SamplerRng(seed)
        self.k = override_k if override_k is not None else clamp_bound(n, eps)
        self.p = override_p if override_p is not None else initial_threshold(n, eps)
        self.fw = WeightedForestSet(n, self.k)
        self.lim = LimitedMinCut(n, self.k)
        self.findex: list[tuple[tuple[float, int], int, int]] = []  # sorted by weight
        self.stats = RunStats()
        # rebuild-composition logs: the subsample handed over at the last
        # rebuild and everything offered since, for the structural invariant
        self.h_base: list[tuple[int, int]] = []
        self.inserted_since: list[tuple[int, int, float]] = []
        self.lim_received: list[tuple[int, int]] = []
        self.last_rebuild_survivors: list | None = None

    def insert(self, u: int, v: int) -> None:
        p_e = self.rng.uniform()
        weight = (p_e, self.rng.position)
        if p_e <= self.p:
            self.lim.insert(u, v)
            self.lim_received.append((u, v))
        event = self.fw.insert(u, v, weight)
        if event.taken:
            bisect.insort(self.findex, (weight, u, v))
            if event.evicted is not None:
                gone = event.evicted
                idx = bisect.bisect_left(self.findex, (gone.weight, gone.u, gone.v))
                del self.findex[idx]
        self.inserted_since.append((u, v, p_e))
        self.stats.note_stored_edges(self.fw.total_edges() + self.lim.retained_edges())
        while self.lim.query() >= self.k:
            self._rebuild()

    def _rebuild(self) -> None:
        self.stats.rebuild_steps += 1
        self.p /= 2
        pairs = []
        for weight, u, v in self.findex:
            if weight[0] > self.p:
                break
            pairs.append((u, v))
        self.last_rebuild_survivors = [
            [ref for ref in self.fw.forest_edges(i) if ref.weight[0] <= self.p]
            for i in range(self.k + 1)
        ]
        self.lim = LimitedMinCut(self.n, self.k)
        for u, v in pairs:
            self.lim.insert(u, v)
        self.h_base = list(pairs)
        self.inserted_since = []
        self.lim_received = list(pairs)

    def query(self) -> float:
        return self.lim.query() / min(1.0, self.p)

    def expected_h_pairs(self) -> list[tuple[int, int]]:
        """The composition invariant: base subsample plus light new edges."""
        out = list(self.h_base)
        out.extend((u, v) for u, v, p_e in self.inserted_since if p_e <= self.p)
        return out
