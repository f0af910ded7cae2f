"""Shared generators for randomized tests: seeded graphs and insertion streams."""

import itertools
import random

from mincut_stream import Multigraph


def random_multigraph(rng: random.Random, n: int, m: int) -> Multigraph:
    """Random multigraph: m edges drawn uniformly with repetition allowed."""
    return Multigraph.from_pairs(n, [tuple(rng.sample(range(n), 2)) for _ in range(m)])


def random_simple_stream(rng: random.Random, n: int, max_edges: int) -> list[tuple[int, int]]:
    """Random insertion order over distinct vertex pairs (no parallel edges)."""
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    return pairs[: min(max_edges, len(pairs))]


def random_stream(rng: random.Random, n: int, m: int) -> list[tuple[int, int]]:
    """Random insertion stream, parallel edges allowed."""
    return [tuple(rng.sample(range(n), 2)) for _ in range(m)]


def clique_stream(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, clique_stream(n))


def cycle_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def two_cliques_with_bridge(k: int = 5) -> Multigraph:
    """Two K_k blocks joined by a single bridge edge (vertex 0 to vertex k)."""
    edges = list(itertools.combinations(range(k), 2))
    edges += [(a + k, b + k) for a, b in itertools.combinations(range(k), 2)]
    edges.append((0, k))
    return Multigraph.from_pairs(2 * k, edges)


def naive_cut_value(g: Multigraph, side) -> int:
    """Independent double-loop cut counter used as the oracle for cut_value."""
    members = set(side)
    count = 0
    for u, v, _ in g.edges:
        if u in members and v not in members:
            count += 1
        if v in members and u not in members:
            count += 1
    return count
