import random

import pytest

from mincut_stream.inc_forests import (
    EdgeRef,
    KConnectivityForests,
    LinkCutForest,
    NaiveDynamicForest,
    WeightedForestSet,
    WeightedMsf,
)


def w(p, idx=0):
    return (p, idx)


class TestKConnectivityForests:
    def test_first_edge_level_one(self):
        s = KConnectivityForests(4, 2)
        assert s.insert(0, 1) == 1

    def test_parallel_edges_fill_levels_then_discard(self):
        s = KConnectivityForests(2, 1)
        assert s.insert(0, 1) == 1
        assert s.insert(0, 1) == 2
        assert s.insert(0, 1) is None

    def test_c4_levels(self):
        s = KConnectivityForests(4, 2)
        levels = [s.insert(*e) for e in [(0, 1), (1, 2), (2, 3), (3, 0)]]
        assert levels == [1, 1, 1, 2]

    def test_forests_stay_maximal(self):
        rng = random.Random(3)
        for _ in range(30):
            n, k = rng.randint(2, 8), rng.randint(0, 3)
            s = KConnectivityForests(n, k)
            routed: list[tuple[int, int, int | None]] = []
            for _ in range(rng.randint(1, 40)):
                u, v = rng.sample(range(n), 2)
                routed.append((u, v, s.insert(u, v)))
            # any edge discarded or placed beyond level i must not join two
            # trees of forest i
            for i in range(k + 1):
                uf_edges = s.forests[i]
                comp = {v: v for v in range(n)}

                def find(x):
                    while comp[x] != x:
                        comp[x] = comp[comp[x]]
                        x = comp[x]
                    return x

                for a, b in uf_edges:
                    comp[find(a)] = find(b)
                for u, v, level in routed:
                    if level is None or level > i + 1:
                        assert find(u) == find(v)


class TestWeightedMsf:
    def test_link_when_disconnected(self):
        f = WeightedMsf(3)
        f.insert(0, 1, w(0.2, 0))
        ev = f.insert(1, 2, w(0.9, 1))
        assert ev.taken and ev.evicted is None

    def test_replace_path_max(self):
        f = WeightedMsf(3)
        f.insert(0, 1, w(0.2, 0))
        f.insert(1, 2, w(0.8, 1))
        ev = f.insert(0, 2, w(0.5, 2))
        assert ev.taken
        assert ev.evicted == EdgeRef(1, 2, w(0.8, 1))

    def test_reject_heavier_edge(self):
        f = WeightedMsf(3)
        f.insert(0, 1, w(0.2, 0))
        f.insert(1, 2, w(0.8, 1))
        ev = f.insert(0, 2, w(0.95, 2))
        assert not ev.taken
        assert ev.evicted == EdgeRef(0, 2, w(0.95, 2))


class TestForestImplsAgree:
    @pytest.mark.parametrize("seed", range(8))
    def test_random_msf_streams_match(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 12)
        lct = WeightedMsf(n, impl="lct")
        naive = WeightedMsf(n, impl="naive")
        for idx in range(120):
            u, v = rng.sample(range(n), 2)
            weight = (rng.random(), idx)
            a = lct.insert(u, v, weight)
            b = naive.insert(u, v, weight)
            assert a == b
            assert sorted(lct.edges()) == sorted(naive.edges())

    def test_lct_primitives(self):
        rng = random.Random(42)
        n = 10
        lct = LinkCutForest(n)
        naive = NaiveDynamicForest(n)
        edges = {}  # eid -> (lct_id, naive_id, u, v)
        next_key = 0
        for _ in range(400):
            u, v = rng.sample(range(n), 2)
            assert lct.connected(u, v) == naive.connected(u, v)
            if not lct.connected(u, v):
                key = (rng.random(), next_key)
                next_key += 1
                el = lct.link_edge(u, v, key)
                en = naive.link_edge(u, v, key)
                edges[next_key] = (el, en, u, v)
            else:
                km_l, em_l = lct.path_max(u, v)
                km_n, em_n = naive.path_max(u, v)
                assert km_l == km_n
                if rng.random() < 0.5 and edges:
                    # remove the max edge found (same key on both sides)
                    rec = next(r for r in edges.values() if lct.key[r[0]] == km_l)
                    lct.remove_edge(rec[0], rec[2], rec[3])
                    naive.remove_edge(rec[1], rec[2], rec[3])
                    edges = {k: r for k, r in edges.items() if r[0] != rec[0]}


def offline_greedy_decomposition(n: int, edges: list[EdgeRef], k: int) -> list[set[EdgeRef]]:
    """Repeatedly peel the minimum-weight spanning forest off the edge pool."""
    pool = sorted(edges, key=lambda e: e.weight)
    out: list[set[EdgeRef]] = []
    for _ in range(k + 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        taken: set[EdgeRef] = set()
        rest: list[EdgeRef] = []
        for e in pool:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
                taken.add(e)
            else:
                rest.append(e)
        out.append(taken)
        pool = rest
    return out


class TestWeightedForestSet:
    def test_first_edge(self):
        s = WeightedForestSet(4, 2)
        ev = s.insert(0, 1, w(0.4, 0))
        assert ev.taken and ev.evicted is None

    def test_triangle_k0_rejected_edge_never_stored(self):
        s = WeightedForestSet(3, 0)
        s.insert(0, 1, w(0.1, 0))
        s.insert(1, 2, w(0.2, 1))
        ev = s.insert(0, 2, w(0.3, 2))
        assert not ev.taken
        assert ev.evicted is None  # rejected by every forest: discarded
        assert s.total_edges() == 2

    def test_triangle_k1_third_edge_lands_in_second_forest(self):
        s = WeightedForestSet(3, 1)
        s.insert(0, 1, w(0.1, 0))
        s.insert(1, 2, w(0.2, 1))
        ev = s.insert(0, 2, w(0.3, 2))
        assert ev.taken and ev.evicted is None
        assert len(s.forests[1]) == 1

    def test_eviction_cascades_downward(self):
        s = WeightedForestSet(3, 1)
        s.insert(0, 1, w(0.2, 0))
        s.insert(1, 2, w(0.8, 1))
        ev = s.insert(0, 2, w(0.5, 2))
        # 0-2 replaces 1-2 in forest 1; 1-2 drops to forest 2
        assert ev.taken and ev.evicted is None
        assert EdgeRef(1, 2, w(0.8, 1)) in s.forest_edges(1)

    def test_cascade_call_budget(self):
        rng = random.Random(5)
        for k in (0, 1, 3):
            s = WeightedForestSet(6, k)
            for idx in range(100):
                u, v = rng.sample(range(6), 2)
                s.insert(u, v, (rng.random(), idx))
                assert s.last_cascade_length <= k + 1

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_offline_greedy_after_every_insertion(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 10)
        k = rng.choice([0, 1, 2, 3])
        s = WeightedForestSet(n, k)
        for idx in range(40):
            u, v = rng.sample(range(n), 2)
            ev = s.insert(u, v, (rng.random(), idx))
            assert isinstance(ev.taken, bool)
            survivors = s.all_edges()
            expected = offline_greedy_decomposition(n, survivors, k)
            for i in range(k + 1):
                assert set(s.forest_edges(i)) == expected[i]
            assert s.total_edges() <= (k + 1) * (n - 1)
