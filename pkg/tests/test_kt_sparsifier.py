import random

import pytest

from mincut_stream import Multigraph, local_connectivity, static_min_cut
from mincut_stream.kt_sparsifier import Sparsification, sparsify

from helpers import cycle_graph, random_multigraph, two_cliques_with_bridge


class TestSparsify:
    def test_identity(self):
        g = cycle_graph(5)
        s = sparsify(g, 2, strategy="identity")
        assert s.n_h == 5 and s.m_h == 5
        assert [s.mapping(v) for v in range(5)] == list(range(5))

    def test_two_cliques_collapse(self):
        g = two_cliques_with_bridge(5)
        s = sparsify(g, 1, strategy="contract")
        # intra-clique pairs are 4-connected, above (3/2)*1
        assert s.n_h == 2 and s.m_h == 1

    def test_c8_no_contraction(self):
        g = cycle_graph(8)
        s = sparsify(g, 2, strategy="contract")
        # all local connectivities are 2, never above 3
        assert s.n_h == 8

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            sparsify(cycle_graph(3), 2, strategy="bogus")

    def test_h_is_contraction_with_correct_mapping(self):
        rng = random.Random(19)
        for _ in range(40):
            n = rng.randint(2, 9)
            g = random_multigraph(rng, n, rng.randint(1, 20))
            if not g.is_connected():
                continue
            lam = static_min_cut(g)[0]
            s = sparsify(g, lam, strategy="contract")
            # edge multiset of H equals image of G's inter-part edges
            expected = sorted(
                (min(s.mapping(u), s.mapping(v)), max(s.mapping(u), s.mapping(v)))
                for u, v, _ in g.edges
                if s.mapping(u) != s.mapping(v)
            )
            got = sorted((min(a, b), max(a, b)) for a, b, _ in s.graph.edges)
            assert got == expected

    def test_cut_preservation_exhaustive(self):
        # every non-trivial cut of value <= (3/2)lam survives the contraction
        rng = random.Random(23)
        done = 0
        while done < 60:
            n = rng.randint(3, 10)
            g = random_multigraph(rng, n, rng.randint(2, 26))
            if not g.is_connected():
                continue
            done += 1
            lam = static_min_cut(g)[0]
            s = sparsify(g, lam, strategy="contract")
            for mask in range(1, 1 << (n - 1)):
                side = {v for v in range(n) if (mask >> v) & 1}
                if len(side) < 2 or n - len(side) < 2:
                    continue
                value = g.cut_value(side)
                if 2 * value <= 3 * lam:
                    images = {s.mapping(v) for v in side}
                    complements = {s.mapping(v) for v in range(n) if v not in side}
                    assert not images & complements, "contracted part straddles a preserved cut"
                    assert s.graph.cut_value(images) == value

    def test_min_over_preserved_cuts_identical(self):
        rng = random.Random(29)
        done = 0
        while done < 40:
            n = rng.randint(3, 9)
            g = random_multigraph(rng, n, rng.randint(2, 22))
            if not g.is_connected():
                continue
            done += 1
            lam = static_min_cut(g)[0]
            s = sparsify(g, lam, strategy="contract")
            if s.n_h < 2:
                # every pair above threshold: no cut of value <= (3/2)lam exists,
                # impossible since the min cut itself qualifies
                pytest.fail("sparsifier contracted the whole graph")
            assert static_min_cut(s.graph)[0] == lam

    def test_contraction_classes_match_oracle_relation(self):
        rng = random.Random(31)
        done = 0
        while done < 30:
            n = rng.randint(3, 8)
            g = random_multigraph(rng, n, rng.randint(2, 18))
            if not g.is_connected():
                continue
            done += 1
            lam = static_min_cut(g)[0]
            s = sparsify(g, lam, strategy="contract")
            for x in range(n):
                for y in range(x + 1, n):
                    above = 2 * local_connectivity(g, x, y) > 3 * lam
                    if above:
                        assert s.mapping(x) == s.mapping(y)
