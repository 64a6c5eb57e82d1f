import random

import pytest

from digirth import (
    INFINITE,
    Digraph,
    DigraphFormatError,
    automorphisms,
    canonical_cycle,
    find_cycle,
    girth,
    induced,
    is_acyclic,
    is_acyclic_sink_set,
    parse_digraph,
    short_cycles,
    to_dot,
    write_digraph,
)
from _oracles import (
    brute_force_automorphisms,
    dfs_is_acyclic,
    nx_cycles_below,
    nx_girth,
    random_digraph,
)

DIGON = Digraph(2, [(0, 1), (1, 0)])
TRIANGLE = Digraph(3, [(0, 1), (1, 2), (2, 0)])
TT3 = Digraph(3, [(0, 1), (0, 2), (1, 2)])  # transitive tournament
TT4 = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


class TestConstruction:
    def test_digon(self):
        assert DIGON.vertex_count == 2
        assert DIGON.arc_count == 2

    def test_triangle(self):
        assert sorted(TRIANGLE.arcs) == [(0, 1), (1, 2), (2, 0)]

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Digraph(1, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Digraph(2, [(0, 2)])
        with pytest.raises(ValueError):
            Digraph(2, [(-1, 0)])

    def test_duplicates_merged(self):
        d = Digraph(2, [(0, 1), (0, 1)])
        assert d.arc_count == 1

    def test_adjacency(self):
        assert TRIANGLE.out_neighbors(0) == (1,)
        assert TRIANGLE.in_neighbors(0) == (2,)
        assert TRIANGLE.has_arc(1, 2)
        assert not TRIANGLE.has_arc(2, 1)


class TestAcyclic:
    def test_examples(self):
        assert is_acyclic(TT3)
        assert not is_acyclic(TRIANGLE)
        assert is_acyclic(Digraph(0))
        assert not is_acyclic(DIGON)

    def test_oracle_equivalence(self):
        rng = random.Random(0xACE)
        for _ in range(300):
            d = random_digraph(rng, rng.randint(0, 12), rng.random())
            assert is_acyclic(d) == dfs_is_acyclic(d)

    def test_subdigraph_sink_characterization(self):
        # acyclic iff every nonempty induced subdigraph has an outdegree-0 vertex
        rng = random.Random(0x11A)
        for _ in range(12):
            n = rng.randint(1, 7)
            d = random_digraph(rng, n, rng.uniform(0.1, 0.6))
            every = all(
                any(all(w not in sub for w in d.out_neighbors(v)) for v in sub)
                for m in range(1, 1 << n)
                for sub in [{v for v in range(n) if m >> v & 1}]
            )
            assert every == is_acyclic(d)


class TestGirth:
    def test_examples(self):
        assert girth(DIGON) == 2
        assert girth(TRIANGLE) == 3
        assert girth(TT4) == INFINITE
        assert girth(Digraph(0)) == INFINITE

    def test_infinite_iff_acyclic(self):
        rng = random.Random(0x61)
        for _ in range(150):
            d = random_digraph(rng, rng.randint(0, 9), rng.random())
            assert (girth(d) == INFINITE) == is_acyclic(d)

    def test_matches_shortest_enumerated_cycle(self):
        rng = random.Random(0x62)
        for _ in range(80):
            d = random_digraph(rng, rng.randint(1, 8), rng.uniform(0.05, 0.5))
            assert girth(d) == nx_girth(d)


class TestShortCycles:
    def test_examples(self):
        assert short_cycles(TRIANGLE, 3) == []
        assert short_cycles(TRIANGLE, 4) == [(0, 1, 2)]
        two_digons = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        assert short_cycles(two_digons, 3) == [(0, 1), (1, 2)]

    def test_g_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            short_cycles(TRIANGLE, 1)
        assert short_cycles(TRIANGLE, 2) == []

    def test_oracle_equivalence(self):
        # sparse enough that bounded enumeration stays output-small
        rng = random.Random(0x5C)
        for _ in range(60):
            n = rng.randint(0, 10)
            d = random_digraph(rng, n, rng.uniform(0.5, 2.5) / max(n, 1))
            g = rng.randint(2, 6)
            assert short_cycles(d, g) == nx_cycles_below(d, g)

    def test_canonical_cycle(self):
        assert canonical_cycle((2, 0, 1)) == (0, 1, 2)
        assert canonical_cycle((5, 3)) == (3, 5)


class TestFindCycle:
    def test_found_cycle_is_real(self):
        rng = random.Random(0xF1)
        for _ in range(100):
            d = random_digraph(rng, rng.randint(0, 9), rng.random())
            cyc = find_cycle(d)
            if cyc is None:
                assert is_acyclic(d)
            else:
                assert len(set(cyc)) == len(cyc) >= 2
                assert all(d.has_arc(cyc[i], cyc[(i + 1) % len(cyc)])
                           for i in range(len(cyc)))


class TestInduced:
    def test_triangle_pair(self):
        sub, vs = induced(TRIANGLE, {0, 1})
        assert vs == [0, 1]
        assert sorted(sub.arcs) == [(0, 1)]

    def test_identity(self):
        sub, vs = induced(TRIANGLE, range(3))
        assert sub == TRIANGLE and vs == [0, 1, 2]

    def test_digon_plus_isolated(self):
        d = Digraph(3, [(0, 1), (1, 0)])
        sub, _ = induced(d, {0, 1})
        assert sub == DIGON

    def test_relabelling_preserves_order(self):
        d = Digraph(4, [(3, 1)])
        sub, vs = induced(d, {1, 3})
        assert vs == [1, 3]
        assert sorted(sub.arcs) == [(1, 0)]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced(TRIANGLE, {0, 3})


class TestAutomorphisms:
    def test_triangle_rotations(self):
        assert automorphisms(TRIANGLE) == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    def test_single_arc_identity_only(self):
        assert automorphisms(Digraph(2, [(0, 1)])) == [(0, 1)]

    def test_c42_contains_rotation(self):
        from digirth import gen_ckd
        auts = automorphisms(gen_ckd(4, 2))
        assert (1, 2, 3, 0) in auts

    def test_size_limit(self):
        path11 = Digraph(11, [(i, i + 1) for i in range(10)])
        with pytest.raises(ValueError):
            automorphisms(path11)
        assert automorphisms(path11, limit=11) == [tuple(range(11))]

    def test_oracle_equivalence(self):
        rng = random.Random(0xAA)
        for _ in range(40):
            d = random_digraph(rng, rng.randint(0, 5), rng.random())
            assert sorted(automorphisms(d)) == sorted(brute_force_automorphisms(d))


class TestAcyclicSinkSet:
    def test_examples(self):
        assert is_acyclic_sink_set(TT3, {2})
        assert not is_acyclic_sink_set(TT3, {0})
        assert not is_acyclic_sink_set(DIGON, {0, 1})
        assert is_acyclic_sink_set(TT3, set())

    def test_union_closure(self):
        rng = random.Random(0xC1)
        for _ in range(10):
            n = rng.randint(1, 6)
            d = random_digraph(rng, n, rng.uniform(0.15, 0.6))
            fam = [frozenset(v for v in range(n) if m >> v & 1)
                   for m in range(1 << n)
                   if is_acyclic_sink_set(d, {v for v in range(n) if m >> v & 1})]
            for a in fam:
                for b in fam:
                    assert is_acyclic_sink_set(d, a | b)

    def test_downward_cardinality(self):
        rng = random.Random(0xC3)
        for _ in range(10):
            n = rng.randint(1, 6)
            d = random_digraph(rng, n, rng.uniform(0.15, 0.6))
            sizes = {len(s) for m in range(1 << n)
                     for s in [{v for v in range(n) if m >> v & 1}]
                     if is_acyclic_sink_set(d, s)}
            for j in sizes:
                if j >= 1:
                    assert j - 1 in sizes


class TestSerialization:
    def test_parse_digon(self):
        assert parse_digraph("digraph 2 2\na 0 1\na 1 0\n") == DIGON

    def test_write_triangle(self):
        assert write_digraph(TRIANGLE) == "digraph 3 3\na 0 1\na 1 2\na 2 0\n"

    def test_round_trip(self):
        rng = random.Random(0x10)
        for _ in range(50):
            d = random_digraph(rng, rng.randint(0, 9), rng.random())
            assert parse_digraph(write_digraph(d)) == d

    def test_comments_allowed(self):
        assert parse_digraph("# a digon\ndigraph 2 2\na 0 1\na 1 0\n") == DIGON

    @pytest.mark.parametrize("text", [
        "digraph 2 1\na 0 2\n",      # out of range
        "digraph 2 2\na 0 1\n",      # arc count mismatch
        "digraph 2 1\na 0 1\na 1 0\n",
        "graph 2 1\na 0 1\n",        # malformed header
        "digraph x 1\na 0 1\n",
        "digraph 2 1\na 0 0\n",      # loop
        "digraph 2 2\na 0 1\na 0 1\n",  # duplicate
        "digraph 2 1\nb 0 1\n",
        "",
    ])
    def test_errors(self, text):
        with pytest.raises(DigraphFormatError):
            parse_digraph(text)

    def test_dot_export(self):
        assert to_dot(DIGON) == "digraph {\n  0 -> 1;\n  1 -> 0;\n}\n"
