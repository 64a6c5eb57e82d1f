import random
from fractions import Fraction
from math import gcd

import pytest

from digirth import (
    ChiCapError,
    CircularColouring,
    Digraph,
    automorphisms,
    chi_c,
    check_acyclic_hom,
    clockwise_distance,
    find_cycle,
    gen_ckd,
    girth,
    has_tight_cycle,
    is_acyclic,
    is_core,
    kd_colouring_to_circular,
    quotient_hom,
    tight_arcs,
    validate_circular,
)
from _oracles import random_digraph


class TestGenCkd:
    def test_examples(self):
        assert sorted(gen_ckd(2, 1).arcs) == [(0, 1), (1, 0)]
        assert sorted(gen_ckd(3, 2).arcs) == [(0, 2), (1, 0), (2, 1)]
        single = gen_ckd(1, 1)
        assert single.n == 1 and single.arc_count == 0

    def test_arc_count(self):
        for k in range(1, 8):
            for d in range(1, k + 1):
                assert gen_ckd(k, d).arc_count == k * (k - d)

    def test_param_validation(self):
        with pytest.raises(ValueError):
            gen_ckd(2, 3)
        with pytest.raises(ValueError):
            gen_ckd(2, 0)

    def test_rotation_is_automorphism(self):
        for k in range(1, 7):
            for d in range(1, k + 1):
                rot = tuple((i + 1) % k for i in range(k))
                assert rot in automorphisms(gen_ckd(k, d))

    def test_c52_girth_two(self):
        assert girth(gen_ckd(5, 2)) == 2


class TestCoreCriterion:
    def test_coprimality(self):
        # acceptance repeats this up to k = 7; keep the quick range here
        for k in range(1, 6):
            for d in range(1, k + 1):
                assert is_core(gen_ckd(k, d)) == (gcd(k, d) == 1), (k, d)


class TestCircularColouring:
    def test_c32_identity(self):
        c32 = gen_ckd(3, 2)
        col = kd_colouring_to_circular(c32, (0, 1, 2), 3, 2)
        assert col.q == Fraction(3, 2)
        assert col.positions == (0, Fraction(1, 2), 1)

    def test_digon_identity(self):
        col = kd_colouring_to_circular(gen_ckd(2, 1), (0, 1), 2, 1)
        assert col.q == 2 and col.positions == (0, 1)

    def test_constant_zero(self):
        d = Digraph(3, [(0, 1), (1, 2)])  # acyclic path
        col = kd_colouring_to_circular(d, (0, 0, 0), 1, 1)
        assert col.positions == (0, 0, 0)

    def test_invalid_colouring_rejected(self):
        with pytest.raises(ValueError):
            kd_colouring_to_circular(gen_ckd(2, 1), (0, 0), 2, 1)

    def test_validate_rejects_bad_positions(self):
        d = Digraph(2, [(0, 1)])
        with pytest.raises(ValueError):
            validate_circular(d, CircularColouring(Fraction(2), (0, Fraction(1, 2))))
        with pytest.raises(ValueError):
            validate_circular(d, CircularColouring(Fraction(2), (0, Fraction(5, 2))))


class TestTightness:
    def test_c32_all_tight(self):
        c32 = gen_ckd(3, 2)
        col = kd_colouring_to_circular(c32, (0, 1, 2), 3, 2)
        assert tight_arcs(c32, col) == [(0, 2), (1, 0), (2, 1)]
        assert has_tight_cycle(c32, col) == (0, 2, 1)

    def test_digon_tight(self):
        digon = gen_ckd(2, 1)
        col = kd_colouring_to_circular(digon, (0, 1), 2, 1)
        assert tight_arcs(digon, col) == [(0, 1), (1, 0)]
        assert has_tight_cycle(digon, col) == (0, 1)

    def test_no_tight_arcs(self):
        d = Digraph(2, [(0, 1)])
        col = CircularColouring(Fraction(3), (0, Fraction(5, 4)))
        assert tight_arcs(d, col) == []
        assert has_tight_cycle(d, col) is None

    def test_clockwise_distance(self):
        q = Fraction(3, 2)
        assert clockwise_distance(Fraction(1, 2), 0, q) == 1
        assert clockwise_distance(0, Fraction(1, 2), q) == Fraction(1, 2)
        assert clockwise_distance(1, 1, q) == 0


class TestChiC:
    def test_acyclic_is_one(self):
        tt = Digraph(3, [(0, 1), (0, 2), (1, 2)])
        res = chi_c(tt)
        assert (res.value, res.k, res.d) == (1, 1, 1)

    def test_paper_family_values(self):
        # acceptance extends to k <= 6
        for k in range(1, 6):
            for d in range(1, k + 1):
                res = chi_c(gen_ckd(k, d))
                assert res.value == Fraction(k, d), (k, d)
                r = gcd(k, d)
                assert (res.k, res.d) == (k // r, d // r)

    def test_witness_colouring_is_valid(self):
        rng = random.Random(0xCC)
        for _ in range(15):
            dg = random_digraph(rng, rng.randint(1, 5), rng.random())
            res = chi_c(dg)
            assert check_acyclic_hom(dg, gen_ckd(res.k, res.d), res.colouring).valid

    def test_monotonicity(self):
        # colourable at k/d stays colourable at every larger candidate value
        from digirth import is_colourable
        rng = random.Random(0x3C)
        for _ in range(6):
            dg = random_digraph(rng, rng.randint(1, 4), rng.random())
            res = chi_c(dg)
            for k in range(1, 6):
                for d in range(1, k + 1):
                    if Fraction(k, d) >= res.value:
                        assert is_colourable(dg, gen_ckd(k, d)), (k, d)

    def test_cap_error(self):
        with pytest.raises(ChiCapError):
            chi_c(gen_ckd(3, 1), cap=2, hard_cap=2)

    def test_cap_expansion_recovers(self):
        res = chi_c(gen_ckd(3, 1), cap=2, hard_cap=8)
        assert res.value == 3

    def test_tight_cycle_at_optimum(self):
        # every chi_c-optimal colouring induces a circular colouring with a
        # tight cycle, and that cycle has an arc at distance exactly one
        rng = random.Random(0x7C)
        done = 0
        while done < 8:
            dg = random_digraph(rng, rng.randint(2, 5), rng.uniform(0.2, 0.7))
            if is_acyclic(dg):
                continue
            res = chi_c(dg)
            col = kd_colouring_to_circular(dg, res.colouring, res.k, res.d)
            cyc = has_tight_cycle(dg, col)
            assert cyc is not None
            dists = [clockwise_distance(col.positions[cyc[i]],
                                        col.positions[cyc[(i + 1) % len(cyc)]],
                                        col.q)
                     for i in range(len(cyc))]
            assert 1 in dists
            done += 1


class TestQuotient:
    def test_examples(self):
        assert quotient_hom(2, 1, 2) == (0, 0, 1, 1)
        assert quotient_hom(3, 2, 1) == (0, 1, 2)
        assert quotient_hom(3, 2, 2) == (0, 0, 1, 1, 2, 2)

    def test_validated_range(self):
        for k in range(1, 5):
            for d in range(1, k + 1):
                for dprime in range(1, 4):
                    f = quotient_hom(k, d, dprime)
                    assert len(f) == k * dprime

    def test_param_validation(self):
        with pytest.raises(ValueError):
            quotient_hom(2, 3, 1)
        with pytest.raises(ValueError):
            quotient_hom(2, 1, 0)
