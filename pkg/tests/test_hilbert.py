import random
from itertools import combinations

import pytest

from rankalg.hilbert import (HilbertSeries, MonomialIdeal,
                             face_count_polynomial, hilbert_function_direct,
                             hilbert_series, intersect_monomial_ideals,
                             series_invariants)


XY = ["x", "y"]


class TestHilbertSeries:
    def test_single_quadric_two_lines(self):
        ideal = MonomialIdeal(XY, [(1, 1)])
        hs = hilbert_series(ideal)
        assert hs.numerator == (1, 1)
        assert hs.K == 1

    def test_zero_ideal(self):
        ideal = MonomialIdeal(["a", "b", "c"], [])
        hs = hilbert_series(ideal)
        assert hs.numerator == (1,)
        assert hs.K == 3

    def test_unit_ideal_rejected(self):
        ideal = MonomialIdeal(XY, [(0, 0)])
        assert ideal.is_unit()
        with pytest.raises(ValueError):
            hilbert_series(ideal)

    def test_pure_powers(self):
        # complete intersection x^2, y^3: numerator (1+t)(1+t+t^2)
        ideal = MonomialIdeal(XY, [(2, 0), (0, 3)])
        hs = hilbert_series(ideal)
        assert hs.K == 0
        assert hs.numerator == (1, 2, 2, 1)

    def test_against_direct_enumeration(self):
        rng = random.Random(9)
        labels = ["a", "b", "c", "d"]
        for _ in range(12):
            gens = set()
            for _ in range(rng.randint(1, 4)):
                g = tuple(rng.randint(0, 2) for _ in range(4))
                if any(g):
                    gens.add(g)
            ideal = MonomialIdeal(labels, sorted(gens))
            hs = hilbert_series(ideal)
            # expand numerator/(1-t)^K as a power series and compare with
            # direct standard-monomial counts
            for d in range(6):
                got = hilbert_function_direct(ideal, d)
                expect = sum(hs.numerator[i] * _choose(hs.K - 1 + d - i, d - i)
                             for i in range(min(len(hs.numerator), d + 1)))
                assert got == expect

    def test_degree_equals_leading_difference(self):
        # numerator(1) equals the (K-1)-st finite difference of the Hilbert
        # function at large degree
        ideal = MonomialIdeal(["a", "b", "c"], [(1, 1, 0), (0, 1, 1)])
        hs = hilbert_series(ideal)
        K = hs.K
        top = len(hs.numerator) + K + 2
        values = [hilbert_function_direct(ideal, d)
                  for d in range(top - K, top + 1)]
        for _ in range(K - 1):
            values = [b - a for a, b in zip(values, values[1:])]
        assert values[-1] == hs.degree


def _choose(n, k):
    if k < 0 or n < 0:
        return 1 if (k == 0 and n >= 0) else 0
    from math import comb
    if n < k:
        return 0
    return comb(n, k)


class TestSeriesInvariants:
    def test_inversion4_row(self):
        hs = HilbertSeries((1, 17, 72, 72, 17, 1), 7)
        assert series_invariants(hs) == (7, 180, True)

    def test_free_ring(self):
        hs = HilbertSeries((1,), 5)
        assert series_invariants(hs) == (5, 1, True)

    def test_mixed_example_row(self):
        hs = HilbertSeries((1, 12, 38, 28, 3), 8)
        assert series_invariants(hs) == (8, 82, False)

    def test_canonical_reduction(self):
        # (1 - t)/(1 - t)^3 reduces to 1/(1-t)^2
        hs = HilbertSeries((1, -1), 3)
        assert hs.numerator == (1,)
        assert hs.K == 2


class TestIntersection:
    def test_two_principal(self):
        a = MonomialIdeal(XY, [(1, 0)])
        b = MonomialIdeal(XY, [(0, 1)])
        assert intersect_monomial_ideals(a, b).gens == ((1, 1),)

    def test_intersection_membership_oracle(self):
        rng = random.Random(21)
        labels = ["a", "b", "c"]
        for _ in range(10):
            ga = [tuple(rng.randint(0, 2) for _ in range(3))
                  for _ in range(2)]
            gb = [tuple(rng.randint(0, 2) for _ in range(3))
                  for _ in range(2)]
            ga = [g for g in ga if any(g)] or [(1, 0, 0)]
            gb = [g for g in gb if any(g)] or [(0, 1, 0)]
            a = MonomialIdeal(labels, ga)
            b = MonomialIdeal(labels, gb)
            inter = intersect_monomial_ideals(a, b)
            for mono in _all_monomials(3, 5):
                assert inter.contains_monomial(mono) == (
                    a.contains_monomial(mono) and b.contains_monomial(mono))


def _all_monomials(nvars, maxdeg):
    def rec(i, left):
        if i == nvars - 1:
            for e in range(left + 1):
                yield (e,)
            return
        for e in range(left + 1):
            for rest in rec(i + 1, left - e):
                yield (e,) + rest
    yield from rec(0, maxdeg)


class TestFaceCounts:
    def test_two_disjoint_edges(self):
        labels = ["a", "b", "c", "d"]
        ideal = MonomialIdeal(labels, [(1, 1, 0, 0), (0, 0, 1, 1)])
        f = face_count_polynomial(ideal)
        # independent sets avoiding {a,b} and {c,d} as full edges
        assert f == [1, 4, 4]

    def test_matches_brute_force(self):
        rng = random.Random(13)
        labels = list("abcdef")
        for _ in range(8):
            edges = set()
            while len(edges) < 4:
                i, j = rng.sample(range(6), 2)
                edges.add((min(i, j), max(i, j)))
            gens = [tuple(1 if k in e else 0 for k in range(6))
                    for e in edges]
            ideal = MonomialIdeal(labels, gens)
            f = face_count_polynomial(ideal)
            brute = [0] * 7
            for r in range(7):
                for sub in combinations(range(6), r):
                    s = set(sub)
                    if not any(set(k for k in range(6)
                                   if g[k]) <= s for g in ideal.gens):
                        brute[r] += 1
            while brute and brute[-1] == 0:
                brute.pop()
            assert f == brute

    def test_non_squarefree_rejected(self):
        with pytest.raises(ValueError):
            face_count_polynomial(MonomialIdeal(XY, [(2, 0)]))
