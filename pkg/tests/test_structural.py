import random
from collections import Counter

import pytest

from rankalg.models import model_matrix
from rankalg.polynomials import TermOrder
from rankalg.posets import (Poset, antichain, boolean_lattice, chain, grade,
                            random_graded_poset)
from rankalg.structural import (StructuralError, ascending_lift_basis,
                                bipartite_cycle_binomials,
                                bt_circuit_binomials, csiszar_minor_basis,
                                minor_matrix)
from rankalg.toric import binomial_in_toric, same_ideal, toric_markov_basis
from rankalg.groebner import BinomialGB


def _sig(b):
    return frozenset((b.plus, b.minus))


class TestMinorMatrix:
    def test_shape_2_4(self):
        b5 = boolean_lattice(5)
        rows, cols, entries = minor_matrix(b5, "24")
        assert (len(rows), len(cols)) == (2, 6)
        flat = {e for row in entries for e in row}
        assert all(w[:2] in ("24", "42") for w in flat)


class TestCsiszarMinors:
    def test_boolean3_empty(self):
        basis, raw = csiszar_minor_basis(boolean_lattice(3))
        assert (raw, basis) == (0, [])

    def test_boolean4_printed(self):
        basis, raw = csiszar_minor_basis(boolean_lattice(4))
        assert raw == 6
        assert {_sig(b) for b in basis} == {
            frozenset(((("1243", 1), ("2134", 1)), (("1234", 1), ("2143", 1)))),
            frozenset(((("1342", 1), ("3124", 1)), (("1324", 1), ("3142", 1)))),
            frozenset(((("1432", 1), ("4123", 1)), (("1423", 1), ("4132", 1)))),
            frozenset(((("2341", 1), ("3214", 1)), (("2314", 1), ("3241", 1)))),
            frozenset(((("2431", 1), ("4213", 1)), (("2413", 1), ("4231", 1)))),
            frozenset(((("3421", 1), ("4312", 1)), (("3412", 1), ("4321", 1)))),
        }

    @pytest.mark.parametrize("n,raw,distinct", [(5, 300, 270),
                                                (6, 12780, 10980)])
    def test_counts(self, n, raw, distinct):
        basis, got_raw = csiszar_minor_basis(boolean_lattice(n))
        assert (got_raw, len(basis)) == (raw, distinct)

    def test_minors_vanish_under_map(self):
        rng = random.Random(41)
        for _ in range(5):
            q = random_graded_poset(12, rng)
            m = model_matrix("csiszar", q)
            basis, _ = csiszar_minor_basis(q)
            for b in basis:
                assert binomial_in_toric(m, b)

    def test_buchberger_criterion_random_posets(self):
        rng = random.Random(43)
        for _ in range(5):
            q = random_graded_poset(12, rng)
            basis, _ = csiszar_minor_basis(q)
            if not basis:
                continue
            m = model_matrix("csiszar", q)
            labels = m.spec.col_labels
            state = BinomialGB(labels, TermOrder("grevlex", labels))
            idx = {lab: i for i, lab in enumerate(labels)}
            for b in basis:
                state.add_generator(*b.dense(idx))
            before = len(state.G)
            state.complete()
            assert len(state.G) == before


class TestAscendingLifts:
    def test_boolean3_unique_cubic(self):
        lifts = ascending_lift_basis(boolean_lattice(3), degree_cap=3)
        assert len(lifts) == 1
        assert lifts[0].degree == 3

    def test_rank1_four_cycle(self):
        g = grade(Poset(["a", "b", "x", "y"],
                        [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")]))
        lifts = ascending_lift_basis(g, degree_cap=3)
        assert len(lifts) == 1
        assert lifts[0].degree == 2

    def test_lifts_vanish(self):
        b4 = boolean_lattice(4)
        m = model_matrix("ascending", b4)
        for b in ascending_lift_basis(b4, degree_cap=4):
            assert binomial_in_toric(m, b)

    def test_degree_cap_validated(self):
        with pytest.raises(StructuralError):
            ascending_lift_basis(boolean_lattice(3), degree_cap=1)


class TestBipartiteCycles:
    def test_four_cycle(self):
        g = grade(Poset(["a", "b", "x", "y"],
                        [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")]))
        assert len(bipartite_cycle_binomials(g)) == 1

    def test_k23_three_quadrics(self):
        g = grade(Poset(["a", "b", "x", "y", "z"],
                        [(u, v) for u in "ab" for v in "xyz"]))
        bins = bipartite_cycle_binomials(g)
        assert len(bins) == 3
        assert all(b.degree == 2 for b in bins)

    def test_tree_empty(self):
        g = grade(Poset(["a", "b", "x"], [("a", "x"), ("b", "x")]))
        assert bipartite_cycle_binomials(g) == []

    def test_rank_restriction(self):
        with pytest.raises(StructuralError):
            bipartite_cycle_binomials(boolean_lattice(3))

    def test_same_ideal_as_engine(self):
        rng = random.Random(47)
        for _ in range(4):
            lows = ["a%d" % i for i in range(rng.randint(2, 4))]
            highs = ["z%d" % i for i in range(rng.randint(2, 4))]
            rel = [(a, b) for a in lows for b in highs
                   if rng.random() < 0.75]
            for a in lows:
                if not any(x == a for x, _ in rel):
                    rel.append((a, highs[0]))
            for b in highs:
                if not any(y == b for _, y in rel):
                    rel.append((lows[0], b))
            g = grade(Poset(lows + highs, rel))
            m = model_matrix("ascending", g)
            cycles = bipartite_cycle_binomials(g)
            engine = toric_markov_basis(m.spec)
            assert same_ideal(cycles, engine, m.spec.col_labels,
                              m.spec.default_order())


class TestBTCircuits:
    def test_triangle(self):
        bins = bt_circuit_binomials(antichain(3))
        assert len(bins) == 1
        assert _sig(bins[0]) == frozenset((
            (("12", 1), ("23", 1), ("31", 1)),
            (("13", 1), ("21", 1), ("32", 1))))

    def test_k4_counts(self):
        bins = bt_circuit_binomials(antichain(4), 4)
        assert Counter(b.degree for b in bins) == {3: 4, 4: 3}

    def test_chain_empty(self):
        assert bt_circuit_binomials(chain(5)) == []

    def test_cap_validated(self):
        with pytest.raises(StructuralError):
            bt_circuit_binomials(antichain(4), 2)

    def test_length_cap_respected(self):
        bins = bt_circuit_binomials(antichain(4), 3)
        assert Counter(b.degree for b in bins) == {3: 4}
