import random
from fractions import Fraction

import pytest

from rankalg.linalg import RationalMatrix, rational_rank
from rankalg.models import (ModelError, birkhoff_dimension, csiszar_mle,
                            evaluate_distribution, h_description,
                            mallows_specialize, model_inclusion,
                            model_matrix, polytope_dimension,
                            sufficient_stats, verify_h_description)
from rankalg.posets import (Poset, antichain, boolean_lattice, chain, grade,
                            linear_extensions, mixed_poset,
                            random_constraint_poset, random_graded_poset)


class TestModelMatrix:
    def test_ascending3_matches_printed_matrix(self):
        m = model_matrix("ascending", boolean_lattice(3))
        # printed As_3 plus the redundant all-ones row for the empty set
        rows = dict(zip(m.spec.row_labels, m.spec.matrix))
        assert rows["c_0"] == (1, 1, 1, 1, 1, 1)
        assert rows["c_123"] == (1, 1, 1, 1, 1, 1)
        assert rows["c_1"] == (1, 1, 0, 0, 0, 0)
        assert rows["c_2"] == (0, 0, 1, 1, 0, 0)
        assert rows["c_3"] == (0, 0, 0, 0, 1, 1)
        assert rows["c_12"] == (1, 0, 1, 0, 0, 0)
        assert rows["c_13"] == (0, 1, 0, 0, 1, 0)
        assert rows["c_23"] == (0, 0, 0, 1, 0, 1)
        assert m.spec.S == 4

    def test_inversion_identity_column(self):
        m = model_matrix("inversion", antichain(3))
        j = m.spec.col_labels.index("123")
        col = dict(zip(m.spec.row_labels, m.spec.column(j)))
        assert col == {"u_12": 1, "u_13": 1, "u_23": 1,
                       "v_12": 0, "v_13": 0, "v_23": 0}

    def test_birkhoff_chain_single_column(self):
        m = model_matrix("birkhoff", chain(4))
        assert len(m.spec.col_labels) == 1

    def test_column_sums(self):
        assert model_matrix("csiszar", boolean_lattice(3)).spec.S == 3
        assert model_matrix("birkhoff", antichain(4)).spec.S == 4
        assert model_matrix("inversion", antichain(4)).spec.S == 6
        assert model_matrix("alt_inversion", mixed_poset(3, 2)).spec.S == 10

    def test_lattice_kinds_need_constraint_poset(self):
        with pytest.raises(ModelError):
            model_matrix("birkhoff", boolean_lattice(3))

    def test_unknown_kind(self):
        with pytest.raises(ModelError):
            model_matrix("bogus", antichain(3))


class TestSufficientStats:
    def test_single_chain_indicator(self):
        m = model_matrix("ascending", boolean_lattice(3))
        stats = sufficient_stats(m, {"123": 1})
        on = {k for k, v in stats.values.items() if v}
        assert on == {"c_0", "c_1", "c_12", "c_123"}

    def test_zero_counts(self):
        m = model_matrix("ascending", boolean_lattice(3))
        stats = sufficient_stats(m, {})
        assert stats.N == 0
        assert all(v == 0 for v in stats.values.values())

    def test_csiszar_counts(self):
        m = model_matrix("csiszar", boolean_lattice(3))
        stats = sufficient_stats(m, {"123": 2, "321": 1})
        expect = {"d_0<1": 2, "d_0<3": 1, "d_1<12": 2, "d_3<23": 1,
                  "d_12<123": 2, "d_23<123": 1}
        for k, v in expect.items():
            assert stats.values[k] == v
        assert sum(stats.values.values()) == m.spec.S * 3

    def test_unknown_label(self):
        m = model_matrix("ascending", boolean_lattice(3))
        with pytest.raises(ModelError):
            sufficient_stats(m, {"999": 1})

    def test_coordinate_sum_random(self):
        rng = random.Random(1)
        for kind, poset in (("ascending", boolean_lattice(3)),
                            ("csiszar", boolean_lattice(4)),
                            ("inversion", antichain(4)),
                            ("birkhoff", antichain(3))):
            m = model_matrix(kind, poset)
            for _ in range(25):
                counts = {lab: rng.randint(0, 5)
                          for lab in m.spec.col_labels}
                stats = sufficient_stats(m, counts)
                assert sum(stats.values.values()) == m.spec.S * stats.N


class TestDimensions:
    def test_ascending_closed_form(self):
        for n in (2, 3, 4, 5):
            m = model_matrix("ascending", boolean_lattice(n))
            assert polytope_dimension(m) == 2 ** n - n - 1

    def test_csiszar_formula_random(self):
        rng = random.Random(23)
        for _ in range(25):
            q = random_graded_poset(14, rng)
            m = model_matrix("csiszar", q)
            formula = (len(q.poset.covers) - len(q.elements)
                       + len(q.levels[-1]) + len(q.levels[0]) - 1)
            assert polytope_dimension(m) == formula

    def test_birkhoff_formula_spec_example(self):
        p = Poset(["1", "2", "3"], [("1", "2")])
        Z, C, dim = birkhoff_dimension(p)
        assert Z == frozenset({(1, 2), (3, 1)})
        assert C == frozenset({(1, 3), (2, 3), (3, 3), (2, 1), (3, 2)})
        assert dim == 2

    def test_birkhoff_formula_never_silently_wrong(self):
        # The published formula measures the x_Z=0 face of the Birkhoff
        # polytope, which can strictly contain the model polytope; the op
        # must either return the rank-based dimension or raise, never
        # return a wrong value.
        rng = random.Random(29)
        agreements = 0
        detected = 0
        for _ in range(50):
            p = random_constraint_poset(rng.randint(2, 6), rng)
            oracle = polytope_dimension(model_matrix("birkhoff", p))
            try:
                _, _, dim = birkhoff_dimension(p)
                assert dim == oracle
                agreements += 1
            except ModelError:
                detected += 1
        assert agreements + detected == 50
        assert agreements >= 40  # the formula holds on most posets

    def test_birkhoff_formula_counterexample_detected(self):
        # the two-cover poset: 1432 avoids Z without being an extension
        p = Poset(["1", "2", "3", "4"], [("1", "2"), ("3", "4")])
        with pytest.raises(ModelError, match="formula mismatch"):
            birkhoff_dimension(p)


class TestInclusions:
    @pytest.mark.parametrize("n", [3, 4])
    def test_theorem_inclusions(self, n):
        b = boolean_lattice(n)
        a = antichain(n)
        mats = {k: model_matrix(k, b if k in ("ascending", "csiszar") else a)
                for k in ("ascending", "csiszar", "birkhoff", "inversion")}
        assert model_inclusion(mats["birkhoff"], mats["ascending"])
        assert model_inclusion(mats["ascending"], mats["csiszar"])
        assert model_inclusion(mats["inversion"], mats["csiszar"])

    def test_non_inclusions_n4(self):
        b = boolean_lattice(4)
        a = antichain(4)
        mb = model_matrix("birkhoff", a)
        mi = model_matrix("inversion", a)
        ma = model_matrix("ascending", b)
        assert not model_inclusion(mb, mi)
        assert not model_inclusion(ma, mi)
        assert not model_inclusion(mi, ma)

    def test_transitive_reflexive(self):
        b = boolean_lattice(3)
        a = antichain(3)
        mats = [model_matrix(k, b if k in ("ascending", "csiszar") else a)
                for k in ("birkhoff", "ascending", "csiszar")]
        for m in mats:
            assert model_inclusion(m, m)
        if model_inclusion(mats[0], mats[1]) and \
                model_inclusion(mats[1], mats[2]):
            assert model_inclusion(mats[0], mats[2])


class TestHDescription:
    def test_csiszar3_shape(self):
        b3 = boolean_lattice(3)
        h = h_description("csiszar", b3)
        assert len(h.inequalities) == 12
        assert len(h.equalities) == 7
        rep = verify_h_description(model_matrix("csiszar", b3), h)
        assert rep.columns_satisfy and rep.zero_one_match
        assert rep.dimension_match and rep.vertex_match
        assert rep.dimension == 5

    def test_ascending3(self):
        b3 = boolean_lattice(3)
        h = h_description("ascending", b3)
        assert len(h.equalities) == 4
        rep = verify_h_description(model_matrix("ascending", b3), h)
        assert rep.columns_satisfy and rep.zero_one_match
        assert rep.dimension_match and rep.vertex_match

    def test_csiszar4_partial(self):
        b4 = boolean_lattice(4)
        rep = verify_h_description(model_matrix("csiszar", b4),
                                   h_description("csiszar", b4))
        assert rep.columns_satisfy and rep.dimension_match
        assert rep.zero_one_match is None and rep.vertex_match is None
        assert rep.partial and rep.dimension == 17

    def test_rank1_bipartite_single_equality(self):
        g = grade(Poset(["a", "b", "x", "y"],
                        [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")]))
        h = h_description("csiszar", g)
        assert len(h.equalities) == 1

    def test_rank_zero_rejected(self):
        with pytest.raises(ModelError):
            h_description("csiszar", grade(antichain(3)))


class TestEvaluateDistribution:
    def test_uniform_ascending(self):
        m = model_matrix("ascending", boolean_lattice(3))
        dist = evaluate_distribution(
            m, {lab: 1 for lab in m.spec.row_labels})
        assert set(dist.values()) == {Fraction(1, 6)}

    def test_derangement_uniform(self):
        m = model_matrix("birkhoff", antichain(4))
        params = {lab: (0 if lab[2] == lab[3] else 1)
                  for lab in m.spec.row_labels}
        dist = evaluate_distribution(m, params)
        support = {w for w, v in dist.items() if v}
        assert len(support) == 9
        assert all(w[i] != "1234"[i] for w in support for i in range(4))
        assert dist["1243"] * dist["4321"] - dist["2143"] * dist["4312"] \
            == Fraction(-1, 81)

    def test_all_zero_rejected(self):
        m = model_matrix("ascending", boolean_lattice(3))
        with pytest.raises(ModelError, match="all-zero"):
            evaluate_distribution(m, {lab: 0 for lab in m.spec.row_labels})

    def test_negative_rejected(self):
        m = model_matrix("ascending", boolean_lattice(3))
        params = {lab: 1 for lab in m.spec.row_labels}
        params["c_0"] = -1
        with pytest.raises(ModelError):
            evaluate_distribution(m, params)


class TestMallows:
    def test_uniform_at_one(self):
        for n in (2, 3, 4):
            dist = mallows_specialize(n, 1)
            assert set(dist.values()) == {Fraction(1, len(dist))}

    def test_n3_half(self):
        dist = mallows_specialize(3, Fraction(1, 2))
        assert dist["123"] == Fraction(8, 21)

    def test_brute_force_agreement(self):
        from itertools import permutations
        q = Fraction(2, 3)
        n = 4
        dist = mallows_specialize(n, q)
        z = Fraction(0)
        raw = {}
        for wtuple in permutations("1234"):
            w = "".join(wtuple)
            inv = sum(1 for i in range(4) for j in range(i + 1, 4)
                      if w[i] > w[j])
            raw[w] = q ** inv
            z += raw[w]
        for w, v in raw.items():
            assert dist[w] == v / z

    def test_nonpositive_rejected(self):
        with pytest.raises(ModelError):
            mallows_specialize(3, 0)


class TestCsiszarMLE:
    def test_n3_empirical(self):
        b3 = boolean_lattice(3)
        counts = {"123": 2, "231": 3, "321": 1}
        mle = csiszar_mle(b3, counts)
        for w, v in mle.items():
            assert v == Fraction(counts.get(w, 0), 6)

    def test_uniform(self):
        b4 = boolean_lattice(4)
        counts = {w: 1 for w in linear_extensions(antichain(4))}
        mle = csiszar_mle(b4, counts)
        assert set(mle.values()) == {Fraction(1, 24)}

    def test_matches_sufficient_stats_exactly(self):
        b4 = boolean_lattice(4)
        m = model_matrix("csiszar", b4)
        counts = {"1234": 2, "2134": 1}
        mle = csiszar_mle(b4, counts)
        idx = {lab: j for j, lab in enumerate(m.spec.col_labels)}
        stats = sufficient_stats(m, counts)
        for i, rlab in enumerate(m.spec.row_labels):
            fitted = sum(m.spec.matrix[i][idx[lab]] * mle[lab]
                         for lab in m.spec.col_labels)
            assert fitted == Fraction(stats.values[rlab], 3)

    def test_probability_vector(self):
        rng = random.Random(31)
        b3 = boolean_lattice(3)
        for _ in range(20):
            counts = {w: rng.randint(0, 4)
                      for w in linear_extensions(antichain(3))}
            if sum(counts.values()) == 0:
                counts["123"] = 1
            mle = csiszar_mle(b3, counts)
            assert sum(mle.values()) == 1
            assert all(v >= 0 for v in mle.values())

    def test_empty_rejected(self):
        with pytest.raises(ModelError):
            csiszar_mle(boolean_lattice(3), {})
