import random
from fractions import Fraction

import pytest

from rankalg.linalg import (RationalMatrix, hermite_normal_form,
                            integer_rank, kernel_lattice_basis,
                            rational_rank, rowspace_contains, solve_linear)
from rankalg.models import model_matrix
from rankalg.posets import antichain, boolean_lattice


def _dot(row, vec):
    return sum(r * v for r, v in zip(row, vec))


class TestRank:
    def test_identity(self):
        m = RationalMatrix([[1 if i == j else 0 for j in range(5)]
                            for i in range(5)])
        assert rational_rank(m) == 5

    def test_ascending3_rank(self):
        m = model_matrix("ascending", boolean_lattice(3))
        assert rational_rank(RationalMatrix(m.spec.matrix)) == 5

    def test_inversion4_rank(self):
        m = model_matrix("inversion", antichain(4))
        assert rational_rank(RationalMatrix(m.spec.matrix)) == 7

    def test_rational_entries(self):
        m = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)],
                            [Fraction(3, 2), Fraction(2, 1)]])
        assert rational_rank(m) == 2
        # second row is 3 times the first
        singular = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)],
                                   [Fraction(3, 2), Fraction(1, 1)]])
        assert rational_rank(singular) == 1

    def test_rank_of_dependent_rows(self):
        m = RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert rational_rank(m) == 2

    def test_random_vs_fraction_elimination(self):
        rng = random.Random(2)
        for _ in range(20):
            rows = [[rng.randint(-4, 4) for _ in range(5)]
                    for _ in range(4)]
            # oracle: plain fraction Gaussian elimination
            m = [[Fraction(x) for x in row] for row in rows]
            r = 0
            for c in range(5):
                piv = next((i for i in range(r, 4) if m[i][c]), None)
                if piv is None:
                    continue
                m[r], m[piv] = m[piv], m[r]
                for i in range(4):
                    if i != r and m[i][c]:
                        f = m[i][c] / m[r][c]
                        m[i] = [a - f * b for a, b in zip(m[i], m[r])]
                r += 1
            assert integer_rank(rows) == r


class TestHermiteKernel:
    def test_zero_matrix(self):
        basis = kernel_lattice_basis([[0, 0, 0]])
        assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_injective(self):
        assert kernel_lattice_basis([[1, 0], [0, 1], [1, 1]]) == []

    def test_inversion3_kernel_contains_printed_quadrics(self):
        m = model_matrix("inversion", antichain(3))
        basis = kernel_lattice_basis(m.spec.matrix)
        assert len(basis) == 2
        labels = m.spec.col_labels
        idx = {lab: i for i, lab in enumerate(labels)}

        def expvec(plus, minus):
            v = [0] * len(labels)
            for w in plus:
                v[idx[w]] += 1
            for w in minus:
                v[idx[w]] -= 1
            return v

        targets = [expvec(("132", "231"), ("123", "321")),
                   expvec(("213", "312"), ("123", "321"))]
        # exact solve: target must be an integer combination of the basis
        for t in targets:
            aug = [[basis[0][i], basis[1][i], t[i]]
                   for i in range(len(labels))]
            sol = solve_linear(aug)
            assert sol is not None
            assert all(x.denominator == 1 for x in sol)

    def test_kernel_vectors_annihilated(self):
        rng = random.Random(7)
        for _ in range(15):
            rows = [[rng.randint(0, 3) for _ in range(6)] for _ in range(3)]
            basis = kernel_lattice_basis(rows)
            for v in basis:
                assert all(_dot(row, v) == 0 for row in rows)
            assert integer_rank(rows) + len(basis) == 6

    def test_hnf_shape(self):
        rows = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
        h, u = hermite_normal_form(rows)
        # U * M == H
        for i in range(3):
            for j in range(3):
                assert _dot(u[i], [rows[k][j] for k in range(3)]) == h[i][j]


class TestRowspace:
    def test_reflexive(self):
        m = model_matrix("ascending", boolean_lattice(3))
        rm = RationalMatrix(m.spec.matrix)
        assert rowspace_contains(rm, rm)

    def test_birkhoff_inside_ascending(self):
        mb = model_matrix("birkhoff", antichain(4))
        ma = model_matrix("ascending", boolean_lattice(4))
        assert rowspace_contains(RationalMatrix(mb.spec.matrix),
                                 RationalMatrix(ma.spec.matrix))

    def test_ascending_not_inside_inversion(self):
        ma = model_matrix("ascending", boolean_lattice(4))
        mi = model_matrix("inversion", antichain(4))
        assert not rowspace_contains(RationalMatrix(ma.spec.matrix),
                                     RationalMatrix(mi.spec.matrix))

    def test_mutual_containment_is_equality(self):
        a = RationalMatrix([[1, 0], [0, 1]])
        b = RationalMatrix([[1, 1], [1, -1]])
        assert rowspace_contains(a, b) and rowspace_contains(b, a)

    def test_column_mismatch(self):
        with pytest.raises(ValueError):
            rowspace_contains(RationalMatrix([[1, 2]]),
                              RationalMatrix([[1, 2, 3]]))
