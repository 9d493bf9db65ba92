"""Plackett-Luce parametrizations, Stanley-Reisner combinatorics, marginals,
and the Bradley-Terry specialization.

The homogeneous parametrization sends p_w to the product of the linear forms
sum(theta_i, i in A) over all proper nonempty order ideals A that are NOT
prefix sets of the word w.  Probabilities use the ranking-by-partial-sums
formula p_w = prod_i theta_{w_i} / (theta_{w_1} + ... + theta_{w_i}).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .hilbert import MonomialIdeal
from .polynomials import Polynomial
from .posets import Poset, linear_extensions
from .structural import bt_circuit_binomials


class PLError(ValueError):
    pass


def proper_ideals(constraint):
    """Proper nonempty order ideals of the constraint poset, sorted."""
    items = constraint.elements
    out = []
    for r in range(1, len(items)):
        for combo in combinations(items, r):
            s = set(combo)
            if all(a in s for b in s for a in items if constraint.less(a, b)):
                out.append(frozenset(s))
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))


def _prefix_sets(word):
    acc = set()
    out = []
    for ch in word[:-1]:
        acc.add(ch)
        out.append(frozenset(acc))
    return out


def linear_form(ideal, items):
    n = len(items)
    pos = {it: i for i, it in enumerate(items)}
    terms = {}
    for it in ideal:
        m = tuple(1 if i == pos[it] else 0 for i in range(n))
        terms[m] = 1
    return Polynomial(terms, n)


def _product_of_forms(ideals, items):
    poly = Polynomial.constant(1, len(items))
    for a in sorted(ideals, key=lambda s: (len(s), tuple(sorted(s)))):
        poly = poly * linear_form(a, items)
    return poly


class PLMap:
    """Homogeneous polynomial parametrization of the Plackett-Luce model."""

    def __init__(self, constraint):
        self.constraint = constraint
        self.items = constraint.elements
        self.words = linear_extensions(constraint)
        self.ideals = proper_ideals(constraint)
        self.factors = {}
        for w in self.words:
            prefixes = set(_prefix_sets(w))
            self.factors[w] = tuple(a for a in self.ideals
                                    if a not in prefixes)
        self.degree = len(self.ideals) - (len(self.items) - 1)
        self._cache = {}

    def image(self, word):
        """Expanded theta-polynomial of p_word."""
        if word not in self._cache:
            self._cache[word] = _product_of_forms(self.factors[word],
                                                  self.items)
        return self._cache[word]

    def monomial_factor_counts(self, exps):
        """Multiset of linear-form factors of the image of a p-monomial."""
        counts = {}
        for w, e in zip(self.words, exps):
            if e:
                for a in self.factors[w]:
                    counts[a] = counts.get(a, 0) + e
        return counts


def pl_homogeneous_map(constraint):
    return PLMap(constraint)


def pl_probability(constraint, theta):
    """Exact Plackett-Luce values and their total mass.

    For the unconstrained model the values sum to one; for constrained posets
    the unnormalized values and the normalizing total are returned as-is.
    """
    items = constraint.elements
    theta = {it: Fraction(t) for it, t in zip(items, theta)}
    if any(t <= 0 for t in theta.values()):
        raise PLError("theta must be strictly positive")
    values = {}
    for w in linear_extensions(constraint):
        acc = Fraction(0)
        prob = Fraction(1)
        for ch in w:
            acc += theta[ch]
            prob *= theta[ch] / acc
        values[w] = prob
    return values, sum(values.values())


def pl_vanishes(f, constraint, plmap=None):
    """Does the p-polynomial vanish on the Plackett-Luce parametrization?

    Substitutes the homogeneous images and expands exactly.  For a binomial,
    the two factor multisets are cancelled first and only the differing
    factors are expanded (dividing both sides of a product equality by a
    common polynomial factor is exact in an integral domain).
    """
    if plmap is None:
        plmap = pl_homogeneous_map(constraint)
    if not f:
        return True
    degrees = f.total_degrees()
    if len(degrees) != 1:
        raise PLError("p-inhomogeneous polynomial has no projective meaning")
    terms = list(f.terms.items())
    if len(terms) == 2 and terms[0][1] + terms[1][1] == 0:
        c1 = plmap.monomial_factor_counts(terms[0][0])
        c2 = plmap.monomial_factor_counts(terms[1][0])
        left = []
        right = []
        for a in set(c1) | set(c2):
            diff = c1.get(a, 0) - c2.get(a, 0)
            if diff > 0:
                left.extend([a] * diff)
            elif diff < 0:
                right.extend([a] * -diff)
        if not left and not right:
            return True
        return (_product_of_forms(left, plmap.items)
                == _product_of_forms(right, plmap.items))
    total = Polynomial.zero(len(plmap.items))
    for exps, coeff in sorted(terms):
        part = Polynomial.constant(coeff, len(plmap.items))
        for w, e in zip(plmap.words, exps):
            for _ in range(e):
                part = part * plmap.image(w)
        total = total + part
    return not total


def total_mass_identity(constraint):
    """Polynomial form of: the total mass of the projective parametrization
    maps to 1/(theta_1 ... theta_n) on the unconstrained model.

    Checks sum_w image(w) * theta_1...theta_n == prod over ALL nonempty
    ideals (including the full set) of their linear forms, exactly.
    """
    if constraint.strict:
        raise PLError("the total-mass identity is for the unconstrained model")
    plmap = pl_homogeneous_map(constraint)
    items = plmap.items
    n = len(items)
    lhs = Polynomial.zero(n)
    for w in plmap.words:
        lhs = lhs + plmap.image(w)
    allvars = Polynomial({(1,) * n: 1}, n)
    rhs = (_product_of_forms(plmap.ideals, items)
           * linear_form(frozenset(items), items))
    return lhs * allvars == rhs


def incomparability_ideal(constraint):
    """Stanley-Reisner ideal: t_A t_B over incomparable proper ideal pairs."""
    ideals = proper_ideals(constraint)
    labels = [_ideal_label(a) for a in ideals]
    gens = []
    for i, j in combinations(range(len(ideals)), 2):
        a, b = ideals[i], ideals[j]
        if not (a <= b or b <= a):
            v = [0] * len(ideals)
            v[i] = 1
            v[j] = 1
            gens.append(tuple(v))
    return MonomialIdeal(labels, gens)


def _ideal_label(ideal):
    return "".join(sorted(ideal))


def alexander_dual(m):
    """Alexander dual of a squarefree monomial ideal.

    Generators are the minimal transversals of the generator supports; the
    dual of the zero ideal is the unit ideal <1> by the empty-intersection
    convention (represented by the single constant monomial).
    """
    if not m.is_squarefree():
        raise PLError("Alexander duality needs a squarefree ideal")
    n = len(m.labels)
    if not m.gens:
        return MonomialIdeal(m.labels, [tuple([0] * n)])
    transversals = [frozenset()]
    for g in m.gens:
        support = [i for i, e in enumerate(g) if e]
        new = set()
        for t in transversals:
            if any(i in t for i in support):
                new.add(t)
            else:
                for i in support:
                    new.add(t | {i})
        # keep only minimal transversals
        minimal = [t for t in new if not any(o < t for o in new)]
        transversals = minimal
    gens = []
    for t in transversals:
        gens.append(tuple(1 if i in t else 0 for i in range(n)))
    return MonomialIdeal(m.labels, gens)


def marginalize(dist, k, constraint=None):
    """Order-k marginals: for each k-subset of items, the distribution of the
    induced sub-orderings.  Subsets totally ordered by the constraint are
    skipped (their marginal map is constant)."""
    words = sorted(dist)
    if not words:
        return {}
    items = sorted(words[0])
    n = len(items)
    if not 2 <= k <= n:
        raise PLError("need 2 <= k <= n")
    out = {}
    for combo in combinations(items, k):
        kset = set(combo)
        if constraint is not None and _totally_ordered(constraint, combo):
            continue
        sub = {}
        for w, v in dist.items():
            key = "".join(ch for ch in w if ch in kset)
            sub[key] = sub.get(key, Fraction(0)) + v
        out["".join(combo)] = sub
    return out


def _totally_ordered(constraint, combo):
    return all(constraint.comparable(a, b)
               for a, b in combinations(combo, 2))


@dataclass
class BTReport:
    circuits_vanish: bool
    complements_to_one: bool
    marginals_match: bool
    circuit_count: int
    trials: int


def bt_parametrization_check(constraint, trials=5, seed=7):
    """Exact checks tying Bradley-Terry to the Plackett-Luce marginals.

    (1) every circuit binomial of the incomparability graph vanishes under
    the Lawrence form q_ij -> rho_{ij} theta_j; (2) q_ij + q_ji = 1 holds as
    a rational identity under q_ij -> theta_j/(theta_i + theta_j); (3) at
    random positive rational parameters the pairwise marginal of the
    Plackett-Luce distribution lies on every circuit and, for the
    unconstrained poset, equals the Bradley-Terry values exactly.
    """
    items = constraint.elements
    n = len(items)
    circuits = bt_circuit_binomials(constraint)

    def lawrence_factors(side):
        rho = {}
        th = {}
        for lab, e in side:
            i, j = lab[0], lab[1]
            key = (min(i, j), max(i, j))
            rho[key] = rho.get(key, 0) + e
            th[j] = th.get(j, 0) + e
        return rho, th

    circuits_ok = True
    for b in circuits:
        if lawrence_factors(b.plus) != lawrence_factors(b.minus):
            circuits_ok = False

    # q_ij + q_ji = 1: theta_j * den_ji + theta_i * den_ij == den_ij * den_ji
    complements_ok = True
    for i, j in combinations(items, 2):
        if constraint.comparable(i, j):
            continue
        ti = linear_form(frozenset([i]), items)
        tj = linear_form(frozenset([j]), items)
        den = ti + tj
        if tj * den + ti * den != den * den:
            complements_ok = False

    rng = random.Random(seed)
    marginals_ok = True
    unconstrained = not constraint.strict
    circuit_exps = None
    for _ in range(trials):
        theta = [Fraction(rng.randint(1, 30), rng.randint(1, 30))
                 for _ in range(n)]
        values, total = pl_probability(constraint, theta)
        dist = {w: v / total for w, v in values.items()}
        margs = marginalize(dist, 2, constraint)
        qvals = {}
        for key, sub in margs.items():
            i, j = key[0], key[1]
            qvals[i + j] = sub.get(i + j, Fraction(0))
            qvals[j + i] = sub.get(j + i, Fraction(0))
            if qvals[i + j] + qvals[j + i] != 1:
                marginals_ok = False
            if unconstrained:
                ti = theta[items.index(i)]
                tj = theta[items.index(j)]
                if qvals[i + j] != tj / (ti + tj):
                    marginals_ok = False
        for b in circuits:
            lhs = Fraction(1)
            rhs = Fraction(1)
            for lab, e in b.plus:
                lhs *= qvals[lab] ** e
            for lab, e in b.minus:
                rhs *= qvals[lab] ** e
            if lhs != rhs:
                marginals_ok = False
    return BTReport(circuits_ok, complements_ok, marginals_ok,
                    len(circuits), trials)
