"""Toric ideals from integer matrices: Markov bases, Groebner bases, fibers.

The Markov basis comes from the classical lattice-ideal saturation: a kernel
lattice basis seeds a binomial ideal which is saturated one variable at a
time, each step using a graded reverse lexicographic order with that variable
cheapest, then dividing the variable out of every basis element.  The result
is minimalized degree by degree.
"""

from concurrent.futures import ThreadPoolExecutor

from .groebner import (BinomialGB, binomial_groebner, binomial_groebner_dense,
                       minimalize_binomials, reducer_state,
                       same_ideal_binomials)
from .hilbert import MonomialIdeal
from .linalg import kernel_lattice_basis
from .polynomials import Binomial, TermOrder


class ToricSpec:
    """Nonnegative integer matrix with constant column sum and unique labels."""

    __slots__ = ("matrix", "row_labels", "col_labels", "S")

    def __init__(self, matrix, row_labels, col_labels):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        if len(set(row_labels)) != len(row_labels):
            raise ValueError("duplicate row labels")
        if len(set(col_labels)) != len(col_labels):
            raise ValueError("duplicate column labels")
        if len(matrix) != len(row_labels):
            raise ValueError("row label count mismatch")
        if any(len(r) != len(col_labels) for r in matrix):
            raise ValueError("column label count mismatch")
        if any(x < 0 for row in matrix for x in row):
            raise ValueError("matrix entries must be nonnegative")
        sums = {sum(matrix[i][j] for i in range(len(matrix)))
                for j in range(len(col_labels))}
        if len(sums) > 1:
            raise ValueError("column sums are not constant: %s" % sorted(sums))
        self.matrix = matrix
        self.row_labels = row_labels
        self.col_labels = col_labels
        self.S = sums.pop() if sums else 0

    def column(self, j):
        return tuple(self.matrix[i][j] for i in range(len(self.matrix)))

    def columns(self):
        return [self.column(j) for j in range(len(self.col_labels))]

    def image(self, exponents):
        """A times a column-exponent vector."""
        ncols = len(self.col_labels)
        return tuple(sum(self.matrix[i][j] * exponents[j]
                         for j in range(ncols))
                     for i in range(len(self.matrix)))

    def default_order(self, kind="grevlex"):
        return TermOrder(kind, self.col_labels)

    def __repr__(self):
        return "ToricSpec(%dx%d, S=%d)" % (len(self.row_labels),
                                           len(self.col_labels), self.S)


def binomial_in_toric(spec, binomial):
    """Membership certificate A u+ = A u-: exact sufficient statistics check."""
    if hasattr(spec, "spec"):
        spec = spec.spec
    index = {lab: j for j, lab in enumerate(spec.col_labels)}
    vp, vm = binomial.dense(index)
    return spec.image(vp) == spec.image(vm)


def lattice_ideal_generators(spec):
    """Dense binomial pairs from a kernel lattice basis of the matrix."""
    basis = kernel_lattice_basis(spec.matrix)
    gens = []
    for v in basis:
        vp = tuple(x if x > 0 else 0 for x in v)
        vm = tuple(-x if x < 0 else 0 for x in v)
        if any(vp) or any(vm):
            gens.append((vp, vm))
    return gens


def toric_markov_basis(spec, budget=None, jobs=1, degree_cap=None):
    """Minimal binomial generating set of the toric ideal I_A.

    Deterministic given the spec: saturation sweeps variables in label order;
    output is minimalized and sorted by (degree, leading term, trailing term)
    under the default graded reverse lexicographic order.
    """
    labels = spec.col_labels
    base = spec.default_order()
    gens = lattice_ideal_generators(spec)
    if not gens:
        return []
    for lab in labels:
        j = labels.index(lab)
        if not any(vp[j] or vm[j] for vp, vm in gens):
            continue
        order = base.with_cheapest(lab)
        gb = binomial_groebner_dense(gens, labels, order, budget=budget,
                                     jobs=jobs, degree_cap=degree_cap)
        gens = [_divide_out(vp, vm, j) for vp, vm in gb]
    gb = binomial_groebner_dense(gens, labels, base, budget=budget, jobs=jobs,
                                 degree_cap=degree_cap)
    bins = [Binomial.from_dense(labels, vp, vm) for vp, vm in gb]
    kept, _counts = minimalize_binomials(bins, labels, base, budget=budget)
    return kept


def _divide_out(vp, vm, j):
    e = min(vp[j], vm[j])
    if not e:
        return vp, vm
    vp = tuple(x - e if i == j else x for i, x in enumerate(vp))
    vm = tuple(x - e if i == j else x for i, x in enumerate(vm))
    return vp, vm


def toric_groebner(spec, order=None, markov=None, budget=None, jobs=1,
                   degree_cap=None):
    """Reduced Groebner basis of I_A under `order` (default grevlex)."""
    if order is None:
        order = spec.default_order()
    if markov is None:
        markov = toric_markov_basis(spec, budget=budget, jobs=jobs,
                                    degree_cap=degree_cap)
    return binomial_groebner(markov, spec.col_labels, order, budget=budget,
                             jobs=jobs, degree_cap=degree_cap)


def same_ideal(g1, g2, labels, order, budget=None):
    """Mutual reduction to zero: both families generate the same ideal."""
    return same_ideal_binomials(g1, g2, labels, order, budget=budget)


def initial_ideal(gb, labels, order):
    """Monomial ideal of leading terms of a Groebner basis."""
    key = order.key_function(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    gens = []
    for b in gb:
        vp, vm = b.dense(index)
        gens.append(vp if key(vp) > key(vm) else vm)
    return MonomialIdeal(labels, gens)


def squarefree_initial(gb, labels, order):
    """Normality certificate: every leading exponent is at most one."""
    ideal = initial_ideal(gb, labels, order)
    return ideal.is_squarefree()


def fiber(spec, target, degree, jobs=1):
    """All degree-d monomials in the column variables with A-image = target.

    Degrees 2 and 3 join partial sums through a hash table (meet in the
    middle); higher degrees fall back to pruned recursion and are refused for
    wide matrices.
    """
    target = tuple(int(x) for x in target)
    if degree < 1:
        raise ValueError("degree must be positive")
    if sum(target) != spec.S * degree:
        raise ValueError("target coordinate sum %d != S*degree = %d"
                         % (sum(target), spec.S * degree))
    cols = spec.columns()
    labels = spec.col_labels
    n = len(cols)
    if degree > 3 and n > 200:
        raise ValueError("degree > 3 fibers are refused for > 200 columns")
    if degree == 1:
        found = [(j,) for j in range(n) if cols[j] == target]
    elif degree == 2:
        table = {}
        found = []
        for j in range(n):
            table.setdefault(cols[j], []).append(j)
            rem = tuple(t - c for t, c in zip(target, cols[j]))
            if all(x >= 0 for x in rem):
                for i in table.get(rem, ()):
                    if i <= j:
                        found.append((i, j))
    elif degree == 3:
        found = _fiber3(cols, target, jobs)
    else:
        found = []
        _fiber_rec(cols, target, degree, 0, [], found)
    found.sort()
    return [tuple(labels[j] for j in combo) for combo in found]


def _fiber3(cols, target, jobs):
    n = len(cols)
    pair_sums = {}
    found = []

    def pairs_upto(k):
        # extend the table with pairs (i, k) for i <= k
        ck = cols[k]
        for i in range(k + 1):
            s = tuple(a + b for a, b in zip(cols[i], ck))
            pair_sums.setdefault(s, []).append((i, k))

    def lookup(k):
        rem = tuple(t - c for t, c in zip(target, cols[k]))
        if any(x < 0 for x in rem):
            return []
        return [(i, j, k) for i, j in pair_sums.get(rem, ()) if j <= k]

    if jobs <= 1:
        for k in range(n):
            pairs_upto(k)
            found.extend(lookup(k))
    else:
        # deterministic partition: the lookup for chunk boundaries still sees
        # exactly the pairs with j <= k, so build sequentially, look up in
        # parallel per chunk, and merge in chunk order.
        chunk = max(1, n // (4 * jobs))
        k = 0
        while k < n:
            hi = min(n, k + chunk)
            for kk in range(k, hi):
                pairs_upto(kk)
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(lookup, range(k, hi)))
            for part in parts:
                found.extend(part)
            k = hi
    return found


def _fiber_rec(cols, target, degree, start, acc, found):
    if degree == 0:
        if not any(target):
            found.append(tuple(acc))
        return
    for j in range(start, len(cols)):
        rem = tuple(t - c for t, c in zip(target, cols[j]))
        if all(x >= 0 for x in rem):
            acc.append(j)
            _fiber_rec(cols, rem, degree - 1, j, acc, found)
            acc.pop()
