"""Model matrices and polytope-level analysis of the toric ranking models.

Word convention: a permutation word w ranks item w_i in position i, and a
pair i < j is an inversion of w iff i appears after j in w.  The alternative
inversion statistic compares the items at position pairs instead.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import RationalMatrix, rational_rank, rowspace_contains, solve_linear
from .posets import (GradedPoset, Poset, chain_word, grade, linear_extensions,
                     maximal_chains, order_ideal_lattice, shadows)
from .toric import ToricSpec


MODEL_KINDS = ("ascending", "csiszar", "birkhoff", "inversion", "alt_inversion")
LATTICE_KINDS = ("birkhoff", "inversion", "alt_inversion")


class ModelError(ValueError):
    pass


class ModelMatrix:
    """ToricSpec plus the model kind and its source poset."""

    __slots__ = ("spec", "kind", "source", "graded")

    def __init__(self, spec, kind, source, graded=None):
        self.spec = spec
        self.kind = kind
        self.source = source
        self.graded = graded

    @property
    def col_labels(self):
        return self.spec.col_labels

    @property
    def row_labels(self):
        return self.spec.row_labels

    def __repr__(self):
        return "ModelMatrix(%s, %r)" % (self.kind, self.spec)


def _as_graded(q):
    if isinstance(q, GradedPoset):
        return q
    if isinstance(q, Poset):
        return grade(q)
    raise ModelError("expected a poset, got %r" % (q,))


def _chain_columns(graded):
    chains = maximal_chains(graded)
    if graded.member_sets is not None:
        labels = [chain_word(graded, c) for c in chains]
    else:
        labels = ["|".join(c) for c in chains]
    return chains, labels


def cover_label(a, b):
    return "%s<%s" % (a, b)


def model_matrix(kind, q):
    """0-1 exponent matrix of the kind's monomial map.

    ascending/csiszar accept any graded poset; birkhoff and the two inversion
    kinds need a constraint poset on [n] (their states are its linear
    extensions).
    """
    if kind not in MODEL_KINDS:
        raise ModelError("unknown model kind %r" % kind)
    if kind in LATTICE_KINDS:
        if isinstance(q, GradedPoset):
            raise ModelError(
                "%s model needs a constraint poset (distributive-lattice case)"
                % kind)
        constraint = q
        n = len(constraint.elements)
        if any(len(lab) != 1 for lab in constraint.elements):
            raise ModelError("constraint poset must be labeled 1..n, n <= 9")
        words = linear_extensions(constraint)
        if kind == "birkhoff":
            rows = ["a_%d%s" % (i, j) for i in range(1, n + 1)
                    for j in constraint.elements]
            mat = [[1 if w[i - 1] == j else 0 for w in words]
                   for i in range(1, n + 1) for j in constraint.elements]
        else:
            pairs = [(i, j) for i, j in combinations(constraint.elements, 2)]
            if kind == "inversion":
                def not_inverted(w, i, j):
                    return w.index(i) < w.index(j)
            else:
                def not_inverted(w, i, j):
                    # positions i < j carry the items w_i, w_j
                    return w[int(i) - 1] < w[int(j) - 1]
            rows = (["u_%s%s" % p for p in pairs]
                    + ["v_%s%s" % p for p in pairs])
            mat = [[1 if not_inverted(w, i, j) else 0 for w in words]
                   for i, j in pairs]
            mat += [[0 if not_inverted(w, i, j) else 1 for w in words]
                    for i, j in pairs]
        spec = ToricSpec(mat, rows, words)
        return ModelMatrix(spec, kind, constraint,
                           graded=order_ideal_lattice(constraint))
    graded = _as_graded(q)
    chains, labels = _chain_columns(graded)
    chain_of = dict(zip(labels, chains))
    order = sorted(labels)
    if kind == "ascending":
        rows = ["c_%s" % e for e in graded.elements]
        mat = [[1 if e in chain_of[lab] else 0 for lab in order]
               for e in graded.elements]
    else:
        covers = graded.poset.covers
        rows = ["d_%s" % cover_label(a, b) for a, b in covers]
        mat = []
        for a, b in covers:
            row = []
            for lab in order:
                ch = chain_of[lab]
                row.append(1 if any(ch[i] == a and ch[i + 1] == b
                                    for i in range(len(ch) - 1)) else 0)
            mat.append(row)
    spec = ToricSpec(mat, rows, order)
    return ModelMatrix(spec, kind, q, graded=graded)


@dataclass
class SufficientStats:
    values: dict
    N: int
    S: int

    def __post_init__(self):
        if sum(self.values.values()) != self.S * self.N:
            raise ModelError("sufficient statistics do not sum to S*N")


def sufficient_stats(m, counts):
    """A u for a count vector u keyed by column labels."""
    for lab in counts:
        if lab not in m.spec.col_labels:
            raise ModelError("unknown chain label %r" % lab)
    idx = {lab: j for j, lab in enumerate(m.spec.col_labels)}
    values = {}
    for i, rlab in enumerate(m.spec.row_labels):
        values[rlab] = sum(m.spec.matrix[i][idx[lab]] * c
                           for lab, c in counts.items())
    return SufficientStats(values, sum(counts.values()), m.spec.S)


def polytope_dimension(m):
    return rational_rank(RationalMatrix(m.spec.matrix)) - 1


def birkhoff_dimension(constraint):
    """(Z, C, dim) from the face formula dim = n^2 - |Z| - |C|.

    Z is the set of never-realized (position, item) pairs over the linear
    extensions; C collects, for each row and column of the n x n grid, the
    lex-last variable surviving after zeroing Z (the leading variables of the
    row/column sum relations).  The result is cross-checked against the rank
    of the Birkhoff model matrix; a mismatch raises.
    """
    n = len(constraint.elements)
    words = linear_extensions(constraint)
    realized = set()
    for w in words:
        for i, item in enumerate(w, start=1):
            realized.add((i, int(item)))
    universe = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    Z = universe - realized
    # surviving coordinates, largest (lex on index pairs) first
    coords = sorted(universe - Z, reverse=True)
    pos = {c: k for k, c in enumerate(coords)}
    relations = []
    for i in range(1, n + 1):
        row = [Fraction(0)] * len(coords)
        for j in range(1, n + 1):
            if (i, j) not in Z:
                row[pos[(i, j)]] = Fraction(1)
        relations.append(row)
    for j in range(1, n + 1):
        row = [Fraction(0)] * len(coords)
        for i in range(1, n + 1):
            if (i, j) not in Z:
                row[pos[(i, j)]] = Fraction(1)
        relations.append(row)
    C = set()
    r = 0
    for k, coord in enumerate(coords):
        piv = next((idx for idx in range(r, len(relations))
                    if relations[idx][k]), None)
        if piv is None:
            continue
        relations[r], relations[piv] = relations[piv], relations[r]
        for idx in range(len(relations)):
            if idx != r and relations[idx][k]:
                f = relations[idx][k] / relations[r][k]
                relations[idx] = [a - f * b for a, b in
                                  zip(relations[idx], relations[r])]
        C.add(coord)
        r += 1
    dim = n * n - len(Z) - len(C)
    oracle = polytope_dimension(model_matrix("birkhoff", constraint))
    if dim != oracle:
        raise ModelError("formula mismatch: %d vs rank-based %d"
                         % (dim, oracle))
    return frozenset(Z), frozenset(C), dim


@dataclass
class HDescription:
    """Equalities sum(c*x) = rhs and inequalities sum(c*x) >= rhs."""

    coords: tuple
    equalities: list = field(default_factory=list)
    inequalities: list = field(default_factory=list)


def h_description(kind, q):
    """Exact H-description of the csiszar or ascending model polytope."""
    graded = _as_graded(q)
    if graded.rk < 1:
        raise ModelError("need rank >= 1")
    if kind == "csiszar":
        covers = graded.poset.covers
        coords = tuple(cover_label(a, b) for a, b in covers)
        pos = {c: i for i, c in enumerate(coords)}
        h = HDescription(coords)
        for c in coords:
            row = [0] * len(coords)
            row[pos[c]] = 1
            h.inequalities.append((tuple(row), Fraction(0)))
        row = [0] * len(coords)
        for a, b in covers:
            if graded.rank[a] == 0:
                row[pos[cover_label(a, b)]] = 1
        h.equalities.append((tuple(row), Fraction(1)))
        for a in graded.elements:
            if 0 < graded.rank[a] < graded.rk:
                row = [0] * len(coords)
                for b in graded.poset.up_covers(a):
                    row[pos[cover_label(a, b)]] += 1
                for b in graded.poset.down_covers(a):
                    row[pos[cover_label(b, a)]] -= 1
                h.equalities.append((tuple(row), Fraction(0)))
        return h
    if kind != "ascending":
        raise ModelError("H-descriptions exist for csiszar and ascending only")
    coords = tuple(graded.elements)
    pos = {c: i for i, c in enumerate(coords)}
    h = HDescription(coords)
    for level in graded.levels:
        row = [0] * len(coords)
        for a in level:
            row[pos[a]] = 1
        h.equalities.append((tuple(row), Fraction(1)))
    for c in coords:
        row = [0] * len(coords)
        row[pos[c]] = 1
        h.inequalities.append((tuple(row), Fraction(0)))
    seen = set()
    for i in range(graded.rk):
        level = graded.levels[i]
        if len(level) > 20:
            raise ModelError("level has more than 20 elements")
        for r in range(1, len(level) + 1):
            for sub in combinations(level, r):
                up, _down = shadows(graded, sub)
                row = [0] * len(coords)
                for a in sub:
                    row[pos[a]] -= 1
                for a in up:
                    row[pos[a]] += 1
                key = tuple(row)
                if any(key) and key not in seen:
                    seen.add(key)
                    h.inequalities.append((key, Fraction(0)))
    return h


@dataclass
class HVerification:
    columns_satisfy: bool
    zero_one_match: bool | None
    dimension_match: bool
    vertex_match: bool | None
    dimension: int
    partial: bool


def verify_h_description(m, h, zero_one_cap=25, vertex_cap=12):
    """Check the H-description against the model matrix, exactly.

    (1) every column satisfies h; (2) the 0/1 solutions are exactly the
    columns; (3) the affine solution space of the equalities has the polytope
    dimension (its homogenization has dimension + 1); (4) exact vertex
    enumeration returns the column set.  (2) and (4) are skipped with a
    partial flag above the coordinate caps.
    """
    coords = h.coords
    stripped = {lab.split("_", 1)[-1]: i
                for i, lab in enumerate(m.spec.row_labels)}
    if sorted(coords) != sorted(stripped):
        raise ModelError("coordinate labels do not match matrix rows")
    ncoords = len(coords)
    cols = []
    for j in range(len(m.spec.col_labels)):
        col = m.spec.column(j)
        cols.append(tuple(col[stripped[c]] for c in coords))
    colset = set(cols)

    def satisfies(x):
        for row, rhs in h.equalities:
            if sum(c * v for c, v in zip(row, x)) != rhs:
                return False
        for row, rhs in h.inequalities:
            if sum(c * v for c, v in zip(row, x)) < rhs:
                return False
        return True

    check1 = all(satisfies(x) for x in cols)

    dim = polytope_dimension(m)
    eq_rank = rational_rank(RationalMatrix([row for row, _ in h.equalities])) \
        if h.equalities else 0
    check3 = (ncoords - eq_rank) == dim

    partial = False
    if ncoords <= zero_one_cap:
        sols = _zero_one_solutions(h)
        check2 = sols == colset
    else:
        check2 = None
        partial = True
    if ncoords <= vertex_cap:
        verts = _enumerate_vertices(h, eq_rank)
        check4 = verts == {tuple(map(Fraction, x)) for x in colset}
    else:
        check4 = None
        partial = True
    return HVerification(check1, check2, check3, check4, dim, partial)


def _zero_one_solutions(h):
    ncoords = len(h.coords)
    # pre-index constraints by the last coordinate in their support
    eqs = []
    for row, rhs in h.equalities:
        support = [i for i, c in enumerate(row) if c]
        nonneg = all(c > 0 for c in row if c)
        eqs.append((row, rhs, max(support), nonneg))
    out = set()
    x = [0] * ncoords

    def feasible_prefix(i):
        for row, rhs, last, nonneg in eqs:
            s = sum(row[k] * x[k] for k in range(i + 1) if row[k])
            if last <= i:
                if s != rhs:
                    return False
            elif nonneg and s > rhs:
                return False
        return True

    def rec(i):
        if i == ncoords:
            xt = tuple(x)
            for row, rhs in h.inequalities:
                if sum(c * v for c, v in zip(row, xt)) < rhs:
                    return
            out.add(xt)
            return
        for val in (0, 1):
            x[i] = val
            if feasible_prefix(i):
                rec(i + 1)
        x[i] = 0

    rec(0)
    return out


def _enumerate_vertices(h, eq_rank):
    ncoords = len(h.coords)
    need = ncoords - eq_rank
    base = [list(row) + [rhs] for row, rhs in h.equalities]
    verts = set()
    for active in combinations(range(len(h.inequalities)), need):
        aug = base + [list(h.inequalities[k][0]) + [h.inequalities[k][1]]
                      for k in active]
        coeff = [row[:-1] for row in aug]
        if rational_rank(RationalMatrix(coeff)) != ncoords:
            continue
        sol = solve_linear(aug)
        if sol is None:
            continue
        ok = all(sum(c * v for c, v in zip(row, sol)) >= rhs
                 for row, rhs in h.inequalities)
        if ok:
            verts.add(sol)
    return verts


def model_inclusion(inner, outer):
    """Row-space certificate for toric model inclusion (inner inside outer)."""
    if set(inner.spec.col_labels) != set(outer.spec.col_labels):
        raise ModelError("column label mismatch")
    order = sorted(inner.spec.col_labels)

    def aligned(mm):
        idx = {lab: j for j, lab in enumerate(mm.spec.col_labels)}
        return RationalMatrix([[row[idx[lab]] for lab in order]
                               for row in mm.spec.matrix])

    return rowspace_contains(aligned(inner), aligned(outer))


def evaluate_distribution(m, params):
    """Evaluate the monomial map at nonnegative rational parameters and
    normalize to a probability distribution."""
    values = {}
    for lab in m.spec.row_labels:
        if lab not in params:
            raise ModelError("missing parameter %r" % lab)
        v = Fraction(params[lab])
        if v < 0:
            raise ModelError("parameters must be nonnegative")
        values[lab] = v
    out = {}
    for j, clab in enumerate(m.spec.col_labels):
        prod = Fraction(1)
        for i, rlab in enumerate(m.spec.row_labels):
            e = m.spec.matrix[i][j]
            if e:
                prod *= values[rlab] ** e
        out[clab] = prod
    total = sum(out.values())
    if total == 0:
        raise ModelError("all-zero distribution")
    return {lab: v / total for lab, v in out.items()}


def mallows_specialize(n, qval):
    """Mallows distribution P(w) proportional to q^(number of inversions)."""
    qval = Fraction(qval)
    if qval <= 0:
        raise ModelError("q must be positive")
    from .posets import antichain

    m = model_matrix("inversion", antichain(n))
    params = {}
    for lab in m.spec.row_labels:
        params[lab] = Fraction(1) if lab.startswith("u_") else qval
    return evaluate_distribution(m, params)


def csiszar_mle(q, counts):
    """Closed-form MLE of the csiszar model from chain counts.

    p-hat factorizes along the chain as the empirical start mass times the
    empirical cover transition ratios; zero-count passages give estimate 0.
    """
    graded = _as_graded(q)
    m = model_matrix("csiszar", graded)
    for lab in counts:
        if lab not in m.spec.col_labels:
            raise ModelError("unknown chain label %r" % lab)
    N = sum(counts.values())
    if N < 1:
        raise ModelError("need at least one observation")
    stats = sufficient_stats(m, counts)
    b = {}
    for a, c in graded.poset.covers:
        b[(a, c)] = stats.values["d_" + cover_label(a, c)]
    r = {}
    for a in graded.elements:
        ups = graded.poset.up_covers(a)
        if ups:
            r[a] = sum(b[(a, c)] for c in ups)
    chains, labels = _chain_columns(graded)
    chain_of = dict(zip(labels, chains))
    out = {}
    for lab in m.spec.col_labels:
        ch = chain_of[lab]
        value = Fraction(r[ch[0]], N)
        for a, c in zip(ch, ch[1:]):
            if b[(a, c)] == 0:
                value = Fraction(0)
                break
            value *= Fraction(b[(a, c)], r[a])
        out[lab] = value
    return out
