"""Hilbert series of monomial quotients, series invariants, face counts.

The series of K[x]/I is computed by recursive pivot splitting
N(I) = N(I + <x>) + t * N(I : x), pivoting on the variable hitting the most
generators, with connected-component factorization and memoization on
variable-compressed keys.  Everything is exact integer arithmetic.
"""

from math import comb

from .groebner import CapExceeded


class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain)."""

    __slots__ = ("labels", "gens")

    def __init__(self, labels, gens):
        # the zero exponent vector is the monomial 1 (the unit ideal)
        self.labels = tuple(labels)
        self.gens = tuple(sorted(_minimalize([tuple(g) for g in gens])))

    def is_unit(self):
        return any(not any(g) for g in self.gens)

    @classmethod
    def from_sparse(cls, labels, sparse_gens):
        pos = {lab: i for i, lab in enumerate(labels)}
        dense = []
        for g in sparse_gens:
            v = [0] * len(labels)
            for lab, e in g:
                v[pos[lab]] += e
            dense.append(tuple(v))
        return cls(labels, dense)

    def is_squarefree(self):
        return all(e <= 1 for g in self.gens for e in g)

    def contains_monomial(self, mono):
        return any(all(g[i] <= mono[i] for i in range(len(mono)))
                   for g in self.gens)

    def text(self, prefix=""):
        parts = []
        for g in self.gens:
            factors = []
            for lab, e in zip(self.labels, g):
                if e == 1:
                    factors.append(prefix + lab)
                elif e > 1:
                    factors.append("%s%s^%d" % (prefix, lab, e))
            parts.append("·".join(factors))
        return "<" + (", ".join(parts) if parts else "0") + ">"

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.labels == other.labels
                and self.gens == other.gens)

    def __repr__(self):
        return "MonomialIdeal(%d gens in %d vars)" % (len(self.gens),
                                                      len(self.labels))


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(h[i] <= g[i] for i in range(len(g))) for h in out):
            out.append(g)
    return out


def intersect_monomial_ideals(a, b):
    """Intersection of two monomial ideals: minimalized pairwise lcms."""
    if a.labels != b.labels:
        raise ValueError("variable mismatch")
    gens = [tuple(max(x, y) for x, y in zip(g, h))
            for g in a.gens for h in b.gens]
    return MonomialIdeal(a.labels, gens)


class HilbertSeries:
    """Canonical form numerator/(1-t)^K with numerator(1) != 0."""

    __slots__ = ("numerator", "K")

    def __init__(self, numerator, denominator_exponent):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        if not num:
            raise ValueError("zero Hilbert series")
        K = denominator_exponent
        while sum(num) == 0:
            # divide by (1-t): synthetic division
            out = []
            acc = 0
            for c in num[:-1]:
                acc += c
                out.append(acc)
            num = out
            K -= 1
            while num and num[-1] == 0:
                num.pop()
        self.numerator = tuple(num)
        self.K = K

    @property
    def degree(self):
        return sum(self.numerator)

    def is_symmetric(self):
        return self.numerator == self.numerator[::-1]

    def text(self):
        return "numerator %s over (1-t)^%d" % (
            ",".join(str(c) for c in self.numerator), self.K)

    def __eq__(self, other):
        return (isinstance(other, HilbertSeries)
                and self.numerator == other.numerator and self.K == other.K)

    def __repr__(self):
        return "HilbertSeries(%s / (1-t)^%d)" % (list(self.numerator), self.K)


def series_invariants(series):
    """(Krull dimension, degree, symmetric numerator flag)."""
    return series.K, series.degree, series.is_symmetric()


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_add(a, b, shift=0):
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    return out


class _HilbertWorker:
    def __init__(self, node_cap):
        self.cache = {}
        self.nodes = 0
        self.node_cap = node_cap

    def numerator(self, gens):
        """Numerator of Hilb(K[supp]/I) over (1-t)^(#supp vars); free
        variables do not change the numerator."""
        if not gens:
            return [1]
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise CapExceeded("Hilbert recursion node cap exceeded",
                              steps=self.nodes)
        key = _compress(gens)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        result = self._split(key)
        self.cache[key] = result
        return result

    def _split(self, gens):
        nv = len(gens[0])
        # pure linear generators peel off a (1-t) factor each
        linear = [g for g in gens if sum(g) == 1]
        if linear:
            rest = [g for g in gens if sum(g) != 1]
            num = self.numerator(rest)
            for _ in linear:
                num = _poly_mul(num, [1, -1])
            return num
        # connected components multiply
        comps = _components(gens)
        if len(comps) > 1:
            num = [1]
            for comp in comps:
                num = _poly_mul(num, self.numerator(comp))
            return num
        # base: all generators are powers of single variables
        if all(sum(1 for e in g if e) == 1 for g in gens):
            num = [1]
            for g in gens:
                factor = [1] + [0] * (sum(g) - 1) + [-1]
                num = _poly_mul(num, factor)
            return num
        # pivot on the most frequent variable
        counts = [0] * nv
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
        piv = max(range(nv), key=lambda i: counts[i])
        pivot = tuple(1 if i == piv else 0 for i in range(nv))
        plus = [g for g in gens if not g[piv]] + [pivot]
        colon = _minimalize([tuple(e - 1 if i == piv and e else e
                                   for i, e in enumerate(g)) for g in gens])
        return _poly_add(self.numerator(plus),
                         self.numerator(colon), shift=1)


def _components(gens):
    n = len(gens)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    nv = len(gens[0])
    by_var = {}
    for idx, g in enumerate(gens):
        for i in range(nv):
            if g[i]:
                by_var.setdefault(i, []).append(idx)
    for idxs in by_var.values():
        for other in idxs[1:]:
            ra, rb = find(idxs[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    groups = {}
    for idx in range(n):
        groups.setdefault(find(idx), []).append(gens[idx])
    return list(groups.values())


def _compress(gens):
    """Restrict to support variables and sort them by column signature."""
    nv = len(gens[0])
    support = [i for i in range(nv) if any(g[i] for g in gens)]
    rows = sorted(tuple(g[i] for i in support) for g in gens)
    cols = sorted(range(len(support)), key=lambda c: tuple(r[c] for r in rows))
    return tuple(sorted(tuple(r[c] for c in cols) for r in rows))


def hilbert_series(ideal, numvars=None, node_cap=None):
    """Hilbert series of K[x]/I in canonical (1-t)^K form."""
    if ideal.is_unit():
        raise ValueError("the unit ideal has zero quotient")
    n = numvars if numvars is not None else len(ideal.labels)
    worker = _HilbertWorker(node_cap)
    num = worker.numerator(list(ideal.gens))
    return HilbertSeries(num, n)


def hilbert_function_direct(ideal, degree):
    """Count degree-d standard monomials by direct enumeration (oracle)."""
    n = len(ideal.labels)
    gens = ideal.gens
    count = 0
    mono = [0] * n

    def rec(i, rem):
        nonlocal count
        if i == n - 1:
            mono[i] = rem
            if not any(all(g[j] <= mono[j] for j in range(n)) for g in gens):
                count += 1
            return
        for e in range(rem + 1):
            mono[i] = e
            rec(i + 1, rem - e)
        mono[i] = 0

    if n == 0:
        return 1 if degree == 0 else 0
    rec(0, degree)
    return count


def face_count_polynomial(ideal, node_cap=None):
    """Face numbers of the simplicial complex of a squarefree ideal.

    Returns coefficients f[k] = number of k-vertex independent sets (faces).
    This recursion (delete vertex / use vertex) is independent of the pivot
    splitting used for the Hilbert series and serves as its cross-check.
    """
    if not ideal.is_squarefree():
        raise ValueError("face counts need a squarefree ideal")
    n = len(ideal.labels)
    gens = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    state = {"nodes": 0}
    cache = {}

    def rec(vertices, gsets):
        if not gsets:
            return [comb(len(vertices), k) for k in range(len(vertices) + 1)]
        state["nodes"] += 1
        if node_cap is not None and state["nodes"] > node_cap:
            raise CapExceeded("face count node cap exceeded",
                              steps=state["nodes"])
        key = (vertices, frozenset(gsets))
        hit = cache.get(key)
        if hit is not None:
            return hit
        counts = {}
        for g in gsets:
            for v in g:
                counts[v] = counts.get(v, 0) + 1
        piv = max(sorted(counts), key=lambda v: counts[v])
        rest = frozenset(v for v in vertices if v != piv)
        without = rec(rest, frozenset(g for g in gsets if piv not in g))
        reduced = set()
        empty = False
        for g in gsets:
            h = g - {piv}
            if not h:
                empty = True
                break
            reduced.add(h)
        if empty:
            withv = None
        else:
            reduced = frozenset(h for h in reduced
                                if not any(o < h for o in reduced))
            withv = rec(rest, reduced)
        width = max(len(without), 0 if withv is None else len(withv) + 1)
        out = list(without) + [0] * (width - len(without))
        if withv is not None:
            for k, c in enumerate(withv):
                out[k + 1] += c
        while out and out[-1] == 0:
            out.pop()
        cache[key] = out
        return out

    all_vertices = frozenset(range(n))
    if any(not g for g in gens):
        raise ValueError("unit ideal has no complex")
    return rec(all_vertices, frozenset(gens))
