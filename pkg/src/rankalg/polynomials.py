"""Multivariate polynomials over exact rationals, term orders, binomials.

Exponent vectors are plain tuples of ints indexed by a fixed variable list.
The generic Polynomial class (dict monomial -> coefficient) backs the small
non-binomial computations; the heavy binomial-only path lives in groebner.py.
"""

from fractions import Fraction


class TermOrder:
    """Total order on monomials: lex, grevlex, or weighted grevlex.

    `priority` lists variable labels from most to least significant.  For
    grevlex, having less of the least-significant variable makes a monomial
    larger (given equal degree).
    """

    __slots__ = ("kind", "priority", "weights")

    def __init__(self, kind, priority, weights=None):
        if kind not in ("lex", "grevlex", "wgrevlex"):
            raise ValueError("unknown term order kind %r" % kind)
        if kind == "wgrevlex" and weights is None:
            raise ValueError("wgrevlex needs weights")
        self.kind = kind
        self.priority = tuple(priority)
        self.weights = None if weights is None else tuple(weights)

    def key_function(self, labels):
        """Sort key on exponent tuples indexed by `labels` (larger = bigger)."""
        pos = {lab: i for i, lab in enumerate(labels)}
        pri = [pos[lab] for lab in self.priority if lab in pos]
        if len(pri) != len(labels):
            raise ValueError("term order priority does not cover the variables")
        if self.kind == "lex":
            def key(exps):
                return tuple(exps[i] for i in pri)
        elif self.kind == "grevlex":
            rev = pri[::-1]

            def key(exps):
                return (sum(exps),) + tuple(-exps[i] for i in rev)
        else:
            wt = {pos[lab]: w for lab, w in zip(self.priority, self.weights)}
            rev = pri[::-1]

            def key(exps):
                return (sum(exps[i] * wt[i] for i in range(len(exps))),) + \
                    tuple(-exps[i] for i in rev)
        return key

    @classmethod
    def default(cls, labels, kind="grevlex"):
        return cls(kind, tuple(labels))

    def with_cheapest(self, label):
        """Same order with `label` moved to least-significant position."""
        pri = tuple(l for l in self.priority if l != label) + (label,)
        return TermOrder(self.kind, pri, self.weights)

    def __repr__(self):
        return "TermOrder(%s, %d vars)" % (self.kind, len(self.priority))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))

def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Sparse polynomial: dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms, nvars):
        self.terms = {m: c for m, c in terms.items() if c}
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    @classmethod
    def variable(cls, index, nvars, coeff=1):
        m = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({m: coeff}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c} if c else {}, nvars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(out, self.nvars)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(out, self.nvars)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial({m: c * other for m, c in self.terms.items()},
                              self.nvars)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def term_mul(self, coeff, mono):
        return Polynomial({monomial_mul(m, mono): c * coeff
                           for m, c in self.terms.items()}, self.nvars)

    def power(self, k):
        result = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def leading(self, key):
        """(monomial, coeff) of the leading term under a key function."""
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def total_degrees(self):
        return {sum(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.total_degrees()) <= 1

    def evaluate(self, values):
        total = Fraction(0)
        for m, c in self.terms.items():
            v = Fraction(c)
            for i, e in enumerate(m):
                if e:
                    v *= Fraction(values[i]) ** e
            total += v
        return total

    def text(self, labels):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda t: (-sum(t), t)):
            c = self.terms[m]
            factors = []
            for lab, e in zip(labels, m):
                if e == 1:
                    factors.append(lab)
                elif e > 1:
                    factors.append("%s^%d" % (lab, e))
            mono = "·".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(mono)
            elif c == -1 and factors:
                parts.append("-" + mono)
            else:
                parts.append("%s·%s" % (c, mono) if factors else str(c))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "Polynomial(%d terms)" % len(self.terms)


class Binomial:
    """Difference of two monomials x^plus - x^minus with disjoint supports.

    plus/minus are sorted tuples of (variable label, exponent) pairs.
    """

    __slots__ = ("plus", "minus")

    def __init__(self, plus, minus):
        plus = tuple(sorted((lab, e) for lab, e in plus if e))
        minus = tuple(sorted((lab, e) for lab, e in minus if e))
        common = {lab for lab, _ in plus} & {lab for lab, _ in minus}
        if common:
            raise ValueError("binomial supports overlap on %s" % sorted(common))
        self.plus = plus
        self.minus = minus

    @classmethod
    def from_dense(cls, labels, vplus, vminus):
        return cls(tuple((labels[i], e) for i, e in enumerate(vplus) if e),
                   tuple((labels[i], e) for i, e in enumerate(vminus) if e))

    def dense(self, index):
        """(plus, minus) exponent tuples for a label -> position mapping."""
        n = len(index)
        vp = [0] * n
        vm = [0] * n
        for lab, e in self.plus:
            vp[index[lab]] = e
        for lab, e in self.minus:
            vm[index[lab]] = e
        return tuple(vp), tuple(vm)

    @property
    def degree(self):
        return sum(e for _, e in self.plus)

    def exponent_vector(self, index):
        """Dense u+ - u- vector."""
        vp, vm = self.dense(index)
        return tuple(p - m for p, m in zip(vp, vm))

    def swapped(self):
        return Binomial(self.minus, self.plus)

    def is_homogeneous(self):
        return sum(e for _, e in self.plus) == sum(e for _, e in self.minus)

    def text(self, prefix="p_"):
        def side(terms):
            if not terms:
                return "1"
            out = []
            for lab, e in terms:
                out.append("%s%s" % (prefix, lab) if e == 1
                           else "%s%s^%d" % (prefix, lab, e))
            return "·".join(out)
        return "%s − %s" % (side(self.plus), side(self.minus))

    def __eq__(self, other):
        return (isinstance(other, Binomial) and self.plus == other.plus
                and self.minus == other.minus)

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __repr__(self):
        return "Binomial(%s)" % self.text()


def binomial_as_polynomial(binomial, labels):
    index = {lab: i for i, lab in enumerate(labels)}
    vp, vm = binomial.dense(index)
    return Polynomial({vp: 1}, len(labels)) - Polynomial({vm: 1}, len(labels))
