"""Normal forms, Buchberger, and minimal generator counting.

Two engines share the same contracts:

* a binomial-only fast path where monomials are packed into integers.  D packs
  one exponent byte per variable (divisibility = one masked subtraction); K is
  an affine function of the exponents realizing the term order, so reduction
  steps are two integer additions and integer comparison = order comparison.
  Coefficients stay in {+1, -1} throughout.
* a generic dict-based path over exact rationals for non-binomial input.

All runs are deterministic: S-pairs are processed by increasing lcm degree
(sugar degree for homogeneous input), ties broken by the packed order key and
input index.  Resource caps raise CapExceeded, never truncate silently.
"""

from bisect import insort
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from heapq import heappush, heappop

from .polynomials import (Binomial, Polynomial, monomial_div, monomial_divides,
                          monomial_lcm, monomial_mul)


DEFAULT_BUDGET = 10 ** 7
MAX_EXPONENT = 120


class CapExceeded(RuntimeError):
    """A configured resource cap was hit; partial results are not returned."""

    def __init__(self, message, steps=None, degree=None):
        super().__init__(message)
        self.steps = steps
        self.degree = degree


class PackedOrder:
    """Packed-integer monomial arithmetic for a fixed variable list and order."""

    __slots__ = ("nvars", "kind", "H", "shift", "pri", "wvec")

    def __init__(self, labels, order):
        n = len(labels)
        pos = {lab: i for i, lab in enumerate(labels)}
        pri = [pos[l] for l in order.priority if l in pos]
        if len(pri) != n or len(set(pri)) != n:
            raise ValueError("term order must cover the variables exactly")
        self.nvars = n
        self.kind = order.kind
        self.H = int.from_bytes(b"\x80" * n, "little")
        self.shift = 8 * n
        self.pri = pri
        if order.kind == "wgrevlex":
            wt = {pos[lab]: w for lab, w in zip(order.priority, order.weights)}
            self.wvec = tuple(wt[i] for i in range(n))
        else:
            self.wvec = None

    def pack(self, exps):
        for e in exps:
            if e < 0 or e > MAX_EXPONENT:
                raise CapExceeded("exponent %d outside packed range" % e)
        D = int.from_bytes(bytes(exps), "little")
        mask = 0
        for i, e in enumerate(exps):
            if e:
                mask |= 1 << i
        return self.key_of(exps), D, mask

    def unpack(self, D):
        return tuple(D.to_bytes(self.nvars, "little"))

    def mask_of(self, D):
        mask = 0
        for i, b in enumerate(D.to_bytes(self.nvars, "little")):
            if b:
                mask |= 1 << i
        return mask

    def deg_of(self, D):
        return sum(D.to_bytes(self.nvars, "little"))

    def key_of(self, exps):
        """Order key K alone (exps may be any byte sequence)."""
        n = self.nvars
        pri = self.pri
        if self.kind == "lex":
            return int.from_bytes(bytes(exps[pri[n - 1 - s]]
                                        for s in range(n)), "little")
        if self.wvec is None:
            deg = sum(exps)
        else:
            deg = sum(w * e for w, e in zip(self.wvec, exps))
        tail = int.from_bytes(bytes(127 - exps[pri[s]] for s in range(n)),
                              "little")
        return (deg << self.shift) | tail

    def lcm_pack(self, D1, D2):
        n = self.nvars
        b1 = D1.to_bytes(n, "little")
        b2 = D2.to_bytes(n, "little")
        return self.pack(tuple(max(x, y) for x, y in zip(b1, b2)))


class BinomialGB:
    """Incremental Buchberger state for homogeneous binomial ideals.

    Basis elements are 6-tuples (pK, pD, pmask, mK, mD, mmask) with the packed
    leading monomial first.  The state supports degree-truncated completion,
    which makes minimal-generator counting a sequence of cheap updates.
    """

    def __init__(self, labels, order, budget=None, jobs=1):
        self.labels = tuple(labels)
        self.order = order
        self.ctx = PackedOrder(self.labels, order)
        self.G = []
        self.ltbytes = []      # leading-term exponent bytes per element
        self.buckets = {}      # lt degree -> [(ltD, ltmask, dK, dD)]
        self.degs = []         # sorted bucket keys
        self.pairs = []        # heap of (degL, LK, LD, i, j)
        self.steps = 0
        self.budget = budget if budget is not None else DEFAULT_BUDGET
        self.jobs = max(1, jobs)

    # -- reduction ---------------------------------------------------------

    def _nf_mono(self, K, D, mask, buckets, degs):
        ctx = self.ctx
        H = ctx.H
        curdeg = ctx.deg_of(D)
        cands = [e for d in degs if d <= curdeg for e in buckets[d]]
        steps = 0
        notmask = ~mask
        while True:
            hit = None
            for e in cands:
                if not (e[1] & notmask) and ((D | H) - e[0]) & H == H:
                    hit = e
                    break
            if hit is None:
                self.steps += steps
                if self.steps >= self.budget:
                    raise CapExceeded("reduction budget exceeded",
                                      steps=self.steps)
                return K, D, mask
            K += hit[2]
            D += hit[3]
            mask = ctx.mask_of(D)
            notmask = ~mask
            steps += 1
            if not steps & 4095 and self.steps + steps >= self.budget:
                raise CapExceeded("reduction budget exceeded",
                                  steps=self.steps + steps)

    def _nf_pair(self, plus, minus, buckets, degs):
        pK, pD, pmask = self._nf_mono(*plus, buckets, degs)
        mK, mD, mmask = self._nf_mono(*minus, buckets, degs)
        if pD == mD:
            return None
        if pK < mK:
            pK, pD, pmask, mK, mD, mmask = mK, mD, mmask, pK, pD, pmask
        return (pK, pD, pmask, mK, mD, mmask)

    # -- basis growth ------------------------------------------------------

    def _append(self, el):
        t = len(self.G)
        self.G.append(el)
        pK, pD, pmask, mK, mD, mmask = el
        ctx = self.ctx
        pb = pD.to_bytes(ctx.nvars, "little")
        self.ltbytes.append(pb)
        ldeg = sum(pb)
        if ldeg not in self.buckets:
            self.buckets[ldeg] = []
            insort(self.degs, ldeg)
        self.buckets[ldeg].append((pD, pmask, mK - pK, mD - pD))
        # Gebauer-Moeller filtering of the new pairs (M and F criteria among
        # the new pairs, then the product criterion)
        H = ctx.H
        cands = []
        for i in range(t):
            lb = bytes(map(max, self.ltbytes[i], pb))
            LD = int.from_bytes(lb, "little")
            cands.append((sum(lb), LD, lb, i, LD == self.G[i][1] + pD))
        cands.sort(key=lambda c: (c[0], c[1], c[3]))
        kept = []
        for c in cands:
            LD = c[1]
            dominated = False
            for k in kept:
                if ((LD | H) - k[1]) & H == H:
                    dominated = True
                    break
            if not dominated:
                kept.append(c)
        for degL, LD, lb, i, coprime in kept:
            if not coprime:
                heappush(self.pairs, (degL, ctx.key_of(lb), LD, i, t))

    def add_generator(self, vplus, vminus):
        """Insert one dense binomial generator (reduced against the state)."""
        if sum(vplus) != sum(vminus):
            raise ValueError("binomial generators must be homogeneous")
        plus = self.ctx.pack(vplus)
        minus = self.ctx.pack(vminus)
        if plus[1] == minus[1]:
            return None
        if plus[0] < minus[0]:
            plus, minus = minus, plus
        res = self._nf_pair(plus, minus, self.buckets, self.degs)
        if res is not None:
            self._append(res)
        return res

    def inject_reducer(self, vplus, vminus):
        """Install a known-basis element without generating S-pairs."""
        if sum(vplus) != sum(vminus):
            raise ValueError("binomial reducers must be homogeneous")
        plus = self.ctx.pack(vplus)
        minus = self.ctx.pack(vminus)
        if plus[0] < minus[0]:
            plus, minus = minus, plus
        el = plus + minus
        self.G.append(el)
        ldeg = self.ctx.deg_of(el[1])
        if ldeg not in self.buckets:
            self.buckets[ldeg] = []
            insort(self.degs, ldeg)
        self.buckets[ldeg].append((el[1], el[2], el[3] - el[0], el[4] - el[1]))

    # -- completion --------------------------------------------------------

    def complete(self, upto=None, degree_cap=None):
        """Process S-pairs; stop (quietly) past `upto`, raise past degree_cap."""
        if self.jobs > 1:
            self._complete_batched(upto, degree_cap)
            return
        while self.pairs:
            degL = self.pairs[0][0]
            if upto is not None and degL > upto:
                return
            if degree_cap is not None and degL > degree_cap:
                raise CapExceeded("S-pair degree %d beyond cap" % degL,
                                  degree=degL)
            _, LK, LD, i, j = heappop(self.pairs)
            res = self._spair_nf(LK, LD, i, j, self.buckets, self.degs)
            if res is not None:
                self._append(res)

    def _spair_nf(self, LK, LD, i, j, buckets, degs):
        gi = self.G[i]
        gj = self.G[j]
        ctx = self.ctx
        uK, uD = LK - gi[0] + gi[3], LD - gi[1] + gi[4]
        vK, vD = LK - gj[0] + gj[3], LD - gj[1] + gj[4]
        if uD == vD:
            return None
        u = (uK, uD, ctx.mask_of(uD))
        v = (vK, vD, ctx.mask_of(vD))
        if uK < vK:
            u, v = v, u
        return self._nf_pair(u, v, buckets, degs)

    def _complete_batched(self, upto, degree_cap):
        """Deterministic parallel mode: reduce one degree batch of S-pairs
        against a frozen basis, merge in index order, then insert."""
        while self.pairs:
            degL = self.pairs[0][0]
            if upto is not None and degL > upto:
                return
            if degree_cap is not None and degL > degree_cap:
                raise CapExceeded("S-pair degree %d beyond cap" % degL,
                                  degree=degL)
            batch = []
            while self.pairs and self.pairs[0][0] == degL:
                batch.append(heappop(self.pairs))
            frozen_b = {d: list(v) for d, v in self.buckets.items()}
            frozen_d = list(self.degs)

            def work(entry):
                _, LK, LD, i, j = entry
                return self._spair_nf(LK, LD, i, j, frozen_b, frozen_d)

            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(work, batch))
            for res in results:
                if res is None:
                    continue
                res = self._nf_pair(res[0:3], res[3:6], self.buckets, self.degs)
                if res is not None:
                    self._append(res)

    # -- extraction --------------------------------------------------------

    def reduced_packed(self):
        """Reduced Groebner basis as packed 6-tuples, canonical order."""
        ctx = self.ctx
        H = ctx.H
        idxs = sorted(range(len(self.G)),
                      key=lambda i: (ctx.deg_of(self.G[i][1]), self.G[i][0]))
        kept = []
        for i in idxs:
            pD, pmask = self.G[i][1], self.G[i][2]
            if any(not (self.G[k][2] & ~pmask)
                   and ((pD | H) - self.G[k][1]) & H == H for k in kept):
                continue
            kept.append(i)
        buckets = {}
        degs = []
        for k in kept:
            pK, pD, pmask, mK, mD, mmask = self.G[k]
            d = ctx.deg_of(pD)
            if d not in buckets:
                buckets[d] = []
                insort(degs, d)
            buckets[d].append((pD, pmask, mK - pK, mD - pD))
        out = []
        for k in kept:
            pK, pD, pmask, mK, mD, mmask = self.G[k]
            mK, mD, mmask = self._nf_mono(mK, mD, mmask, buckets, degs)
            out.append((pK, pD, pmask, mK, mD, mmask))
        out.sort(key=lambda el: (ctx.deg_of(el[1]), el[0], el[3]))
        return out

    def reduced_binomials(self):
        ctx = self.ctx
        out = []
        for el in self.reduced_packed():
            out.append(Binomial.from_dense(self.labels, ctx.unpack(el[1]),
                                           ctx.unpack(el[4])))
        return out

    def normal_form(self, vplus, vminus):
        """Full normal form of a dense binomial against the current state."""
        plus = self.ctx.pack(vplus)
        minus = self.ctx.pack(vminus)
        if plus[1] == minus[1]:
            return None
        if plus[0] < minus[0]:
            plus, minus = minus, plus
        return self._nf_pair(plus, minus, self.buckets, self.degs)


def _dense(bins, labels):
    index = {lab: i for i, lab in enumerate(labels)}
    return [b.dense(index) for b in bins]


def binomial_groebner_dense(pairs, labels, order, budget=None, jobs=1,
                            degree_cap=None):
    """Reduced Groebner basis on dense (plus, minus) exponent pairs.

    Unlike the Binomial type, dense pairs may share support (needed for the
    unsaturated lattice ideals inside toric saturation).
    """
    state = BinomialGB(labels, order, budget=budget, jobs=jobs)
    for vp, vm in pairs:
        state.add_generator(vp, vm)
    state.complete(degree_cap=degree_cap)
    ctx = state.ctx
    return [(ctx.unpack(el[1]), ctx.unpack(el[4]))
            for el in state.reduced_packed()]


def binomial_groebner(bins, labels, order, budget=None, jobs=1,
                      degree_cap=None):
    """Reduced Groebner basis of a homogeneous binomial ideal."""
    state = BinomialGB(labels, order, budget=budget, jobs=jobs)
    for vp, vm in _dense(bins, labels):
        state.add_generator(vp, vm)
    state.complete(degree_cap=degree_cap)
    return state.reduced_binomials()


def reducer_state(gb, labels, order):
    """BinomialGB preloaded with a Groebner basis, for normal forms only."""
    state = BinomialGB(labels, order)
    for vp, vm in _dense(gb, labels):
        state.inject_reducer(vp, vm)
    return state


def binomial_normal_form(target, gb, labels, order):
    """Normal form of `target` modulo an already-computed Groebner basis."""
    state = reducer_state(gb, labels, order)
    index = {lab: i for i, lab in enumerate(labels)}
    vp, vm = target.dense(index)
    res = state.normal_form(vp, vm)
    if res is None:
        return None
    return Binomial.from_dense(labels, state.ctx.unpack(res[1]),
                               state.ctx.unpack(res[4]))


def minimalize_binomials(bins, labels, order, budget=None):
    """Minimal generators among homogeneous binomials, counted by degree.

    Candidates are processed by increasing degree (ties by the order on
    leading terms); one is redundant iff it reduces to zero modulo the
    degree-truncated Groebner basis of everything kept before it.
    """
    state = BinomialGB(labels, order, budget=budget)
    index = {lab: i for i, lab in enumerate(labels)}
    packed = []
    for b in bins:
        vp, vm = b.dense(index)
        plus = state.ctx.pack(vp)
        minus = state.ctx.pack(vm)
        if plus[1] == minus[1]:
            continue
        if plus[0] < minus[0]:
            plus, minus = minus, plus
        packed.append((state.ctx.deg_of(plus[1]), plus[0], minus[0], plus,
                       minus, b))
    packed.sort(key=lambda t: (t[0], t[1], t[2]))
    kept = []
    counts = {}
    for deg, _pK, _mK, plus, minus, b in packed:
        state.complete(upto=deg)
        res = state._nf_pair(plus, minus, state.buckets, state.degs)
        if res is None:
            continue
        state._append(res)
        kept.append(b)
        counts[deg] = counts.get(deg, 0) + 1
    return kept, counts


def same_ideal_binomials(g1, g2, labels, order, budget=None):
    """True iff the two binomial families generate the same ideal."""
    gb1 = binomial_groebner(g1, labels, order, budget=budget)
    gb2 = binomial_groebner(g2, labels, order, budget=budget)
    if gb1 == gb2:
        return True
    index = {lab: i for i, lab in enumerate(labels)}
    st2 = reducer_state(gb2, labels, order)
    for b in g1:
        if st2.normal_form(*b.dense(index)) is not None:
            return False
    st1 = reducer_state(gb1, labels, order)
    for b in g2:
        if st1.normal_form(*b.dense(index)) is not None:
            return False
    return True


# -- generic engine ---------------------------------------------------------

def poly_normal_form(f, gens, order, labels):
    """Multivariate division remainder of f by the (nonzero) gens."""
    key = order.key_function(labels)
    lead = [(g.leading(key), g) for g in gens if g]
    remainder = Polynomial.zero(f.nvars)
    work = f
    while work:
        m, c = work.leading(key)
        for (lm, lc), g in lead:
            if monomial_divides(lm, m):
                work = work - g.term_mul(Fraction(c) / lc,
                                         monomial_div(m, lm))
                break
        else:
            t = Polynomial({m: c}, f.nvars)
            remainder = remainder + t
            work = work - t
    return remainder


def poly_buchberger(gens, order, labels, budget=None):
    """Reduced Groebner basis over the rationals (generic small-scale path)."""
    key = order.key_function(labels)
    budget = budget if budget is not None else DEFAULT_BUDGET
    nvars = len(labels)
    G = []
    for g in gens:
        if g:
            lm, lc = g.leading(key)
            G.append(g * (Fraction(1, 1) / lc))
    pairs = []
    for i in range(len(G)):
        for j in range(i):
            _push_pair(pairs, G, i, j, key)
    steps = 0
    while pairs:
        _, _, j, i = heappop(pairs)
        li, _ = G[i].leading(key)
        lj, _ = G[j].leading(key)
        L = monomial_lcm(li, lj)
        if L == monomial_mul(li, lj):
            continue  # product criterion
        s = (G[i].term_mul(1, monomial_div(L, li))
             - G[j].term_mul(1, monomial_div(L, lj)))
        r = poly_normal_form(s, G, order, labels)
        steps += 1
        if steps > budget:
            raise CapExceeded("S-pair budget exceeded", steps=steps)
        if r:
            _, lc = r.leading(key)
            r = r * (Fraction(1, 1) / lc)
            G.append(r)
            for k in range(len(G) - 1):
                _push_pair(pairs, G, len(G) - 1, k, key)
    # reduce: minimal leading terms, then tail-reduce
    lead = [g.leading(key)[0] for g in G]
    keep = []
    for i in range(len(G)):
        if not any(j != i and monomial_divides(lead[j], lead[i])
                   and (not monomial_divides(lead[i], lead[j]) or j < i)
                   for j in range(len(G))):
            keep.append(i)
    basis = [G[i] for i in keep]
    out = []
    for i, g in enumerate(basis):
        others = out + basis[i + 1:]
        r = poly_normal_form(g, others, order, labels)
        if r:
            _, lc = r.leading(key)
            out.append(r * (Fraction(1, 1) / lc))
    out.sort(key=lambda g: key(g.leading(key)[0]))
    return out


def _push_pair(pairs, G, i, j, key):
    li, _ = G[i].leading(key)
    lj, _ = G[j].leading(key)
    L = monomial_lcm(li, lj)
    heappush(pairs, (sum(L), key(L), j, i))


def buchberger(gens, order, labels, budget=None, jobs=1, degree_cap=None):
    """Reduced Groebner basis; dispatches binomial input to the fast path."""
    bins = _as_binomials(gens, labels)
    if bins is not None:
        gb = binomial_groebner(bins, labels, order, budget=budget, jobs=jobs,
                               degree_cap=degree_cap)
        return [_binomial_poly(b, labels) for b in gb]
    return poly_buchberger(gens, order, labels, budget=budget)


def _as_binomials(gens, labels):
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for g in gens:
        if isinstance(g, Binomial):
            if not g.is_homogeneous():
                return None
            out.append(g)
            continue
        if not isinstance(g, Polynomial) or len(g.terms) != 2:
            return None
        (m1, c1), (m2, c2) = sorted(g.terms.items())
        if c1 + c2 != 0 or sum(m1) != sum(m2):
            return None
        plus, minus = (m2, m1) if c2 > 0 else (m1, m2)
        gcdv = tuple(min(a, b) for a, b in zip(plus, minus))
        if any(gcdv):
            return None
        out.append(Binomial.from_dense(labels, plus, minus))
    return out


def _binomial_poly(b, labels):
    index = {lab: i for i, lab in enumerate(labels)}
    vp, vm = b.dense(index)
    return Polynomial({vp: 1}, len(labels)) - Polynomial({vm: 1}, len(labels))
