"""Combinatorial Markov/Groebner bases generated directly from poset structure.

These reproduce, without any Buchberger run, the generating sets the toric
engine must agree with: 2x2 minors of the chain-concatenation matrices for
the csiszar model, chain-swap quadrics and bipartite cycle lifts for the
ascending model, and circuit binomials of the incomparability graph for the
Bradley-Terry model.  Everything is deduplicated and deterministically
ordered.
"""

from itertools import combinations, product

from .polynomials import Binomial
from .posets import (GradedPoset, chain_word, grade, interval_subposets,
                     maximal_chains)


class StructuralError(ValueError):
    pass


def _as_graded(q):
    if isinstance(q, GradedPoset):
        return q
    return grade(q)


def _chain_label(graded, ch):
    if graded.member_sets is not None:
        return chain_word(graded, ch)
    return "|".join(ch)


def _pair_binomial(mono1, mono2):
    """Sign-normalized binomial from two label multisets (None if equal)."""
    m1 = tuple(sorted(mono1))
    m2 = tuple(sorted(mono2))
    if m1 == m2:
        return None
    if m1 < m2:
        m1, m2 = m2, m1
    common = _multiset_gcd(m1, m2)
    m1 = _multiset_sub(m1, common)
    m2 = _multiset_sub(m2, common)
    return (m1, m2)


def _multiset_gcd(a, b):
    out = []
    bb = list(b)
    for x in a:
        if x in bb:
            bb.remove(x)
            out.append(x)
    return tuple(out)


def _multiset_sub(a, rm):
    out = list(a)
    for x in rm:
        out.remove(x)
    return tuple(out)


def _to_binomials(pairs):
    def side(ms):
        counts = {}
        for lab in ms:
            counts[lab] = counts.get(lab, 0) + 1
        return tuple(sorted(counts.items()))
    out = [Binomial(side(m1), side(m2)) for m1, m2 in sorted(set(pairs))]
    return out


def minor_matrix(graded, element):
    """Rows/columns of M_q: chains below/above q, entries = concatenations."""
    below, above = interval_subposets(graded, element)
    rows = maximal_chains(below)
    cols = maximal_chains(above)
    entries = [[_chain_label(graded, r[:-1] + c) for c in cols] for r in rows]
    return rows, cols, entries


def csiszar_minor_basis(q):
    """All 2x2 minors of the M_q matrices, deduplicated across elements.

    Returns (binomials, raw_count): the same quadric can arise from several
    poset elements, so the raw pre-dedup count is reported alongside.
    """
    graded = _as_graded(q)
    raw = 0
    pairs = set()
    for e in graded.elements:
        rows, cols, entries = minor_matrix(graded, e)
        if len(rows) < 2 or len(cols) < 2:
            continue
        for r1, r2 in combinations(range(len(rows)), 2):
            for c1, c2 in combinations(range(len(cols)), 2):
                raw += 1
                b = _pair_binomial(
                    (entries[r1][c1], entries[r2][c2]),
                    (entries[r1][c2], entries[r2][c1]))
                if b is not None:
                    pairs.add(b)
    return _to_binomials(pairs), raw


def csiszar_minor_counts(q):
    """(raw, distinct) minor counts without materializing binomial objects."""
    basis, raw = csiszar_minor_basis(q)
    return raw, len(basis)


def _bipartite_cycles(graded, level, cap):
    """Simple alternating cycles (a_0 < a_1 > a_2 < ... > a_2s = a_0) in the
    rank (level, level+1) subposet, canonical up to rotation and reflection.

    A cycle is returned as (bottoms, tops): bottoms[j] = a_2j covered by
    tops[j-1] and tops[j].
    """
    lows = graded.levels[level]
    highs = graded.levels[level + 1]
    up = {a: [b for b in graded.poset.up_covers(a) if b in set(highs)]
          for a in lows}
    down = {b: [a for a in graded.poset.down_covers(b) if a in set(lows)]
            for b in highs}
    cycles = set()

    def canonical(bottoms, tops):
        s = len(bottoms)
        variants = []
        for shift in range(s):
            rb = bottoms[shift:] + bottoms[:shift]
            rt = tops[shift:] + tops[:shift]
            variants.append((tuple(rb), tuple(rt)))
            # reflection: reverse the walk
            fb = (rb[0],) + tuple(reversed(rb[1:]))
            ft = tuple(reversed(rt))
            variants.append((tuple(fb), tuple(ft)))
        return min(variants)

    def walk(start, bottoms, tops, used_b, used_t):
        a = bottoms[-1]
        for b in up[a]:
            if b in used_t:
                continue
            for a2 in down[b]:
                if a2 == start and len(bottoms) >= 2:
                    cycles.add(canonical(tuple(bottoms), tuple(tops) + (b,)))
                    continue
                if a2 in used_b or a2 <= start:
                    continue
                if len(bottoms) >= cap:
                    continue
                bottoms.append(a2)
                tops.append(b)
                used_b.add(a2)
                used_t.add(b)
                walk(start, bottoms, tops, used_b, used_t)
                used_b.discard(a2)
                used_t.discard(b)
                bottoms.pop()
                tops.pop()

    for start in lows:
        walk(start, [start], [], {start}, set())
    return sorted(cycles)


def bipartite_cycle_binomials(q):
    """Rank-1 case: one quadric-or-longer binomial per simple cycle."""
    graded = _as_graded(q)
    if graded.rk != 1:
        raise StructuralError("need a graded poset of rank 1")
    pairs = set()
    for bottoms, tops in _bipartite_cycles(graded, 0, len(graded.levels[0])):
        s = len(bottoms)
        plus = []
        minus = []
        for j in range(s):
            plus.append(_edge_label(graded, bottoms[j], tops[j]))
            minus.append(_edge_label(graded, bottoms[(j + 1) % s], tops[j]))
        b = _pair_binomial(plus, minus)
        if b is not None:
            pairs.add(b)
    return _to_binomials(pairs)


def _edge_label(graded, a, b):
    return _chain_label(graded, (a, b))


def _chains_through(graded, element, direction):
    """Maximal chains of the interval below (direction=-1) or above (+1)."""
    below, above = interval_subposets(graded, element)
    return maximal_chains(below if direction < 0 else above)


def ascending_lift_basis(q, degree_cap=4, guard=10 ** 6):
    """Chain-swap quadrics plus lifted cycle binomials for the ascending model.

    Class 1: for each pair of maximal chains and each nonempty subset of the
    segments between shared elements, swap the segments.  Class 2: for each
    alternating cycle in a consecutive-rank subposet, extend the cycle edges
    to maximal chains in every multiset-compatible way (identical lower parts,
    upper multisets matching).  Lifts whose sides coincide are discarded.
    """
    graded = _as_graded(q)
    if graded.rk < 1:
        raise StructuralError("need rank >= 1")
    if degree_cap < 2:
        raise StructuralError("degree cap must be at least 2")
    chains = maximal_chains(graded)
    label = {ch: _chain_label(graded, ch) for ch in chains}
    pairs = set()
    candidates = 0
    # class 1 (chains of >= 3 elements): group chain pairs by their element
    # multiset union and intersection; quadrics connect pairs in one group
    if graded.rk >= 2:
        groups = {}
        for ch1, ch2 in combinations(chains, 2):
            inter = tuple(sorted(set(ch1) & set(ch2)))
            if not inter:
                continue
            union = tuple(sorted(ch1 + ch2))
            groups.setdefault((union, inter), []).append((ch1, ch2))
        for group in groups.values():
            if len(group) < 2:
                continue
            candidates += len(group) * (len(group) - 1) // 2
            if candidates > guard:
                raise StructuralError("candidate guard exceeded")
            for (c1, c2), (d1, d2) in combinations(group, 2):
                b = _pair_binomial((label[c1], label[c2]),
                                   (label[d1], label[d2]))
                if b is not None:
                    pairs.add(b)
    # class 2: cycle lifts per consecutive-rank subposet
    down_chains = {}
    up_chains = {}
    for e in graded.elements:
        down_chains[e] = _chains_through(graded, e, -1)
        up_chains[e] = _chains_through(graded, e, +1)
    for i in range(graded.rk):
        for bottoms, tops in _bipartite_cycles(graded, i, degree_cap):
            s = len(bottoms)
            lows = [down_chains[a] for a in bottoms]
            for low_choice in product(*lows):
                ups_plus = [up_chains[tops[j]] for j in range(s)]
                ups_minus = [up_chains[tops[j]] for j in range(s)]
                plus_opts = _grouped_by_multiset(ups_plus)
                minus_opts = _grouped_by_multiset(ups_minus)
                for key, plist in plus_opts.items():
                    mlist = minus_opts.get(key, [])
                    for pc in plist:
                        for mc in mlist:
                            candidates += 1
                            if candidates > guard:
                                raise StructuralError(
                                    "candidate guard exceeded")
                            plus = []
                            minus = []
                            for j in range(s):
                                plus.append(label[low_choice[j] + pc[j]])
                                minus.append(label[
                                    low_choice[(j + 1) % s] + mc[j]])
                            b = _pair_binomial(plus, minus)
                            if b is not None:
                                pairs.add(b)
    return _to_binomials(pairs)


def _grouped_by_multiset(option_lists):
    """Group tuples from the product of option lists by element multiset."""
    groups = {}
    for choice in product(*option_lists):
        key = tuple(sorted(x for ch in choice for x in ch[1:]))
        groups.setdefault(key, []).append(choice)
    return groups


def bt_circuit_binomials(constraint, length_cap=None):
    """Circuit binomials of the incomparability graph, up to rotation and
    reflection (a reflection negates the binomial, so one representative is
    kept)."""
    items = constraint.elements
    n = len(items)
    if length_cap is None:
        length_cap = n
    if length_cap < 3:
        raise StructuralError("length cap must be at least 3")
    adj = {i: [j for j in items if j != i and not constraint.comparable(i, j)]
           for i in items}
    cycles = []

    def extend(path, used):
        last = path[-1]
        for nxt in adj[last]:
            if nxt == path[0] and len(path) >= 3:
                # canonical: anchored at the minimum, second < last
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
                continue
            if nxt in used or nxt <= path[0]:
                continue
            if len(path) >= length_cap:
                continue
            path.append(nxt)
            used.add(nxt)
            extend(path, used)
            used.discard(nxt)
            path.pop()

    for start in items:
        extend([start], {start})
    pairs = set()
    for cyc in sorted(cycles):
        r = len(cyc)
        plus = ["%s%s" % (cyc[k], cyc[(k + 1) % r]) for k in range(r)]
        minus = ["%s%s" % (cyc[(k + 1) % r], cyc[k]) for k in range(r)]
        b = _pair_binomial(plus, minus)
        if b is not None:
            pairs.add(b)
    return _to_binomials(pairs)
