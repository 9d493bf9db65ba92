"""Finite posets, graded structure, order-ideal lattices, chains and linear extensions.

Elements are opaque string labels.  Constraint posets on [n] use the decimal
labels "1".."n"; lattices of order ideals label each ideal by the concatenation
of its sorted members ("0" for the empty ideal).  All enumerations are
deterministic: elements sort by label, chains sort lexicographically.
"""

import json
from itertools import combinations


class PosetError(ValueError):
    pass


def _transitive_closure(elements, pairs):
    below = {e: set() for e in elements}
    for a, b in pairs:
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for b in elements:
            extra = set()
            for a in below[b]:
                extra |= below[a] - below[b]
            if extra:
                below[b] |= extra
                changed = True
    return below


class Poset:
    """Immutable finite partial order.

    `strict` holds the full strict order as a frozenset of (a, b) pairs with
    a < b; `covers` is its transitive reduction.  Construction validates
    antisymmetry (a cycle among the declared relations raises PosetError).
    """

    __slots__ = ("elements", "strict", "covers", "_up", "_down")

    def __init__(self, elements, relations):
        elements = tuple(sorted(elements))
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate labels")
        index = set(elements)
        for a, b in relations:
            if a not in index or b not in index:
                raise PosetError("relation mentions unknown element %r" % ((a, b),))
        below = _transitive_closure(elements, relations)
        for b in elements:
            if b in below[b]:
                raise PosetError("not a partial order")
        strict = frozenset((a, b) for b in elements for a in below[b])
        # transitive reduction: a <: b iff nothing sits strictly between
        covers = []
        for a, b in strict:
            if not any((a, c) in strict and (c, b) in strict for c in elements):
                covers.append((a, b))
        self.elements = elements
        self.strict = strict
        self.covers = tuple(sorted(covers))
        up = {e: [] for e in elements}
        down = {e: [] for e in elements}
        for a, b in self.covers:
            up[a].append(b)
            down[b].append(a)
        self._up = {e: tuple(sorted(v)) for e, v in up.items()}
        self._down = {e: tuple(sorted(v)) for e, v in down.items()}

    def less(self, a, b):
        return (a, b) in self.strict

    def leq(self, a, b):
        return a == b or (a, b) in self.strict

    def up_covers(self, a):
        return self._up[a]

    def down_covers(self, a):
        return self._down[a]

    def minimal_elements(self):
        return tuple(e for e in self.elements if not self._down[e])

    def maximal_elements(self):
        return tuple(e for e in self.elements if not self._up[e])

    def comparable(self, a, b):
        return a == b or (a, b) in self.strict or (b, a) in self.strict

    def restrict(self, subset):
        """Induced subposet on `subset`."""
        sub = set(subset)
        rel = [(a, b) for (a, b) in self.strict if a in sub and b in sub]
        return Poset(sub, rel)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Poset) and self.elements == other.elements
                and self.strict == other.strict)

    def __hash__(self):
        return hash((self.elements, self.strict))

    def __repr__(self):
        return "Poset(%d elements, %d covers)" % (len(self.elements), len(self.covers))


class GradedPoset:
    """Poset whose maximal chains all have the same length rk+1.

    `rank` maps each element to its level; `levels[i]` lists the rank-i
    elements in label order.  `member_sets` is set for lattices of order
    ideals and maps each element label to the frozenset of ground items.
    """

    __slots__ = ("poset", "rank", "rk", "levels", "member_sets", "ground")

    def __init__(self, poset, rank, member_sets=None, ground=None):
        self.poset = poset
        self.rank = dict(rank)
        self.rk = max(rank.values()) if rank else 0
        levels = [[] for _ in range(self.rk + 1)]
        for e in poset.elements:
            levels[rank[e]].append(e)
        self.levels = tuple(tuple(lv) for lv in levels)
        self.member_sets = member_sets
        self.ground = ground

    @property
    def elements(self):
        return self.poset.elements

    @property
    def covers(self):
        return self.poset.covers

    def __len__(self):
        return len(self.poset)

    def __repr__(self):
        return "GradedPoset(rk=%d, levels=%s)" % (
            self.rk, tuple(len(l) for l in self.levels))


def grade(poset):
    """Attach the rank function, or raise PosetError("not graded").

    Rank is the longest cover-path length from a minimal element; the poset is
    graded iff every cover raises rank by exactly one and all maximal elements
    share the top rank.
    """
    rank = {}
    order = _linearize(poset)
    for e in order:
        downs = poset.down_covers(e)
        rank[e] = 0 if not downs else 1 + max(rank[d] for d in downs)
    for a, b in poset.covers:
        if rank[b] != rank[a] + 1:
            raise PosetError("not graded")
    if poset.elements:
        top = max(rank.values())
        for e in poset.maximal_elements():
            if rank[e] != top:
                raise PosetError("not graded")
    return GradedPoset(poset, rank)


def _linearize(poset):
    seen = set()
    order = []

    def visit(e):
        if e in seen:
            return
        seen.add(e)
        for d in poset.down_covers(e):
            visit(d)
        order.append(e)

    for e in poset.elements:
        visit(e)
    return order


def _set_label(items):
    return "".join(sorted(items)) if items else "0"


def antichain(n):
    """Constraint poset on [n] with no relations."""
    return Poset([str(i) for i in range(1, n + 1)], [])


def chain(n):
    """Constraint poset 1 < 2 < ... < n."""
    labels = [str(i) for i in range(1, n + 1)]
    return Poset(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def mixed_poset(chain_len, free):
    """Disjoint union of a chain 1<...<c and `free` incomparable elements."""
    n = chain_len + free
    labels = [str(i) for i in range(1, n + 1)]
    rel = [(str(i), str(i + 1)) for i in range(1, chain_len)]
    return Poset(labels, rel)


def boolean_lattice(n):
    """All subsets of [n] ordered by inclusion, graded by cardinality."""
    if n < 1:
        raise PosetError("need n >= 1")
    return order_ideal_lattice(antichain(n))


def order_ideal_lattice(constraint):
    """Distributive lattice of down-closed subsets of the constraint poset."""
    items = constraint.elements
    if any(len(i) != 1 for i in items):
        raise PosetError("constraint poset must use single-character labels 1..n")
    ideals = []
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            s = set(combo)
            if all(a in s for b in s for a in items if constraint.less(a, b)):
                ideals.append(frozenset(s))
    labels = {_set_label(s): s for s in ideals}
    rel = [(la, lb) for la in labels for lb in labels
           if la != lb and labels[la] < labels[lb]]
    poset = Poset(labels.keys(), rel)
    rank = {lab: len(s) for lab, s in labels.items()}
    return GradedPoset(poset, rank, member_sets=dict(labels), ground=items)


def maximal_chains(graded):
    """All maximal chains, lexicographically ordered by their label sequences."""
    chains = []
    poset = graded.poset

    def extend(path):
        ups = poset.up_covers(path[-1])
        if not ups:
            chains.append(tuple(path))
            return
        for b in ups:
            path.append(b)
            extend(path)
            path.pop()

    for bottom in sorted(graded.levels[0]):
        extend([bottom])
    return chains


def chain_word(graded, chain):
    """Translate an ideal chain into a permutation word (item added per step)."""
    if graded.member_sets is None:
        raise PosetError("chain words require an order-ideal lattice")
    word = []
    for a, b in zip(chain, chain[1:]):
        diff = graded.member_sets[b] - graded.member_sets[a]
        if len(diff) != 1:
            raise PosetError("chain step adds more than one item")
        word.append(next(iter(diff)))
    return "".join(word)


def word_chain(word):
    """Inverse of chain_word: the ideal-label chain of a permutation word."""
    labels = ["0"]
    acc = []
    for ch in word:
        acc.append(ch)
        labels.append(_set_label(acc))
    return tuple(labels)


def linear_extensions(constraint):
    """All permutation words of [n] compatible with the constraints, sorted."""
    items = list(constraint.elements)
    words = []
    used = set()

    def extend(prefix):
        if len(prefix) == len(items):
            words.append("".join(prefix))
            return
        for x in items:
            if x in used:
                continue
            if all(y in used for y in items if constraint.less(y, x)):
                used.add(x)
                prefix.append(x)
                extend(prefix)
                prefix.pop()
                used.remove(x)

    extend([])
    return words


def shadows(graded, subset):
    """(upper shadow, lower shadow): covers above / covered below the set."""
    up = set()
    down = set()
    for a in subset:
        up.update(graded.poset.up_covers(a))
        down.update(graded.poset.down_covers(a))
    return tuple(sorted(up)), tuple(sorted(down))


def interval_subposets(graded, e):
    """Graded induced subposets on {a <= e} and {a >= e}."""
    poset = graded.poset
    lower = [a for a in poset.elements if poset.leq(a, e)]
    upper = [a for a in poset.elements if poset.leq(e, a)]
    return grade(poset.restrict(lower)), grade(poset.restrict(upper))


def is_lattice(graded):
    """Check unique join and meet for every pair (small posets only)."""
    poset = graded.poset
    els = poset.elements
    for a in els:
        for b in els:
            ups = [c for c in els if poset.leq(a, c) and poset.leq(b, c)]
            mins = [c for c in ups if not any(poset.less(d, c) for d in ups)]
            if len(mins) != 1:
                return False
            downs = [c for c in els if poset.leq(c, a) and poset.leq(c, b)]
            maxs = [c for c in downs if not any(poset.less(c, d) for d in downs)]
            if len(maxs) != 1:
                return False
    return True


def parse_poset(text):
    """Parse the JSON poset format.

    Either {"elements": [...], "relations": [[a,b], ...]} or the constraint
    shorthand {"n": N, "relations": [[i,j], ...]} on ground set 1..N.
    Relations need not be reduced; the transitive closure is applied.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetError("invalid JSON: %s" % exc) from None
    if not isinstance(data, dict):
        raise PosetError("poset file must contain a JSON object")
    if "n" in data:
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise PosetError("'n' must be a positive integer")
        elements = [str(i) for i in range(1, n + 1)]
    elif "elements" in data:
        elements = [str(e) for e in data["elements"]]
    else:
        raise PosetError("poset object needs 'n' or 'elements'")
    relations = [(str(a), str(b)) for a, b in data.get("relations", [])]
    return Poset(elements, relations)


def poset_shorthand(spec):
    """Builtin shorthands: boolean:n, antichain:n, chain:n, mixed:c,k."""
    kind, _, arg = spec.partition(":")
    if kind == "boolean":
        return boolean_lattice(int(arg))
    if kind == "antichain":
        return antichain(int(arg))
    if kind == "chain":
        return chain(int(arg))
    if kind == "mixed":
        c, k = arg.split(",")
        return mixed_poset(int(c), int(k))
    raise PosetError("unknown poset shorthand %r" % spec)


def random_constraint_poset(n, rng):
    """Random partial order on [n]: a random subset of a random linear order."""
    labels = [str(i) for i in range(1, n + 1)]
    perm = labels[:]
    rng.shuffle(perm)
    rel = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                rel.append((perm[i], perm[j]))
    return Poset(labels, rel)


def random_graded_poset(max_size, rng):
    """Random graded poset: random level sizes, covers with full reachability."""
    while True:
        nlevels = rng.randint(2, 4)
        sizes = [rng.randint(1, 4) for _ in range(nlevels)]
        if sum(sizes) <= max_size:
            break
    labels = []
    for i, size in enumerate(sizes):
        labels.append(["%d%s" % (i, chr(ord('a') + j)) for j in range(size)])
    rel = []
    for i in range(nlevels - 1):
        lo, hi = labels[i], labels[i + 1]
        for b in hi:
            rel.append((rng.choice(lo), b))
        for a in lo:
            if not any((a, b) in rel for b in hi):
                rel.append((a, rng.choice(hi)))
        for a in lo:
            for b in hi:
                if rng.random() < 0.3:
                    rel.append((a, b))
    return grade(Poset([l for lv in labels for l in lv], rel))
