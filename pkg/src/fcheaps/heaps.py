"""Heaps of words on a Coxeter graph and the full commutativity criterion.

A heap is the word's positions partially ordered by: p precedes q when p < q
and their letters are equal or bonded.  We store, per position, bitmasks of
the positions strictly below and strictly above it, plus a layer number used
for the canonical linear extension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterGraph, canonical_form, check_word


class ClassificationError(ValueError):
    """An involution heap fit no classification branch, or fit several."""


class Heap:
    """Labeled poset of a word's positions.

    below[p] / above[p] are bitmasks over positions; layer[p] is one plus the
    longest chain strictly below p.  All fields are immutable tuples, so
    extensions share parent data.
    """

    __slots__ = ("graph", "letters", "below", "above", "layer", "last",
                 "descents", "_canon")

    def __init__(self, graph, letters, below, above, layer, last, descents):
        self.graph = graph
        self.letters = letters
        self.below = below
        self.above = above
        self.layer = layer
        self.last = last            # last occurrence position per generator, -1 if absent
        self.descents = descents    # labels of maximal elements, frozenset
        self._canon = None

    @classmethod
    def from_word(cls, g: CoxeterGraph, word) -> "Heap":
        w = check_word(word, g)
        n = len(w)
        last = [-1] * g.size
        below = []
        layer = []
        for p, c in enumerate(w):
            b = 0
            lay = 0
            for u in (c, *g.neighbors(c)):
                lp = last[u]
                if lp >= 0:
                    b |= below[lp] | (1 << lp)
                    if layer[lp] > lay:
                        lay = layer[lp]
            below.append(b)
            layer.append(lay + 1)
            last[c] = p
        above = [0] * n
        nxt = [-1] * g.size
        for p in range(n - 1, -1, -1):
            c = w[p]
            a = 0
            for u in (c, *g.neighbors(c)):
                np_ = nxt[u]
                if np_ >= 0:
                    a |= above[np_] | (1 << np_)
            above[p] = a
            nxt[c] = p
        descents = frozenset(w[p] for p in range(n) if above[p] == 0)
        return cls(g, w, tuple(below), tuple(above), tuple(layer),
                   tuple(last), descents)

    @classmethod
    def empty(cls, g: CoxeterGraph) -> "Heap":
        return cls.from_word(g, ())

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def canonical_word(self) -> tuple[int, ...]:
        if self._canon is None:
            order = sorted(range(len(self.letters)),
                           key=lambda p: (self.layer[p], self.letters[p]))
            self._canon = tuple(self.letters[p] for p in order)
        return self._canon

    def __eq__(self, other) -> bool:
        if not isinstance(other, Heap):
            return NotImplemented
        return (self.graph.group == other.graph.group
                and self.canonical_word == other.canonical_word)

    def __hash__(self) -> int:
        return hash((self.graph.group, self.canonical_word))

    def __repr__(self) -> str:
        word = " ".join(self.graph.names[c] for c in self.canonical_word) or "e"
        return f"Heap({self.graph.group}, {word})"

    def occurrences(self, label: int) -> list[int]:
        return [p for p, c in enumerate(self.letters) if c == label]

    def chain(self, labels) -> list[int]:
        """Positions carrying any of the labels, in increasing position order.

        For mutually bonded/equal labels this is the heap order of the chain.
        """
        lab = set(labels)
        return [p for p, c in enumerate(self.letters) if c in lab]

    def support(self) -> frozenset[int]:
        return frozenset(self.letters)

    def restrict_word(self, labels) -> tuple[int, ...]:
        """Canonical word filtered to a label subset (the subheap's word)."""
        lab = set(labels)
        return tuple(c for c in self.canonical_word if c in lab)


def is_reduced_fc(h: Heap) -> bool:
    """Whether the word heap is a reduced word of a fully commutative element.

    Two tests over the heap, both on convex chains (chains with no outside
    element strictly between their endpoints in the order):
    (a) no two consecutive equal-letter positions form a convex pair;
    (b) no bond of label m admits a convex window of m chain elements with
        alternating letters.
    """
    g = h.graph
    letters = h.letters
    occ: list[list[int]] = [[] for _ in range(g.size)]
    for p, c in enumerate(letters):
        occ[c].append(p)
    for s in range(g.size):
        ps = occ[s]
        for i, j in zip(ps, ps[1:]):
            if h.above[i] & h.below[j] == 0:
                return False
    for s, t, m in g.edges():
        chain = sorted(occ[s] + occ[t])
        if len(chain) < m:
            continue
        for k in range(len(chain) - m + 1):
            win = chain[k:k + m]
            if any(letters[win[i]] == letters[win[i + 1]] for i in range(m - 1)):
                continue
            interior = 0
            for p in win[1:-1]:
                interior |= 1 << p
            between = h.above[win[0]] & h.below[win[-1]]
            if between & ~interior == 0:
                return False
    return True


def dual(h: Heap) -> Heap:
    """The heap with the order reversed (heap of the reversed word)."""
    return Heap.from_word(h.graph, tuple(reversed(h.letters)))


def is_self_dual(h: Heap) -> bool:
    """Order-reversal invariance; for FC heaps this marks the involutions."""
    rev = tuple(reversed(h.letters))
    return canonical_form(rev, h.graph) == h.canonical_word


def right_descents(h: Heap) -> frozenset[int]:
    """Labels of the maximal elements."""
    return h.descents


def left_descents(h: Heap) -> frozenset[int]:
    """Labels of the minimal elements."""
    return frozenset(h.letters[p] for p in range(len(h.letters)) if h.below[p] == 0)


def major_index(h: Heap) -> int:
    """Sum of the graph's statistic weights over the right descent labels."""
    g = h.graph
    if g.maj_weight is None:
        raise ValueError(f"major index is not defined for family {g.group.family}")
    return sum(g.maj_weight[s] for s in h.descents)


class _NotMergeable(Exception):
    pass


def _fork_normalize(h: Heap) -> tuple[tuple[int, ...], set[int]]:
    """Merge each fork pair into its first branch at the word level.

    An incomparable branch pair collapses to one letter; otherwise the fork
    elements must form a chain and are relabeled to the first branch.
    Returns the normalized word and the set of retired branch labels.
    Raises _NotMergeable when some fork's elements are not a chain.
    """
    g = h.graph
    word = list(h.canonical_word)
    drop_positions: set[int] = set()
    relabel: dict[int, int] = {}
    for a, b, _joint in g.forks:
        fpos = [p for p, c in enumerate(h.letters) if c in (a, b)]
        if len(fpos) == 2 and {h.letters[fpos[0]], h.letters[fpos[1]]} == {a, b} \
                and not (h.below[fpos[1]] >> fpos[0]) & 1:
            # commuting pair in the same gap: collapse to a single letter
            canon_idx = [i for i, c in enumerate(word) if c in (a, b)]
            drop_positions.add(canon_idx[1])
            relabel[b] = a
            continue
        for p, q in zip(fpos, fpos[1:]):
            if not (h.below[q] >> p) & 1:
                raise _NotMergeable
        relabel[b] = a
    out = tuple(relabel.get(c, c) for i, c in enumerate(word) if i not in drop_positions)
    return out, {b for a, b, _ in g.forks}


def _edge_chains_alternate(h: Heap, skip_labels: set[int] = frozenset()) -> bool:
    for s, t, _m in h.graph.edges():
        if s in skip_labels or t in skip_labels:
            continue
        prev = -1
        for p, c in enumerate(h.letters):
            if c == s or c == t:
                if c == prev:
                    return False
                prev = c
    return True


def is_alternating(h: Heap) -> bool:
    """Every bonded pair's occurrences interleave strictly.

    On fork graphs the two branch generators are first merged into a single
    partner of the joint: an incomparable branch pair counts as one element,
    and all branch elements must form a chain for the merge to make sense.
    """
    try:
        word, skips = _fork_normalize(h)
    except _NotMergeable:
        return False
    if skips:
        h = Heap.from_word(h.graph, word)
    return _edge_chains_alternate(h, skips)


def _strict_fork_alternating(h: Heap) -> bool:
    """Fork image test: each fork is either a collapsed commuting pair or a
    chain whose labels strictly alternate between the two branches; the
    merged word must then alternate along every remaining bond."""
    g = h.graph
    word = list(h.canonical_word)
    drop: set[int] = set()
    relabel: dict[int, int] = {}
    for a, b, _joint in g.forks:
        fpos = [p for p, c in enumerate(h.letters) if c in (a, b)]
        labels = [h.letters[p] for p in fpos]
        if len(fpos) == 2 and set(labels) == {a, b} and not (h.below[fpos[1]] >> fpos[0]) & 1:
            canon_idx = [i for i, c in enumerate(word) if c in (a, b)]
            drop.add(canon_idx[1])
            relabel[b] = a
            continue
        for p, q in zip(fpos, fpos[1:]):
            if not (h.below[q] >> p) & 1:
                return False
        if any(x == y for x, y in zip(labels, labels[1:])):
            return False
        relabel[b] = a
    merged = tuple(relabel.get(c, c) for i, c in enumerate(word) if i not in drop)
    hn = Heap.from_word(g, merged) if relabel else h
    return _edge_chains_alternate(hn, {b for _a, b, _ in g.forks})


def _low_part_alternating(h: Heap, j: int) -> bool:
    """Peak condition on the labels below the peak: dropping one copy of the
    peak label must leave a self-dual alternating heap that is not itself a
    peak of the low path (otherwise the peak index would not be unique)."""
    g = h.graph
    sub_low = list(h.restrict_word(range(j)))
    tops = [i for i, c in enumerate(sub_low) if c == j - 1]
    if len(tops) != 2:
        return False
    for pick in tops:
        trimmed = sub_low[:pick] + sub_low[pick + 1:]
        cand = Heap.from_word(g, trimmed)
        if not (is_self_dual(cand) and _edge_chains_alternate(cand)):
            continue
        if any(_path_peak_at(cand, j2, j - 1) for j2 in range(1, j)):
            continue
        return True
    return False


def _chain_condition(h: Heap, j: int) -> bool:
    """The peak meets the lower labels in one of two fixed chain shapes."""
    if j < 2:
        return True
    seq = tuple(h.letters[p] for p in h.chain((j - 2, j - 1)))
    return seq in ((j - 1, j - 1), (j - 2, j - 1, j - 1, j - 2))


def _path_peak_at(h: Heap, j: int, top: int) -> bool:
    """Peak test at index j for the path on label positions 0..top."""
    template = tuple(range(j - 1, top + 1)) + tuple(range(top - 1, j - 2, -1))
    sub = h.restrict_word(range(j - 1, top + 1))
    if canonical_form(sub, h.graph) != canonical_form(template, h.graph):
        return False
    return _chain_condition(h, j) and _low_part_alternating(h, j)


def _right_peak_at(h: Heap, j: int) -> bool:
    """Peak test at index j (1-based generator subscript), families B and D."""
    g = h.graph
    n = g.group.n
    if g.group.family == "B":
        return _path_peak_at(h, j, n - 1)
    high = range(j - 1, n + 1)
    template = tuple(range(j - 1, n + 1)) + tuple(range(n - 2, j - 2, -1))
    if canonical_form(h.restrict_word(high), g) != canonical_form(template, g):
        return False
    return _chain_condition(h, j) and _low_part_alternating(h, j)


@dataclass(frozen=True)
class Classification:
    kind: str               # "alternating" or "right_peak"
    peak: int | None = None


def classify_involution(h: Heap) -> Classification:
    """Partition a self-dual FC heap of family B or D into its counting class.

    Right-peak indices are tried first; if none matches, the heap must pass
    the strict alternating test (fork labels alternating or a collapsed
    commuting pair, merged word alternating along every bond).
    """
    g = h.graph
    fam = g.group.family
    if fam not in ("B", "D"):
        raise ValueError(f"classification is defined for families B and D, not {fam}")
    if not is_self_dual(h):
        raise ClassificationError("heap is not self-dual")
    n = g.group.n
    peaks = [j for j in range(1, n) if _right_peak_at(h, j)]
    if len(peaks) > 1:
        raise ClassificationError(f"multiple right-peak indices {peaks}")
    if peaks:
        return Classification("right_peak", peaks[0])
    if _strict_fork_alternating(h):
        return Classification("alternating")
    raise ClassificationError(
        f"self-dual heap {h.canonical_word} is neither right-peak nor alternating")


def extend(h: Heap, s: int) -> Heap | None:
    """Append a maximal element labeled s if the result stays reduced FC.

    Returns None when s is a right descent (the word would not lengthen) or
    when the new element closes an alternating convex braid window.
    Assumes h itself is a reduced FC heap.
    """
    g = h.graph
    if s in h.descents:
        return None
    nu = len(h.letters)
    below_nu = 0
    lay = 0
    for u in (s, *g.neighbors(s)):
        lp = h.last[u]
        if lp >= 0:
            below_nu |= h.below[lp] | (1 << lp)
            if h.layer[lp] > lay:
                lay = h.layer[lp]
    for t in g.neighbors(s):
        m = g.m[s][t]
        tail = sorted(h.occurrences(s) + h.occurrences(t))[-(m - 1):]
        if len(tail) < m - 1:
            continue
        labels = [h.letters[p] for p in tail]
        if labels[-1] != t:
            continue
        if any(labels[i] == labels[i + 1] for i in range(len(labels) - 1)):
            continue
        interior = 0
        for p in tail[1:]:
            interior |= 1 << p
        if (h.above[tail[0]] & below_nu) & ~interior == 0:
            return None
    above = list(h.above)
    bit_nu = 1 << nu
    rest = below_nu
    while rest:
        low = rest & -rest
        above[low.bit_length() - 1] |= bit_nu
        rest ^= low
    last = list(h.last)
    last[s] = nu
    descents = (h.descents - {s} - set(g.neighbors(s))) | {s}
    return Heap(g, h.letters + (s,), h.below + (below_nu,),
                tuple(above) + (0,), h.layer + (lay + 1,),
                tuple(last), frozenset(descents))
