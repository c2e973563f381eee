"""Nonnegative lattice walks, their weight polynomials, and heap encodings.

Walks take unit up/down steps and, where allowed, horizontal steps along the
axis only.  The weight of a walk is t to the sum of its heights, either over
all points or excluding the start point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .coxeter import CoxeterGraph
from .heaps import Heap, is_alternating, is_self_dual
from .qpoly import TPoly

UP, DOWN, FLAT = 1, -1, 0

START_CHOICES = ("any", "even", "odd", "le1")
END_CHOICES = START_CHOICES + ("eq-start",)
WEIGHT_CHOICES = ("all", "exclude-start")


class WalkError(ValueError):
    """Ill-formed walk: negative height or a horizontal step off the axis."""


class EncodingError(ValueError):
    """Heap outside the encoding's domain, or walk outside the decoder's."""


@dataclass(frozen=True)
class Walk:
    """A start height and a tuple of steps from {UP, DOWN, FLAT}."""

    start: int
    steps: tuple[int, ...]

    def __post_init__(self):
        if self.start < 0:
            raise WalkError("start height must be >= 0")
        h = self.start
        for i, s in enumerate(self.steps):
            if s not in (UP, DOWN, FLAT):
                raise WalkError(f"bad step {s!r} at index {i}")
            if s == FLAT and h != 0:
                raise WalkError(f"horizontal step at height {h} (index {i})")
            h += s
            if h < 0:
                raise WalkError(f"height drops below zero after step {i}")

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> list[int]:
        """The len+1 visited heights, start included."""
        out = [self.start]
        for s in self.steps:
            out.append(out[-1] + s)
        return out

    @property
    def end(self) -> int:
        return self.start + sum(self.steps)

    def weight(self, mode: str = "all") -> int:
        hs = self.heights()
        if mode == "all":
            return sum(hs)
        if mode == "exclude-start":
            return sum(hs[1:])
        raise ValueError(f"unknown weight mode {mode!r}")

    @classmethod
    def from_heights(cls, heights: Iterable[int]) -> "Walk":
        hs = list(heights)
        if not hs:
            raise WalkError("need at least one height")
        steps = []
        for a, b in zip(hs, hs[1:]):
            if b - a not in (UP, DOWN, FLAT):
                raise WalkError(f"height jump {a} -> {b}")
            steps.append(b - a)
        return cls(hs[0], tuple(steps))


def _height_ok(h: int, constraint) -> bool:
    if isinstance(constraint, int):
        return h == constraint
    if constraint == "any":
        return True
    if constraint == "even":
        return h % 2 == 0
    if constraint == "odd":
        return h % 2 == 1
    if constraint == "le1":
        return h <= 1
    raise ValueError(f"unknown height constraint {constraint!r}")


@dataclass(frozen=True)
class WalkFamilySpec:
    """A finite family of walks of a fixed length with endpoint constraints.

    start is an exact height (int) or one of "any"/"even"/"odd"/"le1";
    end additionally accepts "eq-start".  require_touch demands a zero height
    somewhere (start and end count); strictly_positive forbids any zero
    height and is incompatible with horizontal steps and with require_touch.
    """

    n: int
    allow_horiz: bool = False
    start: object = 0
    end: object = "any"
    require_touch: bool = False
    strictly_positive: bool = False
    weight: str = "all"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("length must be >= 0")
        if isinstance(self.start, int):
            if self.start < 0:
                raise ValueError("start height must be >= 0")
        elif self.start not in START_CHOICES:
            raise ValueError(f"bad start constraint {self.start!r}")
        if isinstance(self.end, int):
            if self.end < 0:
                raise ValueError("end height must be >= 0")
        elif self.end not in END_CHOICES:
            raise ValueError(f"bad end constraint {self.end!r}")
        if self.weight not in WEIGHT_CHOICES:
            raise ValueError(f"bad weight mode {self.weight!r}")
        if self.strictly_positive and self.require_touch:
            raise ValueError("strictly_positive walks cannot touch the axis")
        if self.strictly_positive and self.allow_horiz:
            raise ValueError("strictly_positive walks admit no horizontal steps")

    def contains(self, w: Walk) -> bool:
        if len(w) != self.n:
            return False
        hs = w.heights()
        if not self.allow_horiz and FLAT in w.steps:
            return False
        if not _height_ok(w.start, self.start):
            return False
        if self.end == "eq-start":
            if w.end != w.start:
                return False
        elif not _height_ok(w.end, self.end):
            return False
        if self.require_touch and 0 not in hs:
            return False
        if self.strictly_positive and 0 in hs:
            return False
        return True


def family_poly(spec: WalkFamilySpec, tmax: int) -> TPoly:
    """Total weight polynomial of the family, exact up to degree tmax.

    Any counted point above height tmax forces the weight past the cap, so
    such states are pruned; with the exclude-start weight the (uncounted)
    start may still sit at tmax + 1.
    """
    lowest = 1 if spec.strictly_positive else 0
    max_start = tmax + (1 if spec.weight == "exclude-start" else 0)
    total = TPoly.zero(tmax)
    for h0 in range(lowest, max_start + 1):
        if not _height_ok(h0, spec.start):
            continue
        end_exact = h0 if spec.end == "eq-start" else spec.end
        total = total + _family_poly_from(h0, end_exact, spec, tmax)
    return total


def _family_poly_from(h0: int, end, spec: WalkFamilySpec, tmax: int) -> TPoly:
    lowest = 1 if spec.strictly_positive else 0
    # state: (height, touched) -> weight polynomial accumulated so far
    start_w = TPoly.one(tmax) if spec.weight == "exclude-start" else TPoly.term(h0, cap=tmax)
    if spec.weight == "all" and h0 > tmax:
        return TPoly.zero(tmax)
    states = {(h0, h0 == 0): start_w}
    for _ in range(spec.n):
        nxt: dict[tuple[int, bool], TPoly] = {}
        for (h, touched), acc in states.items():
            moves = [h + UP, h + DOWN]
            if spec.allow_horiz and h == 0:
                moves.append(0)
            for h2 in moves:
                if h2 < lowest or h2 > tmax:
                    continue
                key = (h2, touched or h2 == 0)
                add = acc.shift(h2).truncate(tmax)
                if add.is_zero():
                    continue
                nxt[key] = nxt.get(key, TPoly.zero(tmax)) + add
        states = nxt
    out = TPoly.zero(tmax)
    for (h, touched), acc in states.items():
        if isinstance(end, int):
            if h != end:
                continue
        elif not _height_ok(h, end):
            continue
        if spec.require_touch and not touched:
            continue
        out = out + acc
    return out


def count_profile(h: Heap) -> list[int]:
    """Occurrences per generator, in positional order."""
    counts = [0] * h.graph.size
    for c in h.letters:
        counts[c] += 1
    return counts


SCHEMES = ("linear", "typeA", "typeB", "affineA")


def encode_walk(h: Heap, scheme: str) -> Walk:
    """Walk of an alternating self-dual heap under the named scheme.

    linear:  heights are the per-generator occurrence counts, left to right.
    typeA:   counts padded with a zero at both ends.
    typeB:   counts with a zero prepended; needs at most one first-generator
             occurrence, so the heap must avoid the short peak shape.
    affineA: counts around the cycle, closed by repeating the first.
    """
    if scheme not in SCHEMES:
        raise EncodingError(f"unknown scheme {scheme!r}")
    if not (is_self_dual(h) and is_alternating(h)):
        raise EncodingError("encoding needs a self-dual alternating heap")
    counts = count_profile(h)
    if scheme == "linear":
        heights = counts
    elif scheme == "typeA":
        heights = [0] + counts + [0]
    elif scheme == "typeB":
        if counts[0] > 1:
            raise EncodingError("first-generator count exceeds 1; no axis start exists")
        heights = [0] + counts
    else:
        if not h.graph.cyclic:
            raise EncodingError("affineA scheme needs a cyclic graph")
        heights = counts + [counts[0]]
    try:
        return Walk.from_heights(heights)
    except WalkError as e:
        raise EncodingError(f"counts {counts} do not form a walk: {e}") from e


def decode_walk(w: Walk, scheme: str, g: CoxeterGraph) -> Heap:
    """Inverse of encode_walk; rejects walks outside the scheme's shape."""
    if scheme not in SCHEMES:
        raise EncodingError(f"unknown scheme {scheme!r}")
    hs = w.heights()
    if scheme == "linear":
        counts = hs
    elif scheme == "typeA":
        if hs[0] != 0 or hs[-1] != 0:
            raise EncodingError("scheme typeA needs a closed walk on the axis")
        counts = hs[1:-1]
    elif scheme == "typeB":
        if hs[0] != 0:
            raise EncodingError("scheme typeB needs an axis start")
        counts = hs[1:]
    else:
        if hs[0] != hs[-1]:
            raise EncodingError("scheme affineA needs equal endpoint heights")
        if not g.cyclic:
            raise EncodingError("affineA scheme needs a cyclic graph")
        counts = hs[:-1]
    if len(counts) != g.size:
        raise EncodingError(f"walk yields {len(counts)} counts for {g.size} generators")
    elements: list[tuple[int, int]] = []   # (generator, copy index starting at 1)
    index: dict[tuple[int, int], int] = {}
    for v, c in enumerate(counts):
        for k in range(1, c + 1):
            index[(v, k)] = len(elements)
            elements.append((v, k))
    edges: list[tuple[int, int]] = []      # e1 precedes e2
    for v, c in enumerate(counts):
        for k in range(1, c):
            edges.append((index[(v, k)], index[(v, k + 1)]))
    pairs = [(i, i + 1) for i in range(g.size - 1)]
    if g.cyclic:
        pairs.append((g.size - 1, 0))
    for v, u in pairs:
        cv, cu = counts[v], counts[u]
        if abs(cv - cu) > 1 or (cv == cu and cv != 0):
            raise EncodingError(f"counts {cv},{cu} at bonded pair {v},{u} admit no interleaving")
        if cu == cv + 1:
            # u-chain wraps the v-chain: u_k < v_k < u_{k+1}
            for k in range(1, cv + 1):
                edges.append((index[(u, k)], index[(v, k)]))
                edges.append((index[(v, k)], index[(u, k + 1)]))
        elif cv == cu + 1:
            for k in range(1, cu + 1):
                edges.append((index[(v, k)], index[(u, k)]))
                edges.append((index[(u, k)], index[(v, k + 1)]))
    # layer by longest path; a cycle would mean the walk was not decodable
    n = len(elements)
    adj: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for e1, e2 in edges:
        adj[e1].append(e2)
        indeg[e2] += 1
    layer = [1] * n
    queue = [i for i in range(n) if indeg[i] == 0]
    done = 0
    while queue:
        i = queue.pop()
        done += 1
        for j in adj[i]:
            if layer[i] + 1 > layer[j]:
                layer[j] = layer[i] + 1
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if done != n:
        raise EncodingError("interleaving relations form a cycle")
    order = sorted(range(n), key=lambda i: (layer[i], elements[i][0]))
    word = tuple(elements[i][0] for i in order)
    out = Heap.from_word(g, word)
    if count_profile(out) != counts:
        raise AssertionError("decoded heap lost occurrences")
    return out


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two strictly decreasing rows of equal length; top may reach 0,
    bottom stays positive.  The weight is the sum of all entries."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("rows differ in length")
        for row, low in ((self.top, 0), (self.bottom, 1)):
            if any(a <= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not strictly decreasing")
            if row and row[-1] < low:
                raise ValueError(f"row {row} drops below {low}")

    @property
    def weight(self) -> int:
        return sum(self.top) + sum(self.bottom)

    def __len__(self) -> int:
        return len(self.top)


def walk_to_frobenius(w: Walk, mode: str) -> FrobeniusSymbol:
    """Read the corner coordinates of the grid path traced by a walk.

    mode "A" (closed walk, horizontals allowed): the first half of the
    horizontal steps, rounded down, become down steps and the rest up steps;
    then down steps move right and up steps move up.  Corners are the points
    where an up step is followed by a right step, collected in reverse path
    order.
    mode "B" (axis start): every horizontal becomes a down step; the final
    point joins the corners when the path ends with an up step.
    """
    if mode not in ("A", "B"):
        raise ValueError(f"unknown mode {mode!r}")
    steps = list(w.steps)
    if mode == "A":
        if w.start != 0 or w.end != 0:
            raise EncodingError("mode A expects a closed axis walk")
        flats = [i for i, s in enumerate(steps) if s == FLAT]
        half = len(flats) // 2
        for i in flats[:half]:
            steps[i] = DOWN
        for i in flats[half:]:
            steps[i] = UP
    else:
        if w.start != 0:
            raise EncodingError("mode B expects an axis start")
        for i, s in enumerate(steps):
            if s == FLAT:
                steps[i] = DOWN
    x = y = 0
    corners: list[tuple[int, int]] = []
    for prev, cur in zip(steps, steps[1:]):
        x_, y_ = (x, y + 1) if prev == UP else (x + 1, y)
        if prev == UP and cur == DOWN:
            corners.append((x_, y_))
        x, y = x_, y_
    if steps:
        x, y = (x, y + 1) if steps[-1] == UP else (x + 1, y)
    if mode == "B" and steps and steps[-1] == UP:
        corners.append((x, y))
    corners.reverse()
    sym = FrobeniusSymbol(tuple(a for a, _ in corners), tuple(b for _, b in corners))
    n = len(w)
    if sym.top and sym.top[0] + sym.bottom[0] > n:
        raise AssertionError("corner coordinates exceed the walk length")
    return sym
