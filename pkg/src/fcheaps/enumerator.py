"""Breadth-first enumeration of reduced FC heaps with validation reports.

Heaps grow one maximal element at a time; layers are deduplicated by
canonical word, so each FC element appears exactly once per length.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field

from .coxeter import CoxeterGraph, GroupType, build_graph, realize_permutation
from .genfunc import (affine_periodic_part, card_involutions, length_genfunc,
                      maj_genfunc, maj_genfunc_by_descents, reconcile,
                      ReconcileError)
from .heaps import (Heap, classify_involution, extend, is_alternating,
                    is_self_dual, major_index)
from .qpoly import PeriodError, PeriodReport, TPoly
from .walks import UP, DOWN, FLAT, Walk, encode_walk

FILTERS = ("all", "involutions", "alternating")

AFFINE_DEFAULT_WINDOW = {"affA": 40, "affC": 60, "affB": 150, "affD": 60}


class MemoryGuardError(RuntimeError):
    """A BFS layer outgrew the configured cap."""


def passes_filter(h: Heap, mode: str) -> bool:
    if mode == "all":
        return True
    if mode == "involutions":
        return is_self_dual(h)
    if mode == "alternating":
        if not is_self_dual(h):
            return False
        if h.graph.group.family in ("B", "D"):
            return classify_involution(h).kind == "alternating"
        return is_alternating(h)
    raise ValueError(f"unknown filter {mode!r}; expected one of {FILTERS}")


def iter_fc(g: CoxeterGraph, max_length: int | None,
            layer_cap: int = 10 ** 7):
    """Yield (length, heap) for every reduced FC heap, lengths ascending.

    max_length None runs until the group is exhausted (finite families).
    """
    layer = {(): Heap.empty(g)}
    length = 0
    yield 0, layer[()]
    while layer and (max_length is None or length < max_length):
        nxt: dict[tuple[int, ...], Heap] = {}
        for h in layer.values():
            for s in range(g.size):
                child = extend(h, s)
                if child is None:
                    continue
                key = child.canonical_word
                if key not in nxt:
                    if len(nxt) >= layer_cap:
                        raise MemoryGuardError(
                            f"layer {length + 1} exceeds {layer_cap} heaps")
                    nxt[key] = child
        length += 1
        for key in sorted(nxt):
            yield length, nxt[key]
        layer = nxt


def enumerate_fc(g: CoxeterGraph, max_length: int | None, mode: str = "all",
                 layer_cap: int = 10 ** 7, collect: bool = False):
    """Counts per length of FC heaps passing the filter.

    Returns (counts, heaps) where counts[k] counts length-k heaps that pass
    and heaps collects them per length when requested (None otherwise).
    """
    if mode not in FILTERS:
        raise ValueError(f"unknown filter {mode!r}; expected one of {FILTERS}")
    counts: list[int] = []
    collected: list[list[Heap]] | None = [] if collect else None
    for length, h in iter_fc(g, max_length, layer_cap):
        while len(counts) <= length:
            counts.append(0)
            if collected is not None:
                collected.append([])
        if passes_filter(h, mode):
            counts[length] += 1
            if collected is not None:
                collected[length].append(h)
    if max_length is not None:
        while len(counts) <= max_length:
            counts.append(0)
            if collected is not None:
                collected.append([])
    return counts, collected


def length_profile(g: CoxeterGraph, max_length: int | None, mode: str = "involutions",
                   layer_cap: int = 10 ** 7) -> TPoly:
    """Counts-by-length as a polynomial; capped at max_length when given."""
    counts, _ = enumerate_fc(g, max_length, mode, layer_cap)
    return TPoly(counts, max_length)


def maj_profile(g: CoxeterGraph, mode: str = "involutions") -> TPoly:
    """Major index polynomial over the filtered heaps; finite families only."""
    if g.group.is_affine:
        raise ValueError("major index profiles need a finite family")
    total = [0]
    for _length, h in iter_fc(g, None):
        if passes_filter(h, mode):
            m = major_index(h)
            while len(total) <= m:
                total.append(0)
            total[m] += 1
    return TPoly(total)


def descent_profiles(g: CoxeterGraph, mode: str = "alternating") -> dict[int, TPoly]:
    """Major index polynomial per descent count over the filtered heaps."""
    if g.group.is_affine:
        raise ValueError("descent profiles need a finite family")
    acc: dict[int, list[int]] = {}
    for _length, h in iter_fc(g, None):
        if passes_filter(h, mode):
            k = len(h.descents)
            m = major_index(h)
            cs = acc.setdefault(k, [0])
            while len(cs) <= m:
                cs.append(0)
            cs[m] += 1
    return {k: TPoly(cs) for k, cs in sorted(acc.items())}


def rsk_insert(perm) -> list[list[int]]:
    """Row insertion tableau of a permutation in one-line form."""
    rows: list[list[int]] = []
    for v in perm:
        r = 0
        while True:
            if r == len(rows):
                rows.append([v])
                break
            row = rows[r]
            i = bisect.bisect_left(row, v)
            if i == len(row):
                row.append(v)
                break
            row[i], v = v, row[i]
            r += 1
    return rows


def rsk_walk(h: Heap) -> Walk:
    """Walk read off the insertion tableau of the realized permutation:
    step i rises iff the value i lands in the first row."""
    perm = realize_permutation(h.canonical_word, h.graph)
    rows = rsk_insert(perm)
    first = set(rows[0]) if rows else set()
    steps = tuple(UP if i in first else DOWN for i in range(1, len(perm) + 1))
    return Walk(0, steps)


def flats_up(w: Walk) -> Walk:
    """Copy of the walk with horizontal steps replaced by rises."""
    return Walk(w.start, tuple(UP if s == FLAT else s for s in w.steps))


@dataclass
class ValidationReport:
    """Outcome of comparing enumerated truth against the closed forms."""

    group: GroupType
    ok: bool = True
    checks: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    card: int | None = None
    maj: TPoly | None = None
    length: TPoly | None = None
    remainder: TPoly | None = None
    period: PeriodReport | None = None

    def _record(self, name: str, good: bool, detail: str = "") -> None:
        if good:
            self.checks.append(name)
        else:
            self.ok = False
            self.failures.append(f"{name}: {detail}" if detail else name)


def _first_divergence(a: TPoly, b: TPoly, upto: int) -> str:
    for i in range(upto + 1):
        ca = a.coeffs[i] if i < len(a.coeffs) else 0
        cb = b.coeffs[i] if i < len(b.coeffs) else 0
        if ca != cb:
            return f"first divergence at degree {i}: {ca} vs {cb}"
    return "no divergence in window"


def cross_validate(family: str, n: int, max_length: int | None = None,
                   layer_cap: int = 10 ** 7) -> ValidationReport:
    """Compare enumeration against every closed form available for the family."""
    t = GroupType(family, n)
    g = build_graph(t)
    report = ValidationReport(group=t)
    if not t.is_affine:
        counts, _ = enumerate_fc(g, None, "involutions", layer_cap)
        oracle_len = TPoly(counts)
        total = sum(counts)
        formula_card = card_involutions(family, n)
        report.card = total
        report._record("card", total == formula_card,
                       f"enumerated {total}, formula {formula_card}")
        oracle_maj = maj_profile(g)
        formula_maj = maj_genfunc(family, n)
        report.maj = oracle_maj
        report._record("maj", oracle_maj == formula_maj,
                       _first_divergence(oracle_maj, formula_maj,
                                         max(oracle_maj.degree(), formula_maj.degree(), 0)))
        formula_len = length_genfunc(family, n)
        report.length = oracle_len
        good = (formula_len.cap is not None
                and oracle_len.degree() <= formula_len.cap
                and oracle_len.truncate(formula_len.cap) == formula_len)
        report._record("length", good,
                       _first_divergence(oracle_len, formula_len, formula_len.cap or 0))
        if family == "B":
            alt = maj_profile(g, "alternating")
            by_desc = TPoly.zero()
            k = 0
            while True:
                piece = maj_genfunc_by_descents(n, k)
                if k > 0 and piece.is_zero():
                    break
                by_desc = by_desc + piece
                k += 1
            report._record("maj-by-descents", by_desc == alt,
                           _first_divergence(by_desc, alt,
                                             max(by_desc.degree(), alt.degree(), 0)))
            full_delta = oracle_maj - alt
            report.notes.append(
                "descent formula covers the alternating class; "
                f"peak classes add {full_delta.to_text('q')}")
        return report
    lmax = max_length if max_length is not None else AFFINE_DEFAULT_WINDOW[family]
    counts, _ = enumerate_fc(g, lmax, "involutions", layer_cap)
    oracle = TPoly(counts, lmax)
    periodic, declared = affine_periodic_part(family, n, lmax)
    try:
        remainder, period = reconcile(oracle, periodic, declared)
    except (ReconcileError, PeriodError) as e:
        report._record("reconcile", False, str(e))
        return report
    report.remainder = remainder
    report.period = period
    report._record("reconcile", True)
    report._record("period-divides", declared % period.period == 0,
                   f"detected {period.period}, declared {declared}")
    if family == "affA":
        report._record("zero-remainder", remainder.is_zero(),
                       f"remainder {remainder.to_text()}")
    return report
