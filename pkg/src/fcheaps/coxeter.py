"""Coxeter graph families and word-level operations.

Generators are numbered positionally 0..N-1; display names follow the usual
conventions per family ("s1", "s0", "u0", ...).  Bond labels m are 3 or 4
(an absent edge means m = 2, i.e. the generators commute).
"""

from __future__ import annotations

from dataclasses import dataclass, field


FAMILIES = ("A", "B", "D", "affA", "affC", "affB", "affD")

# minimal rank parameter per family; A:1 is the trivial one-point group
_MIN_RANK = {"A": 1, "B": 2, "D": 2, "affA": 3, "affC": 2, "affB": 2, "affD": 2}

FINITE_FAMILIES = ("A", "B", "D")


class InvalidGroupError(ValueError):
    """Family/rank combination outside the supported table."""


def normalize_family(token: str) -> str:
    for fam in FAMILIES:
        if token.lower() == fam.lower():
            return fam
    raise InvalidGroupError(f"unknown family {token!r}; expected one of {', '.join(FAMILIES)}")


@dataclass(frozen=True)
class GroupType:
    """A family token plus its rank parameter."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidGroupError(f"unknown family {self.family!r}")
        lo = _MIN_RANK[self.family]
        if self.n < lo:
            raise InvalidGroupError(f"family {self.family} needs rank >= {lo}, got {self.n}")

    @property
    def is_affine(self) -> bool:
        return self.family.startswith("aff")

    def __str__(self) -> str:
        return f"{self.family}:{self.n}"


@dataclass(frozen=True)
class CoxeterGraph:
    """Generators, bond labels, and per-generator statistics weights.

    ``forks`` lists (a, b, joint) triples of generator positions where a and b
    are the two commuting branch generators attached to the same joint.
    ``maj_weight`` is None for the affine families (no major index there).
    """

    group: GroupType
    names: tuple[str, ...]
    m: tuple[tuple[int, ...], ...] = field(repr=False)
    cyclic: bool = False
    forks: tuple[tuple[int, int, int], ...] = ()
    maj_weight: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.names)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.size) if self.m[i][j] >= 3)

    def edges(self) -> list[tuple[int, int, int]]:
        """(i, j, m) with i < j over all bonds."""
        out = []
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.m[i][j] >= 3:
                    out.append((i, j, self.m[i][j]))
        return out

    def name_of(self, i: int) -> str:
        return self.names[i]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidGroupError(f"no generator named {name!r}") from None


def _sym_matrix(size: int, bonds: dict[tuple[int, int], int]) -> tuple[tuple[int, ...], ...]:
    m = [[2] * size for _ in range(size)]
    for i in range(size):
        m[i][i] = 1
    for (i, j), v in bonds.items():
        m[i][j] = v
        m[j][i] = v
    return tuple(tuple(row) for row in m)


def build_graph(t: GroupType) -> CoxeterGraph:
    """Construct the Coxeter graph for a family/rank pair.

    A:n    path s1..s{n-1} (symmetric group on n points)
    B:n    path s1..sn with bond 4 between s{n-1} and sn
    D:n    path s1..s{n-1} plus fork generators sn, s{n+1} on s{n-1}
    affA:n cycle s0..s{n-1}
    affC:n path s0..sn with bond 4 at both end edges
    affB:n path s0..s{n-1} (bond 4 at s0-s1) plus fork sn, s{n+1} on s{n-1}
    affD:n forks u0,u1 on s1 and sn,s{n+1} on s{n-1}, path s1..s{n-1}
    """
    fam, n = t.family, t.n
    if fam == "A":
        size = n - 1
        names = tuple(f"s{i}" for i in range(1, n))
        bonds = {(i, i + 1): 3 for i in range(size - 1)}
        weights = tuple(range(1, size + 1))
        return CoxeterGraph(t, names, _sym_matrix(size, bonds), maj_weight=weights)
    if fam == "B":
        size = n
        names = tuple(f"s{i}" for i in range(1, n + 1))
        bonds = {(i, i + 1): 3 for i in range(size - 1)}
        if size >= 2:
            bonds[(size - 2, size - 1)] = 4
        weights = tuple(range(1, size + 1))
        return CoxeterGraph(t, names, _sym_matrix(size, bonds), maj_weight=weights)
    if fam == "D":
        size = n + 1
        names = tuple(f"s{i}" for i in range(1, n + 2))
        bonds = {(i, i + 1): 3 for i in range(n - 2)}      # path s1..s{n-1}
        bonds[(n - 2, n - 1)] = 3                          # joint to fork sn
        bonds[(n - 2, n)] = 3                              # joint to fork s{n+1}
        weights = tuple(range(1, n)) + (n, n + 1)
        return CoxeterGraph(t, names, _sym_matrix(size, bonds),
                            forks=((n - 1, n, n - 2),), maj_weight=weights)
    if fam == "affA":
        size = n
        names = tuple(f"s{i}" for i in range(n))
        bonds = {(i, i + 1): 3 for i in range(size - 1)}
        bonds[(0, size - 1)] = 3
        return CoxeterGraph(t, names, _sym_matrix(size, bonds), cyclic=True)
    if fam == "affC":
        size = n + 1
        names = tuple(f"s{i}" for i in range(n + 1))
        bonds = {(i, i + 1): 3 for i in range(size - 1)}
        bonds[(0, 1)] = 4
        bonds[(size - 2, size - 1)] = 4
        return CoxeterGraph(t, names, _sym_matrix(size, bonds))
    if fam == "affB":
        size = n + 2
        names = tuple(f"s{i}" for i in range(n + 2))
        bonds = {(i, i + 1): 3 for i in range(n - 1)}      # path s0..s{n-1}
        bonds[(0, 1)] = 4
        bonds[(n - 1, n)] = 3                              # joint to fork sn
        bonds[(n - 1, n + 1)] = 3                          # joint to fork s{n+1}
        return CoxeterGraph(t, names, _sym_matrix(size, bonds),
                            forks=((n, n + 1, n - 1),))
    if fam == "affD":
        size = n + 3
        names = ("u0", "u1") + tuple(f"s{i}" for i in range(1, n + 2))
        # positions: 0=u0, 1=u1, 2..n = s1..s{n-1}, n+1 = sn, n+2 = s{n+1}
        bonds = {(0, 2): 3, (1, 2): 3}
        for i in range(2, n):
            bonds[(i, i + 1)] = 3
        bonds[(n, n + 1)] = 3
        bonds[(n, n + 2)] = 3
        return CoxeterGraph(t, names, _sym_matrix(size, bonds),
                            forks=((0, 1, 2), (n + 1, n + 2, n)))
    raise InvalidGroupError(fam)


def check_word(word, g: CoxeterGraph) -> tuple[int, ...]:
    w = tuple(word)
    for c in w:
        if not (0 <= c < g.size):
            raise ValueError(f"letter {c} outside generator range 0..{g.size - 1}")
    return w


def canonical_form(word, g: CoxeterGraph) -> tuple[int, ...]:
    """Cartier-Foata style normal form of a word up to commutation moves.

    Each position gets a layer: one plus the deepest layer among earlier
    occurrences of its own letter or a bonded letter.  Sorting positions by
    (layer, letter) yields a canonical representative of the commutation
    class; two words have equal canonical forms iff they are related by
    swaps of adjacent commuting letters.
    """
    w = check_word(word, g)
    last_layer = [0] * g.size  # deepest layer seen per generator
    layers = []
    for c in w:
        lay = last_layer[c]
        for u in g.neighbors(c):
            if last_layer[u] > lay:
                lay = last_layer[u]
        lay += 1
        layers.append(lay)
        last_layer[c] = lay
    order = sorted(range(len(w)), key=lambda p: (layers[p], w[p]))
    return tuple(w[p] for p in order)


class CommutationClassOverflow(RuntimeError):
    """The commutation class exceeded the requested cap."""


def commutation_class(word, g: CoxeterGraph, cap: int = 10**6) -> set[tuple[int, ...]]:
    """All words reachable by swapping adjacent commuting letters.

    Raises CommutationClassOverflow if more than ``cap`` words appear.
    """
    w = check_word(word, g)
    seen = {w}
    stack = [w]
    while stack:
        cur = stack.pop()
        for i in range(len(cur) - 1):
            a, b = cur[i], cur[i + 1]
            if a != b and g.m[a][b] == 2:
                nxt = cur[:i] + (b, a) + cur[i + 2:]
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise CommutationClassOverflow(f"commutation class larger than {cap}")
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def realize_permutation(word, g: CoxeterGraph) -> tuple[int, ...]:
    """One-line permutation realized by a word in the finite type A family.

    Letters act left to right; generator s_i swaps positions i and i+1.
    """
    if g.group.family != "A":
        raise InvalidGroupError("permutation realization is defined for family A only")
    w = check_word(word, g)
    points = g.size + 1
    perm = list(range(1, points + 1))
    for c in w:
        perm[c], perm[c + 1] = perm[c + 1], perm[c]
    return tuple(perm)
