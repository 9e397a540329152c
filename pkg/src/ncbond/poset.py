"""Finite posets: Hasse diagrams, Möbius values, grading, lattice tests,
characteristic polynomials, products, isomorphism and DOT export.

Elements are stored by index; order relations are kept as Python ints used
as bitsets, ``below[i]`` holding the strict down-set of ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Sequence

from .bonds import Bond, enumerate_bonds, enumerate_noncrossing_bonds
from .graph import Graph
from .polynomial import Polynomial, has_internal_zero  # noqa: F401  (re-export)


class NotGraded(ValueError):
    """A rank-dependent quantity was requested for a non-graded poset."""


class NotALattice(ValueError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """A finite poset on indexed payloads.

    ``elements`` must be listed in a linear extension (every element after
    everything below it).
    """

    elements: tuple[Any, ...]
    below: tuple[int, ...]
    names: tuple[str, ...] = field(default=())

    @classmethod
    def from_relation(cls, elements: Sequence[Any], leq: Callable[[Any, Any], bool],
                      names: Sequence[str] | None = None) -> "FinitePoset":
        """Build from a ``leq`` predicate; elements are re-sorted by down-set size."""
        elements = list(elements)
        n = len(elements)
        below = [0] * n
        for i in range(n):
            for j in range(n):
                if i != j and leq(elements[j], elements[i]):
                    below[i] |= 1 << j
        order = sorted(range(n), key=lambda i: (bin(below[i]).count("1"), i))
        pos = {old: new for new, old in enumerate(order)}
        new_below = []
        for old in order:
            m = 0
            for j in _bits(below[old]):
                m |= 1 << pos[j]
            new_below.append(m)
        if names is None:
            names = [str(x) for x in elements]
        return cls(tuple(elements[i] for i in order), tuple(new_below), tuple(names[i] for i in order))

    def __len__(self):
        return len(self.elements)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(self.elements[i])

    def index(self, element) -> int:
        return self._index[element]

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def above(self) -> tuple[int, ...]:
        up = [0] * len(self)
        for i, m in enumerate(self.below):
            for j in _bits(m):
                up[j] |= 1 << i
        return tuple(up)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.below[j] >> i & 1)

    def lt(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for i, m in enumerate(self.below):
            shadow = 0
            for j in _bits(m):
                shadow |= self.below[j]
            out.append(tuple(_bits(m & ~shadow)))
        return tuple(out)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        up: list[list[int]] = [[] for _ in self.elements]
        for i, lows in enumerate(self.lower_covers):
            for j in lows:
                up[j].append(i)
        return tuple(tuple(sorted(u)) for u in up)

    @cached_property
    def hasse(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(lower, upper)``, sorted."""
        return tuple(sorted((j, i) for i, lows in enumerate(self.lower_covers) for j in lows))

    @cached_property
    def bottom(self) -> int | None:
        mins = [i for i, m in enumerate(self.below) if m == 0]
        return mins[0] if len(mins) == 1 else None

    @cached_property
    def top(self) -> int | None:
        maxs = [i for i, m in enumerate(self.above) if m == 0]
        return maxs[0] if len(maxs) == 1 else None

    @cached_property
    def maximal(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.above) if m == 0)

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        b = self.bottom
        return () if b is None else self.upper_covers[b]

    def interval(self, x: int, y: int) -> list[int]:
        return [z for z in range(len(self)) if self.leq(x, z) and self.leq(z, y)]


# -- constructors over bonds -------------------------------------------------

def _bond_poset(bonds: list[Bond]) -> FinitePoset:
    masks = [b.mask for b in bonds]
    n = len(bonds)
    below = []
    # enumerate_* emits bonds by component count descending, a linear extension
    for i in range(n):
        mi = masks[i]
        m = 0
        for j in range(i):
            mj = masks[j]
            if mj & ~mi == 0 and mj != mi:
                m |= 1 << j
        below.append(m)
    return FinitePoset(tuple(bonds), tuple(below), tuple(str(b) for b in bonds))


def nc_poset(G: Graph) -> FinitePoset:
    """Noncrossing bonds of ``G`` ordered by edge-set inclusion."""
    return _bond_poset(enumerate_noncrossing_bonds(G))


def bond_lattice(G: Graph) -> FinitePoset:
    return _bond_poset(enumerate_bonds(G))


# -- Möbius function, grading, characteristic polynomial ---------------------

def mobius(P: FinitePoset) -> list[int]:
    """``mu(bottom) = 1`` and ``mu(x) = -sum_{y < x} mu(y)``."""
    if P.bottom is None:
        raise ValueError("poset has no bottom element")
    mu = [0] * len(P)
    for i, m in enumerate(P.below):
        mu[i] = 1 if m == 0 else -sum(mu[j] for j in _bits(m))
    return mu


@dataclass
class Grading:
    graded: bool
    rank: list[int] | None = None
    short_chain: list[int] | None = None
    long_chain: list[int] | None = None

    @property
    def length(self) -> int:
        if not self.graded:
            raise NotGraded("poset is not graded")
        return max(self.rank) if self.rank else 0

    def __bool__(self):
        return self.graded


def grading(P: FinitePoset) -> Grading:
    """Rank function, or a shortest and a longest maximal chain as witness."""
    if P.bottom is None:
        raise ValueError("poset has no bottom element")
    n = len(P)
    lo = [0] * n
    hi = [0] * n
    lo_prev = [-1] * n
    hi_prev = [-1] * n
    for i in range(n):
        covers = P.lower_covers[i]
        if not covers:
            continue
        lo_prev[i] = min(covers, key=lambda j: (lo[j], j))
        hi_prev[i] = max(covers, key=lambda j: (hi[j], -j))
        lo[i] = lo[lo_prev[i]] + 1
        hi[i] = hi[hi_prev[i]] + 1
    maxes = P.maximal
    if all(lo[i] == hi[i] for i in range(n)) and len({lo[i] for i in maxes}) == 1:
        return Grading(True, rank=lo)

    def chain(end, prev):
        out = [end]
        while prev[out[-1]] != -1:
            out.append(prev[out[-1]])
        return out[::-1]

    s = min(maxes, key=lambda i: (lo[i], i))
    t = max(maxes, key=lambda i: (hi[i], -i))
    return Grading(False, short_chain=chain(s, lo_prev), long_chain=chain(t, hi_prev))


def rank_function(P: FinitePoset) -> list[int]:
    g = grading(P)
    if not g.graded:
        raise NotGraded("poset is not graded")
    return g.rank


def characteristic_polynomial(P: FinitePoset) -> Polynomial:
    """``sum_x mu(x) t^(rank(P) - rank(x))``; only for graded posets."""
    rank = rank_function(P)
    top_rank = max(rank)
    coeffs = [0] * (top_rank + 1)
    for i, m in enumerate(mobius(P)):
        coeffs[top_rank - rank[i]] += m
    return Polynomial(tuple(coeffs))


def whitney_numbers(P: FinitePoset) -> list[int]:
    """``w_i`` = sum of Möbius values at rank ``i``."""
    rank = rank_function(P)
    w = [0] * (max(rank) + 1)
    for i, m in enumerate(mobius(P)):
        w[rank[i]] += m
    return w



# -- lattice structure --------------------------------------------------------

def _upclosed(P: FinitePoset, i: int) -> int:
    return P.above[i] | (1 << i)


def _downclosed(P: FinitePoset, i: int) -> int:
    return P.below[i] | (1 << i)


def join(P: FinitePoset, i: int, j: int) -> int | None:
    common = _upclosed(P, i) & _upclosed(P, j)
    for z in _bits(common):  # linear extension: first candidate is the only possible least one
        return z if common & ~_upclosed(P, z) == 0 else None
    return None


def meet(P: FinitePoset, i: int, j: int) -> int | None:
    common = _downclosed(P, i) & _downclosed(P, j)
    if not common:
        return None
    z = common.bit_length() - 1
    return z if common & ~_downclosed(P, z) == 0 else None


@dataclass
class LatticeReport:
    is_lattice: bool
    has_top: bool
    has_bottom: bool
    first_meetless_pair: tuple[int, int] | None
    first_joinless_pair: tuple[int, int] | None


def lattice_report(P: FinitePoset) -> LatticeReport:
    n = len(P)
    no_meet = no_join = None
    for i in range(n):
        for j in range(i + 1, n):
            if no_meet is None and meet(P, i, j) is None:
                no_meet = (i, j)
            if no_join is None and join(P, i, j) is None:
                no_join = (i, j)
            if no_meet and no_join:
                break
        if no_meet and no_join:
            break
    return LatticeReport(
        is_lattice=n > 0 and no_meet is None and no_join is None,
        has_top=P.top is not None,
        has_bottom=P.bottom is not None,
        first_meetless_pair=no_meet,
        first_joinless_pair=no_join,
    )


def is_lattice(P: FinitePoset) -> bool:
    return lattice_report(P).is_lattice


def join_all(P: FinitePoset, items) -> int | None:
    items = list(items)
    if not items:
        return P.bottom
    acc = items[0]
    for x in items[1:]:
        acc = join(P, acc, x)
        if acc is None:
            return None
    return acc


def is_atomic(P: FinitePoset) -> bool:
    """Every element is the join of the atoms below it."""
    if not is_lattice(P):
        raise NotALattice("atomicity is only tested on lattices")
    for i in range(len(P)):
        if i == P.bottom:
            continue
        atoms = [a for a in P.atoms if P.leq(a, i)]
        if join_all(P, atoms) != i:
            return False
    return True


def is_semimodular(P: FinitePoset) -> bool:
    """Whenever ``x ^ y`` is covered by both, both are covered by ``x v y``."""
    if not is_lattice(P):
        raise NotALattice("semimodularity is only tested on lattices")
    n = len(P)
    for x in range(n):
        for y in range(x + 1, n):
            m = meet(P, x, y)
            if x in P.upper_covers[m] and y in P.upper_covers[m]:
                j = join(P, x, y)
                if x not in P.lower_covers[j] or y not in P.lower_covers[j]:
                    return False
    return True


# -- products and isomorphism -------------------------------------------------

def poset_product(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    pairs = [(i, j) for i in range(len(P)) for j in range(len(Q))]
    return FinitePoset.from_relation(
        pairs,
        lambda a, b: P.leq(a[0], b[0]) and Q.leq(a[1], b[1]),
        names=[f"({P.name(i)}, {Q.name(j)})" for i, j in pairs],
    )


ISO_LIMIT = 200


def _signature(P: FinitePoset) -> list[tuple]:
    depth = [0] * len(P)
    for i in range(len(P)):
        lows = P.lower_covers[i]
        depth[i] = 1 + max((depth[j] for j in lows), default=-1)
    return [
        (depth[i], len(P.lower_covers[i]), len(P.upper_covers[i]),
         bin(P.below[i]).count("1"), bin(P.above[i]).count("1"))
        for i in range(len(P))
    ]


def are_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    """Exact backtracking search for an order isomorphism."""
    if max(len(P), len(Q)) > ISO_LIMIT:
        raise ValueError(f"isomorphism test limited to {ISO_LIMIT} elements")
    if len(P) != len(Q) or len(P.hasse) != len(Q.hasse):
        return False
    sp, sq = _signature(P), _signature(Q)
    if sorted(sp) != sorted(sq):
        return False
    n = len(P)
    candidates = [[j for j in range(n) if sq[j] == sp[i]] for i in range(n)]
    image = [-1] * n
    used = [False] * n

    def consistent(i, j):
        for k in range(i):
            if P.leq(k, i) != Q.leq(image[k], j) or P.leq(i, k) != Q.leq(j, image[k]):
                return False
        return True

    def rec(i):
        if i == n:
            return True
        for j in candidates[i]:
            if not used[j] and consistent(i, j):
                image[i] = j
                used[j] = True
                if rec(i + 1):
                    return True
                used[j] = False
        image[i] = -1
        return False

    return rec(0)


def chain_poset(length: int) -> FinitePoset:
    """The chain ``0 < 1 < ... < length``."""
    return FinitePoset.from_relation(list(range(length + 1)), lambda a, b: a <= b)


def boolean_lattice(k: int) -> FinitePoset:
    return FinitePoset.from_relation(list(range(1 << k)), lambda a, b: a & ~b == 0)


# -- DOT export -----------------------------------------------------------------

def to_dot(P: FinitePoset, labels: dict[tuple[int, int], Any] | None = None,
           title: str = "poset", label_str: Callable[[Any], str] = str) -> str:
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(len(P)):
        lines.append(f'  n{i} [label="{P.name(i)}"];')
    for lo, hi in P.hasse:
        if labels is not None and (lo, hi) in labels:
            lines.append(f'  n{lo} -> n{hi} [label="{label_str(labels[(lo, hi)])}"];')
        else:
            lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
