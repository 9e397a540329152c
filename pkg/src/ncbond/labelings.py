"""Edge labelings of Hasse diagrams of bond posets and EL verification.

Two labelings are provided: the minimum labeling (a cover is labeled by its
smallest new edge under an edge ordering) and the max-min labeling on
set-partition covers (``max(min B, min B') - 1`` for the merged blocks).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Hashable, Sequence

from .bonds import Bond, bond_closure, is_noncrossing_bond
from .closure import has_one_hat
from .graph import Edge, Graph, check_ordering, edge_str, rank_of
from .poset import FinitePoset, NotGraded, grading, nc_poset, to_dot

CHAIN_LIMIT = 10**6
EL_SIZE_LIMIT = 5000


class ChainLimitExceeded(RuntimeError):
    pass


class NotEL(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HasseLabeling:
    """Labels on the cover pairs of ``poset``; ``key`` maps a label to its
    position in the total order on labels."""

    poset: FinitePoset
    labels: dict[tuple[int, int], Any]
    key: Callable[[Any], Hashable]
    kind: str

    def __getitem__(self, cover: tuple[int, int]):
        return self.labels[cover]

    def k(self, lo: int, hi: int):
        return self.key(self.labels[(lo, hi)])

    def label_str(self, label) -> str:
        return edge_str(label) if isinstance(label, tuple) else str(label)


def minimum_labeling(P: FinitePoset, sigma: Sequence[Edge]) -> HasseLabeling:
    """Each cover ``H < H'`` is labeled by the earliest edge of ``E(H') - E(H)``."""
    host = P.elements[0].host
    sigma = check_ordering(host, sigma)
    pos = rank_of(sigma)
    labels = {}
    for lo, hi in P.hasse:
        new = P.elements[hi].edges - P.elements[lo].edges
        labels[(lo, hi)] = min(new, key=pos.__getitem__)
    return HasseLabeling(P, labels, pos.__getitem__, "minimum")


def maxmin_labeling(P: FinitePoset) -> HasseLabeling:
    """``max(min B, min B') - 1`` where ``B, B'`` are the two blocks merged by a cover."""
    if not grading(P):
        raise NotGraded("the max-min labeling needs a graded poset")
    labels = {}
    for lo, hi in P.hasse:
        small = P.elements[lo].partition
        big = set(P.elements[hi].partition.blocks)
        merged = [b for b in small.blocks if b not in big]
        if len(merged) != 2:
            raise ValueError(f"cover {P.name(lo)} < {P.name(hi)} merges {len(merged)} blocks, not 2")
        labels[(lo, hi)] = max(merged[0][0], merged[1][0]) - 1
    return HasseLabeling(P, labels, lambda x: x, "maxmin")


# -- EL verification ------------------------------------------------------------

@dataclass(frozen=True)
class ELResult:
    is_el: bool
    failing_interval: tuple[int, int] | None = None
    reason: str = ""

    def __bool__(self):
        return self.is_el


def _el_failures(lab: HasseLabeling, tops: Sequence[int]) -> tuple[int, int, str] | None:
    P = lab.poset
    worst = None
    for y in tops:
        down = [z for z in range(len(P)) if P.lt(z, y)]

        @lru_cache(maxsize=None)
        def best(z: int) -> tuple[tuple, int]:
            """Lexicographically least key word from ``z`` up to ``y``, and how
            many chains realise it."""
            if z == y:
                return (), 1
            cands = []
            for c in P.upper_covers[z]:
                if P.leq(c, y):
                    word, cnt = best(c)
                    cands.append(((lab.k(z, c),) + word, cnt))
            w = min(c[0] for c in cands)
            return w, sum(cnt for word, cnt in cands if word == w)

        @lru_cache(maxsize=None)
        def increasing(z: int, prev) -> int:
            if z == y:
                return 1
            total = 0
            for c in P.upper_covers[z]:
                if P.leq(c, y):
                    k = lab.k(z, c)
                    if prev is None or k > prev:
                        total += increasing(c, k)
            return total

        for x in down:
            n_inc = increasing(x, None)
            reason = ""
            if n_inc != 1:
                reason = f"{n_inc} increasing maximal chains"
            else:
                word, cnt = best(x)
                if cnt != 1:
                    reason = "lexicographically first chain is not unique"
                elif any(a >= b for a, b in zip(word, word[1:])):
                    reason = "lexicographically first chain is not increasing"
            if reason and (worst is None or (x, y) < worst[:2]):
                worst = (x, y, reason)
    return worst


def is_el_labeling(lab: HasseLabeling) -> ELResult:
    """Every interval has exactly one increasing maximal chain and it is
    strictly lexicographically first."""
    P = lab.poset
    if len(P) > EL_SIZE_LIMIT:
        raise ChainLimitExceeded(f"EL verification is limited to {EL_SIZE_LIMIT} elements")
    fail = _el_failures(lab, range(len(P)))
    if fail is None:
        return ELResult(True)
    return ELResult(False, fail[:2], fail[2])


def _count_chains(P: FinitePoset, lo: int, hi: int) -> int:
    @lru_cache(maxsize=None)
    def count(z: int) -> int:
        if z == hi:
            return 1
        return sum(count(c) for c in P.upper_covers[z] if P.leq(c, hi))

    return count(lo)


def maximal_chains(P: FinitePoset, lo: int, hi: int):
    """All maximal chains of ``[lo, hi]`` as index tuples."""
    if _count_chains(P, lo, hi) > CHAIN_LIMIT:
        raise ChainLimitExceeded(f"more than {CHAIN_LIMIT} maximal chains")

    def rec(z):
        if z == hi:
            yield (z,)
            return
        for c in P.upper_covers[z]:
            if P.leq(c, hi):
                for rest in rec(c):
                    yield (z,) + rest

    yield from rec(lo)


def is_sn_el_labeling(lab: HasseLabeling) -> bool:
    """EL, and every maximal chain of the whole poset is labeled by a
    permutation of ``1..rank``."""
    P = lab.poset
    g = grading(P)
    if not g or P.bottom is None or P.top is None:
        return False
    n = g.length
    target = list(range(1, n + 1))
    for chain in maximal_chains(P, P.bottom, P.top):
        word = [lab[(a, b)] for a, b in zip(chain, chain[1:])]
        if not all(isinstance(w, int) for w in word) or sorted(word) != target:
            return False
    return bool(is_el_labeling(lab))


# -- decreasing chains -----------------------------------------------------------

@dataclass(frozen=True)
class DecreasingChains:
    count: int
    label_sets: tuple[frozenset, ...]


def decreasing_chains(lab: HasseLabeling, x: int, weak: bool = False,
                      verify: bool = True) -> DecreasingChains:
    """Saturated chains from the bottom to ``x`` whose labels decrease
    (strictly unless ``weak``), with the label set of each chain."""
    P = lab.poset
    b = P.bottom
    if b is None:
        raise ValueError("poset has no bottom element")
    if verify:
        fail = _el_failures(lab, [y for y in range(len(P)) if P.leq(y, x)])
        if fail is not None:
            raise NotEL(f"labeling is not EL on [{P.name(fail[0])}, {P.name(fail[1])}]")
    if _count_chains(P, b, x) > CHAIN_LIMIT:
        raise ChainLimitExceeded(f"more than {CHAIN_LIMIT} maximal chains")
    sets = []

    def rec(z, prev, acc):
        if z == x:
            sets.append(frozenset(acc))
            return
        for c in P.upper_covers[z]:
            if P.leq(c, x):
                k = lab.k(z, c)
                if prev is None or k < prev or (weak and k == prev):
                    rec(c, k, acc + [lab[(z, c)]])

    rec(b, None, [])
    return DecreasingChains(len(sets), tuple(sets))


def decreasing_chain_count(lab: HasseLabeling, x: int, weak: bool = False) -> int:
    return decreasing_chains(lab, x, weak).count


# -- hypothesis of the minimum-labeling theorem ----------------------------------

@dataclass(frozen=True)
class HypothesisResult:
    holds: bool
    counterexample: tuple[Bond, Bond, Edge] | None = None

    def __bool__(self):
        return self.holds


def min_label_nc_hypothesis(G: Graph, sigma: Sequence[Edge],
                            P: FinitePoset | None = None) -> HypothesisResult:
    """For all noncrossing bonds ``H < H'``, with ``e`` the earliest edge of
    ``E(H') - E(H)``, the bond induced on ``E(H) + e`` is noncrossing."""
    if not has_one_hat(G):
        raise ValueError("the noncrossing bond poset has no top element")
    sigma = check_ordering(G, sigma)
    pos = rank_of(sigma)
    P = nc_poset(G) if P is None else P
    seen: dict[tuple[int, Edge], bool] = {}
    for j, Hp in enumerate(P.elements):
        for i in range(len(P)):
            if not P.lt(i, j):
                continue
            H = P.elements[i]
            e = min(Hp.edges - H.edges, key=pos.__getitem__)
            if (i, e) not in seen:
                seen[(i, e)] = is_noncrossing_bond(bond_closure(G, H.edges | {e}))
            if not seen[(i, e)]:
                return HypothesisResult(False, (H, Hp, e))
    return HypothesisResult(True)


# -- export ------------------------------------------------------------------------

def labeled_dot(lab: HasseLabeling, title: str = "poset") -> str:
    return to_dot(lab.poset, lab.labels, title=title, label_str=lab.label_str)


def el_report(lab: HasseLabeling) -> dict:
    res = is_el_labeling(lab)
    P = lab.poset
    out: dict[str, Any] = {"labeling": lab.kind, "is_el": res.is_el}
    if not res:
        x, y = res.failing_interval
        out["failing_interval"] = [P.name(x), P.name(y)]
        out["reason"] = res.reason
    return out
