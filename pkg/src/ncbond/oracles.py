"""Slow, obviously-correct reference computations.

Nothing here reuses the fast paths it is meant to check: the oracles walk
vertex subsets, recurse literally on definitions, or count colourings.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Edge, Graph
from .polynomial import Polynomial, interpolate

J_LIMIT = 10
CHROMATIC_LIMIT = 9
LATTICE_LIMIT = 10_000


class OracleLimit(ValueError):
    pass


def _connected(vs: frozenset[int], edges: list[Edge]) -> bool:
    vs_list = sorted(vs)
    reached = {vs_list[0]}
    grew = True
    while grew:
        grew = False
        for u, v in edges:
            if u in vs and v in vs and (u in reached) != (v in reached):
                reached |= {u, v}
                grew = True
    return reached == set(vs)


def oracle_J(G: Graph, e: Edge, f: Edge) -> list[frozenset[int]]:
    """Vertex sets of all containment-minimal induced connected subgraphs
    containing both ``e`` and ``f``."""
    if G.n > J_LIMIT:
        raise OracleLimit(f"oracle_J is limited to n <= {J_LIMIT}")
    core = frozenset(e) | frozenset(f)
    rest = [v for v in range(1, G.n + 1) if v not in core]
    edges = sorted(G.edges)
    good = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            vs = core | frozenset(extra)
            if any(g < vs for g in good):
                continue
            if _connected(vs, edges):
                good.append(vs)
    return sorted(good, key=lambda s: (len(s), sorted(s)))


def oracle_mobius(P) -> list[int]:
    """Literal recursion ``mu(x) = -sum_{y<x} mu(y)`` with down-sets found by
    walking the Hasse diagram."""
    n = len(P)
    lower: dict[int, list[int]] = {i: [] for i in range(n)}
    for lo, hi in P.hasse:
        lower[hi].append(lo)
    bottoms = [i for i in range(n) if not lower[i]]
    if len(bottoms) != 1:
        raise ValueError("poset has no bottom element")

    @lru_cache(maxsize=None)
    def down(x: int) -> frozenset[int]:
        out: set[int] = set()
        for y in lower[x]:
            out.add(y)
            out |= down(y)
        return frozenset(out)

    @lru_cache(maxsize=None)
    def mu(x: int) -> int:
        if x == bottoms[0]:
            return 1
        return -sum(mu(y) for y in down(x))

    return [mu(x) for x in range(n)]


def oracle_lattice(P) -> bool:
    """Every pair has a unique minimal upper bound and a unique maximal lower bound.

    The order is re-read pairwise from ``P.leq`` into private bitsets; for
    each incomparable pair the minimal elements of the set of upper bounds
    are those not strictly above another upper bound (dually for lower bounds).
    """
    n = len(P)
    if n > LATTICE_LIMIT:
        raise OracleLimit(f"oracle_lattice is limited to {LATTICE_LIMIT} elements")
    if n == 0:
        return False
    up = [0] * n      # strict up-sets
    down = [0] * n    # strict down-sets
    for i in range(n):
        for j in range(n):
            if i != j and P.leq(i, j):
                up[i] |= 1 << j
                down[j] |= 1 << i

    def members(mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def single(mask: int) -> bool:
        return mask != 0 and mask & (mask - 1) == 0

    for x in range(n):
        for y in range(x + 1, n):
            if up[x] >> y & 1 or down[x] >> y & 1:
                continue
            ub = up[x] & up[y]
            above_some = 0
            for z in members(ub):
                above_some |= up[z]
            if not single(ub & ~above_some):
                return False
            lb = down[x] & down[y]
            below_some = 0
            for z in members(lb):
                below_some |= down[z]
            if not single(lb & ~below_some):
                return False
    return True


def count_colorings(G: Graph, t: int) -> int:
    """Proper colourings of ``G`` with colours ``0..t-1``, by exhaustive search."""
    order = list(range(1, G.n + 1))
    earlier = {v: [u for u in G.adjacency[v] if u < v] for v in order}
    colour: dict[int, int] = {}

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        v = order[k]
        total = 0
        for c in range(t):
            if all(colour[u] != c for u in earlier[v]):
                colour[v] = c
                total += rec(k + 1)
        colour.pop(v, None)
        return total

    return rec(0)


def oracle_chromatic(G: Graph) -> Polynomial:
    if G.n > CHROMATIC_LIMIT:
        raise OracleLimit(f"oracle_chromatic is limited to n <= {CHROMATIC_LIMIT}")
    return interpolate([(t, count_colorings(G, t)) for t in range(G.n + 1)])
