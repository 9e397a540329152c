"""Broken circuits, NBC and noncrossing NBC sets, NBB sets, increasing
spanning forests and the chromatic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .bonds import Bond
from .graph import Edge, Graph, check_ordering, edges_cross, normalize_edge, rank_of
from .polynomial import Polynomial
from .poset import FinitePoset, join

CYCLE_LIMIT = 12


def _cycles(G: Graph):
    """Edge sets of all cycles; each cycle is found once, from its smallest
    vertex, in the direction whose second vertex is smaller than its last."""
    adj = G.adjacency
    for s in G.vertices:
        path = [s]
        on_path = {s}

        def rec(v):
            for w in adj[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [s]
                    yield frozenset(normalize_edge(a, b) for a, b in zip(cyc, cyc[1:]))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from rec(w)
                    path.pop()
                    on_path.discard(w)

        yield from rec(s)


def broken_circuits(G: Graph, sigma: Sequence[Edge]) -> set[frozenset[Edge]]:
    """Every cycle with its earliest edge removed."""
    if G.n > CYCLE_LIMIT:
        raise ValueError(f"cycle enumeration is limited to n <= {CYCLE_LIMIT}")
    pos = rank_of(check_ordering(G, sigma))
    return {c - {min(c, key=pos.__getitem__)} for c in _cycles(G)}


def _forest_path(S: Iterable[Edge], u: int, v: int) -> list[Edge] | None:
    adj: dict[int, list[int]] = {}
    for a, b in S:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            out = []
            while prev[x] is not None:
                out.append(normalize_edge(x, prev[x]))
                x = prev[x]
            return out
        for y in adj.get(x, ()):
            if y not in prev:
                prev[y] = x
                stack.append(y)
    return None


def _acyclic(S: Iterable[Edge]) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in S:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_nbc(G: Graph, S: Iterable[Edge], pos: dict[Edge, int]) -> bool:
    """``S`` is a forest and no edge ``g`` outside it precedes every edge of
    the ``S``-path joining its ends (that path plus ``g`` would be a cycle
    whose broken circuit lies in ``S``)."""
    S = frozenset(S)
    if not _acyclic(S):
        return False
    for g in G.edges - S:
        p = _forest_path(S, *g)
        if p and all(pos[g] < pos[h] for h in p):
            return False
    return True


def _hereditary_sets(G: Graph, sigma: Sequence[Edge], noncrossing: bool,
                     edges: Iterable[Edge] | None = None) -> list[frozenset[Edge]]:
    """All NBC subsets (of ``edges``, default all of ``E(G)``), grown in
    ``sigma`` order; both properties are closed under taking subsets."""
    sigma = check_ordering(G, sigma)
    pos = rank_of(sigma)
    pool = sigma if edges is None else tuple(e for e in sigma if e in set(edges))
    out: list[frozenset[Edge]] = []

    def rec(start: int, cur: list[Edge]):
        out.append(frozenset(cur))
        for i in range(start, len(pool)):
            e = pool[i]
            if noncrossing and any(edges_cross(e, h) for h in cur):
                continue
            cand = cur + [e]
            if is_nbc(G, cand, pos):
                rec(i + 1, cand)

    rec(0, [])
    return out


def _by_size(sets: list[frozenset[Edge]]) -> list[int]:
    counts = [0] * (max(len(s) for s in sets) + 1)
    for s in sets:
        counts[len(s)] += 1
    return counts


def _sorted(sets: Iterable[frozenset[Edge]]) -> list[frozenset[Edge]]:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def nbc_sets(G: Graph, sigma: Sequence[Edge], k: int | None = None) -> list[frozenset[Edge]]:
    sets = _hereditary_sets(G, sigma, noncrossing=False)
    return _sorted(s for s in sets if k is None or len(s) == k)


def nbc_counts(G: Graph, sigma: Sequence[Edge]) -> list[int]:
    return _by_size(_hereditary_sets(G, sigma, noncrossing=False))


def ncnbc_sets(G: Graph, sigma: Sequence[Edge], k: int | None = None) -> list[frozenset[Edge]]:
    sets = _hereditary_sets(G, sigma, noncrossing=True)
    return _sorted(s for s in sets if k is None or len(s) == k)


def ncnbc_counts(G: Graph, sigma: Sequence[Edge]) -> list[int]:
    return _by_size(_hereditary_sets(G, sigma, noncrossing=True))


def spanning_nbc_sets(H: Bond, sigma: Sequence[Edge], noncrossing: bool = True) -> list[frozenset[Edge]]:
    """NBC subsets of ``E(H)`` (noncrossing by default) of size ``n - cc(H)``,
    i.e. spanning forests of ``H``."""
    G = H.host
    size = G.n - H.cc
    sets = _hereditary_sets(G, sigma, noncrossing, edges=H.edges)
    return _sorted(s for s in sets if len(s) == size)


# -- NBB sets ---------------------------------------------------------------------

class JoinMissing(ValueError):
    pass


def nbb_sets(L: FinitePoset, atom_order: Sequence[int]) -> dict[int, list[frozenset[int]]]:
    """Atom sets containing no bounded-below subset, grouped by their join.

    A nonempty atom set ``D`` is bounded below when some atom earlier than
    every member of ``D`` lies under the join of ``D``.  The empty set is NBB
    with join the bottom.
    """
    if L.bottom is None:
        raise ValueError("poset has no bottom element")
    atoms = list(atom_order)
    if sorted(atoms) != sorted(L.atoms):
        raise ValueError("atom order must list every atom exactly once")
    rank = {a: i for i, a in enumerate(atoms)}
    joins: dict[frozenset[int], int] = {frozenset(): L.bottom}

    def join_of(S: frozenset[int]) -> int:
        if S not in joins:
            last = max(S, key=rank.__getitem__)
            j = join(L, join_of(S - {last}), last)
            if j is None:
                raise JoinMissing(f"atoms {sorted(L.name(a) for a in S)} have no join")
            joins[S] = j
        return joins[S]

    def bounded_below(D: frozenset[int]) -> bool:
        first = min(rank[d] for d in D)
        top = join_of(D)
        return any(L.leq(a, top) for a in atoms[:first])

    out: dict[int, list[frozenset[int]]] = {}

    def rec(start: int, cur: frozenset[int]):
        out.setdefault(join_of(cur), []).append(cur)
        for i in range(start, len(atoms)):
            a = atoms[i]
            rest = sorted(cur, key=rank.__getitem__)
            ok = True
            # only subsets through the new atom can be newly bounded below
            for r in range(len(rest) + 1):
                for D in combinations(rest, r):
                    if bounded_below(frozenset(D) | {a}):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                rec(i + 1, cur | {a})

    rec(0, frozenset())
    return out


def atom_order_from_edges(P: FinitePoset, sigma: Sequence[Edge]) -> list[int]:
    """Atoms of a bond poset (single-edge bonds) listed in edge order."""
    by_edge = {}
    for a in P.atoms:
        (e,) = P.elements[a].edges
        by_edge[e] = a
    return [by_edge[e] for e in sigma if e in by_edge]


def atom_edges(P: FinitePoset, S: Iterable[int]) -> frozenset[Edge]:
    return frozenset(e for a in S for e in P.elements[a].edges)


# -- increasing spanning forests -------------------------------------------------

def increasing_spanning_forests(G: Graph, noncrossing: bool = False) -> list[frozenset[Edge]]:
    """Edge sets in which every vertex has at most one smaller neighbour.

    Such a set is a forest whose trees, rooted at their least vertex, increase
    along every root path; conversely every such forest has this property.
    """
    choices = [[None] + [u for u in G.adjacency[v] if u < v] for v in G.vertices]
    out: list[frozenset[Edge]] = []

    def rec(i: int, cur: list[Edge]):
        if i == len(choices):
            out.append(frozenset(cur))
            return
        v = i + 1
        for u in choices[i]:
            if u is None:
                rec(i + 1, cur)
                continue
            e = (u, v)
            if noncrossing and any(edges_cross(e, h) for h in cur):
                continue
            rec(i + 1, cur + [e])

    rec(0, [])
    return _sorted(out)


def isf_counts(G: Graph, noncrossing: bool = False) -> list[int]:
    return _by_size(increasing_spanning_forests(G, noncrossing))


def is_increasing_forest(G: Graph, F: Iterable[Edge]) -> bool:
    F = frozenset(F)
    if not F <= G.edges:
        raise ValueError("forest must use edges of the graph")
    smaller: dict[int, int] = {}
    for u, v in F:
        smaller[v] = smaller.get(v, 0) + 1
    return all(c <= 1 for c in smaller.values())


# -- chromatic polynomial ---------------------------------------------------------

def _contract(n: int, edges: frozenset[Edge], e: Edge) -> tuple[int, frozenset[Edge]]:
    u, v = e

    def rl(x):
        x = u if x == v else x
        return x - 1 if x > v else x

    new = set()
    for a, b in edges:
        a, b = rl(a), rl(b)
        if a != b:
            new.add(normalize_edge(a, b))
    return n - 1, frozenset(new)


@lru_cache(maxsize=100_000)
def _chromatic(n: int, edges: frozenset[Edge]) -> Polynomial:
    if not edges:
        return Polynomial.monomial(n)
    e = max(edges)
    deleted = _chromatic(n, edges - {e})
    contracted = _chromatic(*_contract(n, edges - {e}, e))
    return deleted - contracted


def chromatic_polynomial(G: Graph) -> Polynomial:
    """Deletion and contraction on the largest edge, memoised on the edge set."""
    return _chromatic(G.n, G.edges)


@dataclass(frozen=True)
class CountsReport:
    nbc: list[int]
    ncnbc: list[int]
    ncisf: list[int]

    def to_json(self) -> dict:
        return {"nbc": self.nbc, "ncnbc": self.ncnbc, "ncisf": self.ncisf}
