"""Crossing closure: the minimal joins J(e, f), the crossing-closed and
upper-crossing-closed decision procedures, and the graph family tests.

For a crossing pair ``e, f`` the shortest path ``x0 x1 ... xk`` with
``e = x0x1`` and ``f = x(k-1)xk`` decides everything: when ``k == 3`` the
join is ``G[e u f]``; otherwise every interior vertex ``x2 .. x(k-2)`` must
separate ``e`` from ``f`` and the join is induced on the path.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Union

from .graph import (
    Edge,
    Graph,
    all_pairs_shortest_paths,
    check_ordering,
    edges_cross,
    is_connected_set,
    rank_of,
    separates,
)
from .oracles import J_LIMIT, oracle_J


class NotCrossingClosed(ValueError):
    """An operation that presupposes crossing closure got a graph without it."""


# -- J(e, f) ------------------------------------------------------------------

@dataclass(frozen=True)
class NonCrossingPair:
    e: Edge
    f: Edge
    kind = "noncrossing"


@dataclass(frozen=True)
class K4Form:
    """``J(e, f) = G[e u f]``, some edge joining an end of ``e`` to one of ``f``."""

    e: Edge
    f: Edge
    vertices: frozenset[int]
    edges: frozenset[Edge]
    kind = "k4"


@dataclass(frozen=True)
class Dumbbell:
    """``J(e, f)`` is ``e``, a path of cut vertices, and ``f``."""

    e: Edge
    f: Edge
    vertices: frozenset[int]
    edges: frozenset[Edge]
    path: tuple[int, ...]
    cut_vertices: tuple[int, ...]
    kind = "dumbbell"


@dataclass(frozen=True)
class NotClosed:
    """No unique minimal induced connected subgraph contains ``e`` and ``f``.

    ``witnesses`` lists the minimal vertex sets when they were enumerated
    (graphs up to ``J_LIMIT`` vertices); ``reason`` says what the path test saw.
    """

    e: Edge
    f: Edge
    reason: str
    witnesses: tuple[frozenset[int], ...] = ()
    failing_vertex: int | None = None
    kind = "not_closed"


JResult = Union[NonCrossingPair, K4Form, Dumbbell, NotClosed]


def _crossing_path(G: Graph, sp, e: Edge, f: Edge) -> list[int] | None:
    """Shortest ``x0 .. xk`` with ``e = x0x1`` and ``f = x(k-1)xk``; the
    inner segment runs between the closest pair of endpoints."""
    best = None
    for u in e:
        for v in f:
            d = sp.distance(u, v)
            if d == float("inf"):
                continue
            if best is None or d < best[0]:
                best = (d, u, v)
    if best is None:
        return None
    _, u, v = best
    inner = sp.path(u, v)
    u0 = e[1] if u == e[0] else e[0]
    v0 = f[1] if v == f[0] else f[0]
    return [u0] + inner + [v0]


@lru_cache(maxsize=256)
def _paths(G: Graph):
    return all_pairs_shortest_paths(G)


def compute_J(G: Graph, e: Edge, f: Edge) -> JResult:
    if e not in G.edges or f not in G.edges:
        raise ValueError("both edges must belong to the graph")
    if not edges_cross(e, f):
        return NonCrossingPair(e, f)
    path = _crossing_path(G, _paths(G), e, f)
    if path is None:
        return NotClosed(e, f, "no path joins the two edges")
    k = len(path) - 1
    if k == 3:
        vs = frozenset(e) | frozenset(f)
        return K4Form(e, f, vs, G.induced_edges(vs))
    for x in path[2:k - 1]:
        if not separates(G, x, e, f):
            witnesses = tuple(oracle_J(G, e, f)) if G.n <= J_LIMIT else ()
            return NotClosed(e, f, f"vertex {x} on the shortest path does not separate the edges",
                             witnesses, x)
    vs = frozenset(path)
    return Dumbbell(e, f, vs, G.induced_edges(vs), tuple(path), tuple(path[2:k - 1]))


@lru_cache(maxsize=256)
def crossing_table(G: Graph) -> dict[tuple[Edge, Edge], JResult]:
    """``compute_J`` for every crossing pair ``(e, f)`` with ``e < f``."""
    return {(e, f): compute_J(G, e, f) for e, f in G.crossing_pairs()}


def J_of(G: Graph, e: Edge, f: Edge) -> JResult:
    key = (e, f) if e < f else (f, e)
    table = crossing_table(G)
    return table[key] if key in table else compute_J(G, e, f)


# -- crossing closed (the first decision procedure) --------------------------

@dataclass(frozen=True)
class CrossingClosedResult:
    closed: bool
    failing_pair: tuple[Edge, Edge] | None = None
    failure: NotClosed | None = None

    def __bool__(self):
        return self.closed


def is_crossing_closed(G: Graph) -> CrossingClosedResult:
    for pair, res in crossing_table(G).items():
        if isinstance(res, NotClosed):
            return CrossingClosedResult(False, pair, res)
    return CrossingClosedResult(True)


def has_one_hat(G: Graph) -> bool:
    """Every crossing pair lies in a single component of ``G``."""
    owner = G.components.block_of()
    return all(owner[e[0]] == owner[f[0]] for e, f in G.crossing_pairs())


# -- upper crossing closed (the second decision procedure) -------------------

@dataclass(frozen=True)
class NotCrossingClosedResult:
    witness: tuple[Edge, Edge]
    detail: NotClosed
    kind = "not_crossing_closed"


@dataclass(frozen=True)
class Ordering:
    sigma: tuple[Edge, ...]
    rounds: tuple[tuple[Edge, ...], ...]
    kind = "ordering"


@dataclass(frozen=True)
class Obstruction:
    edges: frozenset[Edge]
    kind = "obstruction"


UccResult = Union[NotCrossingClosedResult, Ordering, Obstruction]


def upper_crossing_closed(G: Graph) -> UccResult:
    """Grow the set ``L`` in rounds: an unplaced edge joins once every
    unplaced edge crossing it has ``J`` meeting ``L``.  Each round is
    appended in lexicographic order."""
    cc = is_crossing_closed(G)
    if not cc:
        return NotCrossingClosedResult(cc.failing_pair, cc.failure)
    table = crossing_table(G)
    crossers: dict[Edge, list[tuple[Edge, frozenset[Edge]]]] = {e: [] for e in G.edges}
    for (e, f), res in table.items():
        crossers[e].append((f, res.edges))
        crossers[f].append((e, res.edges))
    placed: set[Edge] = set()
    sigma: list[Edge] = []
    rounds = []
    while True:
        new = sorted(
            e for e in G.edges - placed
            if all(f in placed or J & placed for f, J in crossers[e])
        )
        if not new:
            break
        rounds.append(tuple(new))
        sigma.extend(new)
        placed.update(new)
    if len(placed) == len(G.edges):
        return Ordering(tuple(sigma), tuple(rounds))
    return Obstruction(frozenset(G.edges - placed))


def _J_edges(G: Graph, e: Edge, f: Edge) -> frozenset[Edge]:
    res = J_of(G, e, f)
    if isinstance(res, NotClosed):
        raise NotCrossingClosed(f"{e} and {f} have no unique minimal join")
    return res.edges


def is_obstruction(G: Graph, H) -> bool:
    """Every edge of ``H`` crosses some edge of ``H`` whose ``J`` stays in ``H``.

    The empty edge set is not an obstruction.
    """
    if not is_crossing_closed(G):
        raise NotCrossingClosed("obstructions are defined for crossing closed graphs")
    H = frozenset(H)
    if not H <= G.edges:
        raise ValueError("H is not a subgraph of G")
    if not H:
        return False
    return all(
        any(edges_cross(e, f) and _J_edges(G, e, f) <= H for f in H)
        for e in H
    )


@dataclass(frozen=True)
class OrderingCheck:
    ok: bool
    failing_pair: tuple[Edge, Edge] | None = None

    def __bool__(self):
        return self.ok


def verify_ucc_ordering(G: Graph, sigma: Sequence[Edge]) -> OrderingCheck:
    """Every crossing pair's ``J`` has an edge strictly before both."""
    sigma = check_ordering(G, sigma)
    if not is_crossing_closed(G):
        raise NotCrossingClosed("upper crossing closure needs a crossing closed graph")
    pos = rank_of(sigma)
    for (e, f), res in crossing_table(G).items():
        bound = min(pos[e], pos[f])
        if not any(pos[h] < bound for h in res.edges):
            return OrderingCheck(False, (e, f))
    return OrderingCheck(True)


def is_tightly_closed(G: Graph) -> bool:
    """Crossing closed with every ``J(e, f)`` inside a ``K4``."""
    return all(isinstance(r, K4Form) for r in crossing_table(G).values())


# -- strongly upper crossed --------------------------------------------------

def minimal_containers(G: Graph, e: Edge, f: Edge) -> list[frozenset[Edge]]:
    """Edge sets of the minimal induced connected subgraphs containing both."""
    if G.n > J_LIMIT:
        raise ValueError(f"minimal container enumeration is limited to n <= {J_LIMIT}")
    return [G.induced_edges(vs) for vs in oracle_J(G, e, f)]


def is_strongly_upper_crossed(G: Graph, sigma: Sequence[Edge]) -> bool:
    """Each crossing pair has a minimal induced connected container, and in
    every such container all edges other than the pair come before both."""
    sigma = check_ordering(G, sigma)
    pos = rank_of(sigma)
    for e, f in G.crossing_pairs():
        containers = minimal_containers(G, e, f)
        if not containers:
            return False
        bound = min(pos[e], pos[f])
        for M in containers:
            if any(pos[h] >= bound for h in M - {e, f}):
                return False
    return True


@dataclass
class PrecedenceResult:
    """Either an ordering, or a reason none exists (a missing container or a
    cycle of forced precedences ``h before e``)."""

    sigma: tuple[Edge, ...] | None
    cycle: list[Edge] | None = None
    uncontained_pair: tuple[Edge, Edge] | None = None
    constraints: dict[Edge, set[Edge]] = field(default_factory=dict)


def strongly_upper_crossed_ordering(G: Graph) -> PrecedenceResult:
    """Decide whether any ordering is strongly upper crossed.

    The definition forces ``h`` before ``e`` and ``f`` for each edge ``h`` of
    each minimal container of a crossing pair; an ordering exists exactly when
    these forced precedences are acyclic.
    """
    before: dict[Edge, set[Edge]] = {e: set() for e in G.edges}
    for e, f in G.crossing_pairs():
        containers = minimal_containers(G, e, f)
        if not containers:
            return PrecedenceResult(None, uncontained_pair=(e, f))
        for M in containers:
            for h in M - {e, f}:
                before[e].add(h)
                before[f].add(h)
    # Kahn's algorithm, smallest available edge first
    indeg = {e: len(before[e]) for e in G.edges}
    after: dict[Edge, list[Edge]] = {e: [] for e in G.edges}
    for e, hs in before.items():
        for h in hs:
            after[h].append(e)
    ready = sorted(e for e, d in indeg.items() if d == 0)
    sigma: list[Edge] = []
    while ready:
        e = ready.pop(0)
        sigma.append(e)
        for g in after[e]:
            indeg[g] -= 1
            if indeg[g] == 0:
                ready.append(g)
                ready.sort()
    if len(sigma) == len(G.edges):
        return PrecedenceResult(tuple(sigma), constraints=before)
    return PrecedenceResult(None, cycle=_find_cycle(before, set(G.edges) - set(sigma)),
                            constraints=before)


def _find_cycle(before: dict[Edge, set[Edge]], nodes: set[Edge]) -> list[Edge]:
    """A cycle ``[a, b, ..., a]`` where each entry is forced before the previous."""
    start = min(nodes)
    seen: dict[Edge, int] = {}
    walk = [start]
    while walk[-1] not in seen:
        seen[walk[-1]] = len(walk) - 1
        walk.append(min(h for h in before[walk[-1]] if h in nodes))
    return walk[seen[walk[-1]]:]


# -- complete bipartite even/odd ordering -------------------------------------

def circle_distance(n: int, x: int, y: int) -> int:
    """Vertices strictly between ``x < y`` along the shorter arc."""
    return min(y - x - 1, n - y + x - 1)


def distance_ordering(G: Graph) -> tuple[Edge, ...]:
    from .corpus import k_even_odd

    if G != k_even_odd(G.n):
        raise ValueError("distance ordering is only defined for k_even_odd graphs")
    return tuple(sorted(G.edges, key=lambda e: (circle_distance(G.n, *e), e)))


def check_J_uniqueness(G: Graph) -> bool:
    """Cross-check every closed ``J`` against the subset oracle (small graphs)."""
    if G.n > J_LIMIT:
        warnings.warn("J uniqueness is not independently certified above the oracle limit")
        return True
    for (e, f), res in crossing_table(G).items():
        if isinstance(res, NotClosed):
            continue
        mins = oracle_J(G, e, f)
        if len(mins) != 1 or mins[0] != res.vertices or not is_connected_set(G, res.vertices):
            return False
    return True
