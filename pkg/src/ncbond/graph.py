"""Graphs on [n] drawn on a circle, set partitions, and basic graph primitives.

Vertices are the integers ``1..n``; an edge ``(i, j)`` always has ``i < j``.
Crossing is a property of the cyclic order of the labels only, so no
coordinates are ever stored.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

INF = float("inf")


class GraphError(ValueError):
    """Malformed graph input."""


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edges_cross(e: Edge, f: Edge) -> bool:
    """True iff the chords ``e`` and ``f`` intersect in the circular drawing."""
    a1, a2 = e
    b1, b2 = f
    return a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2


def edge_str(e: Edge) -> str:
    return f"{e[0]}{e[1]}" if e[1] < 10 else f"{e[0]}-{e[1]}"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        edges = frozenset(normalize_edge(*e) for e in self.edges)
        for u, v in edges:
            if not (1 <= u and v <= self.n):
                raise GraphError(f"edge {(u, v)} outside [1, {self.n}]")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(normalize_edge(u, v) for u, v in edges))

    @classmethod
    def from_string(cls, n: int, spec: str) -> "Graph":
        """``Graph.from_string(4, "12 13 24 34")``; digits only, so n <= 9."""
        return cls.from_edges(n, [(int(w[0]), int(w[1])) for w in spec.split()])

    def __repr__(self):
        return f"Graph({self.n}, [{', '.join(edge_str(e) for e in self.edge_list)}])"

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def induced_edges(self, vertices: Iterable[int]) -> frozenset[Edge]:
        vs = set(vertices)
        return frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, kept on the full vertex set [n]."""
        return Graph(self.n, self.induced_edges(vertices))

    def spanning(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self.n, frozenset(edges))

    def crossing_pairs(self) -> Iterator[tuple[Edge, Edge]]:
        """All crossing pairs ``(e, f)`` with ``e < f`` lexicographically."""
        for e, f in itertools.combinations(self.edge_list, 2):
            if edges_cross(e, f):
                yield e, f

    @cached_property
    def components(self) -> "SetPartition":
        return connected_components(self)


@dataclass(frozen=True, order=True)
class SetPartition:
    """A set partition of [n] in canonical form.

    Blocks are sorted tuples, ordered by their minimum element, so two
    partitions are equal exactly when their block tuples are equal.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks if len(b)))
        object.__setattr__(self, "blocks", blocks)
        seen = [x for b in blocks for x in b]
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError(f"blocks {blocks} do not partition [{len(seen)}]")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        return cls(tuple(tuple(b) for b in blocks))

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``"13/2/4"`` (single-digit vertices) or ``"1,3/2/4"``."""
        blocks = []
        for part in text.split("/"):
            part = part.strip()
            if "," in part or " " in part:
                blocks.append([int(x) for x in part.replace(",", " ").split()])
            else:
                blocks.append([int(ch) for ch in part])
        return cls.from_blocks(blocks)

    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        return cls(tuple((i,) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return "/".join(sep.join(map(str, b)) for b in self.blocks)

    def block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def refines(self, other: "SetPartition") -> bool:
        owner = other.block_of()
        return all(len({owner[x] for x in b}) == 1 for b in self.blocks)


def is_noncrossing_partition(pi: SetPartition) -> bool:
    """No ``a < b < c < d`` with ``a, c`` in one block and ``b, d`` in another."""
    owner = pi.block_of()
    n = pi.n
    # Scan left to right with a stack of open blocks; a block may only be
    # resumed when every block opened after it has already finished.
    last = {i: b[-1] for i, b in enumerate(pi.blocks)}
    stack: list[int] = []
    for x in range(1, n + 1):
        blk = owner[x]
        if stack and stack[-1] == blk:
            pass
        elif blk in stack:
            return False
        else:
            stack.append(blk)
        if last[blk] == x:
            stack.pop()
    return True


def connected_components(G: Graph) -> SetPartition:
    seen: set[int] = set()
    blocks = []
    for s in G.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        blocks.append(comp)
    return SetPartition.from_blocks(blocks)


def components_of_edges(n: int, edges: Iterable[Edge]) -> SetPartition:
    """Components of the spanning subgraph ``([n], edges)``; union-find."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return SetPartition.from_blocks(groups.values())


def is_connected_set(G: Graph, vertices: Iterable[int]) -> bool:
    """Whether ``G[vertices]`` is connected (the empty set is not)."""
    vs = set(vertices)
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in G.adjacency[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def _reachable_avoiding(G: Graph, start: int, removed: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in G.adjacency[u]:
            if w != removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def separates(G: Graph, v: int, e: Edge, f: Edge) -> bool:
    """True iff deleting ``v`` leaves ``e`` and ``f`` in different components."""
    if v in e or v in f:
        raise ValueError(f"vertex {v} is an endpoint of {e} or {f}")
    reach = _reachable_avoiding(G, e[0], v)
    return f[0] not in reach


@dataclass(frozen=True)
class ShortestPaths:
    """Unweighted all-pairs distances with deterministic path reconstruction."""

    graph: Graph
    dist: dict[int, dict[int, float]]

    def distance(self, u: int, v: int) -> float:
        return self.dist[u][v]

    def path(self, u: int, v: int) -> list[int] | None:
        """A shortest ``u``-``v`` path; each step moves to the lowest-numbered
        neighbour that is one step closer to ``v``."""
        if self.dist[u][v] == INF:
            return None
        path = [u]
        cur = u
        while cur != v:
            d = self.dist[cur][v]
            cur = next(w for w in self.graph.adjacency[cur] if self.dist[w][v] == d - 1)
            path.append(cur)
        return path


def all_pairs_shortest_paths(G: Graph) -> ShortestPaths:
    dist: dict[int, dict[int, float]] = {}
    for s in G.vertices:
        d: dict[int, float] = {v: INF for v in G.vertices}
        d[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if d[w] == INF:
                    d[w] = d[u] + 1
                    queue.append(w)
        dist[s] = d
    return ShortestPaths(G, dist)


def is_perfectly_labeled(G: Graph) -> bool:
    """Whenever ``ik`` and ``jk`` are edges with ``i < j < k``, so is ``ij``."""
    for k in G.vertices:
        lower = [i for i in G.adjacency[k] if i < k]
        for i, j in itertools.combinations(lower, 2):
            if (i, j) not in G.edges:
                return False
    return True


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v - 1]``."""
    return Graph.from_edges(G.n, [(perm[u - 1], perm[v - 1]) for u, v in G.edges])


def perfect_elimination_relabeling(G: Graph) -> list[int] | None:
    """A relabeling under which ``G`` is perfectly labeled, or None.

    Repeatedly removes a simplicial vertex and gives it the largest unused
    label; the graph is chordal exactly when this never gets stuck.
    """
    remaining = set(G.vertices)
    adj = {v: set(G.adjacency[v]) for v in G.vertices}
    perm = [0] * G.n
    label = G.n
    while remaining:
        for v in sorted(remaining):
            nbrs = adj[v] & remaining
            if all(b in adj[a] for a, b in itertools.combinations(nbrs, 2)):
                break
        else:
            return None
        perm[v - 1] = label
        label -= 1
        remaining.remove(v)
    return perm


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_relabeling(G) is not None


# -- edge orderings ---------------------------------------------------------

def lex_order(G: Graph) -> tuple[Edge, ...]:
    return G.edge_list


def colex_order(G: Graph) -> tuple[Edge, ...]:
    """``ab`` before ``a'b'`` iff ``b < b'``, or ``b = b'`` and ``a < a'``."""
    return tuple(sorted(G.edges, key=lambda e: (e[1], e[0])))


def check_ordering(G: Graph, sigma: Sequence[Edge]) -> tuple[Edge, ...]:
    sigma = tuple(normalize_edge(*e) for e in sigma)
    if len(sigma) != len(G.edges) or set(sigma) != G.edges:
        raise ValueError("ordering is not a permutation of the edge set")
    return sigma


def rank_of(sigma: Sequence[Edge]) -> dict[Edge, int]:
    return {e: i for i, e in enumerate(sigma)}


# -- edge-list text format --------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """First non-comment line is ``n``; every later line is ``i j``."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line: {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(str(exc)) from exc
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edge_list]) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
