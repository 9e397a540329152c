"""Bonds of a graph and enumeration of the bond lattice / noncrossing bond poset."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graph import (
    Edge,
    Graph,
    SetPartition,
    components_of_edges,
    edges_cross,
    is_connected_set,
    is_noncrossing_partition,
)

SOFT_LIMIT = 12
HARD_LIMIT = 16


class SizeLimitError(RuntimeError):
    """The requested object is too large to build exactly."""


class DisconnectedBlock(ValueError):
    def __init__(self, block):
        super().__init__(f"block {block} does not induce a connected subgraph")
        self.block = tuple(block)


def check_size(n: int, what: str = "poset") -> None:
    if n > HARD_LIMIT:
        raise SizeLimitError(f"refusing to build the {what} of a graph on {n} > {HARD_LIMIT} vertices")
    if n > SOFT_LIMIT:
        warnings.warn(f"building the {what} of a graph on {n} vertices may be very slow", stacklevel=3)


@dataclass(frozen=True)
class Bond:
    """A spanning subgraph of ``host`` whose components are all induced."""

    host: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))

    @cached_property
    def partition(self) -> SetPartition:
        return components_of_edges(self.host.n, self.edges)

    @property
    def cc(self) -> int:
        return len(self.partition)

    @cached_property
    def mask(self) -> int:
        idx = self.host.edge_index
        m = 0
        for e in self.edges:
            m |= 1 << idx[e]
        return m

    @property
    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def is_valid(self) -> bool:
        return all(
            self.host.induced_edges(b) <= self.edges for b in self.partition.blocks
        ) and self.edges <= self.host.edges

    def __le__(self, other: "Bond") -> bool:
        return self.edges <= other.edges

    def __lt__(self, other: "Bond") -> bool:
        return self.edges < other.edges

    def __str__(self):
        return str(self.partition)

    def to_json(self) -> dict:
        return {
            "partition": [list(b) for b in self.partition.blocks],
            "edges": [list(e) for e in self.edge_list],
        }


def bond_closure(G: Graph, S: Iterable[Edge]) -> Bond:
    """The bond whose components are induced on the components of ``([n], S)``."""
    S = frozenset(S)
    if not S <= G.edges:
        raise ValueError("edge set is not contained in the graph")
    pi = components_of_edges(G.n, S)
    edges = frozenset().union(*(G.induced_edges(b) for b in pi.blocks if len(b) > 1))
    return Bond(G, edges)


def partition_of_bond(H: Bond) -> SetPartition:
    return H.partition


def bond_of_partition(G: Graph, pi: SetPartition) -> Bond:
    """``G[pi]``; raises ``DisconnectedBlock`` for the first block that fails."""
    if pi.n != G.n:
        raise ValueError("partition is not of the vertex set")
    edges: set[Edge] = set()
    for b in pi.blocks:
        if len(b) > 1 and not is_connected_set(G, b):
            raise DisconnectedBlock(b)
        edges |= G.induced_edges(b)
    return Bond(G, frozenset(edges))


def is_noncrossing_bond(H: Bond) -> bool:
    by_partition = is_noncrossing_partition(H.partition)
    owner = H.partition.block_of()
    by_edges = not any(
        owner[e[0]] != owner[f[0]] and edges_cross(e, f)
        for e in H.edges
        for f in H.edges
        if e < f
    )
    # two independent routes to the same answer
    assert by_partition == by_edges, (H, by_partition, by_edges)
    return by_partition


def _partitions(G: Graph, noncrossing: bool):
    """Partitions of [n] into blocks that induce connected subgraphs.

    Vertices are placed in increasing order, either into an open block or a
    new one.  For noncrossing output a vertex may only join a block if no
    other block interleaves with it.
    """
    n = G.n
    blocks: list[list[int]] = []

    def joins_without_crossing(bi: int) -> bool:
        b = blocks[bi]
        top = b[-1]
        for cj, c in enumerate(blocks):
            # another block straddling max(b) would interleave with b + [v]
            if cj != bi and c[0] < top < c[-1]:
                return False
        return True

    def rec(v: int):
        if v > n:
            if all(len(b) == 1 or is_connected_set(G, b) for b in blocks):
                yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        for bi in range(len(blocks)):
            if noncrossing and not joins_without_crossing(bi):
                continue
            blocks[bi].append(v)
            yield from rec(v + 1)
            blocks[bi].pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(1)


def _sort_key(H: Bond):
    return (-H.cc, H.partition.blocks)


def enumerate_noncrossing_bonds(G: Graph) -> list[Bond]:
    """All noncrossing bonds, by component count descending then partition."""
    check_size(G.n, "noncrossing bond poset")
    bonds = [Bond(G, _block_edges(G, pi)) for pi in _partitions(G, noncrossing=True)]
    bonds.sort(key=_sort_key)
    return bonds


def enumerate_bonds(G: Graph) -> list[Bond]:
    check_size(G.n, "bond lattice")
    bonds = [Bond(G, _block_edges(G, pi)) for pi in _partitions(G, noncrossing=False)]
    bonds.sort(key=_sort_key)
    return bonds


def _block_edges(G: Graph, pi: SetPartition) -> frozenset[Edge]:
    out: set[Edge] = set()
    for b in pi.blocks:
        if len(b) > 1:
            out |= G.induced_edges(b)
    return frozenset(out)
