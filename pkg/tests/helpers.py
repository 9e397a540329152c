"""Shared fixtures for the test suite: sampled graphs and conclusion checks."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from ncbond import corpus, fixed_graphs
from ncbond.bonds import Bond
from ncbond.closure import J_of, crossing_table, _paths
from ncbond.graph import Graph
from ncbond.labelings import decreasing_chains, is_el_labeling, minimum_labeling
from ncbond.nbc import _chromatic, increasing_spanning_forests, ncnbc_sets
from ncbond.poset import grading, mobius
from ncbond.sampling import sample_connected_graphs

SEED = 0


def catalan(n: int) -> int:
    """Segner's recurrence, independent of any closed form."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def corpus_graphs() -> dict[str, Graph]:
    out = dict(fixed_graphs())
    for n in range(3, 7):
        out[f"complete:{n}"] = corpus("complete", n)
    for n in range(4, 9):
        out[f"k_even_odd:{n}"] = corpus("k_even_odd", n)
    for n in range(4, 7):
        out[f"cycle:{n}"] = corpus("cycle", n)
    for n in range(3, 6):
        out[f"path:{n}"] = corpus("path", n)
    out["edgeless:3"] = corpus("edgeless", 3)
    return out


@lru_cache(maxsize=None)
def sampled_graphs(count: int = 300, seed: int = SEED) -> tuple[Graph, ...]:
    return tuple(sample_connected_graphs(count, seed=seed, n_min=4, n_max=6))


def sweep_graphs(count: int = 300) -> list[Graph]:
    """Corpus graphs (up to 8 vertices) followed by the seeded sample."""
    return [G for G in corpus_graphs().values() if G.n <= 8] + list(sampled_graphs(count))


def clear_caches() -> None:
    crossing_table.cache_clear()
    _paths.cache_clear()
    _chromatic.cache_clear()


def spanning_ncnbc(H: Bond, all_ncnbc: list[frozenset]) -> list[frozenset]:
    """Spanning noncrossing NBC sets of ``H`` read off the host's NCNBC sets."""
    size = H.host.n - H.cc
    return [S for S in all_ncnbc if len(S) == size and S <= H.edges]


def ncisf_of(H: Bond) -> int:
    G = H.host
    forests = increasing_spanning_forests(G.spanning(H.edges), noncrossing=True)
    return sum(1 for F in forests if len(F) == G.n - H.cc)


def min_label_conclusions(G: Graph, sigma, P) -> dict[str, bool]:
    """The five conclusions of the minimum-labeling theorem on ``NC_G``."""
    n = G.n
    g = grading(P)
    out = {"a_graded_rank": bool(g) and all(g.rank[i] == n - P.elements[i].cc for i in range(len(P)))}
    lab = minimum_labeling(P, sigma)
    out["b_el"] = bool(is_el_labeling(lab))
    all_nc = ncnbc_sets(G, sigma)
    mu = mobius(P)
    c_ok = d_ok = e_ok = True
    for x, H in enumerate(P.elements):
        chains = decreasing_chains(lab, x, verify=False)
        spanning = spanning_ncnbc(H, all_nc)
        counts = Counter(chains.label_sets)
        c_ok &= all(S in set(spanning) for S in counts)
        d_ok &= all(counts[S] == 1 for S in spanning) and sum(counts.values()) == len(spanning)
        e_ok &= mu[x] == (-1) ** (n - H.cc) * len(spanning)
    out["c_labels_are_ncnbc"] = c_ok
    out["d_each_ncnbc_once"] = d_ok
    out["e_mobius"] = e_ok
    return out


def J_subgraph(G: Graph, e, f):
    return J_of(G, e, f)
