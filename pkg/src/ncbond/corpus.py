"""Named fixture graphs.

Each fixed graph is drawn on the circle with vertex 1 on top and the rest
clockwise, so the labels alone determine which edges cross.
"""

from __future__ import annotations

import itertools

from .graph import Graph

_FIXED = {
    # a 6-vertex graph whose crossing edges 14, 35 have two minimal joins
    "fig1_g": (6, "12 16 14 23 35 56"),
    # two crossing chords and nothing else; NC poset has no top
    "fig3": (4, "13 24"),
    # a path whose NC poset is not graded
    "fig4_path": (6, "15 35 14 24 26"),
    "twisted_c4": (4, "12 13 24 34"),
    "star5": (5, "13 14 24 25 35"),
    # fig4_path with 24 and 15 subdivided; subdivision vertices take the
    # circle positions between 2,3 and after 6, then everything is renumbered
    "fig6_h": (8, "18 68 46 15 35 23 27"),
    "fig8_path": (4, "13 12 24"),
    "fig9_g": (6, "16 12 23 35 56 14 13 15"),
    "fig9_h": (6, "34 45 14 56 26 23 46 24"),
    "fig12": (7, "12 23 13 16 34 45 35 57 24"),
    "twisted_c6": (6, "45 14 12 23 36 56"),
}

_DESCRIPTIONS = {
    "fig1_g": "not crossing closed (14, 35) but NC poset has a top",
    "fig3": "two crossing chords; NC poset has three elements and no top",
    "fig4_path": "path with a non-graded NC poset",
    "twisted_c4": "twisted 4-cycle; NC poset is an 11-element lattice",
    "star5": "5-pointed star; tightly closed, not upper crossing closed",
    "fig6_h": "subdivided path; upper crossing closed, NC poset not graded",
    "fig8_path": "path 3-1-2-4 used for the labeling pictures",
    "fig9_g": "perfectly labeled chordal graph",
    "fig9_h": "chordal graph that is not perfectly labeled",
    "fig12": "perfectly labeled but not crossing closed",
    "twisted_c6": "2-connected 6-cycle that is not crossing closed",
    "complete": "complete graph K_n (parameter n)",
    "k_even_odd": "complete bipartite graph on evens vs odds of [n] (parameter n)",
    "cycle": "cycle 1-2-...-n-1 (parameter n)",
    "path": "path 1-2-...-n (parameter n)",
    "edgeless": "n isolated vertices (parameter n)",
}


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def k_even_odd(n: int) -> Graph:
    return Graph.from_edges(
        n, [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if (i + j) % 2]
    )


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def edgeless(n: int) -> Graph:
    return Graph(n, frozenset())


_FAMILIES = {
    "complete": complete,
    "k_even_odd": k_even_odd,
    "cycle": cycle,
    "path": path,
    "edgeless": edgeless,
}


def corpus(name: str, *params: int) -> Graph:
    if name in _FIXED:
        if params:
            raise ValueError(f"{name} takes no parameters")
        n, spec = _FIXED[name]
        return Graph.from_string(n, spec)
    if name in _FAMILIES:
        if len(params) != 1:
            raise ValueError(f"{name} needs exactly one parameter n")
        return _FAMILIES[name](*params)
    raise KeyError(f"unknown corpus graph {name!r}")


def corpus_names() -> list[str]:
    return list(_FIXED) + list(_FAMILIES)


def describe(name: str) -> str:
    return _DESCRIPTIONS[name]


def fixed_graphs() -> dict[str, Graph]:
    """Every parameter-free corpus graph, by name."""
    return {name: corpus(name) for name in _FIXED}


def parse_corpus_spec(spec: str) -> Graph:
    """``"star5"`` or ``"complete:5"``."""
    name, _, rest = spec.partition(":")
    params = [int(p) for p in rest.split(",") if p] if rest else []
    return corpus(name, *params)
