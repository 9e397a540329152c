"""Acceptance criteria, each with its time budget.

Run with ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``;
the terminal summary prints one PASS/FAIL line per criterion.
"""

import itertools
import random
import sys
import time
from contextlib import contextmanager

import pytest

from helpers import (
    catalan,
    clear_caches,
    corpus_graphs,
    min_label_conclusions,
    ncisf_of,
    sampled_graphs,
    spanning_ncnbc,
    sweep_graphs,
)
from ncbond import corpus
from ncbond.bonds import Bond, enumerate_noncrossing_bonds
from ncbond.closure import (
    Obstruction,
    Ordering,
    distance_ordering,
    has_one_hat,
    is_crossing_closed,
    is_strongly_upper_crossed,
    is_tightly_closed,
    strongly_upper_crossed_ordering,
    upper_crossing_closed,
    verify_ucc_ordering,
)
from ncbond.graph import colex_order, is_perfectly_labeled, lex_order
from ncbond.labelings import (
    is_el_labeling,
    is_sn_el_labeling,
    maxmin_labeling,
    min_label_nc_hypothesis,
    minimum_labeling,
)
from ncbond.nbc import (
    atom_edges,
    atom_order_from_edges,
    chromatic_polynomial,
    isf_counts,
    nbb_sets,
    nbc_counts,
    ncnbc_counts,
    ncnbc_sets,
)
from ncbond.oracles import oracle_lattice
from ncbond.polynomial import Polynomial, has_internal_zero
from ncbond.poset import (
    bond_lattice,
    characteristic_polynomial,
    grading,
    join,
    meet,
    mobius,
    nc_poset,
)
from ncbond.sampling import random_ordering, sample_connected_graphs


@pytest.fixture
def budget(record_property):
    """Times the body with cold caches and fails when it overruns ``seconds``."""

    @contextmanager
    def timed(seconds: float):
        clear_caches()
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        record_property("seconds", elapsed)
        assert elapsed <= seconds, f"took {elapsed:.2f} s, budget {seconds} s"

    return timed


def E(*names):
    return frozenset((int(s[0]), int(s[1])) for s in names)


def signed_generating_function(counts, rho):
    """``sum_k (-1)^k c_k t^(rho-k)`` in ascending coefficients."""
    return Polynomial(tuple((-1) ** (rho - d) * counts[rho - d] if rho - d < len(counts) else 0
                            for d in range(rho + 1)))


def ncnbc_mobius_holds(G, sigma, P) -> bool:
    mu = mobius(P)
    all_nc = ncnbc_sets(G, sigma)
    return all(mu[x] == (-1) ** (G.n - H.cc) * len(spanning_ncnbc(H, all_nc)) for x, H in enumerate(P.elements))


@pytest.mark.criterion(1, "twisted 4-cycle fixtures")
def test_criterion_01_twisted_c4(budget):
    with budget(1.0):
        G = corpus("twisted_c4")
        P = nc_poset(G)
        assert characteristic_polynomial(P) == Polynomial.from_descending([1, -4, 5, -2])
        assert characteristic_polynomial(bond_lattice(G)) == Polynomial.from_descending([1, -4, 6, -3])
        assert mobius(P)[P.top] == -2
        assert nbc_counts(G, lex_order(G)) == [1, 4, 6, 3]
        assert ncnbc_counts(G, lex_order(G)) == [1, 4, 5, 2]
        assert ncnbc_counts(G, [(1, 3), (2, 4), (1, 2), (3, 4)])[3] == 1
        res = upper_crossing_closed(G)
        assert isinstance(res, Ordering) and res.sigma == ((1, 2), (3, 4), (1, 3), (2, 4))


@pytest.mark.criterion(2, "5-pointed star fixtures")
def test_criterion_02_star5(budget):
    with budget(1.0):
        G = corpus("star5")
        chi = characteristic_polynomial(nc_poset(G))
        assert chi == Polynomial.from_descending([1, -5, 5, 0, -1])
        assert has_internal_zero(chi)
        assert is_tightly_closed(G)
        res = upper_crossing_closed(G)
        assert isinstance(res, Obstruction) and res.edges == G.edges
        assert not min_label_nc_hypothesis(G, lex_order(G))


@pytest.mark.criterion(3, "figure fixtures")
def test_criterion_03_figures(budget):
    def fig1():
        G = corpus("fig1_g")
        res = is_crossing_closed(G)
        assert not res and res.failing_pair == ((1, 4), (3, 5))
        assert has_one_hat(G)
        P = nc_poset(G)
        H = P.index(Bond(G, E("12", "23", "35", "14")))
        K = P.index(Bond(G, E("16", "56", "35", "14")))
        assert meet(P, H, K) is None

    def fig3():
        G = corpus("fig3")
        P = nc_poset(G)
        assert not has_one_hat(G) and P.top is None and len(P) == 3

    def fig4():
        g = grading(nc_poset(corpus("fig4_path")))
        assert not g
        assert (len(g.short_chain) - 1, len(g.long_chain) - 1) == (3, 5)

    def fig6():
        G = corpus("fig6_h")
        assert isinstance(upper_crossing_closed(G), Ordering)
        assert not grading(nc_poset(G))

    def twisted_c6():
        assert not is_crossing_closed(corpus("twisted_c6"))

    def fig12():
        G = corpus("fig12")
        assert is_perfectly_labeled(G) and not is_crossing_closed(G)

    for check in (fig1, fig3, fig4, fig6, twisted_c6, fig12):
        with budget(1.0):
            check()


@pytest.mark.criterion(4, "Catalan counts for complete graphs")
def test_criterion_04_catalan(budget):
    with budget(5.0):
        for n in range(3, 7):
            K = corpus("complete", n)
            assert len(enumerate_noncrossing_bonds(K)) == catalan(n)
            P = nc_poset(K)
            assert len(P) == catalan(n)
            assert mobius(P)[P.top] == (-1) ** (n - 1) * catalan(n - 1)


@pytest.mark.criterion(5, "crossing closed iff lattice, meets are intersections")
def test_criterion_05_lattice_sweep(budget):
    graphs = list(corpus_graphs().values()) + list(sampled_graphs(300))
    assert len(graphs) >= 300 + len(corpus_graphs())
    with budget(60.0):
        closed_seen = 0
        for G in graphs:
            P = nc_poset(G)
            closed = bool(is_crossing_closed(G))
            assert closed == oracle_lattice(P), G
            if closed:
                closed_seen += 1
                edges = [b.edges for b in P.elements]
                index = {s: i for i, s in enumerate(edges)}
                for i, j in itertools.combinations(range(len(P)), 2):
                    assert meet(P, i, j) == index[edges[i] & edges[j]]
        assert closed_seen > 0


@pytest.mark.criterion(6, "NCNBC interpretation for upper crossing closed graphs")
def test_criterion_06_ncnbc_mobius(budget):
    with budget(120.0):
        checked = graded = 0
        for G in sweep_graphs():
            res = upper_crossing_closed(G)
            if not isinstance(res, Ordering):
                continue
            checked += 1
            P = nc_poset(G)
            assert ncnbc_mobius_holds(G, res.sigma, P), G
            if grading(P):
                graded += 1
                rho = G.n - P.elements[P.top].cc
                assert characteristic_polynomial(P) == signed_generating_function(ncnbc_counts(G, res.sigma), rho)
        assert checked > 50 and graded > 50


@pytest.mark.criterion(7, "NBB sets equal NCNBC sets")
def test_criterion_07_nbb(budget):
    with budget(120.0):
        checked = 0
        for G in sweep_graphs():
            res = upper_crossing_closed(G)
            if not isinstance(res, Ordering):
                continue
            checked += 1
            P = nc_poset(G)
            nbb = nbb_sets(P, atom_order_from_edges(P, res.sigma))
            found = sorted((atom_edges(P, S) for sets in nbb.values() for S in sets),
                           key=lambda s: (len(s), sorted(s)))
            assert found == ncnbc_sets(G, res.sigma), G
            mu = mobius(P)
            for x in range(len(P)):
                assert sum((-1) ** len(S) for S in nbb.get(x, [])) == mu[x]
        assert checked > 50


@pytest.mark.criterion(8, "minimum labeling theorem conclusions")
def test_criterion_08_min_label(budget):
    with budget(120.0):
        rng = random.Random(8)
        qualifying = 0
        for G in sampled_graphs(300):
            if not has_one_hat(G):
                continue
            P = nc_poset(G)
            for sigma in {lex_order(G), colex_order(G), tuple(random_ordering(G, rng))}:
                if min_label_nc_hypothesis(G, sigma, P):
                    qualifying += 1
                    conclusions = min_label_conclusions(G, sigma, P)
                    assert all(conclusions.values()), (G, sigma, conclusions)
        assert qualifying > 100


@pytest.mark.criterion(9, "perfectly labeled graphs")
def test_criterion_09_perfectly_labeled(budget):
    with budget(60.0):
        both = [0, 0]
        for G in sampled_graphs(300):
            P = nc_poset(G)
            if grading(P):
                perfect = is_perfectly_labeled(G)
                both[perfect] += 1
                assert bool(is_sn_el_labeling(maxmin_labeling(P))) == perfect, G
            if is_perfectly_labeled(G):
                assert isf_counts(G, noncrossing=True) == ncnbc_counts(G, colex_order(G)), G
        assert min(both) > 5

        G = corpus("fig9_g")
        targets = [G] if is_crossing_closed(G) else [corpus("complete", 4), corpus("complete", 5)]
        for G in targets:
            assert is_perfectly_labeled(G) and has_one_hat(G)
            P = nc_poset(G)
            sigma = colex_order(G)
            g = grading(P)
            assert g and all(g.rank[i] == G.n - H.cc for i, H in enumerate(P.elements))
            assert is_el_labeling(minimum_labeling(P, sigma))
            mu = mobius(P)
            all_nc = ncnbc_sets(G, sigma)
            for x, H in enumerate(P.elements):
                sign = (-1) ** (G.n - H.cc)
                assert mu[x] == sign * len(spanning_ncnbc(H, all_nc)) == sign * ncisf_of(H)
            rho = g.length
            chi = characteristic_polynomial(P)
            assert chi == signed_generating_function(ncnbc_counts(G, sigma), rho)
            assert chi == signed_generating_function(isf_counts(G, noncrossing=True), rho)


@pytest.mark.criterion(10, "tightly closed graphs")
def test_criterion_10_tightly_closed(budget):
    with budget(60.0):
        graphs = [corpus("k_even_odd", n) for n in range(4, 9)] + [corpus("star5")]
        for G in graphs:
            assert is_tightly_closed(G)
            assert grading(nc_poset(G))
        for G in graphs + [G for G in sampled_graphs(300)[:100] if is_crossing_closed(G)]:
            P = nc_poset(G)
            atoms = {next(iter(P.elements[a].edges)): a for a in P.atoms}
            profile = all(G.n - P.elements[join(P, atoms[e], atoms[f])].cc in (2, 3)
                          for e, f in itertools.combinations(sorted(G.edges), 2))
            assert profile == bool(is_tightly_closed(G)), G
        for n in range(4, 9):
            G = corpus("k_even_odd", n)
            sigma = distance_ordering(G)
            assert verify_ucc_ordering(G, sigma)
            P = nc_poset(G)
            assert min_label_nc_hypothesis(G, sigma, P)
            assert all(min_label_conclusions(G, sigma, P).values()), n


@pytest.mark.criterion(11, "strongly upper crossed graphs")
def test_criterion_11_strongly_upper_crossed(budget):
    with budget(30.0):
        G = corpus("fig1_g")
        sigma = [e for e in lex_order(G) if e not in {(1, 4), (3, 5)}] + [(1, 4), (3, 5)]
        assert is_strongly_upper_crossed(G, sigma)
        assert all(min_label_conclusions(G, sigma, nc_poset(G)).values())

        K5 = corpus("complete", 5)
        res = strongly_upper_crossed_ordering(K5)
        assert res.sigma is None and res.cycle is not None
        before = res.constraints
        assert (2, 4) in before[(1, 4)] and (2, 4) in before[(2, 5)] and (2, 5) in before[(2, 4)]
        assert all(b in before[a] for a, b in zip(res.cycle, res.cycle[1:]))


@pytest.mark.criterion(12, "Whitney invariance and the chromatic identity")
def test_criterion_12_whitney(budget):
    samples = list(sample_connected_graphs(300, seed=12, n_min=4, n_max=7))
    with budget(60.0):
        rng = random.Random(12)
        for G in samples[:20]:
            base = nbc_counts(G, lex_order(G))
            for _ in range(20):
                assert nbc_counts(G, random_ordering(G, rng)) == base
        for G in samples:
            chi = characteristic_polynomial(bond_lattice(G))
            assert chromatic_polynomial(G) == chi.shift(len(G.components.blocks))


@pytest.mark.criterion(13, "performance of the closure algorithms")
def test_criterion_13_performance(budget):
    with budget(60.0):
        assert is_crossing_closed(corpus("complete", 15))
    with budget(60.0):
        assert isinstance(upper_crossing_closed(corpus("complete", 12)), Ordering)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
