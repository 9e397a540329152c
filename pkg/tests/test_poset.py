import pytest

from helpers import catalan, corpus_graphs, sampled_graphs
from ncbond import corpus
from ncbond.bonds import Bond
from ncbond.closure import has_one_hat, is_crossing_closed
from ncbond.graph import Graph, edges_cross
from ncbond.oracles import oracle_lattice, oracle_mobius
from ncbond.poset import (
    FinitePoset,
    NotALattice,
    NotGraded,
    are_isomorphic,
    bond_lattice,
    boolean_lattice,
    chain_poset,
    characteristic_polynomial,
    grading,
    has_internal_zero,
    is_atomic,
    is_lattice,
    is_semimodular,
    join,
    lattice_report,
    meet,
    mobius,
    nc_poset,
    poset_product,
    to_dot,
    whitney_numbers,
)
from ncbond.polynomial import Polynomial


def test_fig3_posets():
    P = nc_poset(corpus("fig3"))
    assert len(P) == 3 and len(P.hasse) == 2
    assert P.top is None
    L = bond_lattice(corpus("fig3"))
    assert len(L) == 4 and len(L.hasse) == 4
    assert are_isomorphic(L, boolean_lattice(2))


def test_twisted_c4_poset():
    P = nc_poset(corpus("twisted_c4"))
    assert len(P) == 11
    mu = mobius(P)
    assert mu[P.bottom] == 1
    assert mu[P.top] == -2
    g = grading(P)
    assert g.graded and g.length == 3
    assert sorted(g.rank) == [0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3]
    assert characteristic_polynomial(P) == Polynomial.from_descending([1, -4, 5, -2])
    assert characteristic_polynomial(bond_lattice(corpus("twisted_c4"))) == Polynomial.from_descending([1, -4, 6, -3])


def test_complete4_top_mobius():
    P = nc_poset(corpus("complete", 4))
    assert mobius(P)[P.top] == -5


def test_star5_polynomial_and_whitney():
    P = nc_poset(corpus("star5"))
    g = grading(P)
    assert g.graded and g.length == 4
    chi = characteristic_polynomial(P)
    assert chi.to_list() == [-1, 0, 5, -5, 1]
    assert has_internal_zero(chi)
    assert whitney_numbers(P) == [1, -5, 5, 0, -1]
    assert not has_internal_zero(characteristic_polynomial(nc_poset(corpus("twisted_c4"))))


def test_fig4_path_not_graded():
    P = nc_poset(corpus("fig4_path"))
    g = grading(P)
    assert not g
    assert len(g.short_chain) - 1 == 3
    assert len(g.long_chain) - 1 == 5
    for chain in (g.short_chain, g.long_chain):
        assert chain[0] == P.bottom and chain[-1] == P.top
        assert all(a in P.lower_covers[b] for a, b in zip(chain, chain[1:]))
    assert P.name(g.short_chain[2]) == "1/26/35/4"
    named = [P.names.index(s) for s in ["1/2/3/4/5/6", "1/26/3/4/5", "1/26/35/4", "123456"]]
    assert all(a in P.lower_covers[b] for a, b in zip(named, named[1:]))
    with pytest.raises(NotGraded):
        characteristic_polynomial(P)
    with pytest.raises(NotGraded):
        whitney_numbers(P)


def test_fig1_meet_absent():
    G = corpus("fig1_g")
    P = nc_poset(G)
    H = P.index(Bond(G, {(1, 2), (2, 3), (3, 5), (1, 4)}))
    K = P.index(Bond(G, {(1, 6), (5, 6), (3, 5), (1, 4)}))
    assert meet(P, H, K) is None
    rep = lattice_report(P)
    assert not rep.is_lattice and rep.has_top
    assert P.top is not None and P.elements[P.top].edges == G.edges


def test_lattice_reports():
    assert not lattice_report(nc_poset(corpus("fig3"))).has_top
    assert is_lattice(nc_poset(corpus("complete", 4)))


def test_atomic_semimodular():
    P = nc_poset(corpus("path", 3))
    assert is_atomic(P) and is_semimodular(P)
    T = nc_poset(corpus("twisted_c4"))
    assert is_atomic(T) and not is_semimodular(T)
    with pytest.raises(NotALattice):
        is_atomic(nc_poset(corpus("fig3")))
    with pytest.raises(NotALattice):
        is_semimodular(nc_poset(corpus("fig1_g")))


@pytest.mark.parametrize("name", ["twisted_c4", "star5", "fig1_g", "fig9_g", "complete:4", "cycle:5"])
def test_bond_lattices_are_geometric(name):
    L = bond_lattice(corpus_graphs()[name])
    assert is_lattice(L) and is_atomic(L) and is_semimodular(L)


def test_mobius_agrees_with_oracle_everywhere():
    for G in list(corpus_graphs().values()) + list(sampled_graphs())[:120]:
        if G.n > 7:
            continue
        for P in (nc_poset(G), bond_lattice(G)):
            assert mobius(P) == oracle_mobius(P)
            if P.top is not None and len(P) > 1:
                assert sum(mobius(P)) == 0


def test_small_posets():
    assert mobius(chain_poset(1)) == [1, -1]
    B3 = boolean_lattice(3)
    assert mobius(B3)[B3.top] == -1
    C2 = chain_poset(2)
    assert whitney_numbers(C2) == [1, -1, 0]
    assert characteristic_polynomial(C2).to_list() == [0, -1, 1]
    assert not has_internal_zero(characteristic_polynomial(C2))


def test_hasse_is_transitive_reduction():
    for G in list(sampled_graphs())[:40]:
        P = nc_poset(G)
        for lo, hi in P.hasse:
            assert P.lt(lo, hi)
            assert not any(P.lt(lo, z) and P.lt(z, hi) for z in range(len(P)))


def test_meets_are_intersections_when_crossing_closed():
    for G in list(sampled_graphs())[:150]:
        if not is_crossing_closed(G):
            continue
        P = nc_poset(G)
        assert is_lattice(P)
        index = {b.edges: i for i, b in enumerate(P.elements)}
        for i in range(len(P)):
            for j in range(i + 1, len(P)):
                m = meet(P, i, j)
                assert P.elements[m].edges == P.elements[i].edges & P.elements[j].edges
                assert index[P.elements[m].edges] == m


def test_grading_iff_two_block_merges():
    for G in sampled_graphs():
        if not has_one_hat(G):
            continue
        P = nc_poset(G)
        two_blocks = all(P.elements[lo].cc - P.elements[hi].cc == 1 for lo, hi in P.hasse)
        g = grading(P)
        assert bool(g) == two_blocks
        if g:
            assert all(g.rank[i] == G.n - P.elements[i].cc for i in range(len(P)))


def test_product_lemma_on_noncrossing_components():
    G = Graph.from_string(4, "12 34")
    assert are_isomorphic(nc_poset(G), poset_product(chain_poset(1), chain_poset(1)))
    F = corpus("fig3")
    assert not are_isomorphic(nc_poset(F), poset_product(chain_poset(1), chain_poset(1)))
    for G in [Graph.from_string(6, "12 23 13 45 56"), Graph.from_string(6, "12 56 34"),
              Graph.from_string(6, "16 23 34 24")]:
        comps = [b for b in G.components.blocks]
        assert not any(edges_cross(e, f) for e in G.edges for f in G.edges
                       if G.components.block_of()[e[0]] != G.components.block_of()[f[0]])
        P = None
        for b in comps:
            H = G.induced(b)
            sub = nc_poset(_compress(H, b))
            P = sub if P is None else poset_product(P, sub)
        assert are_isomorphic(nc_poset(G), P)


def _compress(H: Graph, block) -> Graph:
    """The component on its own vertices relabeled ``1..k`` in circle order."""
    pos = {v: i + 1 for i, v in enumerate(sorted(block))}
    return Graph.from_edges(len(block), [(pos[u], pos[v]) for u, v in H.edges])


def test_isomorphism_self_and_negative():
    P = nc_poset(corpus("twisted_c4"))
    assert are_isomorphic(P, P)
    assert not are_isomorphic(P, bond_lattice(corpus("twisted_c4")))
    assert not are_isomorphic(nc_poset(corpus("complete", 4)), bond_lattice(corpus("complete", 4)))


def test_join_of_atoms():
    P = nc_poset(corpus("twisted_c4"))
    a = {next(iter(P.elements[i].edges)): i for i in P.atoms}
    j = join(P, a[(1, 3)], a[(2, 4)])
    assert P.elements[j].edges == corpus("twisted_c4").edges


def test_from_relation_linear_extension():
    P = FinitePoset.from_relation(["ab", "a", "b", ""], lambda x, y: set(x) <= set(y))
    assert P.elements[0] == "" and P.elements[-1] == "ab"
    assert oracle_lattice(P)


def test_dot_export():
    P = nc_poset(corpus("fig3"))
    dot = to_dot(P, title="fig3")
    assert dot.startswith('digraph "fig3" {')
    assert 'n0 [label="1/2/3/4"];' in dot
    assert "n0 -> n1;" in dot and "n0 -> n2;" in dot
    assert dot == to_dot(nc_poset(corpus("fig3")), title="fig3")


@pytest.mark.parametrize("n", range(3, 7))
def test_noncrossing_partition_lattice_mobius(n):
    P = nc_poset(corpus("complete", n))
    assert mobius(P)[P.top] == (-1) ** (n - 1) * catalan(n - 1)
