"""
The twisted 4-cycle
===================

Four vertices on a circle with edges 12, 13, 24, 34.  The chords 13 and 24
cross, so the bond made of just those two edges is not noncrossing.  This
script walks through the noncrossing bond poset of the graph and compares it
with the full bond lattice.
"""

from ncbond import corpus, lex_order
from ncbond.nbc import broken_circuits, nbc_counts, ncnbc_counts, ncnbc_sets
from ncbond.poset import bond_lattice, characteristic_polynomial, grading, mobius, nc_poset

G = corpus("twisted_c4")
print("edges:", sorted(G.edges))

# The noncrossing bonds, ordered by inclusion, and every bond for comparison.
P = nc_poset(G)
L = bond_lattice(G)
print("noncrossing bonds:", len(P), " all bonds:", len(L))
print("missing from the noncrossing poset:",
      [L.name(i) for i in range(len(L)) if L.elements[i] not in set(P.elements)])

# Both posets are graded with rank n - cc, so characteristic polynomials exist.
g = grading(P)
print("rank of the noncrossing poset:", g.length)
mu = mobius(P)
for i in range(len(P)):
    print(f"  mu({P.name(i):>8}) = {mu[i]:+d}")
print("chi(NC) =", characteristic_polynomial(P))
print("chi(L)  =", characteristic_polynomial(L))

# Whitney: the bond lattice's coefficients count NBC sets.  The noncrossing
# analogue drops NBC sets with crossing edges.
sigma = lex_order(G)
print("broken circuits under lex:", [sorted(b) for b in broken_circuits(G, sigma)])
print("nbc counts:  ", nbc_counts(G, sigma))
print("ncnbc counts:", ncnbc_counts(G, sigma))
print("spanning ncnbc sets:", [sorted(S) for S in ncnbc_sets(G, sigma, 3)])

# The noncrossing count depends on the ordering, unlike the NBC count.
other = [(1, 3), (2, 4), (1, 2), (3, 4)]
print("ncnbc counts under 13, 24, 12, 34:", ncnbc_counts(G, other))
