"""
Perfectly labeled graphs and increasing forests
===============================================

A labeling is perfect when edges ik and jk with i < j < k force ij.  Such
graphs are chordal, their noncrossing bond posets are graded, and under the
colexicographic edge order the noncrossing NBC sets are counted by noncrossing
increasing spanning forests.
"""

from ncbond import colex_order, corpus, is_chordal, is_perfectly_labeled
from ncbond.graph import perfect_elimination_relabeling, relabel
from ncbond.nbc import increasing_spanning_forests, is_increasing_forest, isf_counts, ncnbc_counts
from ncbond.poset import mobius, nc_poset

G = corpus("fig9_g")
print("perfectly labeled:", is_perfectly_labeled(G))
print("ncisf:", isf_counts(G, noncrossing=True), " ncnbc (colex):", ncnbc_counts(G, colex_order(G)))

# In an increasing forest every vertex has at most one smaller neighbour.
for F in [{(1, 4), (1, 2), (2, 3), (5, 6)}, {(1, 4), (1, 3), (2, 3), (5, 6)}]:
    print(sorted(F), "increasing:", is_increasing_forest(G, F))

# A chordal graph with a bad labeling can be relabeled perfectly.
H = corpus("fig9_h")
perm = perfect_elimination_relabeling(H)
print("fig9_h chordal:", is_chordal(H), " perfectly labeled:", is_perfectly_labeled(H),
      " after relabeling:", is_perfectly_labeled(relabel(H, perm)))

# Complete graphs recover the Catalan numbers.
for n in range(2, 8):
    K = corpus("complete", n)
    P = nc_poset(K)
    trees = sum(1 for F in increasing_spanning_forests(K, noncrossing=True) if len(F) == n - 1)
    print(f"n={n}: |NC| = {len(P)}, mu(top) = {mobius(P)[P.top]:+d}, noncrossing increasing trees = {trees}")
