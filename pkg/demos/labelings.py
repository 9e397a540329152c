"""
Edge labelings and shellability
===============================

The minimum labeling marks each cover H < H' with the earliest edge of H'
that is missing from H.  When it is an EL-labeling, decreasing maximal chains
count the Mobius function and their label sets are exactly the spanning
noncrossing NBC sets.
"""

from ncbond import corpus, lex_order
from ncbond.labelings import (
    decreasing_chains,
    el_report,
    is_sn_el_labeling,
    labeled_dot,
    maxmin_labeling,
    min_label_nc_hypothesis,
    minimum_labeling,
)
from ncbond.poset import mobius, nc_poset

G = corpus("fig8_path")
P = nc_poset(G)
lab = minimum_labeling(P, lex_order(G))
print("minimum labeling:", el_report(lab))
for lo, hi in P.hasse:
    print(f"  {P.name(lo):>8} -> {P.name(hi):<8} {lab.label_str(lab[(lo, hi)])}")

# For graded posets the max-min labeling uses the smallest vertices of the two
# merged blocks.  It is an S_n EL-labeling exactly for perfectly labeled graphs.
mm = maxmin_labeling(P)
print("max-min is S_n EL:", bool(is_sn_el_labeling(mm)))

# Decreasing chains at the top of the twisted 4-cycle.
T = corpus("twisted_c4")
Q = nc_poset(T)
tl = minimum_labeling(Q, lex_order(T))
dec = decreasing_chains(tl, Q.top)
print("decreasing chains to the top:", dec.count, " mu(top) =", mobius(Q)[Q.top])
print("their label sets:", [sorted(s) for s in dec.label_sets])

# The hypothesis behind all of this fails for the star under lex order.
star = corpus("star5")
res = min_label_nc_hypothesis(star, lex_order(star))
H, Hp, e = res.counterexample
print(f"star5: adding {e} to {H.partition} inside {Hp.partition} gives a crossing bond")

# DOT output renders with graphviz: dot -Tpng fig8.dot -o fig8.png
print(labeled_dot(lab, "fig8_path, minimum labeling")[:120], "...")
