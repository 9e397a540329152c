"""
When is the noncrossing bond poset a lattice?
=============================================

Two crossing edges e and f have a join exactly when there is a unique
smallest induced connected subgraph J(e, f) containing both.  The poset is a
lattice exactly when every crossing pair has such a J.
"""

from ncbond import Graph, compute_J, corpus, is_crossing_closed
from ncbond.closure import crossing_table
from ncbond.oracles import oracle_J, oracle_lattice
from ncbond.poset import lattice_report, nc_poset

# In the complete graph every J is the K4 on the four endpoints.
K = corpus("complete", 6)
kinds = {type(r).__name__ for r in crossing_table(K).values()}
print("complete(6) J forms:", kinds, " crossing closed:", bool(is_crossing_closed(K)))

# Here 14 and 35 can be joined through vertex 2 or through vertex 6; neither
# route is contained in the other, so J(14, 35) does not exist.
G = corpus("fig1_g")
res = compute_J(G, (1, 4), (3, 5))
print("J(14, 35):", res.kind, "minimal subgraphs:", [sorted(w) for w in res.witnesses])
print("brute-force minimal containers:", [sorted(w) for w in oracle_J(G, (1, 4), (3, 5))])
rep = lattice_report(nc_poset(G))
print("lattice:", rep.is_lattice, " has top:", rep.has_top)

# When the endpoints are joined by a path whose interior vertices all separate
# the two edges, J is that path together with e and f.
T = Graph.from_string(7, "13 37 57 25 47 46")
for (e, f), r in crossing_table(T).items():
    print(f"tree J({e}, {f}): {r.kind} on vertices {sorted(r.vertices)}")

# The fast test agrees with a brute-force lattice check.
for name in ["twisted_c4", "star5", "fig1_g", "fig3", "twisted_c6", "fig12"]:
    H = corpus(name)
    print(f"{name:>11}: crossing closed {bool(is_crossing_closed(H))!s:5}  lattice {oracle_lattice(nc_poset(H))}")
