"""
Subdividing to lower complexity
===============================

Barycentric subdivision of S1 x S1 gives more room for homotopies, and the
complexity drops from 4 to 2, the value for the circle itself.  The same
machinery computes the simplicial complexity of a simplicial complex
through its face poset.
"""

import time

from finitetc import (SubdivisionTower, cc_inf_n, cc_k_n, face_poset, order_complex,
                      sc_n_of_complex, zoo_complex, zoo_poset)

S1 = zoo_poset("sphere:1")

# the tower sd^k(S1^2) with its projections rho_j back down to S1
tower = SubdivisionTower.build(S1, 2, 2)
for k, level in enumerate(tower.levels):
    print("level", k, ":", len(level), "points")

print(cc_k_n(S1, 2, 0))
print(cc_k_n(S1, 2, 1))

# the limit stops once it meets the lower bound from the continuous circle
rep = cc_inf_n(S1, 2, k_max=2, want_witness=True)
print(rep)
for note in rep.notes:
    print("  note:", note)
print("sections valid:", all(w.is_valid() for w in rep.witnesses))

# order complex and face poset move between the two worlds
K = order_complex(S1)
print("order complex of S1:", len(K.vertices), "vertices,", len(K.facets), "facets")
print("face poset of the 4-cycle:", len(face_poset(zoo_complex("cycle:4"))), "points")

# simplicial complexity of the 4-cycle; this takes a few minutes
t = time.monotonic()
print(sc_n_of_complex(zoo_complex("cycle:4"), 2, k_max=2), f"({time.monotonic() - t:.0f}s)")
