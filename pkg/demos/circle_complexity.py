"""
The four point circle and its motion planners
=============================================

The minimal finite model of the circle has two minima and two maxima, each
maximum above both minima.  We compute its category, its higher complexity
for n = 2, 3, and look at the bounded versions where paths have a fixed
shape.
"""

from finitetc import cat, cc_n, cc_nm, zoo_poset, transport_R

S1 = zoo_poset("sphere:1")
print(S1.labels)
print("Hasse edges:", S1.hasse_edges)

# category: two contractible opens are needed, one is not enough
print(cat(S1))

# cc_n covers S1^n by opens over which the n projections are homotopic
rep = cc_n(S1, 2)
print(rep)
for U in rep.cover:
    print("   ", sorted(U.labels()))
print(cc_n(S1, 3))

# the bounded invariant asks for an explicit path of fixed length over
# each open; short paths leave no section at all, and the linear fence
# needs to be longer than the wedge
for m in range(5):
    print("m =", m, " wedge:", cc_nm(S1, 2, m, "wedge").value, " linear:", cc_nm(S1, 2, m, "linear").value)

# a witness is a family of fence paths, checked independently of the search
rep = cc_nm(S1, 2, 2, "wedge", want_witness=True)
w = rep.witnesses[0]
w.check()
x = next(iter(w.domain))
print("path over", w.domain.ambient.labels[x], ":", [S1.labels[v] for v in w.path(x)])

# doubling the fence length keeps a section valid
w2 = transport_R(w)
print("after R: m =", w2.m, "valid:", w2.is_valid())
