"""
Checking the general statements on many posets
==============================================

The verify module runs the known inequalities and transfer statements over
a corpus of named posets plus random connected ones.  Every line reports how
many instances were checked; a violation would be listed with its poset.
"""

from finitetc.enumerate import random_connected_posets
from finitetc.verify import (PropertyResult, check_core_invariance, default_corpus,
                             verify_corollaries, verify_lemmas, verify_transfer)

corpus = default_corpus(random_count=20, max_size=5, seed=0)
print(len(corpus), "posets, for example", [name for name, _ in corpus[:5]])

# contractible iff cc_2 = 1, the chain cat <= cc_2 <= cat(P^2) <= cat^2, cores
print("\n".join(verify_corollaries(corpus).lines()))

# monotonicity in m, cc^1 <= cc^0 and transport of the found sections
print("\n".join(verify_lemmas(corpus).lines()))

# a single property on its own
prop = PropertyResult("cc_2(P) = cc_2(core P)")
check_core_invariance([(f"r{i}", P) for i, P in enumerate(random_connected_posets(10, 7, seed=3))], prop)
print(prop.line())

# homotopy classes of monotone maps against contiguity classes; slower
print("\n".join(verify_transfer(max_poset_size=3, max_vertices=4).lines()))
