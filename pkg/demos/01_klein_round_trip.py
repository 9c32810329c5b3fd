# Building an Alexander quandle and recovering it again
#
# An Alexander quandle lives on an abelian group G with an automorphism phi:
# a ▷ b = phi(a) + b - phi(b). We start from the Klein four-group, build its
# quandle, and then ask the search to find every presentation of the result.

# %%
import numpy as np

from alexq import (
    alexander_presentations,
    alexander_quandle,
    automorphism_group,
    cyclic_group,
    direct_product,
)
from alexq.group import element_orders

klein = direct_product(cyclic_group(2), cyclic_group(2))
print(klein)

# %%
# The Klein group has six automorphisms, one per permutation of its three
# non-identity elements.

auts = automorphism_group(klein)
print(len(auts), auts)

# %%
# Swap elements 2 and 3 and build the quandle.

q = alexander_quandle(klein, [1, 3, 2, 4])
print(q)

# %%
# Going back: with the group identity pinned to element 1, phi has to be
# the first column of the matrix. The search rebuilds every compatible group.

outcome = alexander_presentations(q)
print(outcome.status, "after", outcome.completions, "completed tables")
for p in outcome.presentations:
    print(np.array(p.cayley.tolist()), "phi =", p.phi)

# %%
# Two labeled groups work. The second is a relabeled copy of Z4 rather than
# the Klein group, so the same quandle has non-isomorphic presentations.

for p in outcome.presentations:
    print("element orders:", element_orders(p.cayley))
    assert alexander_quandle(p.cayley, p.phi) == q
