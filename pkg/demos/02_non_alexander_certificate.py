# A medial quandle that is not Alexander
#
# The three-element quandle below satisfies the medial law, so the cheap
# abelian test cannot rule it out. Two independent tools can: a
# saturation argument that forces two generators together, and the full
# search, which runs into a clash while filling the group table.

# %%
from alexq import (
    QuandleMatrix,
    alexander_presentations,
    explain_trace,
    is_abelian,
    is_left_distributive,
    obstruction_check,
    replay_trace,
)

q = QuandleMatrix([[1, 1, 2], [2, 2, 1], [3, 3, 3]])
print(q)
print("abelian:", bool(is_abelian(q)), " left-distributive:", bool(is_left_distributive(q)))

# %%
# Saturation tracks two partitions of the generators x1, x2, x3: elements
# known to be equal, and elements equal after multiplying by (1 - t).
# A nontrivial class in the first partition is a certificate.

verdict = obstruction_check(q)
print(verdict.status)
print("equal:", verdict.trace.e0, " equal after (1-t):", verdict.trace.e1)
print(explain_trace(verdict.trace))

# %%
# The certificate can be checked by anyone with the matrix: replaying the
# steps re-derives each merge from its stated premise.

print(replay_trace(q, verdict.trace))

# %%
# The search reaches the same conclusion by a different route.

outcome = alexander_presentations(q)
print(outcome.status)
print(outcome.diagnostics)
