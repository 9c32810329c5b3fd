# Cayley matrices, automorphisms and dihedral quandles
#
# The group helpers are small but handy on their own: cyclic groups,
# direct products, automorphism enumeration and conjugation quandles.

# %%
from alexq import (
    alexander_quandle,
    automorphism_group,
    conj_quandle,
    count_homs,
    cyclic_group,
    dihedral_quandle,
    direct_product,
    trivial_quandle,
)
from alexq.group import nonabelian_order6

for n in range(1, 9):
    print(f"|Aut(Z{n})| = {len(automorphism_group(cyclic_group(n)))}")
z2 = cyclic_group(2)
print("|Aut(Z2^3)| =", len(automorphism_group(direct_product(direct_product(z2, z2), z2))))

# %%
# Negation on Z_n gives the dihedral quandle i ▷ j = 2j - i.

for n in (3, 5, 7):
    inversion = [1] + [n + 2 - k for k in range(2, n + 1)]
    print(n, alexander_quandle(cyclic_group(n), inversion) == dihedral_quandle(n))

# %%
# Conjugation in an abelian group does nothing, so the quandle is trivial.
# The symmetric group on three letters gives something more interesting.

print(conj_quandle(cyclic_group(6)) == trivial_quandle(6))
s3 = conj_quandle(nonabelian_order6())
print(s3)

# %%
# Homomorphism counts are the basic coloring invariant.

print("homs D3 -> D3:", count_homs(dihedral_quandle(3), dihedral_quandle(3)))
print("homs D3 -> conj(S3):", count_homs(dihedral_quandle(3), s3))
