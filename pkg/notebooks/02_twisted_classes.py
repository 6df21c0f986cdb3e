# %% [markdown]
# # Telling twisted conjugacy classes apart
#
# For the reflection automorphism of a group on [0, 1], the number of
# support components of x composed with its reflected image does not change
# along a twisted orbit.  Multibumps with n components give the value 2n.

# %%
from fractions import Fraction as Q

from plgroups.constructions import multibump
from plgroups.families import dyadic_reflection_group, gs_group
from plgroups.twisted import Automorphism, order2_invariant, separate_classes, twist

beta = Automorphism.reflection(gs_group())
for n in range(1, 6):
    print(n, order2_invariant(multibump(n, 0, Q(1, 2)), beta))

# %%
report = separate_classes([multibump(n, 0, Q(1, 2)) for n in range(1, 6)], beta)
print("\n".join(report.lines()))

# %% [markdown]
# Twisting never changes the invariants, so an element and its twist land
# in the same (inconclusive) cell.

# %%
G = dyadic_reflection_group()
beta = Automorphism.reflection(G)
x = multibump(2, 0, Q(1, 2))
z = G.generator("f")
print("\n".join(separate_classes([x, twist(z, x, beta)], beta).lines()))
