# %% [markdown]
# # Maps, germs and the relators of F
#
# Build a few PL homeomorphisms, look at their end germs and check that a
# pair of bumps satisfies the defining relators of Thompson's group F.

# %%
from fractions import Fraction as Q

from plgroups import Compact, compose, evaluate, germ, invert
from plgroups.constructions import bump, lemma72_pair
from plgroups.thompson import verify_f_relations

unit = Compact(1)
f = bump(2, 1)
print("points:", f.points)
print("f(1/2) =", evaluate(f, Q(1, 2)), " f(5/6) =", evaluate(f, Q(5, 6)))
print("left slope", germ(f, "left", unit).slope, " right slope", germ(f, "right", unit).slope)

# %%
assert compose(f, invert(f)).points == ()

# %% [markdown]
# Two bumps with overlapping supports, one pushing points left near 0 and
# one pushing them left near 1, generate a copy of F.

# %%
f, g = lemma72_pair(Q(1, 2), 2, 0, Q(1, 4), Q(3, 4), 1)
report = verify_f_relations(f, g)
print("\n".join(report.lines()))
