# %% [markdown]
# # Half-space subgraphs in finite balls
#
# For a character chi, keep the ball elements with chi >= 0 and the
# generator edges between them, then count components.  A finite ball can
# only hint at what happens in the full Cayley graph.

# %%
from plgroups.families import gs_group
from plgroups.sigma1 import chi_ball_components, sigma1_evidence
from plgroups.slopegroup import parse_character

G = gs_group()
for text in ("chi_l", "chi_r", "chi_l - chi_r"):
    rep = chi_ball_components(G, parse_character(text), 3)
    print(text, rep.counts_by_radius, rep.sizes[:5])

# %% [markdown]
# Small elements whose character is non-negative but whose neighbours in
# the ball all have negative character show up as singleton components.
# Their connecting paths leave the ball, so counts grow with the radius on
# every ray, not only the two end characters.

# %%
rays = [parse_character(t) for t in ("chi_l", "chi_r", "-chi_l", "chi_l + chi_r", "2*chi_l - chi_r")]
print("\n".join(sigma1_evidence(G, rays, 3).lines()))
