# %% [markdown]
# # Gnomonic charts and spherical caps
#
# A body lying in an open hemisphere becomes a planar convex region once we
# project centrally from the hemisphere's pole. Geodesics turn into lines,
# so support functions, cuts and areas can all be computed in the plane and
# then pulled back with explicit Jacobians.

# %%
import numpy as np

from sphfloat import (CapBody, Chart, DirectionGrid, body_volume, chart_region, polar, radial, support,
                      unit_vector)

north = np.array([0.0, 0.0, 1.0])
K = CapBody.of(unit_vector([0.3, 0.1, 1.0]), np.pi / 5)

# %% [markdown]
# Seen from the north pole, the off-centre cap is an ellipse.

# %%
ch = Chart(north)
E = chart_region(K, ch)
print(E)
print("chart area  :", E.area())
print("sphere area :", E.sphere_area(), "closed form:", 2 * np.pi * (1 - np.cos(np.pi / 5)))

# %% [markdown]
# The spherical support value is the arctangent of the planar one, and
# support plus the polar body's radial function from the antipode is a
# right angle in every direction.

# %%
angles = np.linspace(0, 2 * np.pi, 7)[:-1]
v = ch.direction(angles)
h = support(K, north, v)
print("support    :", np.round(h, 6))
print("arctan     :", np.round(np.arctan(E.support(np.stack([np.cos(angles), np.sin(angles)], 1))), 6))
print("h + rho*   :", np.round(h + radial(polar(K), -north, v), 15))

# %% [markdown]
# Volumes come from radial functions on a direction grid around the pole.
# For a cap seen from its centre the rule is exact.

# %%
for m in (16, 64, 512):
    rep = body_volume(K, grid=DirectionGrid.uniform(K.center, m))
    print(f"M={m:4d}  area={rep.value:.15f}  est_error={rep.est_error:.1e}")
