# %% [markdown]
# # The floating area and its inequalities
#
# The floating area integrates the cube root of the boundary's geodesic
# curvature. It is self-dual under polarity and is bounded above by
# perimeter data of the body and its polar.

# %%
import numpy as np

from sphfloat import (CapBody, ChartBody, check_duality, check_holder, conjecture_gap, floating_measure,
                      perimeter, polar)
from sphfloat.floatarea import check_enclosure, check_valuation, split_by_hemisphere
from sphfloat.regions import Ellipse

north = np.array([0.0, 0.0, 1.0])
for alpha in (np.pi / 6, np.pi / 4, np.pi / 3):
    K = CapBody.of(north, alpha)
    print(f"alpha={alpha:.4f}  Omega={floating_measure(K):.9f}  Omega(polar)={floating_measure(polar(K)):.9f}")

# %% [markdown]
# Elliptical bodies: duality is an identity, the two upper bounds are
# strict.

# %%
K = ChartBody(north, Ellipse.from_axes([0.9, 0.4], 0.3))
for rep in (check_duality(K), check_holder(K), check_enclosure(K)):
    print(f"{rep.name:14s} lhs={rep.lhs:.9f} rhs={rep.rhs:.9f} passed={rep.passed}")
print("perimeter", perimeter(K))

# %% [markdown]
# Cutting a cap along great circles and measuring the pieces shows
# additivity: Omega(A) + Omega(B) = Omega(A u B) + Omega(A n B).

# %%
cap = CapBody.of(north, np.pi / 4)
for z in ([1.0, 0, 0], [1.0, 1.0, 0.4], [0.2, -1.0, -0.3]):
    a, b = split_by_hemisphere(cap, z)
    print("defect", check_valuation(a, b).gap)

# %% [markdown]
# Among bodies of equal area, caps appear to maximise the floating area.
# A family of flattening ellipses never beats its equal-area cap.

# %%
for ratio in (1.0, 0.8, 0.5, 0.3, 0.15):
    a = 0.6 / np.sqrt(ratio)
    E = ChartBody(north, Ellipse.from_axes([min(a, 2.5), min(a, 2.5) * ratio]))
    rep = conjecture_gap(E)
    print(f"axis ratio {ratio:4.2f}: Omega/Omega(cap) = {rep.ratio:.6f}")
