# %% [markdown]
# # Floating bodies on the sphere
#
# For every direction on the great circle around a pole we slide a great
# circle inward until the piece it cuts off has area ``delta``. The
# floating body is what remains after all those pieces are removed.

# %%
import numpy as np

from sphfloat import (CapBody, DirectionGrid, convergence_experiment, find_pole, spherical_floating_body,
                      spherical_hull, volume)
from sphfloat.floatarea import floating_constant, floating_measure

octant = spherical_hull(np.eye(3))
u = find_pole(octant)
grid = DirectionGrid.uniform(u, 256)

for delta in (1e-1, 1e-2, 1e-3):
    fb = spherical_floating_body(octant, delta, grid=grid)
    print(f"delta={delta:g}: floating body has {len(fb.body.region.vertices)} chart vertices, "
          f"area {volume(fb.body):.6f} of {volume(octant):.6f}")

# %% [markdown]
# As ``delta`` shrinks, the lost area scales like ``delta^(2/3)`` and the
# quotient tends to ``c_2`` times the floating area of the body. On a cap
# the quotients climb monotonically towards that limit.

# %%
cap = CapBody.of([0, 0, 1.0], np.pi / 4)
res = convergence_experiment(cap, schedule=(1e-2, 1e-3, 1e-4, 1e-5, 1e-6))
for row in res.rows:
    print(f"delta={row.delta:8.0e}  quotient={row.quotient:.6f}")
print(f"fitted limit {res.limit:.6f} (error exponent {res.exponent:.3f})")
print(f"target       {floating_constant(2) * floating_measure(cap):.6f}")

# %% [markdown]
# Polygons have no curvature off their vertices, so their floating area is
# zero and the quotient drifts towards zero instead, only slowly.

# %%
res = convergence_experiment(octant, schedule=(1e-2, 1e-3, 1e-4, 1e-5), grid=grid)
print([round(r.quotient, 4) for r in res.rows])
