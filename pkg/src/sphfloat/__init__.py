"""Spherical convex floating bodies and the floating area on S^2.

Modules
-------
sphere      unit vectors, geodesic distance, caps and hemispheres
chart       gnomonic charts and their Jacobians
regions     planar convex regions used as chart images
body        spherical convex bodies: hull, polar, support and radial functions
quadrature  volumes, cut volumes and Fubini splits
floatbody   Euclidean and spherical floating bodies
floatarea   curvature, floating area, limit experiments and inequality checks
cli         batch experiment runner (``python -m sphfloat``)
"""

from .body import (AnalyticBody, CapBody, ChartBody, PolytopeBody, chart_region, find_pole,
                   is_proper, polar, radial, spherical_hull, support, volume)
from .chart import Chart, gnomonic, gnomonic_inv
from .floatarea import (check_duality, check_enclosure, check_holder, check_isoperimetric,
                        check_valuation, conjecture_gap, convergence_experiment,
                        floating_measure, gauss_kronecker, perimeter)
from .floatbody import spherical_floating_body, euclid_floating_body
from .quadrature import DirectionGrid, body_volume, cut_volume, volume_difference
from .sphere import Cap, Hemisphere, geodesic_distance, unit_vector

__all__ = [
    "AnalyticBody", "CapBody", "ChartBody", "PolytopeBody", "chart_region", "find_pole",
    "is_proper", "polar", "radial", "spherical_hull", "support", "volume", "Chart", "gnomonic",
    "gnomonic_inv", "check_duality", "check_enclosure", "check_holder", "check_isoperimetric",
    "check_valuation", "conjecture_gap", "convergence_experiment", "floating_measure",
    "gauss_kronecker", "perimeter", "spherical_floating_body", "euclid_floating_body",
    "DirectionGrid", "body_volume", "cut_volume", "volume_difference", "Cap", "Hemisphere",
    "geodesic_distance", "unit_vector",
]
