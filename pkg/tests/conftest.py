import numpy as np
import pytest
from hypothesis import settings

from sphfloat.body import CapBody, ChartBody, spherical_hull
from sphfloat.regions import Ellipse, Polygon

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

NORTH = np.array([0.0, 0.0, 1.0])


def rotation(seed: int) -> np.ndarray:
    q, r = np.linalg.qr(np.random.default_rng(seed).standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1
    return q


def ellipse_bodies():
    """Two chart-ellipse bodies, one off-centre and tilted."""
    return [
        ChartBody(NORTH, Ellipse.from_axes([0.8, 0.5], 0.3)),
        ChartBody(np.array([1.0, 2.0, 3.0]), Ellipse.from_axes([0.6, 0.35], -1.1, center=(0.1, -0.05))),
    ]


def polytope_bodies():
    tri = spherical_hull(np.array([[1.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]]))
    rng = np.random.default_rng(11)
    pts = NORTH + 0.6 * rng.standard_normal((9, 3)) * np.array([1, 1, 0])
    return [tri, spherical_hull(pts)]


def cap_bodies():
    return [CapBody.of(NORTH, a) for a in (np.pi / 6, np.pi / 4, np.pi / 3)]


@pytest.fixture
def triangle():
    return polytope_bodies()[0]


@pytest.fixture
def suite():
    return cap_bodies() + polytope_bodies() + ellipse_bodies()


def random_polygon_body(rng, pole=None):
    pole = NORTH if pole is None else pole
    pts = rng.uniform(-0.9, 0.9, size=(12, 2))
    return ChartBody(pole, Polygon.hull(pts))
