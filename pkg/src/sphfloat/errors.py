"""Exception hierarchy.

Every geometric precondition failure raises a subclass of
:class:`GeometryError`, which itself derives from :class:`ValueError` so
callers that only care about bad input can catch that.
"""


class GeometryError(ValueError):
    pass


class DegenerateProjection(GeometryError):
    pass


class NotOrthogonal(GeometryError):
    pass


class NotProperlyContained(GeometryError):
    """Points do not lie in any open hemisphere."""


class BodyNotInOpenHemisphere(GeometryError):
    pass


class PoleNotInterior(GeometryError):
    pass


class NoValidPole(GeometryError):
    pass


class OutsideOpenHemisphere(GeometryError):
    pass


class PoleMismatch(GeometryError):
    pass


class DegenerateRadial(GeometryError):
    pass


class PoleInvalid(GeometryError):
    pass


class NotNested(GeometryError):
    pass


class BadSubsphere(GeometryError):
    pass


class DeltaOutOfRange(GeometryError):
    pass


class FloatingBodyEmpty(GeometryError):
    pass


class PoleNotInteriorOfFloat(GeometryError):
    pass


class BadEnclosure(GeometryError):
    pass


class BoundaryPointMismatch(GeometryError):
    pass


class ZeroCurvaturePoint(GeometryError):
    pass


class UnionNotConvex(GeometryError):
    pass


class UnsupportedBody(GeometryError):
    """The requested operation has no representation for this body type."""
