"""Exception hierarchy.

Every pipeline failure derives from :class:`InoseError`; the class name is what
the command line front end reports, so names are part of the public surface.
"""


class InoseError(Exception):
    """Base class for all errors raised by this package."""


class IndeterminateMismatch(InoseError, ValueError):
    pass


class NotInSubfield(InoseError):
    """A rational function in u is not a function of u**k."""


class SingularPoint(InoseError):
    pass


class CommonComponent(InoseError):
    pass


class SingularInput(InoseError):
    """A curve with zero discriminant was supplied."""


class EqualJInvariant(InoseError):
    pass


class IsogenyInvalid(InoseError):
    pass


class DegreeMismatch(InoseError):
    pass


class NotSquarefree(InoseError):
    pass


class EmptyFamily(InoseError):
    pass


class ResidualNotLinear(InoseError):
    pass


class GcdNotLinear(InoseError):
    pass


class TransformDenominatorVanishes(InoseError):
    pass


class PointNotOnCurve(InoseError):
    pass


class DegenerateSection(InoseError):
    """The two lifted points coincide, so their difference is the zero section."""


class NonIntegralIntersection(InoseError):
    pass


class HeightMismatch(InoseError):
    pass
