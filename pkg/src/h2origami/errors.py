"""Exception hierarchy shared by every module of the package."""


class H2Error(ValueError):
    """Base class for all errors raised by h2origami."""


class NotConnected(H2Error):
    """The permutation pair does not act transitively on the squares."""


class WrongStratum(H2Error):
    """The surface is not in H(2)."""


class InvalidCoords(H2Error):
    """Cylinder coordinates violate their area or ordering invariants."""


class NotPrimitive(H2Error):
    """The period lattice of the surface is a proper sublattice of Z^2."""


class BadN(H2Error):
    """The number of squares is outside the range an operation supports."""


class BadPartition(H2Error):
    """Saddle connection lengths do not have the arity of the stratum."""


class NoInvolution(H2Error):
    """No hyperelliptic involution exists (invalid input or a bug)."""


class NonIntegralGenus(H2Error):
    """Gauss-Bonnet produced a non-integral or negative genus."""


class BudgetExceeded(H2Error):
    """A bounded search ran out of steps."""


class ParseError(H2Error):
    """A textual permutation or coordinate string is malformed."""
