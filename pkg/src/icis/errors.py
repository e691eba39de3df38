"""Exception types shared across the classifier pipeline."""


class IcisError(Exception):
    """Base class for all classifier errors."""


class ParseError(IcisError):
    """Raised on malformed polynomial input; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None
                         else f"{message} (at position {position})")
        self.position = position


class NotIsolated(IcisError):
    """The germ does not have an isolated singularity at the origin."""


class NotCompleteIntersection(IcisError):
    """The two generators do not define a codimension-2 complete intersection."""


class Hypersurface(IcisError):
    """A generator of order <= 1 makes the germ a hypersurface in disguise."""


class UnsupportedTwoJet(IcisError):
    """The restricted decomposition cascade cannot certify the 2-jet."""


class PositiveDimensionalSingularLocus(IcisError):
    """The strict transform is singular along a curve; input was not isolated."""


class IrrationalSingularPoint(IcisError):
    """A singular point of the strict transform has non-rational coordinates."""


class ReductionFailed(IcisError):
    """A blow-up germ could not be reduced to a hypersurface germ."""


class IndexOutOfRange(IcisError):
    """Normal-form indices outside the catalogued range."""


class ExcludedModulus(IcisError):
    """A modulus value explicitly excluded by the family definition."""


class UnknownNormalForm(IcisError):
    """The type label has no catalogued normal form."""


class InternalInconsistency(IcisError):
    """An invariant sanity check failed (e.g. mu < tau)."""
