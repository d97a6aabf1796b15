"""Exception types raised by symslocc."""


class SymsloccError(ValueError):
    """Base class for all library errors."""


class ZeroState(SymsloccError):
    pass


class LengthMismatch(SymsloccError):
    pass


class NotInvertible(SymsloccError):
    pass


class NoConvergence(ArithmeticError):
    """The root finder hit its sweep cap without meeting the stopping test."""


class ContinuousFamily(SymsloccError):
    """The family holds a continuum of classes; no config-only representative exists."""


class DegenerateImage(SymsloccError):
    pass


class DegenerateTriple(SymsloccError):
    pass


class DegeneratePoints(SymsloccError):
    pass


class TooFewPoints(SymsloccError):
    pass


class TooLarge(SymsloccError):
    pass


class NotSymmetric(SymsloccError):
    pass


class WitnessVerificationError(ArithmeticError):
    """A family is known to be a single class but no candidate witness verified."""
