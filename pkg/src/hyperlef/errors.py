"""Exception types shared across the engine."""


class HyperlefError(Exception):
    """Base class for all engine errors."""


class MalformedDocument(HyperlefError):
    """Input document does not conform to the spec schema."""


class InvariantViolation(HyperlefError):
    """A validated object violates one of its invariants."""

    def __init__(self, message, curve_id=None):
        super().__init__(message)
        self.curve_id = curve_id


class DimensionMismatch(HyperlefError):
    pass


class GenusMismatch(HyperlefError):
    pass


class NoSection(HyperlefError):
    """First-homology computation requires a fibration with a section."""


class MissingLiftData(HyperlefError):
    pass


class MissingBlockData(HyperlefError):
    pass


class NotMcgTrivial(HyperlefError):
    """Lift-class queried for a word that is not trivial in the marked-sphere
    mapping class group."""


class LiftNotTrivial(HyperlefError):
    """Twisting hypothesis violated: the sub-factorization has a nontrivial
    braid lift."""


class LiftUndecided(HyperlefError):
    """The braid engine could not decide a lift class within budget."""


class InconsistentInvariants(HyperlefError):
    pass


class UndecidedLift(HyperlefError):
    pass


class NonIntegralSignature(HyperlefError):
    pass


class OutOfRange(HyperlefError):
    pass
