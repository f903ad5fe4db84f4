"""Exception hierarchy shared by every crossunion module."""


class CrossUnionError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(CrossUnionError, ValueError):
    """A numeric parameter (n, s, t, r, i, j) is outside its legal range."""


class PreconditionError(CrossUnionError, ValueError):
    """An operation was called on an input its contract does not cover."""


class EmptyFamilyError(PreconditionError):
    pass


class ScaleError(CrossUnionError, ValueError):
    """The requested exhaustive search exceeds the supported ground-set size."""


class HypothesisError(CrossUnionError, ValueError):
    """Parameters fall outside the range on which an inequality is claimed.

    Distinct from the inequality failing: a check outside its hypothesis has
    no truth value to report.
    """


class FamilyFormatError(CrossUnionError, ValueError):
    """Malformed JSON family or pair document."""
