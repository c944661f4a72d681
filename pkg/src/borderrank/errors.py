"""Exception hierarchy shared across the package.

InputError signals malformed user data (bad file, bad field, bad shape).
MathFailure and its subclasses signal computations that ran fine but hit a
mathematical obstruction; the CLI maps the two families to distinct exit
codes so scripts can branch on them.
"""


class InputError(ValueError):
    """Malformed input: names the offending field or argument."""


class MathFailure(Exception):
    """A computation reached a mathematically meaningful failure state."""


class NegativeValuationError(MathFailure):
    """A Laurent combination does not converge at t = 0."""


class DependentFamilyError(MathFailure):
    """Generators that must be independent over Q(t) are not."""


class CapInsufficientError(MathFailure):
    """The truncation degree cannot certify the limit scheme."""
