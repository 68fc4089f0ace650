"""Exception hierarchy shared across the package."""


class QpsiError(Exception):
    """Base class for all domain errors raised by this package."""


class PoleError(QpsiError):
    """A denominator factor came within the pole threshold of zero."""


class TruncationError(QpsiError):
    """An infinite product hit the term cap before its tail bound was met."""


class NonConvergence(QpsiError):
    """An adaptive summation hit the term cap before stabilizing."""


class UnknownIdentity(QpsiError):
    """Requested identity id is not registered."""


class UnknownEntry(QpsiError):
    """Requested catalog entry is not registered."""


class NonUnit(QpsiError):
    """Attempt to invert a formal series with no invertible leading term."""


class Instability(QpsiError):
    """A formal infinite product cannot stabilize (non-positive exponent step)."""


class RangeOverflow(QpsiError):
    """A formal bilateral/unilateral sum failed to exhaust its window."""
