"""Exception types shared across the package."""


class QBernError(Exception):
    """Base class for every error raised by qbern."""


class DomainError(QBernError, ValueError):
    """An operation was applied outside its mathematical domain."""


class PoleError(QBernError, ZeroDivisionError):
    """A reduced denominator vanishes at the requested point."""

    def __init__(self, point, index=None):
        self.point = point
        self.index = index
        where = f" (coefficient {index})" if index is not None else ""
        super().__init__(f"pole at q = {point}{where}")


class UsageError(QBernError, ValueError):
    """Bad arguments: unknown tag, out-of-range parameter, length mismatch."""


class InconsistencyError(QBernError, ArithmeticError):
    """A result that the theory guarantees failed to materialise.

    Raised for a singular elimination step, a failing residual check, or a
    broken invariant of a constructed q-Bernoulli polynomial.
    """
