"""Exception hierarchy.

Every error raised on purpose by the toolkit derives from :class:`BHError`,
so callers (and the CLI) can separate input problems from programming bugs.
"""


class BHError(Exception):
    """Base class for all toolkit errors."""


class PolynomialSyntaxError(BHError, ValueError):
    """Text does not match the polynomial grammar."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(message)

    def __str__(self):
        msg = self.args[0]
        if not self.text:
            return f"{msg} (at position {self.position})"
        caret = " " * self.position + "^"
        return f"{msg} (at position {self.position})\n  {self.text}\n  {caret}"


class InvalidPolynomialError(BHError, ValueError):
    """Parsed polynomial is not an invertible polynomial."""


class NotAtomicError(InvalidPolynomialError):
    """Polynomial has no decomposition into disjoint atomic blocks."""


class SingularMatrixError(BHError, ZeroDivisionError):
    """Exponent matrix has zero determinant."""


class WeightError(BHError, ValueError):
    """No valid weight system, or a weight system fails validation."""


class DimensionMismatchError(BHError, ValueError):
    """Weight vector length differs from the number of variables."""


class NotCalabiYauError(BHError, ValueError):
    """Operation requires |w| = d."""


class NotFanoError(BHError, ValueError):
    """Operation requires |w| - d > 0."""


class FermatInputError(BHError, ValueError):
    """Pure Fermat input: the transpose is trivial, so the construction degenerates."""


class ConventionError(BHError, ArithmeticError):
    """An exact quantity that must be an integer came out fractional."""


class TooManyVariablesError(BHError, ValueError):
    """Subset enumeration would exceed the configured variable cap."""
