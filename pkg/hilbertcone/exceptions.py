"""Exceptions for hilbertcone.

InputException subclasses signal invalid input (CLI exit status 1),
NumericalException subclasses signal numerical failure (exit status 2).
"""


class HilbertConeException(Exception):
    """Base exception for hilbertcone."""


class InputException(HilbertConeException):
    """Exception for indicating invalid input data."""


class NumericalException(HilbertConeException):
    """Exception for indicating a numerical failure."""


class DimensionMismatchException(InputException):
    """Exception for operands of incompatible shape or cone."""


class ZeroDenominatorException(InputException):
    """Exception for order bounds against the zero vector."""


class NotInConeException(InputException):
    """Exception for a point outside its cone."""


class NotInteriorException(InputException):
    """Exception for a point required to be interior but lying on the boundary."""


class InvalidConeException(InputException):
    """Exception for a cone description violating its invariants."""


class DegeneratePolytopeException(InputException):
    """Exception for a polytope with empty interior."""


class UnboundedDomainException(InputException):
    """Exception for a polytopal domain that is not bounded."""


class PointsCoincideException(InputException):
    """Exception for a chord requested between coinciding points."""


class EmptyMatrixException(InputException):
    """Exception for a matrix without entries."""


class NegativeEntryException(InputException):
    """Exception for a matrix with negative entries where a nonnegative one is required."""


class NegativeDiameterException(InputException):
    """Exception for a negative projective diameter."""


class AlgebraMismatchException(InputException):
    """Exception for Jordan elements from different algebras."""


class NotInvertibleException(InputException):
    """Exception for inverting a Jordan element with a zero eigenvalue."""


class HypothesisViolatedException(InputException):
    """Exception for parameters outside the range where the cone contraction holds."""


class ArgumentTooSmallException(InputException):
    """Exception for a size argument below its admissible minimum."""


class NegativeInputException(InputException):
    """Exception for a point with negative coordinates where R^n_+ is required."""


class EmptyVectorException(InputException):
    """Exception for an empty coordinate vector."""


class SchemaException(InputException):
    """Exception for input documents not conforming to a command schema."""


class NoConvergenceException(NumericalException):
    """Exception for an iteration that did not converge within max_iter steps."""

    def __init__(self, max_iter: int, residual: float | None = None) -> None:
        self.max_iter = max_iter
        self.residual = residual
        super().__init__(
            f"No convergence within {max_iter} iterations (last residual {residual})."
        )


class EvaluationFailureException(NumericalException):
    """Exception for a user-supplied map that failed or returned invalid values."""
