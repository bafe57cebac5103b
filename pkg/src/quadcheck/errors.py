"""Exception hierarchy shared by every quadcheck layer."""

from __future__ import annotations


class QuadcheckError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuadcheckError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """The argument is within the guard radius of a pole (gamma, zeta)."""


class IntegrandError(QuadcheckError):
    """The integrand produced a non-finite value.

    Carries the offending abscissa so the caller can see where the
    integrand blew up.
    """

    def __init__(self, abscissa: float, detail: str = ""):
        self.abscissa = abscissa
        msg = f"integrand is not finite at x = {abscissa!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DivergenceError(QuadcheckError):
    """Tail contributions of an improper integral are not decreasing.

    Raised when two consecutive truncation-window growths fail to shrink
    the window contribution, which signals an inadmissible integrand
    rather than a tolerance problem.
    """


class NonConvergenceError(QuadcheckError):
    """The quadrature budget was exhausted before reaching tolerance."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class ExpressionError(QuadcheckError):
    """Base class for expression-language failures."""


class ParseError(ExpressionError):
    """Syntax error in an expression, with a byte offset into the source."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


class EvaluationError(ExpressionError):
    """Evaluation failed, e.g. an unbound variable or division by zero."""


class UnknownCaseError(QuadcheckError, KeyError):
    """No catalog case with the requested id."""

    def __str__(self) -> str:  # KeyError would repr-quote the message
        return self.args[0] if self.args else ""


class ParameterError(QuadcheckError, ValueError):
    """A case parameter violates its domain constraint."""
