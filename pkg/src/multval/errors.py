"""Exception hierarchy.  Every mathematical failure derives from MultvalError."""


class MultvalError(Exception):
    pass


class InvalidRhoSpec(MultvalError, ValueError):
    pass


class NonPositiveDenominator(MultvalError, ValueError):
    pass


class ZeroOperator(MultvalError, ZeroDivisionError):
    pass


class AllZeroCoefficients(MultvalError, ValueError):
    pass


class ZeroPolynomial(MultvalError, ValueError):
    pass


class NegativeValuation(MultvalError, ValueError):
    pass


class ZeroCoefficient(MultvalError, ValueError):
    pass


class DivisionByZero(MultvalError, ZeroDivisionError):
    pass


class PrecisionUnreachable(MultvalError, ArithmeticError):
    """A cutoff cannot be reached by finitely many geometric-series terms."""


class ZeroArgument(MultvalError, ValueError):
    pass


class DuplicateSlope(MultvalError, ValueError):
    pass


class NoNonzeroTerm(MultvalError, ValueError):
    pass


class TooShort(MultvalError, ValueError):
    pass


class InfinityInverse(MultvalError, ZeroDivisionError):
    pass


class InfinityDecode(MultvalError, ValueError):
    pass


class ParseError(MultvalError, ValueError):
    """Syntax error with a 1-based position and the set of expected tokens."""

    def __init__(self, message, line=1, column=1, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(text)


class SolverFailed(MultvalError):
    """The residue field could not solve ``1 + sum alpha_j sigma_bar^j(x) = 0``."""

    def __init__(self, alphas, residue=None):
        self.alphas = tuple(alphas)
        self.residue = residue
        from .parsing import format_linear_equation
        self.equation = format_linear_equation(self.alphas)
        super().__init__(f"residue field has no solution of {self.equation}")
