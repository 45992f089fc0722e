"""
Library exceptions
==================
Every error carries a stable ``name`` (the class name) that the CLI prints.
Parse errors map to exit code 2, computation errors to exit code 1.
"""

from typing import Optional


class FittingForgeError(Exception):
    """Base class for all library errors"""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    @property
    def name(self) -> str:
        return type(self).__name__


# ============================================================================
# PARSE ERRORS
# ============================================================================

class ParseError(FittingForgeError):
    exit_code = 2


class PolySyntaxError(ParseError):
    def __init__(self, message: str, text: str, position: Optional[int] = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where} in {text!r}")


class UnknownVariableError(ParseError):
    def __init__(self, variable: str, known: tuple[str, ...]):
        self.variable = variable
        super().__init__(f"unknown variable {variable!r} (known: {', '.join(known)})")


class MatrixSyntaxError(ParseError):
    pass


class IdealSyntaxError(ParseError):
    pass


class TreeSyntaxError(ParseError):
    pass


class DuplicateLabelError(ParseError):
    pass


class WeightOnInnerVertexError(ParseError):
    pass


# ============================================================================
# COMPUTATION ERRORS
# ============================================================================

class ComputationError(FittingForgeError):
    exit_code = 1


class ZeroPolynomialError(ComputationError):
    pass


class ZeroIdealError(ComputationError):
    pass


class UnitDetectionUnsupported(ComputationError):
    """An ideal is neither monomial nor univariate and has no constant generator"""


class PrincipalityUnsupported(ComputationError):
    """Principality of a non-monomial multivariate ideal cannot be decided"""


class NoValidColumnSubsetError(ComputationError):
    pass


class MixedVariableEntriesError(ComputationError):
    pass


class NonMonomialEntriesError(ComputationError):
    pass


class DivisibilityViolationError(ComputationError):
    pass


class InvariantViolationError(ComputationError):
    pass


class EmptyCenterError(ComputationError):
    pass


class RootAdvanceError(ComputationError):
    pass


class NoBranchVertexError(ComputationError):
    pass


class PathTreeError(ComputationError):
    pass


class DepthExhaustedError(ComputationError):
    pass
