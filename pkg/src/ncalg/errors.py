"""Exception hierarchy shared by every ncalg module."""


class NcalgError(ValueError):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class AlgebraMismatchError(NcalgError):
    pass


class ShapeError(NcalgError):
    pass


class UnitAxiomError(NcalgError):
    pass


class AssociativityError(NcalgError):
    pass


class NotConjugationAlgebraError(NcalgError):
    pass


class MissingUnitError(NcalgError):
    pass


class UnsupportedAlgebraError(NcalgError):
    pass


class NotReducibleError(NcalgError):
    """The scalar part of x^2 = a does not collapse to one real quadratic."""


class SingularDivisorError(NcalgError):
    pass


class NotRepresentableError(NcalgError):
    pass


class TensorTooLargeError(NcalgError):
    pass


class DegreeError(NcalgError):
    pass


class ParseError(NcalgError):
    """Expression or document syntax error with a 1-based line/column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
