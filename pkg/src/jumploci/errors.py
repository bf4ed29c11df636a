"""Exception types raised by jumploci."""


class JumpLociError(ValueError):
    """Base class for input errors (CLI exit code 2)."""


class ParseError(JumpLociError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnknownGenerator(ParseError):
    pass


class EmptyGeneratorList(ParseError):
    pass


class RowCountMismatch(ParseError):
    pass


class RankDeficientSpec(JumpLociError):
    pass


class VariableMismatch(JumpLociError):
    pass


class DimensionMismatch(JumpLociError):
    pass


class IndexOutOfRange(JumpLociError):
    pass


class InvalidCharacter(JumpLociError):
    pass


class InvalidOneForm(JumpLociError):
    pass


class NotALift(JumpLociError):
    pass


class NotOnTorus(JumpLociError):
    pass


class SpecMismatch(JumpLociError):
    pass


class RankTooLarge(JumpLociError):
    pass


class ZeroPolynomial(JumpLociError):
    pass


class DegenerateCurve(JumpLociError):
    pass


class SizeLimitExceeded(Exception):
    """Input exceeds a desk-scale size guard (CLI exit code 3)."""
