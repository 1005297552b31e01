"""Exception hierarchy shared by the algebra, the law checker and the CLI."""


class AlgebraError(Exception):
    """Base class for every error raised by this package."""


class UnknownLetter(AlgebraError):
    def __init__(self, symbol, position=None):
        self.symbol = symbol
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown letter {symbol!r}{where}")


class UndefinedOnUnitPair(AlgebraError):
    """An operation was applied to 1 (x) 1, which lies outside H+ (x) H+."""

    def __init__(self, op):
        self.op = op
        super().__init__(f"{op} is undefined on the unit pair (1, 1)")


class UnitNotInHPlus(AlgebraError):
    """An operation restricted to non-empty words received the empty word."""

    def __init__(self, op):
        self.op = op
        super().__init__(f"{op} requires a non-empty word, got the empty word 1")


class EmptyWordInOracle(AlgebraError):
    def __init__(self, op):
        self.op = op
        super().__init__(f"constrained-shuffle form of {op} needs two non-empty words")


class SpecDomainError(AlgebraError):
    """An instance specification is invalid or incompatible with a law's domain."""


class ExpressionError(AlgebraError):
    """Base class for errors raised while parsing an expression."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExprSyntaxError(ExpressionError):
    def __init__(self, position, expected, found=None):
        self.expected = expected
        self.found = found
        got = "end of input" if found is None else repr(found)
        super().__init__(f"expected {expected}, found {got}", position)


class UnknownOperator(ExpressionError):
    def __init__(self, name, position=None):
        self.name = name
        super().__init__(f"unknown operator {name!r}", position)


class ArityError(ExpressionError):
    def __init__(self, name, expected, got, position=None):
        self.name = name
        super().__init__(f"{name} takes {expected} argument(s), got {got}", position)


class ExprTypeError(ExpressionError):
    """A tensor-valued expression was used where a word combination is required."""
