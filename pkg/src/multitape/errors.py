"""Exception hierarchy shared by every module."""


class ExpressionError(Exception):
    """Base class for errors caused by a bad expression or input."""


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = "{} at position {}: {!r}".format(
                message, position, text[position:position + 10] or "<end>")
        super().__init__(message)


class UnknownLetter(ExpressionError):
    pass


class TapeMismatch(ExpressionError):
    """An operator was applied to operands with incompatible tape counts."""


class ArityMismatch(TapeMismatch):
    pass


class StarUndefined(ExpressionError):
    """The star of a weight does not exist in the semiring."""


class NonStarrableConstantTerm(StarUndefined):
    def __init__(self, subterm, weight):
        self.subterm = subterm
        self.weight = weight
        super().__init__(
            "constant term {} of starred subexpression {} is not starrable"
            .format(weight, subterm))


class NotProper(ExpressionError):
    pass


class SchemaError(ExpressionError):
    pass
