"""Exception hierarchy shared by all modules."""


class LGGError(Exception):
    """Base class for every error raised by this package."""


class DegenerateEdge(LGGError):
    pass


class EndpointQuery(LGGError):
    pass


class DuplicatePoint(LGGError):
    pass


class SelfLoop(LGGError):
    pass


class IndexOutOfRange(LGGError):
    pass


class DuplicateEdge(LGGError):
    pass


class BadParameter(LGGError):
    pass


class BadFormula(LGGError):
    pass


class TooFewVertices(LGGError):
    pass


class SamePair(LGGError):
    pass


class TooManyPoints(LGGError):
    pass


class EnumerationTruncated(LGGError):
    pass


class TooLarge(LGGError):
    """Oracle input exceeds its hard size cap."""


class ParseError(LGGError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}" + (f", column {column}" if column else "") + f": {message}"
        super().__init__(message)


class ValidationError(LGGError):
    def __init__(self, message, field=None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class ShapeError(LGGError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
