"""Exception hierarchy shared by every module of the package."""


class PathGBError(Exception):
    """Base class for all errors raised by pathgb."""


class QuiverError(PathGBError):
    pass


class DuplicateName(QuiverError):
    pass


class DanglingEndpoint(QuiverError):
    pass


class NotComposable(PathGBError):
    pass


class TypeMismatch(PathGBError):
    """Polynomials with different endpoints were combined."""


class ZeroPolynomial(PathGBError):
    pass


class NotComplete(PathGBError):
    """A decision was requested from a system not known to be a Groebner basis."""


class InternalLimit(PathGBError):
    """Defensive cap on reduction steps; indicates a bug, not bad input."""


class InvalidPresentation(PathGBError):
    pass


class Incomplete(PathGBError):
    """Completion stopped at a limit; carries the partial report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PresentationSyntaxError(PathGBError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)
        self.line = line
        self.column = column


class SemanticError(PresentationSyntaxError):
    pass
