"""Exception hierarchy shared across the package."""


class TpkError(Exception):
    """Base class for all domain errors raised by triplanekit."""


class MoveError(TpkError):
    """A rewriting move does not apply at the requested position."""

    def __init__(self, message, pos=None):
        super().__init__(message)
        self.pos = pos


class UnlinkCertificationError(TpkError):
    """Trisection parameters were requested but a trivial-disk sector link
    could not be certified as an unlink (state No or Unknown)."""

    def __init__(self, message, sector=None, state=None):
        super().__init__(message)
        self.sector = sector
        self.state = state


class ColoringPatternError(TpkError):
    """A coloring fails the pattern required by the covering construction
    (invalid on some tangle, non-transitive, or not one-component-colored-1
    with the rest colored 2 on an unlink sector)."""

    def __init__(self, message, sector=None):
        super().__init__(message)
        self.sector = sector


class TpdParseError(TpkError, ValueError):
    """Base class for diagram-document parse failures, with position info."""

    category = "parse"

    def __init__(self, message, line, column):
        super().__init__(f"line {line} col {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class TpdSyntaxError(TpdParseError):
    """The input does not match the line grammar."""

    category = "syntax"


class TpdSemanticError(TpdParseError):
    """The input parses but violates a model constraint (bad generator
    index, duplicate tangle line, coloring length mismatch, ...)."""

    category = "semantic"
