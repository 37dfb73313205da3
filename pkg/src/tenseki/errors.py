"""Exception hierarchy shared by every module of the package."""


class TensekiError(Exception):
    """Base class for all errors raised by tenseki."""


class LatticeError(TensekiError):
    """An order relation does not define a bounded distributive lattice.

    ``witness`` holds the element names that exhibit the failure.
    """

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotAPoset(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


class NotBounded(LatticeError):
    pass


class SignatureMismatch(TensekiError):
    pass


class MissingOperation(TensekiError):
    def __init__(self, symbol, message=None):
        super().__init__(message or f"missing operation {symbol!r}")
        self.symbol = symbol


class PreconditionUnverified(TensekiError):
    """Raised when an input fails the profile an operation presumes.

    ``report`` carries the failing AxiomReport when one is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class CenterNotClosed(TensekiError):
    def __init__(self, symbol, witness):
        super().__init__(f"operation {symbol!r} leaves the center at {witness!r}")
        self.symbol = symbol
        self.witness = tuple(witness)


class NoResidual(TensekiError):
    pass


class SpecError(TensekiError):
    """Base class for .alg input errors; carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        loc = f"line {line}" if line is not None else ""
        if line is not None and column is not None:
            loc += f", column {column}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.column = column


class ParseError(SpecError):
    def __init__(self, message, line=None, column=None, expected=()):
        if expected:
            message = f"{message} (expected one of: {', '.join(sorted(expected))})"
        super().__init__(message, line, column)
        self.expected = frozenset(expected)


class ResolveError(SpecError):
    def __init__(self, name, line=None, column=None):
        super().__init__(f"unknown element {name!r}", line, column)
        self.name = name


class ShapeError(SpecError):
    pass
