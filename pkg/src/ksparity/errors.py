"""Exception types raised across the package."""


class KSError(Exception):
    """Base class for all errors raised by ksparity."""


class PauliParseError(KSError, ValueError):
    pass


class QubitCountMismatch(KSError, ValueError):
    pass


class ProductNotIdentity(KSError, ValueError):
    """The product of a set of observables is not proportional to the identity."""


class ProductNotReal(KSError, ValueError):
    """The product of a set of observables is +-i times the identity."""


class SearchBoundExceeded(KSError, RuntimeError):
    """An exhaustive search was asked to run beyond its configured bound."""


class InconsistentContext(KSError, ValueError):
    pass


class NotSimpleSystem(KSError, ValueError):
    """The counting shortcut needs every observable in exactly two contexts,
    with no two contexts sharing more than one observable."""


class UnknownBasisLabel(KSError, KeyError):
    pass


class UnknownName(KSError, KeyError):
    pass


class SwapNotApplicable(KSError, ValueError):
    pass


class Inconsistent(KSError, ValueError):
    pass


class NoSolution(KSError, ValueError):
    pass


class DimensionTooLarge(KSError, ValueError):
    pass


class SymbolError(KSError, ValueError):
    pass


class DocumentError(KSError, ValueError):
    """A proof document could not be parsed."""
