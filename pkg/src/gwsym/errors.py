"""Exception hierarchy shared by every module of the package."""


class GWError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class ZeroInput(GWError):
    pass


class CharTwo(GWError):
    pass


class BadPrime(GWError):
    pass


class FactorizationLimit(GWError):
    pass


class FieldMismatch(GWError):
    pass


class NoRealPlace(GWError):
    pass


class TruncationExceeded(GWError):
    pass


class TrivialClass(GWError):
    pass


class DependentGenerators(GWError):
    pass


class BadCodim(GWError):
    pass


class SizeLimit(GWError):
    pass


class NotAUnit(GWError):
    pass


class OutOfRange(GWError):
    pass


class ConsistencyError(GWError):
    """Two independent computation routes disagreed."""


class ParseError(ValueError):
    """Malformed textual input (the CLI maps this to exit code 2)."""
