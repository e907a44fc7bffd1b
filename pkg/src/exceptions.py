"""
Exception hierarchy for the bidiophantine toolkit.

Every error derives from ValueError so plain ``except ValueError`` callers keep working.
The CLI maps BidiophantineError to exit code 1 and InputFileError to exit code 2.
"""


class BidiophantineError(ValueError):
    """Base class for all domain errors raised by the toolkit."""


class DomainError(BidiophantineError):
    """An argument lies outside the mathematical domain of an operation."""


class ArityError(BidiophantineError):
    """Too few points were supplied for the requested operation."""


class DistinctPointsError(BidiophantineError):
    """A configuration contains the same lattice point more than once."""


class NotSimplePolygonError(BidiophantineError):
    """The vertices, read in the given cyclic order, do not form a simple polygon."""


class UnsupportedParametersError(BidiophantineError):
    """The (D, N) pair or family index is not one of the supported ones."""


class ParameterError(BidiophantineError):
    """Parameters are individually valid but inconsistent with each other."""


class AdmissibilityError(BidiophantineError):
    """The family parameter b does not make the height integral."""


class UnknownCaseError(BidiophantineError):
    """No parity case is registered under the given identifier."""


class ConfigError(BidiophantineError):
    """The configuration file is missing required sections or holds bad values."""


class InputFileError(Exception):
    """An input file is unreadable or does not follow the polygon file schema."""
