"""Exception hierarchy shared across the package."""


class WCoreError(Exception):
    """Base class for every error raised by this package."""


class ParseError(WCoreError, ValueError):
    """Malformed scalar or matrix text."""


class DomainError(WCoreError, ValueError):
    """A value is not representable in the requested scalar domain."""


class NotInvertible(WCoreError, ZeroDivisionError):
    """Division by a zero scalar, or inversion of a singular matrix."""


class ShapeError(WCoreError, ValueError):
    """Incompatible matrix shapes or domains."""


class ConfigError(WCoreError, ValueError):
    """Invalid harness or CLI configuration."""


class OracleInfeasible(ConfigError):
    """Exhaustive enumeration would exceed the configured budget."""


class UnknownProperty(ConfigError, KeyError):
    """A property id that is not in the catalog."""

    def __str__(self):
        return Exception.__str__(self)
