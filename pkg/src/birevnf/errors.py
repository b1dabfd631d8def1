"""Exception types raised across the engine.

All engine errors derive from EngineError so callers (notably the CLI) can
map them onto exit codes without enumerating every failure mode.
"""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class IncompatibleMatrix(EngineError):
    """A linear map does not respect the z/conj(z) pairing of coordinates."""


class DimensionError(EngineError):
    """Operands act on coordinate spaces of different sizes."""


class OrderExceeded(EngineError):
    """Group closure did not terminate within the configured element bound."""


class SignInconsistency(EngineError):
    """The same matrix was reached with two different signs during closure."""


class ConditionViolated(EngineError):
    """The semidirect-product compatibility condition fails for a generator pair."""


class NotAHomomorphism(EngineError):
    """A candidate sign map is not constant on the orbits it must respect."""


class UnsupportedCase(EngineError):
    """Requested catalog case is not shipped; supply the group data manually."""


class ResourceLimit(EngineError):
    """A brute-force computation exceeded its configured size bound."""


class UncertifiedInput(EngineError):
    """A generator set without soundness certification was passed downstream."""


class ConfigError(EngineError):
    """Invalid job configuration."""


class CertificationFailure(EngineError):
    """An oracle comparison failed; the computed generators are not certified."""
