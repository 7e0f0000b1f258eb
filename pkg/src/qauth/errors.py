"""Exception types shared across the package."""


class QauthError(Exception):
    """Base class for package errors."""


class DimensionError(QauthError, ValueError):
    """Operands have incompatible lengths or shapes."""


class UnsupportedSizeError(QauthError, ValueError):
    """Requested parameters exceed a documented size bound."""


class KeyReuseError(QauthError, RuntimeError):
    """A single-use secret key was presented twice."""


class ProtocolViolationError(QauthError, RuntimeError):
    """Quantum-semantics contract broken (e.g. measuring a consumed qubit)."""
