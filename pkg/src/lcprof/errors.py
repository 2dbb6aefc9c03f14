"""Exception types shared across the package."""


class LcprofError(Exception):
    """Base class for errors raised by this package."""


class DomainMismatchError(LcprofError):
    """Operands belong to different coefficient domains."""


class UnsupportedDomainError(LcprofError):
    """Operation needs a capability the domain lacks (usually inverses)."""


class ResourceLimitError(LcprofError):
    """An enumeration or sweep would exceed its configured guard."""


class SequenceParseError(LcprofError):
    """Sequence text failed strict validation."""
