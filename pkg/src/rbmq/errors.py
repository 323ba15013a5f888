"""Exception hierarchy for the rbmq package."""


class RbmqError(Exception):
    """Base class for all rbmq errors."""


class DomainError(RbmqError):
    """An argument is outside the domain an operation is defined on."""


class UnsupportedFormatError(RbmqError):
    """Image bit depth, mode, or channel layout we do not handle."""


class ContainerError(RbmqError):
    """Base class for .rbmq container problems."""


class ContainerFormatError(ContainerError):
    """Bad magic or malformed header."""


class UnsupportedVersionError(ContainerError):
    """Container version this build does not understand."""


class CorruptionError(ContainerError):
    """Truncated payload, trailing garbage, or nonzero padding bits."""
