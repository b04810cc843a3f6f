"""
Error types shared by every module
"""


class SRCWError(Exception):
    """Base class for toolkit errors"""


class PreconditionError(SRCWError, ValueError):
    """An operation was called outside its precondition"""


class ParseError(SRCWError, ValueError):
    """Malformed word or JSON document"""


class ResourceLimitError(SRCWError, RuntimeError):
    """A size or attempt cap was exceeded"""


class DeviceCompleteError(PreconditionError):
    """The sink device D(w) has no undefined transition"""


class UnusedVariableError(PreconditionError):
    """A W-SAT variable occurs in no clause"""


class WitnessError(SRCWError, AssertionError):
    """An internally built witness failed verification"""
