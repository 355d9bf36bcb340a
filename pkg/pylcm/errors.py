"""!
\file errors.py Exceptions raised by pylcm
"""
from typing import Optional


class LcmError(Exception):
    """!
    \brief Root of every exception raised by this library
    """


class InvalidTriple(LcmError, ValueError):
    """!
    \brief raised when [p,q,r] does not satisfy q ∈ Pp ∩ rP

    \param reason which of the two memberships failed
    """

    def __init__(self, reason: str, triple_repr: str = ""):
        self.reason = reason
        self.triple_repr = triple_repr
        msg = "invalid triple " + triple_repr + ": " + reason
        super().__init__(msg)


class ZeroElement(LcmError, ValueError):
    """"""


class NotIdempotent(LcmError, ValueError):
    """"""


class UnsupportedInstance(LcmError, NotImplementedError):
    """"""


class InconclusiveError(LcmError, RuntimeError):
    """!
    \brief a bounded search ended without an answer on a backend whose
    equality is only decided up to a depth
    """


class ResourceLimitError(LcmError, RuntimeError):
    """!
    \brief an enumeration would exceed the configured ceiling
    """

    def __init__(self, limit: int, requested: Optional[int] = None, what: str = ""):
        self.limit = limit
        self.requested = requested
        msg = "enumeration of " + (what or "elements") + " exceeds ceiling "
        msg += str(limit)
        if requested is not None:
            msg += " (requested at least " + str(requested) + ")"
        super().__init__(msg)


class ParseError(LcmError, ValueError):
    """!
    \brief syntax error in an expression

    \param position 0-based offset of the offending character
    """

    def __init__(self, message: str, position: int, source: str = ""):
        self.position = position
        self.source = source
        super().__init__(message + " at position " + str(position))
