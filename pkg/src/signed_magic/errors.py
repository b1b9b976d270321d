"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SmaError(Exception):
    """Base class for all package errors."""


class ParameterError(SmaError, ValueError):
    """A construction or helper was called outside its parameter domain."""


class ShapeError(SmaError, ValueError):
    """Array dimensions do not fit together."""


class CollisionError(SmaError, ValueError):
    """A block was placed over an occupied cell."""


class OverlapError(SmaError, ValueError):
    """Two sets that must be disjoint share an element."""


class UnpairableError(SmaError, ValueError):
    """A set cannot be split into 2-sets of the requested type."""


class IntegrityError(SmaError, RuntimeError):
    """A construction produced something other than what it promised."""


class InadmissibleError(SmaError, ValueError):
    """Parameters violate the basic counting frame of the object."""


class DocumentError(SmaError, ValueError):
    """A serialized grid document is malformed."""


class InvalidIhsError(SmaError, ValueError):
    """An array set offered as an integer Heffter set fails verification."""


class ExternalBaseUnavailable(SmaError, RuntimeError):
    """A base case delegated to the search oracle was not found in budget."""
