from django.core import exceptions


class BorcherdsError(Exception):
    """Base class for errors raised by borcherds."""


class ImproperlyConfigured(BorcherdsError, exceptions.ImproperlyConfigured):
    """A setting or data-file location is invalid."""


class DataError(BorcherdsError):
    """A constant data file fails its invariant checks."""


class LatticeError(BorcherdsError):
    pass


class ChamberError(BorcherdsError):
    pass


class InvariantError(BorcherdsError):
    """A computed object violates a structural invariant."""
