"""Exception hierarchy shared by all modules.

The command line maps these onto exit codes: InputError -> 2,
UncertifiedError -> 3, ResourceLimitError -> 4.
"""


class GalorbError(Exception):
    """Base class for errors raised by this package."""


class InputError(GalorbError):
    """Invalid input data: files, arguments, or inconsistent tables."""


class DegenerateTableError(InputError):
    """A character table with two identical columns; column matching is ambiguous."""


class ResourceLimitError(GalorbError):
    """A configured guard (group order, degree, partition size) was exceeded."""


class UncertifiedError(GalorbError):
    """A screening run finished but could not certify completeness."""
