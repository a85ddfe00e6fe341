"""Exception hierarchy shared by the whole package.

Every error the library raises on bad input derives from MPolyTopoError, so
callers (notably the CLI) can map failures to exit codes without matching on
message text.
"""


class MPolyTopoError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRadicandError(MPolyTopoError):
    """A square-root radicand was zero or negative."""


class DivergentIntegralError(MPolyTopoError):
    """The x-integration operator hit a term with x-exponent 0."""


class InvalidRangeError(MPolyTopoError):
    """A grid evaluation range was non-finite or had fewer than 2 steps."""


class DegenerateDegreeError(MPolyTopoError):
    """A graph operation that needs minimum degree >= 1 saw an isolated vertex."""


class EdgeListError(MPolyTopoError):
    """Base class for malformed edge-list input."""


class EdgeListParseError(EdgeListError):
    """Edge-list text contained a non-integer or malformed token."""


class EdgeListFormatError(EdgeListError):
    """Edge-list text contained a self-loop or a duplicate edge."""


class DomainError(MPolyTopoError):
    """Family parameters fall outside the family's documented domain."""


class InfeasibleConstructionError(DomainError):
    """No graph with the requested parameters exists (e.g. n*r odd)."""
