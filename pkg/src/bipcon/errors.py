"""Exception types shared across the package."""


class BipconError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(BipconError, ValueError):
    """An edge endpoint lies outside the declared vertex ranges."""


class DuplicateEdge(BipconError, ValueError):
    """The same edge was supplied more than once."""


class EmptyPart(BipconError, ValueError):
    """An operation needs both parts of the bipartition to be nonempty."""


class EmptyGraph(BipconError, ValueError):
    """An operation needs at least one vertex."""


class TooSmall(BipconError, ValueError):
    """Connectivity queries need at least two vertices."""


class TooLarge(BipconError, ValueError):
    """The requested computation exceeds the supported size caps."""


class BadSubset(BipconError, ValueError):
    """A cyclic-group subset contains elements outside its modulus."""


class PreconditionViolated(BipconError, ValueError):
    """A witness builder was called with parameters outside its domain."""


class NoWitness(BipconError, LookupError):
    """No witness family covers the requested goal and parameters."""


class InvalidTriple(BipconError, ValueError):
    """A parameter triple violates 1 <= r <= s or 0 <= m <= floor(rs/2)."""


class UnknownTheorem(BipconError, KeyError):
    """The requested claim identifier is not in the catalog."""
