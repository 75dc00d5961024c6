"""Exception types shared across the package.

Analysis verdicts (not Gorenstein, not normal, no decomposition) are data,
never exceptions.  Exceptions mark inputs we refuse to process: malformed
graphs, operations invoked outside their stated preconditions, and requests
whose exhaustive enumeration would not terminate at desk scale.
"""


class InvalidInputError(ValueError):
    """Malformed input: bad edge list, index out of range, wrong vector length."""


class PreconditionError(InvalidInputError):
    """Operation invoked on a graph outside its documented precondition."""


class BoundExceededError(RuntimeError):
    """Enumeration bound exceeded; the request is refused, not approximated."""
