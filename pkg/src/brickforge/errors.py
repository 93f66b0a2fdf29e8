"""Exception types shared across the library."""


class BrickforgeError(Exception):
    """Base class for all library-specific errors."""


class LoopEdge(BrickforgeError):
    """An edge joins a vertex to itself."""


class VertexOutOfRange(BrickforgeError):
    """An edge endpoint or shore member is not in 0..n-1."""


class EmptyShore(BrickforgeError):
    """A cut query was given the empty vertex set."""


class FullShore(BrickforgeError):
    """A cut query was given the full vertex set."""


class Disconnected(BrickforgeError):
    """Operation requires a connected graph."""


class NotCubic(BrickforgeError):
    """Operation requires a 3-regular graph."""


class SizeLimit(BrickforgeError):
    """Graph exceeds the subset-enumeration size guard."""


class NoPerfectMatching(BrickforgeError):
    """Operation requires a graph with a perfect matching."""


class NotMatchingCovered(BrickforgeError):
    """Operation requires a matching covered graph."""


class NotBrick(BrickforgeError):
    """Operation requires a brick."""


class DeadEdge(BrickforgeError):
    """Edge index refers to a deleted or nonexistent edge."""


class NotAClass(BrickforgeError):
    """Argument is not one of the graph's mutual-dependence classes."""


class BipartiteInput(BrickforgeError):
    """Operation requires a non-bipartite graph."""


class TooFewDoubletons(BrickforgeError):
    """Chain decomposition needs at least two removable doubletons."""


class ValidationFailed(BrickforgeError):
    """A structural validator found an inconsistency (bug or non-conforming input)."""


class BadParameter(BrickforgeError):
    """Invalid parameter value."""


class ParseError(BrickforgeError):
    """Input text could not be parsed; carries 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, col {col})" if col is not None else f"{message} (line {line})"
        super().__init__(message)
        self.line = line
        self.col = col
