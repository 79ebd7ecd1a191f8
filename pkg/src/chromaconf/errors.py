"""Exception hierarchy shared by every module."""


class ChromaconfError(Exception):
    """Base class for all errors raised by chromaconf."""


class InputError(ChromaconfError, ValueError):
    """The caller supplied an invalid argument (exit status 1 in the CLI)."""


class GraphFormatError(InputError):
    """Text could not be parsed as a graph."""


class MalformedLineError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


class DisconnectedGraphError(InputError):
    """The operation needs a connected graph."""


class GuardExceeded(ChromaconfError):
    """An enumeration would exceed its configured scale guard (exit status 2)."""


class VerificationError(ChromaconfError):
    """An internal consistency check failed.

    Raised when a result contradicts a proven identity (non-exact division,
    sign alternation violated, routes disagreeing).  Maps to exit status 3.
    """
