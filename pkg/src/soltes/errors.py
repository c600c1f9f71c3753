"""Exception hierarchy shared by every module of the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or an unsupported operation."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError, IndexError):
    pass


class EdgeNotFoundError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class NotAMatchingError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class CutVertexError(GraphError):
    """Deleting the vertex disconnects the graph, so its detour sum is undefined."""


class BadParameterError(ValueError):
    pass


class XTooSmallError(BadParameterError):
    pass


class Graph6Error(ValueError):
    pass


class MalformedHeaderError(Graph6Error):
    pass


class TrailingGarbageError(Graph6Error):
    pass


class NonCanonicalPaddingError(Graph6Error):
    pass


class EdgeListError(GraphError):
    pass


class EmptyStreamError(ValueError):
    pass
