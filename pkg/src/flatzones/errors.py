"""Exception types raised by graph and weight validation."""


class GraphError(ValueError):
    """Base class for graph construction and validation failures."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered vertex pair appears twice in the edge list."""


class VertexRangeError(GraphError):
    """An edge endpoint lies outside [0, vertex_count)."""


class DisconnectedGraphError(GraphError):
    """The vertex set is not connected, or an operation that requires a
    connected (sub)graph received a disconnected one."""


class WeightError(ValueError):
    """A raw edge weight is negative, NaN, infinite, or missing."""


class FormatError(ValueError):
    """A text or image payload does not follow its declared format."""
