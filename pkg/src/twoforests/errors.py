"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for user-facing errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class MalformedLineError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class UnknownEdgeError(GraphError):
    pass


class MissingLabelError(GraphError):
    pass


class ExtraLabelError(GraphError):
    pass


class BadParameterError(GraphError):
    pass


class UnknownNameError(BadParameterError):
    pass


class TooLargeError(GraphError):
    pass


class InternalInvariantViolation(Exception):
    """A derived assertion failed; signals an implementation bug, never bad input."""
