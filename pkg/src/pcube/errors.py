"""Exceptions shared across the package."""


class GraphError(ValueError):
    """Malformed graph input."""


class SelfLoopError(GraphError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRange(GraphError):
    def __init__(self, vertex, n):
        super().__init__(f"vertex {vertex} out of range for n={n}")
        self.vertex = vertex
        self.n = n


class NotPartialCube(Exception):
    """The input was refused.

    ``reason`` is a short stable code (``"odd-cycle"``, ``"edge-bound"``,
    ``"disconnected"``, ``"budget"``, ``"multi-bit-edge"``,
    ``"unlabeled-self-loop"``, ``"cut"``, ``"duplicate-action"``,
    ``"no-acting-token"``, ``"search-exhausted"``); ``detail`` carries
    whatever witness the failing check had at hand.
    """

    def __init__(self, reason, message="", **detail):
        self.reason = reason
        self.detail = detail
        text = reason if not message else f"{reason}: {message}"
        super().__init__(text)
