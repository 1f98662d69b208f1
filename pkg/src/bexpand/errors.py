from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph construction (loop, out-of-range vertex, ...)."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceeded(RuntimeError):
    """An exhaustive routine was asked to run beyond its configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class NotCentered(ValueError):
    """Raised when a coloring turns out not to be centered on some component."""

    def __init__(self, component: tuple[int, ...]):
        self.component = component
        super().__init__(f"no uniquely occurring color in component {list(component)}")
