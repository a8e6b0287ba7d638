"""Exception types shared across the package."""

from __future__ import annotations


class FanoError(Exception):
    """Domain error carrying a stable machine-readable code.

    ``code`` is a short snake_case identifier suitable for JSON error
    output and for dispatching in callers; ``detail`` is a human-readable
    explanation.
    """

    def __init__(self, code: str, detail: str):
        self.code = code
        self.detail = detail
        super().__init__(f"{code}: {detail}")


class InternalCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This is never a data error: it signals a bug in this library and is
    deliberately not caught anywhere.
    """
