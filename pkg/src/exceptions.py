"""Error hierarchy for hamburn."""

from typing import Optional


class HamburnError(Exception):
    """Base class for all hamburn errors."""


class InputError(HamburnError, ValueError):
    """Malformed input: bad graph, schedule, parameters or count vector."""


class GraphSpecError(InputError):
    """A graph spec token or edge-list file could not be parsed."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ResourceLimitError(HamburnError, RuntimeError):
    """A configured size cap would be exceeded."""


class BudgetExceededError(ResourceLimitError):
    """The solver ran out of its time budget before reaching a verdict."""
