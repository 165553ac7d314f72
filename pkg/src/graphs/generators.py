"""Small named graph families."""

from ..exceptions import InputError
from .explicit import ExplicitGraph


def _require_positive(name: str, n: int) -> None:
    if n < 1:
        raise InputError(f"{name} graph needs at least one vertex, got {n}")


def path_graph(n: int) -> ExplicitGraph:
    """P_n: ``0 - 1 - ... - (n-1)``."""
    _require_positive("path", n)
    return ExplicitGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> ExplicitGraph:
    """C_n; needs ``n >= 3`` to stay simple."""
    if n < 3:
        raise InputError(f"cycle graph needs at least 3 vertices, got {n}")
    return ExplicitGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> ExplicitGraph:
    _require_positive("complete", n)
    return ExplicitGraph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
