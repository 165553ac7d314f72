"""Explicit construction of small Hamming graphs."""

import logging
from typing import List, Optional

from ..config.settings import settings
from ..exceptions import ResourceLimitError
from ..graphs.explicit import ExplicitGraph
from .params import HammingParams

logger = logging.getLogger(__name__)


def materialize(p: HammingParams, cap: Optional[int] = None) -> ExplicitGraph:
    """Build H(n, q) on q^n vertices.

    Vertex ``i`` is the word whose little-endian base-q digits are ``i``; words
    at Hamming distance one are adjacent, so the graph is (q-1)n-regular.

    Raises:
        ResourceLimitError: If q^n exceeds the materialization cap
    """
    cap = cap if cap is not None else settings.materialize_cap
    if p.vertex_count > cap:
        raise ResourceLimitError(
            f"H({p.n},{p.q}) has {p.q}^{p.n} vertices, above materialization cap {cap}"
        )

    place = [p.q**i for i in range(p.n)]
    rows: List[frozenset] = []
    for index in range(p.vertex_count):
        neighbors = []
        for weight in place:
            digit = (index // weight) % p.q
            base = index - digit * weight
            neighbors.extend(base + s * weight for s in range(p.q) if s != digit)
        rows.append(frozenset(neighbors))

    logger.debug(f"Materialized H({p.n},{p.q}): {p.vertex_count} vertices")
    return ExplicitGraph(p.vertex_count, tuple(rows))
