"""Constant-word burning schedules for H(n, q) and their coverage checks.

Write ``n = qk + r`` with ``0 <= r < q`` and take the constant words
``x_i = (i, ..., i)`` as the first sources of a schedule of length
``(q-1)k + s``. A word lies in ``Γ_{b-i}(x_i)`` exactly when symbol ``i``
occurs at least ``k + r - s + 1 + i`` times, so coverage reduces to counting
count vectors that stay below every threshold.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pydantic import BaseModel

from ..exceptions import InputError
from ..graphs.explicit import BurningSchedule, CoverageResult, verify_schedule
from ..hamming.counting import ThresholdVector, count_with_thresholds_violated
from ..hamming.materialize import materialize
from ..hamming.params import HammingParams, Word, word_to_index

logger = logging.getLogger(__name__)


def canonical_s(n: int, q: int) -> int:
    """⌈r - r/q + (q-1)/2 + 1/(2q)⌉ as ⌈(2r(q-1) + q² - q + 1) / (2q)⌉."""
    r = n % q
    return -(-(2 * r * (q - 1) + q * q - q + 1) // (2 * q))


@dataclass(frozen=True)
class ConstructionPlan:
    """A constant-word schedule for H(n, q) and its membership thresholds."""

    params: HammingParams
    k: int
    r: int
    s: int
    b: int
    sources: Tuple[Word, ...]
    radii: Tuple[int, ...]
    thresholds: ThresholdVector

    @property
    def length(self) -> int:
        return self.b + 1

    @property
    def is_canonical(self) -> bool:
        return self.s == canonical_s(self.params.n, self.params.q)

    def with_s(self, s: int) -> "ConstructionPlan":
        """Same parameters with a different ``s``; used to build weakened plans."""
        return _assemble(self.params, s)


def _assemble(p: HammingParams, s: int) -> ConstructionPlan:
    k, r = divmod(p.n, p.q)
    length = (p.q - 1) * k + s
    if length < 1:
        raise InputError(f"s={s} gives schedule length {length} for H({p.n},{p.q})")
    b = length - 1
    # Only the first min(q, b+1) constant words fit in the schedule
    used = min(p.q, length)
    return ConstructionPlan(
        params=p,
        k=k,
        r=r,
        s=s,
        b=b,
        sources=tuple(p.constant_word(i) for i in range(used)),
        radii=tuple(b - i for i in range(used)),
        thresholds=ThresholdVector(tuple(k + r - s + 1 + i for i in range(p.q))),
    )


def plan(p: HammingParams) -> ConstructionPlan:
    """The schedule of length ⌊(1 - 1/q)n + (q+1)/2⌋ built from constant words."""
    return _assemble(p, canonical_s(p.n, p.q))


def contradiction_holds(c: ConstructionPlan) -> bool:
    """True iff Σ(t_i - 1) < n, so no count vector can stay below every threshold."""
    return sum(t - 1 for t in c.thresholds.t) < c.params.n


def verify_plan_analytic(c: ConstructionPlan, workers: Optional[int] = None) -> int:
    """Exact number of words the plan leaves unburned; 0 certifies coverage.

    Thresholds for symbols beyond the schedule exceed ``n`` and so add nothing.
    """
    uncovered = count_with_thresholds_violated(c.params, c.thresholds, workers)
    logger.debug(
        f"H({c.params.n},{c.params.q}) s={c.s}: {uncovered} words outside the plan's balls"
    )
    return uncovered


def plan_schedule(c: ConstructionPlan) -> BurningSchedule:
    """Vertex-index schedule: the constant words, then ``x_0`` for the rest."""
    head = [word_to_index(c.params, w) for w in c.sources]
    tail = [word_to_index(c.params, c.params.constant_word(0))] * (c.length - len(head))
    return BurningSchedule(tuple(head + tail))


def verify_plan_exhaustive(c: ConstructionPlan, cap: Optional[int] = None) -> CoverageResult:
    """Burn the materialized H(n, q) with the plan's schedule.

    Truthy iff every vertex is burned; ``uncovered_count`` equals
    :func:`verify_plan_analytic` for any ``s``.

    Raises:
        ResourceLimitError: If q^n exceeds the materialization cap
    """
    graph = materialize(c.params, cap)
    return verify_schedule(graph, plan_schedule(c))


class PlanSummary(BaseModel):
    """JSON view of a construction plan."""

    n: int
    q: int
    k: int
    r: int
    s: int
    length: int
    thresholds: List[int]
    sources: List[List[int]]

    @classmethod
    def from_plan(cls, c: ConstructionPlan) -> "PlanSummary":
        return cls(
            n=c.params.n,
            q=c.params.q,
            k=c.k,
            r=c.r,
            s=c.s,
            length=c.length,
            thresholds=list(c.thresholds.t),
            sources=[list(w) for w in c.sources],
        )


class ConstructionReport(BaseModel):
    """Plan plus the verdict of the requested verification."""

    plan: PlanSummary
    verification: str
    uncovered: Optional[int] = None
    verified: Optional[bool] = None
