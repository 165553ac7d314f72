"""Exact burning-number solver.

For ``B = 1, 2, ...`` the solver decides whether a schedule of length ``B``
exists by depth-first search over source choices with radii ``B-1, ..., 0``.
A branch is cut when its uncovered vertices outnumber the largest possible
coverage of the remaining radii. The greedy schedule provides the incumbent
upper bound, so only lengths below it are searched.
"""

import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from ..config.settings import settings
from ..exceptions import BudgetExceededError, InputError, ResourceLimitError
from .bitset import full_mask, popcount
from .explicit import (
    BallIndex,
    BurningSchedule,
    ExplicitGraph,
    greedy_schedule,
    is_connected,
    verify_schedule,
)

_DEADLINE_CHECK_INTERVAL = 1024


class SolverOutcome(str, Enum):
    """Non-numeric solver verdicts."""

    EXCEEDS_LIMIT = "exceeds_limit"


@dataclass(frozen=True)
class SolverResult:
    """Burning number with a witness schedule, or an exceeded-limit verdict."""

    value: Optional[int]
    witness: Optional[BurningSchedule]
    nodes: int = 0
    exceeded_limit: bool = False


class _FeasibilitySearch:
    """Decides whether some schedule of ``length`` sources burns every vertex."""

    def __init__(
        self,
        layers: List[List[int]],
        vertex_count: int,
        length: int,
        deadline: Optional[float] = None,
    ) -> None:
        self.layers = layers
        self.vertex_count = vertex_count
        self.length = length
        self.deadline = deadline
        self.full = full_mask(vertex_count)
        self.nodes = 0

        self.radii = [length - 1 - k for k in range(length)]
        volumes = [
            max(popcount(self._mask(v, r)) for v in range(vertex_count))
            for r in self.radii
        ]
        # capacity[k]: most vertices positions k.. can still burn
        self.capacity = [0] * (length + 1)
        for k in range(length - 1, -1, -1):
            self.capacity[k] = self.capacity[k + 1] + volumes[k]

    def _mask(self, v: int, r: int) -> int:
        layer = self.layers[v]
        return layer[r] if r < len(layer) else layer[-1]

    def candidates(self, position: int, covered: int) -> List[int]:
        """Sources worth trying at ``position``, in increasing vertex order.

        A source adding nothing new is never needed, and two sources adding the
        same new vertices lead to the same state; only the smallest id is kept.
        """
        uncovered = self.full & ~covered
        radius = self.radii[position]
        seen = set()
        result = []
        for v in range(self.vertex_count):
            gain = self._mask(v, radius) & uncovered
            if gain and gain not in seen:
                seen.add(gain)
                result.append(v)
        return result

    def search_from(self, first: int) -> Optional[Tuple[int, ...]]:
        sources = [first]
        if self._dfs(1, self._mask(first, self.radii[0]), sources):
            return tuple(sources)
        return None

    def _tick(self) -> None:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % _DEADLINE_CHECK_INTERVAL == 0
            and time.monotonic() > self.deadline
        ):
            raise BudgetExceededError(
                f"time budget exhausted while testing length {self.length}"
            )

    def _dfs(self, position: int, covered: int, sources: List[int]) -> bool:
        self._tick()
        uncovered = self.full & ~covered
        if not uncovered:
            # Remaining sources are arbitrary; pin them to vertex 0
            sources.extend([0] * (self.length - position))
            return True
        if position == self.length:
            return False
        if popcount(uncovered) > self.capacity[position]:
            return False
        radius = self.radii[position]
        for v in self.candidates(position, covered):
            sources.append(v)
            if self._dfs(position + 1, covered | self._mask(v, radius), sources):
                return True
            sources.pop()
        return False


def _search_branch(
    args: Tuple[List[List[int]], int, int, int, Optional[float]],
) -> Tuple[Optional[Tuple[int, ...]], int]:
    """Pool worker: explore every schedule starting with one first source.

    ``deadline`` is absolute on the monotonic clock, which worker processes share.
    """
    layers, vertex_count, length, first, deadline = args
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError(f"time budget exhausted before testing length {length}")
    search = _FeasibilitySearch(layers, vertex_count, length, deadline)
    return search.search_from(first), search.nodes


class BurningSolver:
    """Exact solver for the burning number of a connected explicit graph."""

    def __init__(
        self,
        vertex_cap: Optional[int] = None,
        time_budget: Optional[float] = None,
        workers: Optional[int] = None,
    ) -> None:
        self.vertex_cap = vertex_cap if vertex_cap is not None else settings.solver_vertex_cap
        self.time_budget = (
            time_budget if time_budget is not None else settings.solver_time_budget
        )
        self.workers = workers if workers is not None else settings.workers
        self.logger = logging.getLogger(__name__)

    def solve(self, g: ExplicitGraph, limit: Optional[int] = None) -> SolverResult:
        """Compute β(g) and one witness schedule.

        Args:
            g: Connected, non-empty graph
            limit: Stop with an exceeded-limit result once β is known to exceed it

        Returns:
            SolverResult with the burning number and the first witness the
            search meets in increasing vertex order

        Raises:
            InputError: If the graph is empty or disconnected
            ResourceLimitError: If the graph is above the vertex cap with no time budget
            BudgetExceededError: If the time budget runs out
        """
        if g.vertex_count == 0:
            raise InputError("burning number of the empty graph is undefined")
        if not is_connected(g):
            raise InputError("graph is disconnected; burning never completes")
        if limit is not None and limit < 1:
            raise InputError(f"limit must be positive, got {limit}")
        if g.vertex_count > self.vertex_cap:
            if self.time_budget is None:
                raise ResourceLimitError(
                    f"{g.vertex_count} vertices exceeds solver cap {self.vertex_cap}; "
                    "set a time budget for a best-effort run"
                )
            self.logger.warning(
                f"{g.vertex_count} vertices above cap {self.vertex_cap}, "
                f"best effort within {self.time_budget}s"
            )

        deadline = (
            time.monotonic() + self.time_budget if self.time_budget is not None else None
        )
        index = BallIndex(g)

        start = self._counting_lower_bound(index)
        upper, incumbent = self._greedy_incumbent(g, index, start)
        self.logger.debug(f"Search window: lengths {start}..{upper}")

        nodes = 0
        for length in range(start, upper):
            if limit is not None and length > limit:
                return SolverResult(None, None, nodes, exceeded_limit=True)
            witness, explored = self._feasible(index, length, deadline)
            nodes += explored
            self.logger.debug(f"Length {length}: {'feasible' if witness else 'infeasible'}")
            if witness is not None:
                return self._finish(g, length, witness, nodes)

        if limit is not None and upper > limit:
            return SolverResult(None, None, nodes, exceeded_limit=True)
        return self._finish(g, upper, incumbent, nodes)

    def _finish(
        self, g: ExplicitGraph, value: int, witness: Sequence[int], nodes: int
    ) -> SolverResult:
        schedule = BurningSchedule(tuple(witness))
        if not verify_schedule(g, schedule):
            raise AssertionError(f"solver produced a non-covering witness {schedule}")
        self.logger.info(f"Solved: beta={value}, nodes explored={nodes}")
        return SolverResult(value, schedule, nodes)

    @staticmethod
    def _counting_lower_bound(index: BallIndex) -> int:
        """Smallest length whose largest balls could together reach every vertex."""
        total, length = 0, 0
        while total < index.vertex_count:
            total += index.max_volume(length)
            length += 1
        return length

    def _greedy_incumbent(
        self, g: ExplicitGraph, index: BallIndex, start: int
    ) -> Tuple[int, Tuple[int, ...]]:
        length = start
        while True:
            schedule = greedy_schedule(g, length, index)
            if verify_schedule(g, schedule):
                self.logger.debug(f"Greedy incumbent at length {length}: {schedule.sources}")
                return length, schedule.sources
            length += 1

    def _feasible(
        self, index: BallIndex, length: int, deadline: Optional[float]
    ) -> Tuple[Optional[Tuple[int, ...]], int]:
        root = _FeasibilitySearch(index.layers, index.vertex_count, length, deadline)
        if index.vertex_count > root.capacity[0]:
            return None, 1
        firsts = root.candidates(0, 0)

        if self.workers <= 1 or len(firsts) <= 1:
            for first in firsts:
                witness = root.search_from(first)
                if witness is not None:
                    return witness, root.nodes
            return None, root.nodes

        # Results arrive in vertex order, so the first success matches the
        # sequential scan. Leaving the pool terminates any outstanding branches.
        jobs = [(index.layers, index.vertex_count, length, v, deadline) for v in firsts]
        nodes = 0
        with Pool(min(self.workers, len(firsts))) as pool:
            for witness, explored in pool.imap(_search_branch, jobs):
                nodes += explored
                if witness is not None:
                    return witness, nodes
        return None, nodes


def exact_burning_number(
    g: ExplicitGraph, limit: Optional[int] = None
) -> Union[int, SolverOutcome]:
    """β(g), or ``SolverOutcome.EXCEEDS_LIMIT`` when β is larger than ``limit``."""
    result = BurningSolver().solve(g, limit)
    if result.exceeded_limit or result.value is None:
        return SolverOutcome.EXCEEDS_LIMIT
    return result.value


def sqrt_conjecture_bound(g: ExplicitGraph) -> int:
    """⌈√|V|⌉, the conjectured ceiling on β for connected graphs."""
    return math.isqrt(g.vertex_count - 1) + 1 if g.vertex_count else 0


class ExactReport(BaseModel):
    """JSON view of a solver run on a named graph."""

    graph: str
    vertex_count: int
    burning_number: Optional[int]
    exceeds_limit: bool
    witness: Optional[List[int]]
    sqrt_bound: int

    @classmethod
    def from_result(cls, spec: str, g: ExplicitGraph, result: SolverResult) -> "ExactReport":
        return cls(
            graph=spec,
            vertex_count=g.vertex_count,
            burning_number=result.value,
            exceeds_limit=result.exceeded_limit,
            witness=list(result.witness.sources) if result.witness else None,
            sqrt_bound=sqrt_conjecture_bound(g),
        )
