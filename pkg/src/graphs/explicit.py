"""Explicit graphs: distances, balls and burning-schedule checks."""

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..exceptions import InputError
from .bitset import full_mask, mask_of, members, popcount

UNREACHABLE = -1


@dataclass(frozen=True)
class ExplicitGraph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise InputError(
                f"adjacency has {len(self.adjacency)} rows for {self.vertex_count} vertices"
            )
        for v, neighbors in enumerate(self.adjacency):
            for u in neighbors:
                if not 0 <= u < self.vertex_count:
                    raise InputError(f"vertex {v} has out-of-range neighbor {u}")
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise InputError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]]) -> "ExplicitGraph":
        """Build a graph from an edge iterable; duplicate edges collapse."""
        if vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {vertex_count}")
        rows: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(vertex_count, tuple(frozenset(r) for r in rows))

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.vertex_count):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield u, v

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_edge(self, u: int, v: int) -> "ExplicitGraph":
        """Return a copy with edge ``u-v`` added."""
        return ExplicitGraph.from_edges(self.vertex_count, [*self.edges(), (u, v)])


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path lengths; ``UNREACHABLE`` marks disconnected pairs."""

    dist: Tuple[Tuple[int, ...], ...]

    def __call__(self, u: int, v: int) -> int:
        return self.dist[u][v]

    @property
    def size(self) -> int:
        return len(self.dist)

    def is_connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.dist for d in row)

    def eccentricity(self, v: int) -> int:
        """Largest finite distance from ``v``."""
        return max(self.dist[v])

    def diameter(self) -> int:
        return max((self.eccentricity(v) for v in range(self.size)), default=0)


@dataclass(frozen=True)
class BurningSchedule:
    """Sources ``x_0 .. x_b``; source ``x_k`` burns its ``(b - k)``-ball."""

    sources: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sources:
            raise InputError("a burning schedule needs at least one source")

    @property
    def length(self) -> int:
        return len(self.sources)

    @property
    def b(self) -> int:
        return len(self.sources) - 1

    def radii(self) -> Tuple[int, ...]:
        return tuple(range(self.b, -1, -1))


@dataclass(frozen=True)
class CoverageResult:
    """Outcome of :func:`verify_schedule`; truthy iff every vertex is burned."""

    vertex_count: int
    uncovered: FrozenSet[int] = field(default_factory=frozenset)

    def __bool__(self) -> bool:
        return not self.uncovered

    @property
    def uncovered_count(self) -> int:
        return len(self.uncovered)

    @property
    def covered_count(self) -> int:
        return self.vertex_count - len(self.uncovered)


def _bfs(g: ExplicitGraph, source: int, max_depth: Optional[int] = None) -> List[int]:
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if max_depth is not None and dist[u] >= max_depth:
            continue
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _check_vertex(g: ExplicitGraph, x: int) -> None:
    if not 0 <= x < g.vertex_count:
        raise InputError(f"vertex {x} out of range for {g.vertex_count} vertices")


def all_pairs_distances(g: ExplicitGraph) -> DistanceMatrix:
    """Shortest-path lengths between all vertex pairs, one BFS per vertex."""
    return DistanceMatrix(tuple(tuple(_bfs(g, v)) for v in range(g.vertex_count)))


def is_connected(g: ExplicitGraph) -> bool:
    """True iff every vertex is reachable from vertex 0 (the empty graph is not)."""
    if g.vertex_count == 0:
        return False
    return UNREACHABLE not in _bfs(g, 0)


def ball(g: ExplicitGraph, x: int, k: int) -> FrozenSet[int]:
    """The ``k``-ball of ``x``: vertices at distance at most ``k``."""
    _check_vertex(g, x)
    if k < 0:
        return frozenset()
    dist = _bfs(g, x, max_depth=k)
    return frozenset(v for v, d in enumerate(dist) if d != UNREACHABLE)


class BallIndex:
    """Ball masks ``Γ_r(v)`` for every vertex and radius of one graph.

    Built from one BFS per vertex. ``layers[v][r]`` is the mask of ``Γ_r(v)``
    for ``r`` up to the eccentricity of ``v``; larger radii reuse the last layer.
    """

    def __init__(self, g: ExplicitGraph) -> None:
        self.vertex_count = g.vertex_count
        self.layers: List[List[int]] = []
        for v in range(g.vertex_count):
            row = _bfs(g, v)
            depth = max(row, default=0)
            rings = [0] * (depth + 1)
            for u, d in enumerate(row):
                if d != UNREACHABLE:
                    rings[d] |= 1 << u
            cumulative = []
            acc = 0
            for ring in rings:
                acc |= ring
                cumulative.append(acc)
            self.layers.append(cumulative)

    def mask(self, v: int, r: int) -> int:
        if r < 0:
            return 0
        layer = self.layers[v]
        return layer[r] if r < len(layer) else layer[-1]

    def max_volume(self, r: int) -> int:
        """Largest ``|Γ_r(v)|`` over all vertices."""
        return max((popcount(self.mask(v, r)) for v in range(self.vertex_count)), default=0)


def verify_schedule(g: ExplicitGraph, schedule: BurningSchedule) -> CoverageResult:
    """Check whether ``schedule`` burns every vertex of ``g``."""
    for x in schedule.sources:
        _check_vertex(g, x)
    covered = 0
    for x, radius in zip(schedule.sources, schedule.radii()):
        covered |= mask_of(ball(g, x, radius))
    uncovered = full_mask(g.vertex_count) & ~covered
    return CoverageResult(g.vertex_count, frozenset(members(uncovered)))


def greedy_schedule(
    g: ExplicitGraph, length: int, index: Optional[BallIndex] = None
) -> BurningSchedule:
    """Pick each source to maximize newly burned vertices for its radius.

    Ties prefer a vertex not yet in the schedule, then the smallest id. The
    result has exactly ``length`` sources and need not cover the graph.
    """
    if length < 1:
        raise InputError(f"schedule length must be positive, got {length}")
    if g.vertex_count == 0:
        raise InputError("cannot schedule sources on an empty graph")
    index = index or BallIndex(g)
    covered = 0
    sources: List[int] = []
    for radius in range(length - 1, -1, -1):
        best_vertex, best_key = 0, (-1, False)
        for v in range(g.vertex_count):
            key = (popcount(index.mask(v, radius) & ~covered), v not in sources)
            if key > best_key:
                best_vertex, best_key = v, key
        sources.append(best_vertex)
        covered |= index.mask(best_vertex, radius)
    return BurningSchedule(tuple(sources))
