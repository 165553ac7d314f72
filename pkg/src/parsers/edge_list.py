"""Parser and writer for the edge-list graph format.

The first significant line is ``n m`` (vertex and edge counts), followed by
``m`` lines ``u v`` with 0-indexed endpoints. Blank lines and ``#`` comments
are ignored.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from ..exceptions import GraphSpecError, InputError, ResourceLimitError
from ..graphs.explicit import ExplicitGraph


class EdgeListParser:
    """Parser for edge-list text files.

    ``vertex_cap`` bounds the vertex count a header may declare; it is checked
    before any adjacency is allocated.
    """

    def __init__(self, vertex_cap: Optional[int] = None) -> None:
        self.vertex_cap = vertex_cap
        self.logger = logging.getLogger(__name__)

    def parse_file(self, file_path: Path) -> ExplicitGraph:
        """Parse an edge-list file.

        Args:
            file_path: Path to the edge-list file

        Returns:
            The parsed graph

        Raises:
            FileNotFoundError: If the file doesn't exist
            GraphSpecError: If the file format is invalid or not UTF-8
            ResourceLimitError: If the header declares more vertices than the cap
        """
        if not file_path.exists():
            raise FileNotFoundError(f"Edge-list file not found: {file_path}")

        try:
            with open(file_path, encoding="utf-8") as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise GraphSpecError(f"{file_path} is not valid UTF-8: {e.reason} at byte {e.start}")
        graph = self.parse_text(text)

        self.logger.info(
            f"Parsed graph with {graph.vertex_count} vertices and "
            f"{graph.edge_count} edges from {file_path}"
        )
        return graph

    def parse_text(self, text: str) -> ExplicitGraph:
        lines = self._significant_lines(text)

        try:
            header_no, header = next(lines)
        except StopIteration:
            raise GraphSpecError("edge list is empty; expected header 'n m'")
        vertex_count, edge_count = self._pair(header, header_no)
        if vertex_count < 0 or edge_count < 0:
            raise GraphSpecError(f"line {header_no}: counts must be non-negative")
        if self.vertex_cap is not None and vertex_count > self.vertex_cap:
            raise ResourceLimitError(
                f"edge list declares {vertex_count} vertices, above cap {self.vertex_cap}"
            )

        edges: List[Tuple[int, int]] = []
        for line_no, line in lines:
            if len(edges) == edge_count:
                raise GraphSpecError(f"line {line_no}: more than {edge_count} edges")
            u, v = self._pair(line, line_no)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphSpecError(
                    f"line {line_no}: endpoint out of range for {vertex_count} vertices"
                )
            edges.append((u, v))

        if len(edges) != edge_count:
            raise GraphSpecError(f"header promises {edge_count} edges, found {len(edges)}")

        try:
            graph = ExplicitGraph.from_edges(vertex_count, edges)
        except InputError as e:
            raise GraphSpecError(f"invalid edge list: {e}")

        if graph.edge_count != edge_count:
            self.logger.warning(
                f"{edge_count - graph.edge_count} duplicate edges collapsed"
            )
        return graph

    @staticmethod
    def _significant_lines(text: str) -> Iterator[Tuple[int, str]]:
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield line_no, line

    @staticmethod
    def _pair(line: str, line_no: int) -> Tuple[int, int]:
        fields = line.split()
        if len(fields) != 2:
            raise GraphSpecError(f"line {line_no}: expected two integers, got {line!r}")
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphSpecError(f"line {line_no}: expected two integers, got {line!r}")


def format_edge_list(g: ExplicitGraph) -> str:
    """Render ``g`` in the edge-list format, edges sorted."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
