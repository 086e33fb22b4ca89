"""Polygonal chains over an n-by-n grid and their visit semantics.

A chain is a vertex sequence; consecutive vertices span its edges (the
*links*).  Vertices may lie anywhere in the plane — off-lattice and
off-grid turning points are what make short coverings possible — but visits
are only ever counted at the n*n grid nodes.

Structural rules enforced at construction:

* at least two vertices, consecutive vertices distinct;
* no two consecutive edges collinear (a closed chain also checks the pair
  that meets at the closure vertex), so each edge is a maximal straight
  stretch and the link count is simply the edge count;
* no undirected edge appears twice.

A chain is *closed* when its first and last vertices coincide; that repeated
vertex is the only sanctioned coincidence in the sequence.

Visit counting walks every edge, collects exact lattice incidences with the
parameter along the edge, and merges the pair of incidences produced where
one edge ends and the next begins at the same grid node (including across
the closure of a closed chain).  A grid node's *visit count* is the number
of merged incidences, i.e. the number of times the pen passes over it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, InvalidChainError
from .exact import RadicalSum, Scalar, ScalarLike
from .geometry import Point, Segment, in_grid, lattice_hits, pt


@dataclass(frozen=True, slots=True)
class VisitReport:
    """How a chain meets the grid: per-node visit counts, coverage, lengths."""

    n: int
    counts: dict[tuple[int, int], int]
    uncovered: tuple[tuple[int, int], ...]
    link_length: int
    total_length: RadicalSum

    @property
    def covered(self) -> bool:
        return not self.uncovered

    def count(self, node: tuple[int, int]) -> int:
        return self.counts.get(node, 0)


class PolygonalChain:
    """An immutable chain of straight links over the n-by-n grid."""

    __slots__ = ("n", "vertices", "edges")

    def __init__(self, n: int, vertices: Sequence[Point]):
        if n < 1:
            raise DomainError(f"grid size must be at least 1, got {n}")
        vs = tuple(vertices)
        if len(vs) < 2:
            raise InvalidChainError("a chain needs at least two vertices")
        edges = []
        for i in range(len(vs) - 1):
            if vs[i] == vs[i + 1]:
                raise InvalidChainError(
                    f"consecutive vertices coincide at index {i}: {vs[i]}",
                    edge_indices=(i,),
                )
            edges.append(Segment(vs[i], vs[i + 1]))
        closed = vs[0] == vs[-1]
        pairs = list(zip(range(len(edges) - 1), range(1, len(edges))))
        if closed and len(edges) > 1:
            pairs.append((len(edges) - 1, 0))
        for i, j in pairs:
            if edges[i].carrier() == edges[j].carrier():
                raise InvalidChainError(
                    f"edges {i} and {j} are consecutive and collinear",
                    edge_indices=(i, j),
                )
        seen: dict[frozenset[Point], int] = {}
        for i, e in enumerate(edges):
            key = frozenset((e.a, e.b))
            if key in seen:
                raise InvalidChainError(
                    f"edge {i} repeats edge {seen[key]} ({e})",
                    edge_indices=(seen[key], i),
                )
            seen[key] = i
        self.n = n
        self.vertices = vs
        self.edges = tuple(edges)

    @classmethod
    def from_coords(
        cls, n: int, coords: Iterable[tuple[ScalarLike, ScalarLike]]
    ) -> "PolygonalChain":
        return cls(n, [pt(x, y) for x, y in coords])

    # -- basic shape --------------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def link_count(self) -> int:
        return len(self.edges)

    def total_length(self) -> RadicalSum:
        total = RadicalSum()
        for e in self.edges:
            total = total + e.length()
        return total

    def reversed(self) -> "PolygonalChain":
        return PolygonalChain(self.n, tuple(reversed(self.vertices)))

    def translated(self, dx: ScalarLike, dy: ScalarLike) -> "PolygonalChain":
        return PolygonalChain(self.n, [v.translated(dx, dy) for v in self.vertices])

    def with_grid(self, n: int) -> "PolygonalChain":
        """The same geometry reinterpreted over an n-by-n grid."""
        return PolygonalChain(n, self.vertices)

    # -- visit semantics ----------------------------------------------------

    def _events(self) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
        events: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
        for i, edge in enumerate(self.edges):
            for node, t in lattice_hits(edge):
                if in_grid(node, self.n):
                    events.setdefault(node, []).append((i, t))
        return events

    def visit_counts(self) -> dict[tuple[int, int], int]:
        """Merged visit counts for every grid node the chain touches."""
        last = len(self.edges) - 1
        closed = self.is_closed
        counts: dict[tuple[int, int], int] = {}
        for node, evs in self._events().items():
            evs.sort()
            merged = 0
            prev: tuple[int, Scalar] | None = None
            for i, t in evs:
                if prev is not None and prev[1] == 1 and prev[0] + 1 == i and t == 0:
                    prev = (i, t)
                    continue
                merged += 1
                prev = (i, t)
            if (
                closed
                and merged > 1
                and evs[0] == (0, Scalar(0))
                and evs[-1][0] == last
                and evs[-1][1] == 1
            ):
                merged -= 1
            counts[node] = merged
        return counts

    def covered_nodes(self) -> set[tuple[int, int]]:
        """Grid nodes touched at least once (no merge bookkeeping)."""
        return set(self._events().keys())

    def visit_report(self) -> VisitReport:
        counts = self.visit_counts()
        uncovered = tuple(
            (x, y)
            for x in range(self.n)
            for y in range(self.n)
            if (x, y) not in counts
        )
        return VisitReport(self.n, counts, uncovered, self.link_count, self.total_length())

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolygonalChain):
            return self.n == other.n and self.vertices == other.vertices
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.vertices))

    def __repr__(self) -> str:
        inner = " ".join(str(v) for v in self.vertices)
        return f"PolygonalChain(n={self.n}, {inner})"


# -- free-function views ------------------------------------------------------


def visit_counts(chain: PolygonalChain) -> VisitReport:
    """Per-node visit report for ``chain``: counts, coverage, exact lengths."""
    return chain.visit_report()


def link_length(chain: PolygonalChain) -> int:
    """Number of links (edges) of the chain: vertex count minus one."""
    return chain.link_count


def total_length(chain: PolygonalChain) -> RadicalSum:
    """Exact Euclidean length of the chain as a sum of radicals."""
    return chain.total_length()
