"""Exact planar primitives: points, segments, lines, incidence, lengths.

Coordinates are :class:`~gridlink.exact.Scalar` values (elements of
Q(sqrt(2))), so every predicate in here is decided exactly — there are no
epsilons anywhere in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .exact import RadicalSum, Scalar, ScalarLike, sqrt_scalar


def _coerce(x: ScalarLike) -> Scalar:
    return Scalar.coerce(x)


@dataclass(frozen=True, slots=True)
class Point:
    x: Scalar
    y: Scalar

    def translated(self, dx: ScalarLike, dy: ScalarLike) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def is_lattice(self) -> bool:
        """True when both coordinates are integers."""
        return (
            self.x.is_rational
            and self.y.is_rational
            and self.x.r.denominator == 1
            and self.y.r.denominator == 1
        )

    def lattice(self) -> tuple[int, int]:
        if not self.is_lattice():
            raise DomainError(f"{self} is not a lattice point")
        return int(self.x.r), int(self.y.r)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def pt(x: ScalarLike, y: ScalarLike) -> Point:
    """Shorthand constructor that coerces ints and Fractions."""
    return Point(_coerce(x), _coerce(y))


def cross(o: Point, a: Point, b: Point) -> Scalar:
    """Signed area of the parallelogram spanned by ``a - o`` and ``b - o``."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise DomainError(f"degenerate segment at {self.a}")

    def direction(self) -> tuple[Scalar, Scalar]:
        return self.b.x - self.a.x, self.b.y - self.a.y

    def carrier(self) -> "Line":
        return Line.through(self.a, self.b)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def length_squared(self) -> Scalar:
        dx, dy = self.direction()
        return dx * dx + dy * dy

    def length(self) -> RadicalSum:
        return sqrt_scalar(self.length_squared())

    def param_on_carrier(self, p: Point) -> Scalar | None:
        """Parameter t with ``p == a + t*(b - a)``, unbounded; None off the carrier."""
        dx, dy = self.direction()
        if dx != 0:
            t = (p.x - self.a.x) / dx
            if self.a.y + t * dy != p.y:
                return None
        else:
            if p.x != self.a.x:
                return None
            t = (p.y - self.a.y) / dy
        return t

    def param_of(self, p: Point) -> Scalar | None:
        """Parameter t with ``p == a + t*(b - a)`` and 0 <= t <= 1, else None."""
        t = self.param_on_carrier(p)
        if t is None or t < 0 or t > 1:
            return None
        return t

    def contains(self, p: Point) -> bool:
        return self.param_of(p) is not None

    def __str__(self) -> str:
        return f"{self.a}--{self.b}"


class LineRelation(Enum):
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


@dataclass(frozen=True, slots=True)
class Line:
    """The line ``a*x + b*y = c`` in a canonical normalization.

    The leading nonzero coefficient of ``(a, b)`` is 1, so two Line values
    are equal exactly when they describe the same point set; Lines hash and
    can be deduplicated in sets.
    """

    a: Scalar
    b: Scalar
    c: Scalar

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        if p == q:
            raise DomainError(f"two coincident points do not determine a line: {p}")
        a = q.y - p.y
        b = p.x - q.x
        c = a * p.x + b * p.y
        if a != 0:
            return Line(Scalar(1), b / a, c / a)
        return Line(Scalar(0), Scalar(1), c / b)

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def __str__(self) -> str:
        return f"{self.a}*x + {self.b}*y = {self.c}"


def line_intersection(l1: Line, l2: Line) -> Point | LineRelation:
    """Intersect two lines exactly.

    Returns the unique intersection Point, or ``LineRelation.COINCIDENT`` /
    ``LineRelation.PARALLEL`` for the degenerate cases.
    """
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return LineRelation.COINCIDENT if l1 == l2 else LineRelation.PARALLEL
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


def segments_collinear(s1: Segment, s2: Segment) -> bool:
    return s1.carrier() == s2.carrier()


def point_on_segment(p: Point, s: Segment) -> bool:
    """True iff ``p`` lies on the closed segment ``s``, decided exactly."""
    return s.contains(p)


def lattice_hits(seg: Segment) -> list[tuple[tuple[int, int], Scalar]]:
    """All integer lattice points on ``seg`` with their parameters.

    Returned in traversal order (ascending parameter).  Exact: a lattice
    point that only a rounding error would place on the segment is never
    reported, and irrational coordinates are handled like any other.
    """
    ax, ay = seg.a.x, seg.a.y
    dx, dy = seg.direction()
    hits: list[tuple[tuple[int, int], Scalar]] = []
    if dx != 0:
        lo, hi = (seg.a.x, seg.b.x) if dx > 0 else (seg.b.x, seg.a.x)
        for x in range(math.ceil(lo), math.floor(hi) + 1):
            t = (x - ax) / dx
            y = ay + t * dy
            if y.is_rational and y.r.denominator == 1:
                hits.append(((x, int(y.r)), t))
    else:
        if not (ax.is_rational and ax.r.denominator == 1):
            return []
        x = int(ax.r)
        lo, hi = (seg.a.y, seg.b.y) if dy > 0 else (seg.b.y, seg.a.y)
        for y in range(math.ceil(lo), math.floor(hi) + 1):
            hits.append(((x, y), (y - ay) / dy))
    hits.sort(key=lambda item: item[1])
    return hits


def lattice_points_on_segment(s: Segment, n: int) -> list[Point]:
    """Grid nodes of the n-by-n grid on ``s``, ordered from ``s.a`` to ``s.b``."""
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    return [pt(*node) for node, _ in lattice_hits(s) if in_grid(node, n)]


def lattice_hits_on_line(line: Line, n: int) -> list[tuple[int, int]]:
    """Integer points of the n-by-n grid lying on ``line``, in lex order."""
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    out: list[tuple[int, int]] = []
    if line.a == 0:
        # horizontal: y = c / b
        y = line.c / line.b
        if y.is_rational and y.r.denominator == 1 and 0 <= y.r <= n - 1:
            out = [(x, int(y.r)) for x in range(n)]
        return out
    # a == 1 after normalization: x = c - b*y for each candidate y — but
    # iterating x keeps lex order directly.
    for x in range(n):
        if line.b == 0:
            if line.c == x:
                out.extend((x, y) for y in range(n))
            continue
        y = (line.c - line.a * Scalar(x)) / line.b
        if y.is_rational and y.r.denominator == 1 and 0 <= y.r <= n - 1:
            out.append((x, int(y.r)))
    return out


def in_grid(node: tuple[int, int], n: int) -> bool:
    return 0 <= node[0] <= n - 1 and 0 <= node[1] <= n - 1


def grid_nodes(n: int) -> list[tuple[int, int]]:
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    return [(x, y) for x in range(n) for y in range(n)]


def segment_length(p: Point, q: Point) -> RadicalSum:
    return Segment(p, q).length()


def rational_point(x: int | Fraction, y: int | Fraction) -> Point:
    return pt(x, y)
