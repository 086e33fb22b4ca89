"""Triangular spirals and the bridge assembly of minimum-link covering paths.

The assembly covers the grid in two halves.  A *bottom spiral* sweeps the
triangle below the main antidiagonal in ``n - 2`` links and misses exactly
one node; a *top spiral* sweeps the rest in ``n - 1`` links and also misses
exactly one node.  The two missed nodes determine a *bridge line*; one extra
link along it picks both up, and lengthening the spirals' terminal links to
their intersections with the bridge line splices everything into a single
open chain with ``2*(n - 1)`` links — the minimum.

Grid sizes divisible by 3 are reached differently (the bridge line through
the two missed nodes degenerates there): the path for ``n - 1`` is grown by
an L-shaped sweep of one new column and one new row, which keeps both the
exactly-once coverage and the minimal link count.

Everything returned by :func:`assemble_path` and
:func:`mixed_spiral_extend` has been through :func:`~gridlink.verify.certify`;
a structure these functions would fail to certify raises instead of being
returned.
"""

from __future__ import annotations

from .catalog import catalog_get
from .chains import PolygonalChain
from .errors import (
    ConstructionFailure,
    DomainError,
    InvalidChainError,
    NotMinimalError,
)
from .geometry import Line, Point, Segment, line_intersection, pt
from .verify import Kind, certify

Node = tuple[int, int]


def lower_region(n: int) -> frozenset[Node]:
    """Grid nodes on or below the long antidiagonal ``x + y == n - 2``."""
    _check_size(n)
    return frozenset(
        (x, y) for x in range(n) for y in range(n) if x + y <= n - 2
    )


def upper_region(n: int) -> frozenset[Node]:
    """Grid nodes on or above the main antidiagonal ``x + y == n - 1``."""
    _check_size(n)
    return frozenset(
        (x, y) for x in range(n) for y in range(n) if x + y >= n - 1
    )


def missed_points(n: int) -> tuple[Node, Node]:
    """The unique node each spiral skips: (bottom-spiral miss, top-spiral miss)."""
    _check_size(n)
    p1 = ((n - 2) // 3, n // 3)
    r = n % 3
    if r == 1:
        j = (n - 1) // 3
        p2 = (2 * j, 2 * j)
    elif r == 2:
        j = (n - 2) // 3
        p2 = (2 * j + 1, 2 * j)
    else:
        j = n // 3
        p2 = (2 * j, 2 * j - 1)
    return p1, p2


def bridge_line(n: int) -> Line:
    """The line through both missed nodes."""
    p1, p2 = missed_points(n)
    return Line.through(pt(*p1), pt(*p2))


def _check_size(n: int) -> None:
    if n < 3:
        raise DomainError(f"spiral constructions need a grid of size >= 3, got {n}")


def _bottom_vertices(n: int) -> list[Node]:
    vs: list[Node] = [(0, 0)]
    t = 0
    while len(vs) < n - 1:
        for v in ((n - 2 - 2 * t, t), (t, n - 2 - 2 * t), (t, t + 1)):
            vs.append(v)
            if len(vs) == n - 1:
                break
        t += 1
    return vs


def _top_vertices(n: int) -> list[Node]:
    vs: list[Node] = [(n - 1, n - 1)]
    t = 0
    while len(vs) < n:
        for v in ((2 * t, n - 1 - t), (n - 1 - t, 2 * t), (n - 1 - t, n - 2 - t)):
            vs.append(v)
            if len(vs) == n:
                break
        t += 1
    return vs


def triangular_spiral(n: int, which: str) -> PolygonalChain:
    """The bottom (``n - 2`` links) or top (``n - 1`` links) half-grid spiral.

    Not a covering chain on its own: it sweeps its triangular region minus
    the single node reported by :func:`missed_points`.
    """
    _check_size(n)
    if which == "bottom":
        coords = _bottom_vertices(n)
    elif which == "top":
        coords = _top_vertices(n)
    else:
        raise DomainError(f"which must be 'bottom' or 'top', got {which!r}")
    return PolygonalChain.from_coords(n, coords)


def _junction_out(last: Point, prev: Point, bridge: Line) -> Point | None:
    """Bridge junction for the chain half that arrives first.

    Its terminal edge ``prev -> last`` may only be *lengthened*: the
    intersection must sit at parameter >= 1, i.e. at ``last`` or beyond.
    """
    hit = line_intersection(Segment(prev, last).carrier(), bridge)
    if not isinstance(hit, Point):
        return None
    t = Segment(prev, last).param_on_carrier(hit)
    if t is None or t < 1:
        return None
    return hit


def _junction_in(first: Point, nxt: Point, bridge: Line) -> Point | None:
    """Bridge junction for the chain half that leaves second.

    Its opening edge ``first -> nxt`` may only grow backwards: the
    intersection must sit at parameter <= 0.
    """
    hit = line_intersection(Segment(first, nxt).carrier(), bridge)
    if not isinstance(hit, Point):
        return None
    t = Segment(first, nxt).param_on_carrier(hit)
    if t is None or t > 0:
        return None
    return hit


# Try bottom-then-top before top-then-bottom, and within each order prefer
# reversing the later half first; the first candidate that certifies wins,
# so the output is a deterministic function of n.
_CONFIGS: tuple[tuple[str, bool, bool], ...] = (
    ("bu", False, True),
    ("bu", False, False),
    ("bu", True, True),
    ("bu", True, False),
    ("ub", False, True),
    ("ub", False, False),
    ("ub", True, True),
    ("ub", True, False),
)


def _bridge_assembly(n: int) -> PolygonalChain:
    if n % 3 == 0:
        raise DomainError(
            f"the bridge line degenerates when 3 divides the grid size (n={n})"
        )
    bottom = triangular_spiral(n, "bottom")
    top = triangular_spiral(n, "top")
    bridge = bridge_line(n)
    for order, rev_bottom, rev_top in _CONFIGS:
        b = bottom.reversed() if rev_bottom else bottom
        t = top.reversed() if rev_top else top
        first, second = (b, t) if order == "bu" else (t, b)
        j_out = _junction_out(first.vertices[-1], first.vertices[-2], bridge)
        j_in = _junction_in(second.vertices[0], second.vertices[1], bridge)
        if j_out is None or j_in is None:
            continue
        verts = [*first.vertices[:-1], j_out, j_in, *second.vertices[1:]]
        try:
            chain = PolygonalChain(n, verts)
            certify(chain, Kind.PATH)
        except (InvalidChainError, DomainError, ConstructionFailure, NotMinimalError):
            continue
        return chain
    raise ConstructionFailure(
        f"no bridge configuration certified as a minimal covering path for n={n}"
    )


# (terminal vertex, terminal-edge carrier axis) -> extension recipe.  Each
# recipe lengthens the terminal edge one unit past the grid corner, sweeps
# the new column and the new row with two fresh links, and translates the
# frame back onto {0..n} x {0..n}.
def _extension_variants(m: int):
    yield (  # arriving at (0, 0) along the bottom row
        pt(0, 0),
        Line.through(pt(0, 0), pt(1, 0)),
        [pt(-1, 0), pt(-1, m), pt(m - 1, m)],
        (1, 0),
    )
    yield (  # arriving at (0, 0) along the left column
        pt(0, 0),
        Line.through(pt(0, 0), pt(0, 1)),
        [pt(0, -1), pt(m, -1), pt(m, m - 1)],
        (0, 1),
    )
    yield (  # arriving at (m-1, m-1) along the top row
        pt(m - 1, m - 1),
        Line.through(pt(m - 1, m - 1), pt(m, m - 1)),
        [pt(m, m - 1), pt(m, -1), pt(0, -1)],
        (0, 1),
    )
    yield (  # arriving at (m-1, m-1) along the right column
        pt(m - 1, m - 1),
        Line.through(pt(m - 1, m - 1), pt(m - 1, m)),
        [pt(m - 1, m), pt(-1, m), pt(-1, 0)],
        (1, 0),
    )


def mixed_spiral_extend(chain: PolygonalChain) -> PolygonalChain:
    """Grow a minimal covering path of the m-grid into one of the (m+1)-grid.

    Requires the input to end (in either direction) at a grid corner with
    its terminal link running along the boundary line through that corner.
    The terminal link is lengthened one unit past the corner and two new
    links sweep the added column and row; the result is re-certified.
    """
    m = chain.n
    try:
        certify(chain, Kind.PATH)
    except (ConstructionFailure, NotMinimalError) as exc:
        raise DomainError(f"input must be a minimal covering path: {exc}") from exc
    for candidate in (chain, chain.reversed()):
        last = candidate.vertices[-1]
        terminal = Segment(candidate.vertices[-2], last).carrier()
        for corner, axis, tail, shift in _extension_variants(m):
            if last != corner or terminal != axis:
                continue
            verts = [*candidate.vertices[:-1], *tail]
            try:
                grown = PolygonalChain(m + 1, verts).translated(*shift)
                certify(grown, Kind.PATH)
            except (
                InvalidChainError,
                DomainError,
                ConstructionFailure,
                NotMinimalError,
            ):
                continue
            return grown
    raise ConstructionFailure(
        f"no boundary-corner extension certified for the given {m}-grid path"
    )


def assemble_path(n: int) -> PolygonalChain:
    """A certified minimum-link covering path of the n-by-n grid.

    Sizes 1-3 come from the catalog; sizes not divisible by 3 use the
    two-spiral bridge assembly; multiples of 3 grow the path for ``n - 1``
    by one column and one row.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n <= 3:
        chain = catalog_get(f"path-{n}").chain()
        certify(chain, Kind.PATH)
        return chain
    if n % 3 == 0:
        return mixed_spiral_extend(assemble_path(n - 1))
    return _bridge_assembly(n)
