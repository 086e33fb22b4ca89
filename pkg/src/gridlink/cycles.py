"""Closed covering cycles at the minimum link count.

A covering cycle is a closed chain that touches every grid node exactly
once.  Even grids admit one with ``2*(n-1)`` links; from size 6 up this
module lays it out directly, with no search, as a *comb*:

* every column except the two middle ones becomes a full vertical link
  (a "tooth") whose endpoints sit outside the grid's row range, so each
  tooth covers its whole column;
* the two middle columns are covered by steep "slant" links, one node in
  each middle column per slant, which double as the connectors that carry
  the traversal back up between teeth;
* most slants are steep enough (slope ``n/2``) to leave the grid's row
  range before reaching any other column, so they cross the remaining
  columns harmlessly outside the grid; four shorter slants (slope
  ``n/2 - 1``) form two "bounce" pairs meeting at non-lattice points just
  beside the middle columns — the bounces let the tour visit two
  same-side teeth in a row, which is what makes the link budget close.

Every tooth is traversed top to bottom and every connector climbs back
up, alternating left-side and right-side teeth except at the two
bounces.  Coverage is exact by construction: teeth account for all
columns but the middle two, ascending slants cover middle-column heights
``1 .. n/2-2`` on the left middle column paired with ``n/2+1 .. n-2`` on
the right, descending slants the mirror pairing, and the four bounce
slants pick up the four remaining heights ``{0, n/2-1, n/2, n-1}`` on
each.  The verifier re-checks all of it on every call.

Sizes 2 and 4 are catalog shapes.  Sizes 1 and 3 provably admit no
closed covering at the minimum link count, and odd sizes from 5 up are
an open question; those refuse with the matching error type.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import catalog_get
from .chains import PolygonalChain
from .errors import (
    DomainError,
    ImpossibleRequestError,
    UnimplementedPatternError,
)
from .geometry import Point, pt
from .verify import Kind, certify


def comb_cycle_vertices(n: int) -> list[Point]:
    """Vertices of the comb-layout covering cycle for an even ``n >= 6``.

    The list is closed (first vertex repeated at the end) and has
    ``2*(n-1)`` links.  Tooth endpoints are lattice points outside the
    grid; the two bounce vertices have non-integer coordinates.
    """
    if n < 6 or n % 2:
        raise DomainError(f"the comb layout needs an even size of at least 6, got {n}")
    half = n // 2
    m = half - 1  # left middle column; the right one is m + 1
    left = list(range(m))
    right = [m + 2 + j for j in range(m)]

    def ascending(a: int, x: int) -> int:
        # slope +n/2 through (m, a) and (m+1, a+n/2); with 1 <= a <= n/2-2
        # it sits below the grid for x <= m-1 and above it for x >= m+2
        return a + half * (x - m)

    def descending(a: int, x: int) -> int:
        # mirror slant through (m, a+n/2) and (m+1, a)
        return (a + half) - half * (x - m)

    # Bounce slants, slope +-(n/2 - 1).  The "left" pair meets at
    # x = m - 1/(n-2) and connects two right teeth; the "right" pair
    # meets at x = m + (n-1)/(n-2) and connects two left teeth.  Both
    # meeting heights are (n-1)/2: between rows, never on a node.
    def left_bounce_low(x: int) -> int:
        return (half - 1) - (half - 1) * (x - m)  # covers (m, n/2-1), (m+1, 0)

    def left_bounce_high(x: int) -> int:
        return half + (half - 1) * (x - m)  # covers (m, n/2), (m+1, n-1)

    def right_bounce_low(x: int) -> int:
        return (half - 1) * (x - m)  # covers (m, 0), (m+1, n/2-1)

    def right_bounce_high(x: int) -> int:
        return (n - 1) - (half - 1) * (x - m)  # covers (m, n-1), (m+1, n/2)

    meet_left = pt(Fraction(m) - Fraction(1, n - 2), Fraction(n - 1, 2))
    meet_right = pt(Fraction(m) + Fraction(n - 1, n - 2), Fraction(n - 1, 2))

    # Tooth visit order with its entry (top) and exit (bottom) heights and
    # an optional bounce vertex inserted after the exit.
    schedule: list[tuple[int, int, int, Point | None]] = []
    for i in range(m - 1):
        col = left[i]
        entry = right_bounce_high(col) if i == 0 else descending(i, col)
        schedule.append((col, entry, ascending(i + 1, col), None))
        col = right[i]
        if i <= m - 3:
            schedule.append((col, ascending(i + 1, col), descending(i + 1, col), None))
        else:
            schedule.append((col, ascending(i + 1, col), left_bounce_low(col), meet_left))
    schedule.append(
        (right[m - 1], left_bounce_high(right[m - 1]), descending(m - 1, right[m - 1]), None)
    )
    schedule.append(
        (left[m - 1], descending(m - 1, left[m - 1]), right_bounce_low(left[m - 1]), meet_right)
    )

    vertices: list[Point] = []
    for col, entry_y, exit_y, bounce in schedule:
        vertices.append(pt(col, entry_y))
        vertices.append(pt(col, exit_y))
        if bounce is not None:
            vertices.append(bounce)
    vertices.append(vertices[0])
    return vertices


def covering_cycle_even(n: int) -> PolygonalChain:
    """A certified minimum-link covering cycle of an even grid.

    Sizes 2 and 4 come from the catalog; sizes 6 and up use the comb
    layout.  Odd or non-positive sizes are outside this function's
    domain — use :func:`covering_cycle` for the full case split.
    """
    if n < 2 or n % 2:
        raise DomainError(f"covering_cycle_even needs an even size of at least 2, got {n}")
    if n == 2:
        chain = catalog_get("cycle-2").chain()
    elif n == 4:
        chain = catalog_get("cycle-4").chain()
    else:
        chain = PolygonalChain(n, comb_cycle_vertices(n))
    certify(chain, Kind.CYCLE)
    return chain


def covering_cycle(n: int) -> PolygonalChain:
    """A certified minimum-link covering cycle, where one is known.

    Sizes 1 and 3 are provably impossible (no closed covering attains the
    minimum link count there).  Odd sizes from 5 up are an open problem —
    no covering cycle is known, and none can be produced.  Every even
    size is constructed and certified.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n == 1:
        raise ImpossibleRequestError(
            "no minimum-link closed covering of the 1-grid exists: the minimum "
            "link count is 1 and a closed chain needs at least 3 links"
        )
    if n == 3:
        raise ImpossibleRequestError(
            "no closed covering of the 3-by-3 grid with the minimum link "
            "count of 4 exists"
        )
    if n % 2:
        raise UnimplementedPatternError(
            f"no covering cycle of the {n}-by-{n} grid is known; whether odd "
            "grids of size 5 or more admit one is an open question"
        )
    return covering_cycle_even(n)
