"""Grown families: shortest-known covering trails and closed covering circuits.

Two recursive constructions live here.

**Staircase trails** (:func:`distance_optimal_trail`) realize, for every grid
size, the best known total length among minimum-link covering trails.  Sizes
up to 5 are bespoke catalog shapes; from 6 up, the extensible 4-grid trail
grows by alternating increments — sweep a new top row and right column, then
a new bottom row and left column — each increment adding two links and
keeping the exact total length on the ``n*n - 3 + 5*sqrt(2)`` curve.

**Ring circuits** (:func:`covering_circuit`) wrap a closed covering of the
(n-2)-grid with a four-link frame that sweeps the added boundary ring.  The
wrap preserves three properties the next wrap needs: the chain stays closed
at a point just outside the grid, its first link runs along the top boundary
row, and its last link runs along a main-diagonal direction into the closure
point.  Even sizes bootstrap from the 4-grid circuit, odd sizes from the
tall 5-grid circuit.
"""

from __future__ import annotations

from .catalog import catalog_get
from .chains import PolygonalChain
from .errors import DomainError, ImpossibleRequestError, OracleViolation
from .geometry import pt
from .verify import Kind, certify, length_upper_bound


def distance_optimal_trail(n: int) -> PolygonalChain:
    """A minimum-link covering trail whose total length is the best known.

    The returned chain's exact total length equals
    :func:`~gridlink.verify.length_upper_bound`; that equality is rechecked
    on every call.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n <= 5:
        entry_id = {
            1: "path-1",
            2: "path-2",
            3: "trail-3-shortest",
            4: "trail-4-shortest",
            5: "trail-5-shortest",
        }[n]
        chain = catalog_get(entry_id).chain()
    else:
        chain = _staircase(n)
    certify(chain, Kind.TRAIL)
    if chain.total_length() != length_upper_bound(n):
        raise OracleViolation(
            f"staircase trail for n={n} has length {chain.total_length()}, "
            f"expected {length_upper_bound(n)}"
        )
    return chain


def _staircase(n: int) -> PolygonalChain:
    seed = catalog_get("trail-4-extensible").chain()
    verts = list(seed.vertices)
    lo, hi = 0, 3
    for k in range(5, n + 1):
        last = k == n
        if k % 2 == 1:
            # grow top-right: the terminal link already pokes one unit above
            # the grid at (lo, hi+1); sweep the new row, then the new column
            verts.append(pt(hi + 1, hi + 1))
            verts.append(pt(hi + 1, lo if last else lo - 1))
            hi += 1
        else:
            # grow bottom-left from the terminal at (hi, lo-1)
            verts.append(pt(lo - 1, lo - 1))
            verts.append(pt(lo - 1, hi if last else hi + 1))
            lo -= 1
    return PolygonalChain(n, verts).translated(-lo, -lo)


def covering_circuit(n: int) -> PolygonalChain:
    """A certified minimum-link closed covering of the n-by-n grid.

    No such object exists for sizes 1 and 3: a closed chain needs at least
    three links (ruling out the single-node grid, whose minimum is one
    link), and the 3-grid admits no closed covering with only four links.
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
    if n == 2:
        chain = catalog_get("cycle-2").chain()
    else:
        start = 4 if n % 2 == 0 else 5
        chain = catalog_get("circuit-4" if start == 4 else "circuit-5-tall").chain()
        for k in range(start, n, 2):
            chain = _ring_wrap(chain, k)
    certify(chain, Kind.CIRCUIT)
    return chain


def _ring_wrap(inner: PolygonalChain, k: int) -> PolygonalChain:
    """Wrap a closed k-grid covering into a closed (k+2)-grid covering.

    Four frame links sweep the new boundary ring (top row, left column,
    bottom row, right column — mirrored for odd sizes); the inner chain,
    shifted one step up-right, keeps covering the interior.  The frame hands
    off to the inner chain at the inner closure point and the inner chain's
    final diagonal link is lengthened out to the new closure point.
    """
    if k % 2 == 0:
        frame = [pt(k + 2, k + 1), pt(0, k + 1), pt(0, 0), pt(k + 1, 0), pt(k + 1, k)]
        closing = pt(k + 2, k + 1)
    else:
        frame = [pt(k + 1, k + 2), pt(k + 1, 0), pt(0, 0), pt(0, k + 1), pt(k, k + 1)]
        closing = pt(k + 1, k + 2)
    shifted = inner.translated(1, 1)
    verts = [*frame, *shifted.vertices[1:-1], closing]
    return PolygonalChain(k + 2, verts)
