"""A catalog of explicit chains with known, certified properties.

Every entry here was verified by hand against the exact visit semantics and
is re-certified by the test suite; generators splice, translate and grow
these shapes instead of rediscovering them.  Entry ids say what the object
is ("path-4", "circuit-5"), and the ``note`` field says why it matters.

The parametric near-miss family lives here too: :func:`near_cycle_path`
produces, for any rational ``0 < eps <= 1``, an open minimum-link covering
path of the 5-grid whose endpoints are only ``eps * sqrt(2 - sqrt(2))``
apart — closing the gap would need a 9th link, which is why the family
exists: the infimum of the endpoint gap over 8-link covering paths is 0,
yet no 8-link covering cycle of the 5-grid is known.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chains import PolygonalChain
from .errors import DomainError, GridlinkError
from .exact import RadicalSum, Scalar
from .geometry import Point, pt
from .verify import Kind, certify

F = Fraction


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    n: int
    kind: Kind
    minimal: bool
    coords: tuple[tuple[object, object], ...]
    note: str
    expected_length: RadicalSum | None = None

    def chain(self) -> PolygonalChain:
        return PolygonalChain.from_coords(self.n, self.coords)  # type: ignore[arg-type]


def _entry(
    entry_id: str,
    n: int,
    kind: Kind,
    coords: Iterable[tuple[object, object]],
    note: str,
    *,
    minimal: bool = True,
    expected_length: RadicalSum | None = None,
) -> CatalogEntry:
    return CatalogEntry(
        entry_id=entry_id,
        n=n,
        kind=kind,
        minimal=minimal,
        coords=tuple(coords),
        note=note,
        expected_length=expected_length,
    )


_ENTRIES: tuple[CatalogEntry, ...] = (
    _entry(
        "path-1",
        1,
        Kind.PATH,
        [(0, 0), (1, 0)],
        "single node, single link",
        expected_length=RadicalSum({1: 1}),
    ),
    _entry(
        "path-2",
        2,
        Kind.PATH,
        [(0, 1), (0, 0), (1, 0), (1, 1)],
        "three unit links around the square; total length meets the n*n-1 "
        "floor exactly (only possible at n=2)",
        expected_length=RadicalSum({1: 3}),
    ),
    _entry(
        "path-3",
        3,
        Kind.PATH,
        [(1, 0), (3, 0), (0, 3), (0, 0), (2, 2)],
        "4-link covering path of the 3-grid using two off-grid turns",
        expected_length=RadicalSum({1: 5, 2: 5}),
    ),
    _entry(
        "path-4",
        4,
        Kind.PATH,
        [(0, 2), (2, 0), (-2, 0), (3, F(5, 2)), (3, 0), (0, 3), (3, 3)],
        "6-link covering path of the 4-grid; same shape the bridge assembly "
        "of the two triangular half-grids produces",
    ),
    _entry(
        "cycle-2",
        2,
        Kind.CYCLE,
        [(0, 0), (0, 2), (2, 0), (0, 0)],
        "closed 3-link covering of the 2-grid, every node exactly once",
    ),
    _entry(
        "cycle-4",
        4,
        Kind.CYCLE,
        [(-1, -1), (F(3, 2), 4), (4, -1), (-1, 4), (F(3, 2), -1), (4, 4), (-1, -1)],
        "closed 6-link covering of the 4-grid, every node exactly once; "
        "strokes of slope ±2 plus the two main diagonals",
    ),
    _entry(
        "circuit-4",
        4,
        Kind.CIRCUIT,
        [(4, 3), (0, 3), (0, 0), (4, 0), (1, 3), (1, 0), (4, 3)],
        "closed 6-link covering of the 4-grid with two node revisits; the "
        "even seed of the ring recursion",
    ),
    _entry(
        "circuit-5",
        5,
        Kind.CIRCUIT,
        [
            (4, 0),
            (-1, 0),
            (F(11, 3), F(7, 3)),
            (F(1, 2), F(11, 2)),
            (4, -5),
            (4, 5),
            (0, 1),
            (0, 4),
            (4, 0),
        ],
        "closed 8-link covering of the 5-grid; every node once except the "
        "closure node, crossed a second time along the right column",
    ),
    _entry(
        "circuit-5-tall",
        5,
        Kind.CIRCUIT,
        [
            (4, 5),
            (4, 0),
            (0, 0),
            (0, 8),
            (4, 0),
            (-1, 5),
            (7, 1),
            (0, 1),
            (4, 5),
        ],
        "closed 8-link covering of the 5-grid built from the closable "
        "5-trail; the odd seed of the ring recursion",
    ),
    _entry(
        "trail-4-closable",
        4,
        Kind.TRAIL,
        [(3, 3), (0, 3), (0, 0), (4, 0), (1, 3), (1, 0), (3, 2)],
        "open 6-link covering trail of the 4-grid whose terminal edges meet "
        "when extended, yielding the 4-grid circuit",
    ),
    _entry(
        "trail-5-closable",
        5,
        Kind.TRAIL,
        [
            (4, 4),
            (4, 0),
            (0, 0),
            (0, 8),
            (4, 0),
            (-1, 5),
            (7, 1),
            (0, 1),
            (3, 4),
        ],
        "open 8-link covering trail of the 5-grid whose terminal edges meet "
        "when extended, yielding the tall 5-grid circuit",
    ),
    _entry(
        "trail-3-shortest",
        3,
        Kind.TRAIL,
        [(2, 2), (0, 0), (0, 3), (3, 0), (1, 0)],
        "4-link covering of the 3-grid attaining the best known total "
        "length for n=3",
        expected_length=RadicalSum({1: 5, 2: 5}),
    ),
    _entry(
        "trail-4-shortest",
        4,
        Kind.TRAIL,
        [(1, 3), (3, 1), (0, 1), (3, 4), (3, 0), (0, 0), (0, 3)],
        "6-link covering of the 4-grid attaining the best known total "
        "length for n=4",
        expected_length=RadicalSum({1: 13, 2: 5}),
    ),
    _entry(
        "trail-4-extensible",
        4,
        Kind.TRAIL,
        [(1, 3), (3, 1), (0, 1), (3, 4), (3, 0), (0, 0), (0, 4)],
        "the shortest 4-grid covering with its final link stretched one "
        "unit, the seed of the staircase growth",
        expected_length=RadicalSum({1: 14, 2: 5}),
    ),
    _entry(
        "trail-5-shortest",
        5,
        Kind.TRAIL,
        [
            (2, 3),
            (4, 3),
            (1, 0),
            (1, 3),
            (4, 0),
            (0, 0),
            (0, 4),
            (4, 4),
            (4, 1),
        ],
        "8-link covering of the 5-grid attaining the best known total "
        "length for n=5 (shorter than the staircase value)",
        expected_length=RadicalSum({1: 20, 2: 6}),
    ),
    _entry(
        "trail-3-revisit",
        3,
        Kind.TRAIL,
        [(0, -1), (0, 3), (3, 0), (0, 0), (2, 2)],
        "minimal covering trail of the 3-grid that is not a path: the "
        "corner node is crossed twice",
    ),
    _entry(
        "path-3-five-links",
        3,
        Kind.PATH,
        [(0, 3), (0, 0), (3, 0), (0, 3), (3, 3), (F(1, 7), F(1, 7))],
        "covering path of the 3-grid with one link more than the minimum; "
        "kept as the canonical non-minimal example",
        minimal=False,
    ),
)

_BY_ID = {e.entry_id: e for e in _ENTRIES}


def catalog_ids() -> tuple[str, ...]:
    return tuple(e.entry_id for e in _ENTRIES)


def catalog_entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def catalog_get(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        known = ", ".join(sorted(_BY_ID))
        raise DomainError(f"unknown catalog id {entry_id!r}; known ids: {known}") from None


# -- the near-miss family ----------------------------------------------------


def near_cycle_path(eps: Fraction | int) -> PolygonalChain:
    """An 8-link covering path of the 5-grid with endpoint gap ``eps * sqrt(2 - sqrt(2))``.

    The chain is the 5-grid covering circuit cut open at its closure node:
    the first link starts ``eps`` short of the closure along the bottom row,
    and the last link stops ``eps / sqrt(2)`` short of it along the final
    diagonal.  Both endpoints stay off every grid node, all 25 nodes keep
    exactly one visit, and the link count stays at the minimum of 8.

    ``eps`` must be a rational in ``(0, 1]``; beyond 1 the shortened first
    link would drop the node next to the closure corner.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise DomainError(f"eps must lie in (0, 1], got {eps}")
    half = eps / 2
    start = Point(Scalar(4 - eps), Scalar(0))
    end = Point(Scalar(4, -half), Scalar(0, half))  # (4 - eps/sqrt(2), eps/sqrt(2))
    mid = [
        pt(-1, 0),
        pt(F(11, 3), F(7, 3)),
        pt(F(1, 2), F(11, 2)),
        pt(4, -5),
        pt(4, 5),
        pt(0, 1),
        pt(0, 4),
    ]
    return PolygonalChain(5, [start, *mid, end])


def near_cycle_gap_squared(eps: Fraction | int) -> Scalar:
    """Exact squared endpoint gap of :func:`near_cycle_path`: ``eps**2 * (2 - sqrt(2))``."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise DomainError(f"eps must lie in (0, 1], got {eps}")
    return Scalar(2 * eps * eps, -eps * eps)


# -- convenience views -------------------------------------------------------


def explicit_chain(entry_id: str) -> PolygonalChain:
    """The catalog entry's chain, built fresh (unknown ids raise DomainError)."""
    return catalog_get(entry_id).chain()


def epsilon_path(eps: Fraction | int) -> PolygonalChain:
    """A certified near-cycle covering path of the 5-grid with gap ``~ eps``.

    Same family as :func:`near_cycle_path`, but the result is pushed through
    the verifier before it is handed out: any ``eps`` whose chain fails to
    certify as a minimum-link covering path is rejected with a domain error
    instead of being returned silently broken.
    """
    chain = near_cycle_path(eps)
    try:
        certify(chain, Kind.PATH)
    except GridlinkError as exc:
        raise DomainError(f"eps={eps} does not yield a covering path: {exc}") from exc
    return chain
