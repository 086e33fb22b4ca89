"""Lattice collisions on the bridge line.

The bridge assembly leans on a number-theoretic fact: the line through the
two spiral-missed nodes meets no other grid node — except when the grid
size is an odd multiple of 3, where it picks up exactly three extras (five
in-grid lattice hits in total, in arithmetic progression).

:func:`collision_profile` *measures* the in-grid hits by exact enumeration
and cross-checks them against the residue-class prediction, raising
:class:`~gridlink.errors.OracleViolation` if measurement and prediction
ever disagree.  :func:`divisibility_witness` exposes the underlying
arithmetic for sizes not divisible by 3: hit abscissas advance in steps of
``j + 1`` (the bridge slope is ``j / (j + 1)`` in lowest terms), and the
grid window admits exactly two steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError, OracleViolation
from .geometry import Line, lattice_hits_on_line
from .spirals import bridge_line, missed_points

Node = tuple[int, int]


@dataclass(frozen=True, slots=True)
class CollisionProfile:
    """Exact in-grid lattice hits of the bridge line for one grid size."""

    n: int
    missed_lower: Node
    missed_upper: Node
    line: Line
    hits: tuple[Node, ...]
    extras: tuple[Node, ...]

    @property
    def clean(self) -> bool:
        """True when the line meets only the two missed nodes."""
        return not self.extras


def predicted_hits(n: int) -> tuple[Node, ...]:
    """Residue-class prediction for the bridge line's in-grid lattice hits.

    Two hits (the missed nodes themselves) except in the collision class
    n = 3 (mod 6), where five equally spaced nodes land on the line.
    """
    p1, p2 = missed_points(n)
    if n % 6 == 3:
        dx, dy = (n + 3) // 6, (n - 3) // 6
        return tuple(
            (p1[0] + dx * (t - 1), p1[1] + dy * (t - 1)) for t in range(5)
        )
    return (p1, p2)


def collision_profile(n: int) -> CollisionProfile:
    """Measure the bridge line's in-grid lattice hits and check the prediction."""
    if n < 4:
        raise DomainError(f"collision profiles are defined for n >= 4, got {n}")
    p1, p2 = missed_points(n)
    line = bridge_line(n)
    hits = tuple(sorted(lattice_hits_on_line(line, n)))
    predicted = tuple(sorted(predicted_hits(n)))
    if hits != predicted:
        raise OracleViolation(
            f"bridge-line hits for n={n} are {hits}, but the residue-class "
            f"prediction says {predicted}"
        )
    extras = tuple(h for h in hits if h not in (p1, p2))
    return CollisionProfile(
        n=n, missed_lower=p1, missed_upper=p2, line=line, hits=hits, extras=extras
    )


@dataclass(frozen=True, slots=True)
class DivisibilityWitness:
    """Why only two in-grid hits exist when 3 does not divide n.

    ``step`` is the abscissa gap between consecutive lattice points on the
    bridge line; the window ``0 <= x <= n - 1`` admits exactly ``hit_xs``.
    ``prev_x`` and ``next_x`` are the nearest abscissas outside the window,
    recorded to show the window is tight on both sides.
    """

    n: int
    j: int
    step: int
    hit_xs: tuple[int, int]
    prev_x: int
    next_x: int

    @property
    def slope_coprime(self) -> bool:
        return gcd(self.j, self.step) == 1


def divisibility_witness(n: int) -> DivisibilityWitness:
    """The two-hits argument for sizes with ``n % 3 != 0``."""
    if n < 4:
        raise DomainError(f"the witness is defined for n >= 4, got {n}")
    if n % 3 == 0:
        raise DomainError(
            f"the two-hit witness does not apply when 3 divides n (got {n}); "
            "see collision_profile for the measured behaviour"
        )
    j = (n - 1) // 3 if n % 3 == 1 else (n - 2) // 3
    step = j + 1
    p1, p2 = missed_points(n)
    witness = DivisibilityWitness(
        n=n,
        j=j,
        step=step,
        hit_xs=(p1[0], p2[0]),
        prev_x=p1[0] - step,
        next_x=p2[0] + step,
    )
    profile = collision_profile(n)
    measured_xs = tuple(x for x, _ in profile.hits)
    if (
        measured_xs != witness.hit_xs
        or p2[0] - p1[0] != step
        or not witness.slope_coprime
        or witness.prev_x >= 0
        or witness.next_x <= n - 1
    ):
        raise OracleViolation(
            f"divisibility witness for n={n} is inconsistent with the "
            f"measured hits {profile.hits}"
        )
    return witness
