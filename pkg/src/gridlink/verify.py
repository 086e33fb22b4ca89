"""Classification and certification of grid-covering chains.

``classify`` is a pure report: it never raises on a structurally valid
chain, it just says what the chain is.  ``certify`` is the gate the
generators (and the CLI) put their outputs through: it insists on a
requested kind, on the minimum link count, and on the exact length lower
bound, and raises a specific error for whichever check fails.

Kinds
-----
* **trail** — every grid node visited at least once, no repeated links.
* **path** — a trail visiting every grid node exactly once.
* **circuit** — a closed trail.
* **cycle** — a closed trail visiting every grid node exactly once (the
  closure coincidence at the start vertex is merged, not double counted).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .chains import PolygonalChain, VisitReport
from .errors import ConstructionFailure, DomainError, NotMinimalError, OracleViolation
from .exact import RadicalSum


class Kind(str, Enum):
    TRAIL = "trail"
    PATH = "path"
    CIRCUIT = "circuit"
    CYCLE = "cycle"


def min_link_length(n: int) -> int:
    """Minimum number of links in any covering trail of the n-by-n grid.

    1 for the single node, 3 for the 2-grid, and 2*(n-1) from the 3-grid up.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n == 1:
        return 1
    if n == 2:
        return 3
    return 2 * (n - 1)


def length_lower_bound(n: int) -> Fraction:
    """Every covering trail is strictly longer than n*n - 1 for n >= 3.

    At n <= 2 the bound is attained (the 2-grid shortest covering has total
    length exactly 3).
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    return Fraction(n * n - 1)


def length_upper_bound(n: int) -> RadicalSum:
    """Total length achievable by a minimum-link covering trail.

    Small grids have bespoke optima; from the 4-grid on the staircase
    family realizes ``n*n - 3 + 5*sqrt(2)``, except the 5-grid where
    ``20 + 6*sqrt(2)`` is the best known.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n == 1:
        return RadicalSum({1: 1})
    if n == 2:
        return RadicalSum({1: 3})
    if n == 3:
        return RadicalSum({1: 5, 2: 5})
    if n == 5:
        return RadicalSum({1: 20, 2: 6})
    return RadicalSum({1: n * n - 3, 2: 5})


@dataclass(frozen=True, slots=True)
class Classification:
    """Everything ``classify`` can say about one chain."""

    n: int
    link_count: int
    total_length: RadicalSum
    closed: bool
    report: VisitReport
    is_covering_trail: bool
    is_covering_path: bool
    is_covering_circuit: bool
    is_covering_cycle: bool
    failure_reasons: tuple[str, ...]

    def has_kind(self, kind: Kind) -> bool:
        return {
            Kind.TRAIL: self.is_covering_trail,
            Kind.PATH: self.is_covering_path,
            Kind.CIRCUIT: self.is_covering_circuit,
            Kind.CYCLE: self.is_covering_cycle,
        }[kind]

    @property
    def kinds(self) -> tuple[Kind, ...]:
        return tuple(k for k in Kind if self.has_kind(k))


def classify(chain: PolygonalChain) -> Classification:
    """Pure classification of a chain against all four covering kinds."""
    report = chain.visit_report()
    reasons: list[str] = []
    if report.uncovered:
        shown = ", ".join(str(u) for u in report.uncovered[:8])
        more = "" if len(report.uncovered) <= 8 else f" (+{len(report.uncovered) - 8} more)"
        reasons.append(f"uncovered grid nodes: {shown}{more}")
    trail = report.covered
    once = all(c == 1 for c in report.counts.values())
    closed = chain.is_closed
    return Classification(
        n=chain.n,
        link_count=chain.link_count,
        total_length=chain.total_length(),
        closed=closed,
        report=report,
        is_covering_trail=trail,
        is_covering_path=trail and once,
        is_covering_circuit=trail and closed,
        is_covering_cycle=trail and closed and once,
        failure_reasons=tuple(reasons),
    )


@dataclass(frozen=True, slots=True)
class BoundsReport:
    n: int
    total_length: RadicalSum
    lower_bound: Fraction
    upper_bound: RadicalSum
    lower_ok: bool
    meets_upper: bool


def check_bounds(cls: Classification) -> BoundsReport:
    """Compare a classified chain's total length with the known envelopes.

    The lower bound is a theorem for covering trails; ``lower_ok`` false on
    a genuine covering trail indicates an arithmetic bug, never a legitimate
    outcome.  The upper bound is only an achievability statement about the
    optimum, so ``meets_upper`` is informational: plenty of legitimate
    minimum-link coverings are longer.
    """
    lo = length_lower_bound(cls.n)
    hi = length_upper_bound(cls.n)
    if cls.n <= 2:
        lower_ok = not cls.total_length < lo
    else:
        lower_ok = lo < cls.total_length
    return BoundsReport(
        n=cls.n,
        total_length=cls.total_length,
        lower_bound=lo,
        upper_bound=hi,
        lower_ok=lower_ok,
        meets_upper=not hi < cls.total_length,
    )


def certify(
    chain: PolygonalChain, kind: Kind, *, minimal: bool = True
) -> Classification:
    """Classify and insist: raise unless ``chain`` is a covering ``kind``.

    With ``minimal`` (the default) the link count must equal
    :func:`min_link_length`.  The exact length lower bound is re-checked on
    every certification as a guard against arithmetic regressions.
    """
    cls = classify(chain)
    if not cls.has_kind(kind):
        detail = "; ".join(cls.failure_reasons) or _kind_gap(cls, kind)
        raise ConstructionFailure(
            f"chain is not a covering {kind.value} of the {chain.n}x{chain.n} grid: {detail}"
        )
    if minimal and cls.link_count != min_link_length(chain.n):
        raise NotMinimalError(
            f"covering {kind.value} uses {cls.link_count} links; "
            f"the minimum for n={chain.n} is {min_link_length(chain.n)}"
        )
    bounds = check_bounds(cls)
    if not bounds.lower_ok:
        raise OracleViolation(
            f"covering trail of total length {cls.total_length} undercuts the "
            f"proven lower bound {bounds.lower_bound} — arithmetic error"
        )
    return cls


def _kind_gap(cls: Classification, kind: Kind) -> str:
    if kind in (Kind.CIRCUIT, Kind.CYCLE) and not cls.closed:
        return "chain is not closed"
    if kind in (Kind.PATH, Kind.CYCLE):
        repeats = sorted(
            node for node, c in cls.report.counts.items() if c > 1
        )
        if repeats:
            shown = ", ".join(str(r) for r in repeats[:8])
            return f"grid nodes visited more than once: {shown}"
    return "requirements not met"
