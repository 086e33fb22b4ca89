"""Batch generation and tabulation across a range of grid sizes.

Rows are computed in parallel (``GRIDLINK_THREADS`` caps the pool) and
assembled in deterministic order.  A row never lies: refusals and missing
constructions are recorded as their own statuses rather than pretending to
be empty successes, and the pass flag comes from the verifier alone.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .chains import PolygonalChain
from .collisions import collision_profile
from .cycles import covering_cycle
from .documents import canonical_json, radical_to_text
from .errors import (
    DomainError,
    GridlinkError,
    ImpossibleRequestError,
    UnimplementedPatternError,
)
from .growth import covering_circuit, distance_optimal_trail
from .spirals import assemble_path
from .verify import classify, length_upper_bound, min_link_length

KIND_ORDER = ("path", "distance-trail", "circuit", "cycle", "collisions")

_GENERATORS = {
    "path": assemble_path,
    "distance-trail": distance_optimal_trail,
    "circuit": covering_circuit,
    "cycle": covering_cycle,
}


@dataclass(frozen=True)
class SweepRow:
    n: int
    kind: str
    status: str  # certified | impossible | unimplemented | skipped | error
    links: int | None
    links_expected: int | None
    length: str
    bound: str
    ok: bool
    note: str
    chain: PolygonalChain | None = None

    def to_obj(self) -> dict[str, object]:
        return {
            "n": self.n,
            "kind": self.kind,
            "status": self.status,
            "links": self.links,
            "links_expected": self.links_expected,
            "length": self.length,
            "bound": self.bound,
            "ok": self.ok,
            "note": self.note,
        }


def _chain_row(n: int, kind: str) -> SweepRow:
    try:
        chain = _GENERATORS[kind](n)
    except ImpossibleRequestError as exc:
        return SweepRow(n, kind, "impossible", None, None, "", "", True, str(exc))
    except UnimplementedPatternError as exc:
        return SweepRow(n, kind, "unimplemented", None, None, "", "", True, str(exc))
    except GridlinkError as exc:
        return SweepRow(
            n, kind, "error", None, None, "", "", False, f"{type(exc).__name__}: {exc}"
        )
    cls = classify(chain)
    expected = min_link_length(n)
    return SweepRow(
        n=n,
        kind=kind,
        status="certified",
        links=cls.link_count,
        links_expected=expected,
        length=radical_to_text(cls.total_length),
        bound=radical_to_text(length_upper_bound(n)),
        ok=cls.link_count == expected,
        note="",
        chain=chain,
    )


def _collision_row(n: int) -> SweepRow:
    if n < 4:
        return SweepRow(
            n,
            "collisions",
            "skipped",
            None,
            None,
            "",
            "",
            True,
            "the joining line between spiral halves exists for sizes 4 and up",
        )
    try:
        profile = collision_profile(n)
    except GridlinkError as exc:
        return SweepRow(
            n,
            "collisions",
            "error",
            None,
            None,
            "",
            "",
            False,
            f"{type(exc).__name__}: {exc}",
        )
    hits = " ".join(f"({x},{y})" for x, y in profile.hits)
    tag = "clean" if profile.clean else "collision"
    return SweepRow(
        n,
        "collisions",
        "certified",
        None,
        None,
        "",
        "",
        True,
        f"residue {n % 6}: {tag}, hits {hits}",
    )


def _row(n: int, kind: str) -> SweepRow:
    if kind == "collisions":
        return _collision_row(n)
    return _chain_row(n, kind)


def _pool_size() -> int:
    env = os.environ.get("GRIDLINK_THREADS")
    if env:
        try:
            requested = int(env)
        except ValueError as exc:
            raise DomainError(f"GRIDLINK_THREADS must be an integer, got {env!r}") from exc
        if requested < 1:
            raise DomainError(f"GRIDLINK_THREADS must be positive, got {requested}")
        return requested
    return min(8, os.cpu_count() or 1)


def run_sweep(
    n_min: int,
    n_max: int,
    kinds: tuple[str, ...] = ("path",),
    threads: int | None = None,
) -> list[SweepRow]:
    """One row per (n, kind), computed in parallel, returned in order."""
    if n_min < 1 or n_min > n_max:
        raise DomainError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    for kind in kinds:
        if kind not in KIND_ORDER:
            raise DomainError(
                f"unknown sweep kind {kind!r}; choose from {', '.join(KIND_ORDER)}"
            )
    ordered_kinds = tuple(k for k in KIND_ORDER if k in kinds)
    tasks = [
        (n, kind) for n in range(n_min, n_max + 1) for kind in ordered_kinds
    ]
    workers = threads if threads is not None else _pool_size()
    if workers == 1:
        return [_row(n, kind) for n, kind in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: _row(*t), tasks))


_COLUMNS = (
    "n",
    "kind",
    "status",
    "links",
    "links_expected",
    "length",
    "bound",
    "ok",
    "note",
)


def sweep_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for row in rows:
        obj = row.to_obj()
        writer.writerow(["" if obj[c] is None else obj[c] for c in _COLUMNS])
    return buf.getvalue()


def sweep_to_json(rows: list[SweepRow]) -> str:
    return canonical_json([row.to_obj() for row in rows])


def _case_label(n: int) -> str:
    if n <= 2:
        return "tiny grids (n <= 2)"
    if n == 3:
        return "n = 3"
    if n == 5:
        return "n = 5"
    return "general sizes (n = 4 and n >= 6)"


def sweep_to_markdown(rows: list[SweepRow]) -> str:
    """Markdown tables, sectioned the same way the length formula splits."""
    out: list[str] = []
    current: str | None = None
    for row in rows:
        label = _case_label(row.n)
        if label != current:
            if out:
                out.append("")
            out.append(f"## {label}")
            out.append("")
            out.append("| " + " | ".join(_COLUMNS) + " |")
            out.append("|" + "|".join("---" for _ in _COLUMNS) + "|")
            current = label
        obj = row.to_obj()
        cells = ["" if obj[c] is None else str(obj[c]) for c in _COLUMNS]
        out.append("| " + " | ".join(cells) + " |")
    return "\n".join(out) + "\n"
