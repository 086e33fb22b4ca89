"""Command-line surface: generate, verify, sweep, collisions, search, render.

Exit codes are part of the contract: 0 means the verifier certified the
output, 1 means a verification failure, 2 an impossible or out-of-scope
request, and 3 an I/O or parse problem.  Human-facing notes go to stderr;
stdout carries only the requested document or table.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .catalog import catalog_get, catalog_ids, near_cycle_path
from .collisions import collision_profile, predicted_hits
from .cycles import covering_cycle
from .documents import (
    ChainDocument,
    canonical_json,
    document_from_json,
    radical_from_text,
    radical_to_text,
)
from .errors import (
    ConstructionFailure,
    DocumentFormatError,
    DomainError,
    ImpossibleRequestError,
    InvalidChainError,
    NotMinimalError,
    OracleViolation,
    UnimplementedPatternError,
    UnsupportedRadicalError,
)
from .growth import covering_circuit, distance_optimal_trail
from .search import find_trail_not_path, run_search
from .spirals import assemble_path
from .svg import RenderOptions, render_svg
from .sweep import run_sweep, sweep_to_csv, sweep_to_json, sweep_to_markdown
from .verify import Kind, certify, classify, min_link_length

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_IMPOSSIBLE = 2
EXIT_IO = 3

_GENERATE_KINDS = ("path", "circuit", "cycle", "distance-trail", "epsilon-path")


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def cmd_generate(args: argparse.Namespace) -> int:
    kind: str = args.kind
    metadata: dict[str, object]
    if kind.startswith("catalog:"):
        entry = catalog_get(kind[len("catalog:") :])
        chain = entry.chain()
        certify(chain, entry.kind, minimal=entry.minimal)
        doc_kind = entry.kind.value
        metadata = {
            "generator": "catalog",
            "parameters": {"id": entry.entry_id, "minimal": entry.minimal},
        }
    elif kind in _GENERATE_KINDS:
        if kind == "epsilon-path":
            n = 5 if args.n is None else args.n
            if n != 5:
                raise DomainError(
                    "the near-cycle path family lives on the 5-grid; "
                    f"got n={n}"
                )
            try:
                eps = Fraction(args.eps)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"--eps must be rational, got {args.eps!r}") from exc
            chain = near_cycle_path(eps)
            target = Kind.PATH
            metadata = {
                "generator": "epsilon-path",
                "parameters": {"n": n, "eps": str(eps)},
            }
        else:
            if args.n is None:
                raise DomainError(f"generate {kind} needs a grid size")
            n = args.n
            maker = {
                "path": (assemble_path, Kind.PATH),
                "circuit": (covering_circuit, Kind.CIRCUIT),
                "cycle": (covering_cycle, Kind.CYCLE),
                "distance-trail": (distance_optimal_trail, Kind.TRAIL),
            }[kind]
            chain = maker[0](n)
            target = maker[1]
            metadata = {"generator": kind, "parameters": {"n": n}}
        certify(chain, target)
        doc_kind = target.value
    else:
        raise DomainError(
            f"unknown kind {kind!r}; choose one of "
            f"{', '.join(_GENERATE_KINDS)} or catalog:<id> "
            f"(ids: {', '.join(catalog_ids())})"
        )
    doc = ChainDocument.from_chain(chain, doc_kind, metadata)
    _write_output(doc.to_json(), args.out)
    if args.svg is not None:
        Path(args.svg).write_text(render_svg(chain))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text()
    doc = document_from_json(text)
    chain = doc.chain()
    if args.n is not None:
        chain = chain.with_grid(args.n)
    cls = classify(chain)
    kinds = [k.value for k in cls.kinds]
    revisits = {
        node: count for node, count in sorted(cls.report.counts.items()) if count > 1
    }
    print(f"kinds: {', '.join(kinds) if kinds else 'none'}")
    print(f"links: {cls.link_count}")
    print(f"length: {radical_to_text(cls.total_length)}")
    print(f"closed: {'yes' if cls.closed else 'no'}")
    uncovered = ", ".join(str(u) for u in cls.report.uncovered)
    print(f"uncovered: {uncovered if uncovered else 'none'}")
    shown = ", ".join(f"{node} x{count}" for node, count in revisits.items())
    print(f"revisited: {shown if shown else 'none'}")

    failures: list[str] = []
    expected_kind = args.expect
    if expected_kind is None and doc.kind != "unknown":
        expected_kind = doc.kind
    if expected_kind is not None and expected_kind not in kinds:
        failures.append(f"expected kind {expected_kind}, certified: {kinds or 'none'}")
    if args.expect_links is not None and cls.link_count != args.expect_links:
        failures.append(f"expected {args.expect_links} links, found {cls.link_count}")
    if args.expect_length is not None:
        want = radical_from_text(args.expect_length)
        if cls.total_length != want:
            failures.append(
                f"expected length {radical_to_text(want)}, "
                f"found {radical_to_text(cls.total_length)}"
            )
    for failure in failures:
        print(f"FAIL: {failure}")
    if not failures:
        print("PASS")
    return EXIT_OK if not failures else EXIT_VERIFY


def cmd_sweep(args: argparse.Namespace) -> int:
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    if args.collisions and "collisions" not in kinds:
        kinds = (*kinds, "collisions")
    rows = run_sweep(args.n_min, args.n_max, kinds, threads=args.threads)
    if args.json:
        text = sweep_to_json(rows)
    elif args.md:
        text = sweep_to_markdown(rows)
    else:
        text = sweep_to_csv(rows)
    _write_output(text, args.out)
    if args.figures is not None:
        from .figures import save_chain_png  # matplotlib import deferred

        fig_dir = Path(args.figures)
        fig_dir.mkdir(parents=True, exist_ok=True)
        for row in rows:
            if row.chain is not None:
                save_chain_png(
                    row.chain,
                    fig_dir / f"{row.kind}-{row.n}.png",
                    title=f"{row.kind} n={row.n}",
                )
    return EXIT_OK if all(row.ok for row in rows) else EXIT_VERIFY


def _cmd_collisions(args: argparse.Namespace) -> int:
    if args.n_min < 4 or args.n_min > args.n_max:
        raise DomainError(
            f"collision tables need 4 <= n_min <= n_max, got {args.n_min}..{args.n_max}"
        )
    records = []
    all_match = True
    for n in range(args.n_min, args.n_max + 1):
        predicted = predicted_hits(n)
        try:
            enumerated = collision_profile(n).hits
            match = True
        except OracleViolation:
            from .geometry import lattice_hits_on_line
            from .spirals import bridge_line

            enumerated = tuple(sorted(lattice_hits_on_line(bridge_line(n), n)))
            match = False
            all_match = False
        records.append(
            {
                "n": n,
                "residue": n % 6,
                "predicted": [list(p) for p in sorted(predicted)],
                "enumerated": [list(p) for p in enumerated],
                "match": match,
            }
        )
    if args.json:
        text = canonical_json(records)
    else:
        lines = ["n,residue,predicted,enumerated,match"]
        for rec in records:
            pred = " ".join(f"({x};{y})" for x, y in rec["predicted"])
            enum = " ".join(f"({x};{y})" for x, y in rec["enumerated"])
            lines.append(
                f"{rec['n']},{rec['residue']},{pred},{enum},{rec['match']}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return EXIT_OK if all_match else EXIT_VERIFY


def _cmd_search(args: argparse.Namespace) -> int:
    if args.trail_not_path:
        chain = find_trail_not_path(args.n)
        cls = classify(chain)
        doc = ChainDocument.from_chain(
            chain,
            "trail",
            {"generator": "trail-not-path", "parameters": {"n": args.n}},
        )
        obj = {
            "n": args.n,
            "links": cls.link_count,
            "kinds": [k.value for k in cls.kinds],
            "document": doc.to_obj(),
        }
        _write_output(canonical_json(obj), args.out)
        return EXIT_OK
    max_edges = args.max_edges if args.max_edges is not None else min_link_length(args.n)
    outcome = run_search(
        args.n,
        max_edges,
        padding=args.padding,
        budget=args.budget,
        seed=args.seed,
    )
    obj: dict[str, object] = {
        "model": outcome.label,
        "n": outcome.n,
        "padding": outcome.padding,
        "max_edges": outcome.max_edges,
        "explored": outcome.explored,
        "refuted": list(outcome.refuted),
    }
    if outcome.result is None:
        obj["result"] = None
    else:
        doc = ChainDocument.from_chain(
            outcome.result.chain,
            "trail",
            {
                "generator": "search",
                "parameters": {
                    "n": outcome.n,
                    "padding": outcome.padding,
                    "seed": args.seed,
                },
            },
        )
        obj["result"] = {
            "links": outcome.result.links,
            "kinds": [k.value for k in outcome.result.classification.kinds],
            "document": doc.to_obj(),
        }
    _write_output(canonical_json(obj), args.out)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    source: str = args.source
    if source.startswith("catalog:"):
        chain = catalog_get(source[len("catalog:") :]).chain()
    else:
        chain = document_from_json(Path(source).read_text()).chain()
    if args.png:
        if args.out is None:
            raise DomainError("--png needs --out FILE for the binary image")
        from .figures import save_chain_png  # matplotlib import deferred

        save_chain_png(chain, args.out)
        return EXIT_OK
    try:
        margin = Fraction(args.margin)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"--margin must be rational, got {args.margin!r}") from exc
    options = RenderOptions(scale=args.scale, margin=margin)
    text = render_svg(chain, options)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridlink",
        description=(
            "Minimum-link covering paths, trails, circuits, and cycles on "
            "square grids, with exact arithmetic throughout."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a certified chain as JSON")
    g.add_argument(
        "kind",
        help=f"{'|'.join(_GENERATE_KINDS)}|catalog:<id>",
    )
    g.add_argument("n", nargs="?", type=int, default=None, help="grid size")
    g.add_argument("--eps", default="1/2", help="gap parameter for epsilon-path")
    g.add_argument("--out", help="write the JSON document here instead of stdout")
    g.add_argument("--svg", help="also render the chain to this SVG file")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="classify a chain document and check expectations")
    v.add_argument("file", help="chain document (JSON)")
    v.add_argument("--n", type=int, default=None, help="override the grid size")
    v.add_argument(
        "--expect",
        choices=[k.value for k in Kind],
        default=None,
        help="required certified kind (defaults to the document's kind field)",
    )
    v.add_argument("--expect-links", type=int, default=None, dest="expect_links")
    v.add_argument(
        "--expect-length",
        default=None,
        dest="expect_length",
        help='exact length like "20+6*sqrt(2)"',
    )
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="generate and tabulate across a size range")
    s.add_argument("n_min", type=int)
    s.add_argument("n_max", type=int)
    s.add_argument(
        "--kinds",
        default="path",
        help="comma list: path,distance-trail,circuit,cycle,collisions",
    )
    s.add_argument("--collisions", action="store_true", help="append collision rows")
    s.add_argument("--csv", action="store_true", help="CSV output (default)")
    s.add_argument("--json", action="store_true")
    s.add_argument("--md", action="store_true")
    s.add_argument("--out", help="write the table here instead of stdout")
    s.add_argument("--figures", help="directory for one PNG per generated row")
    s.add_argument("--threads", type=int, default=None)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("collisions", help="bridge-line lattice hits vs prediction")
    c.add_argument("n_min", type=int)
    c.add_argument("n_max", type=int)
    c.add_argument("--csv", action="store_true", help="CSV output (default)")
    c.add_argument("--json", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_collisions)

    se = sub.add_parser("search", help="exhaustive restricted-model trail search")
    se.add_argument("n", type=int)
    se.add_argument("--max-edges", type=int, default=None, dest="max_edges")
    se.add_argument("--padding", type=int, default=2)
    se.add_argument("--budget", type=int, default=4_000_000, help="node budget")
    se.add_argument("--seed", type=int, default=None, help="shuffle tie-breaking only")
    se.add_argument(
        "--trail-not-path",
        action="store_true",
        dest="trail_not_path",
        help="emit a minimum-link covering trail revisiting (0,0)",
    )
    se.add_argument("--out")
    se.set_defaults(func=_cmd_search)

    r = sub.add_parser("render", help="draw a chain (SVG by default)")
    r.add_argument("source", help="catalog:<id> or a chain document path")
    r.add_argument("--out", help="output file (stdout for SVG if omitted)")
    r.add_argument("--png", action="store_true", help="raster output via matplotlib")
    r.add_argument("--scale", type=int, default=32, help="pixels per grid unit")
    r.add_argument("--margin", default="1", help="margin in grid units")
    r.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ImpossibleRequestError, UnimplementedPatternError, DomainError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_IMPOSSIBLE
    except InvalidChainError as exc:
        where = f" (edges {', '.join(map(str, exc.edge_indices))})" if exc.edge_indices else ""
        print(f"verification failure: {exc}{where}", file=sys.stderr)
        return EXIT_VERIFY
    except (ConstructionFailure, NotMinimalError, OracleViolation, UnsupportedRadicalError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DocumentFormatError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
