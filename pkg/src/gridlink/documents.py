"""Lossless serialization of chains and exact numbers.

Two text shapes live here.  Chain documents are JSON in a canonical
rendering (sorted keys, no insignificant whitespace), so serializing the
parse of a document reproduces it byte for byte.  Exact lengths travel as
compact radical expressions like ``20+6*sqrt(2)`` that parse back to the
same value.  Coordinates are never converted through floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .chains import PolygonalChain
from .errors import DocumentFormatError
from .exact import RadicalSum, Scalar
from .geometry import Point
from .verify import Classification

FORMAT_VERSION = "1"

KINDS = ("path", "trail", "circuit", "cycle", "unknown")


def scalar_to_json(value: Scalar) -> str | dict[str, str]:
    """A rational becomes ``"p/q"``; anything else ``{"r": ..., "s2": ...}``."""
    if value.s2 == 0:
        return str(value.r)
    return {"r": str(value.r), "s2": str(value.s2)}


def _fraction_from_text(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentFormatError(f"not a rational number: {text!r}") from exc


def scalar_from_json(value: Any) -> Scalar:
    if isinstance(value, bool):
        raise DocumentFormatError(f"not a coordinate: {value!r}")
    if isinstance(value, int):
        return Scalar(value)
    if isinstance(value, str):
        return Scalar(_fraction_from_text(value))
    if isinstance(value, float):
        raise DocumentFormatError(
            f"floating-point coordinate {value!r} rejected; use a rational "
            'string like "3/2"'
        )
    if isinstance(value, dict):
        if set(value) != {"r", "s2"}:
            raise DocumentFormatError(
                f"coordinate object must have exactly the keys r and s2, "
                f"got {sorted(value)}"
            )
        r, s2 = value["r"], value["s2"]
        if not isinstance(r, str) or not isinstance(s2, str):
            raise DocumentFormatError("coordinate object values must be strings")
        return Scalar(_fraction_from_text(r), _fraction_from_text(s2))
    raise DocumentFormatError(f"not a coordinate: {value!r}")


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class ChainDocument:
    """The on-disk form of a chain: grid size, claimed kind, exact vertices."""

    n: int
    kind: str
    vertices: tuple[tuple[Scalar, Scalar], ...]
    metadata: dict[str, Any] = field(default_factory=dict)
    format_version: str = FORMAT_VERSION

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DocumentFormatError(
                f"kind must be one of {', '.join(KINDS)}; got {self.kind!r}"
            )

    @staticmethod
    def from_chain(
        chain: PolygonalChain,
        kind: str = "unknown",
        metadata: dict[str, Any] | None = None,
    ) -> "ChainDocument":
        return ChainDocument(
            n=chain.n,
            kind=kind,
            vertices=tuple((v.x, v.y) for v in chain.vertices),
            metadata=dict(metadata or {}),
        )

    def chain(self) -> PolygonalChain:
        return PolygonalChain(self.n, [Point(x, y) for x, y in self.vertices])

    def to_obj(self) -> dict[str, Any]:
        return {
            "format_version": self.format_version,
            "n": self.n,
            "kind": self.kind,
            "vertices": [[scalar_to_json(x), scalar_to_json(y)] for x, y in self.vertices],
            "metadata": self.metadata,
        }

    def to_json(self) -> str:
        return canonical_json(self.to_obj())


def document_from_json(text: str) -> ChainDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise DocumentFormatError("document must be a JSON object")
    expected_keys = {"format_version", "n", "kind", "vertices", "metadata"}
    if set(obj) != expected_keys:
        missing = expected_keys - set(obj)
        extra = set(obj) - expected_keys
        detail = []
        if missing:
            detail.append(f"missing {sorted(missing)}")
        if extra:
            detail.append(f"unexpected {sorted(extra)}")
        raise DocumentFormatError(f"document keys wrong: {'; '.join(detail)}")
    if obj["format_version"] != FORMAT_VERSION:
        raise DocumentFormatError(
            f"unsupported format_version {obj['format_version']!r}; "
            f"this reader understands {FORMAT_VERSION!r}"
        )
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentFormatError(f"n must be a positive integer, got {n!r}")
    kind = obj["kind"]
    if kind not in KINDS:
        raise DocumentFormatError(
            f"kind must be one of {', '.join(KINDS)}; got {kind!r}"
        )
    raw_vertices = obj["vertices"]
    if not isinstance(raw_vertices, list):
        raise DocumentFormatError("vertices must be a list")
    vertices = []
    for i, pair in enumerate(raw_vertices):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentFormatError(f"vertex {i} must be a pair, got {pair!r}")
        vertices.append((scalar_from_json(pair[0]), scalar_from_json(pair[1])))
    metadata = obj["metadata"]
    if not isinstance(metadata, dict):
        raise DocumentFormatError("metadata must be an object")
    return ChainDocument(
        n=n, kind=kind, vertices=tuple(vertices), metadata=metadata
    )


def strongest_kind(cls: Classification) -> str:
    """The most specific certified class name, or ``unknown``."""
    if cls.is_covering_cycle:
        return "cycle"
    if cls.is_covering_circuit:
        return "circuit"
    if cls.is_covering_path:
        return "path"
    if cls.is_covering_trail:
        return "trail"
    return "unknown"


# -- exact lengths as text --------------------------------------------------

_RADICAL_TERM = re.compile(r"([+-]?)(?:([0-9]+(?:/[0-9]+)?)\*)?sqrt\(([0-9]+)\)")


def radical_to_text(value: RadicalSum) -> str:
    """Canonical compact rendering, e.g. ``-3/2+5*sqrt(2)`` or ``0``."""
    terms = value.terms
    if not terms:
        return "0"
    parts: list[str] = []
    for d in sorted(terms):
        c = terms[d]
        if d == 1:
            body = str(abs(c))
        elif abs(c) == 1:
            body = f"sqrt({d})"
        else:
            body = f"{abs(c)}*sqrt({d})"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(parts)


def radical_from_text(text: str) -> RadicalSum:
    """Parse the ``radical_to_text`` language (whitespace-insensitive)."""
    compact = "".join(text.split())
    if not compact:
        raise DocumentFormatError("empty radical expression")
    # split into signed terms at top level (no nesting beyond sqrt(..))
    terms: list[str] = []
    start = 0
    depth = 0
    for i, ch in enumerate(compact):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DocumentFormatError(f"unbalanced parentheses in {text!r}")
        elif ch in "+-" and depth == 0 and i > start:
            terms.append(compact[start:i])
            start = i
    if depth != 0:
        raise DocumentFormatError(f"unbalanced parentheses in {text!r}")
    terms.append(compact[start:])
    acc: dict[int, Fraction] = {}
    for term in terms:
        m = _RADICAL_TERM.fullmatch(term)
        if m:
            sign, coeff, d_text = m.groups()
            c = _fraction_from_text(coeff) if coeff else Fraction(1)
            if sign == "-":
                c = -c
            d = int(d_text)
            if d < 1:
                raise DocumentFormatError(f"radicand must be positive in {term!r}")
        else:
            c = _fraction_from_text(term)
            d = 1
        acc[d] = acc.get(d, Fraction(0)) + c
    return RadicalSum(acc)
