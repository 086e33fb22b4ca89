"""Exhaustive search for covering trails in a restricted line model.

The model: candidate links live on lines through at least two points of the
*padded lattice* ``{-p .. n-1+p}^2``; a trail is a sequence of such lines,
consecutive ones meeting at their (unique, exact) intersection, with the two
terminal links ending at their outermost covered nodes.  Within the model
the search is exhaustive: junction positions are forced by the line
sequence, so the tree is finite and "no covering trail with h links" is a
real refutation about the model, not a sampling claim.  True minima over
arbitrary Steiner points may in principle be smaller, which is why every
result carries the ``restricted-model`` label.

Small grids only — the guard is at size 4.  The search is deterministic: a
``seed`` merely shuffles candidate ordering among lines that rank equally,
never the set of candidates explored, so it changes which of several
witnesses is found first, not whether one is found.
"""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Iterator

from .catalog import catalog_get
from .chains import PolygonalChain
from .errors import (
    DomainError,
    ImpossibleRequestError,
    InvalidChainError,
    UnimplementedPatternError,
)
from .exact import Scalar
from .geometry import Line, Point, Segment, lattice_hits_on_line, line_intersection, pt
from .verify import Classification, Kind, certify, classify, min_link_length

Node = tuple[int, int]

MODEL_LABEL = "restricted-model"

_MODELS: dict[tuple[int, int], "RestrictedModel"] = {}


class _Exhausted(Exception):
    pass


class _Budget:
    __slots__ = ("left", "spent")

    def __init__(self, amount: int):
        self.left = amount
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        self.left -= 1
        if self.left < 0:
            raise _Exhausted


class RestrictedModel:
    """Candidate lines for an n-grid with the given lattice padding."""

    def __init__(self, n: int, padding: int = 2):
        if n < 1:
            raise DomainError(f"grid size must be at least 1, got {n}")
        if n > 4:
            raise DomainError(
                f"the exhaustive model is limited to grids of size <= 4, got {n}; "
                "larger grids are served by the closed-form generators"
            )
        if padding < 0:
            raise DomainError(f"padding must be non-negative, got {padding}")
        self.n = n
        self.padding = padding
        pts = [
            pt(x, y)
            for x in range(-padding, n + padding)
            for y in range(-padding, n + padding)
        ]
        seen: dict[Line, Segment] = {}
        for i, a in enumerate(pts):
            for b in pts[i + 1 :]:
                line = Line.through(a, b)
                if line not in seen:
                    seen[line] = Segment(a, b)
        ordered = sorted(seen, key=lambda l: (l.a.r, l.b.r, l.c.r))
        self.lines: list[Line] = ordered
        self.refs: list[Segment] = [seen[l] for l in ordered]
        self._bit = {(x, y): 1 << (x * n + y) for x in range(n) for y in range(n)}
        self.full_mask = (1 << (n * n)) - 1
        # per line: grid nodes on it with their parameters along the ref
        # segment, sorted by parameter
        self.node_params: list[list[tuple[Scalar, int, Node]]] = []
        for line, ref in zip(self.lines, self.refs):
            entries = []
            for node in lattice_hits_on_line(line, n):
                t = ref.param_on_carrier(pt(*node))
                assert t is not None
                entries.append((t, self._bit[node], node))
            entries.sort(key=lambda e: e[0])
            self.node_params.append(entries)
        self.class_sizes = [len(e) for e in self.node_params]
        self.max_class = max(self.class_sizes) if self.class_sizes else 0
        # Sorted parameter values and prefix OR-masks per line: exact Scalar
        # comparisons happen once per junction (at insertion into the cache),
        # after which coverage masks are pure integer arithmetic.
        self._params: list[list[Scalar]] = [
            [t for t, _, _ in entries] for entries in self.node_params
        ]
        self._prefix: list[list[int]] = []
        for entries in self.node_params:
            pre = [0]
            for _, bit, _ in entries:
                pre.append(pre[-1] | bit)
            self._prefix.append(pre)
        self._junctions: dict[
            tuple[int, int], tuple[Point, tuple[int, int], tuple[int, int]] | None
        ] = {}

    def position(self, i: int, t: Scalar) -> tuple[int, int]:
        """Where parameter ``t`` sits among line ``i``'s node parameters.

        Returns ``(lt, le)`` — how many node parameters are strictly below /
        not above ``t``.  ``le == lt + 1`` exactly when ``t`` hits a node.
        """
        ps = self._params[i]
        return bisect_left(ps, t), bisect_right(ps, t)

    def junction(self, i: int, j: int) -> tuple[Point, tuple[int, int], tuple[int, int]] | None:
        """Cached intersection of lines ``i`` and ``j`` with its positions.

        ``None`` for parallel or coincident lines; otherwise the junction
        point plus its :meth:`position` along ``i`` and along ``j``.
        """
        key = (i, j) if i < j else (j, i)
        if key not in self._junctions:
            hit = line_intersection(self.lines[key[0]], self.lines[key[1]])
            if not isinstance(hit, Point):
                self._junctions[key] = None
            else:
                ta = self.refs[key[0]].param_on_carrier(hit)
                tb = self.refs[key[1]].param_on_carrier(hit)
                assert ta is not None and tb is not None
                self._junctions[key] = (
                    hit,
                    self.position(key[0], ta),
                    self.position(key[1], tb),
                )
        got = self._junctions[key]
        if got is None:
            return None
        p, pa, pb = got
        return (p, pa, pb) if i < j else (p, pb, pa)

    def interval_mask(self, i: int, a: tuple[int, int], b: tuple[int, int]) -> int:
        """OR-mask of line ``i``'s nodes between positions ``a`` and ``b`` inclusive."""
        lo, hi = (a, b) if a <= b else (b, a)
        pre = self._prefix[i]
        return pre[hi[1]] ^ pre[lo[0]]

    def between_mask(self, i: int, t_a: Scalar, t_b: Scalar) -> int:
        """OR-mask of line ``i``'s nodes with parameter in ``[t_a, t_b]``."""
        return self.interval_mask(i, self.position(i, t_a), self.position(i, t_b))

    @classmethod
    def shared(cls, n: int, padding: int) -> "RestrictedModel":
        """A process-wide instance per (n, padding), so the lazily filled
        junction cache survives across runs."""
        key = (n, padding)
        model = _MODELS.get(key)
        if model is None:
            model = _MODELS[key] = cls(n, padding)
        return model

    def search_order(self, seed: int | None = None) -> list[int]:
        """Line indices, richest classes first.

        With a seed, lines of equal class size are shuffled among
        themselves; the rank structure (and hence reachability of every
        witness) is unchanged.
        """
        order = sorted(range(len(self.lines)), key=lambda i: (-self.class_sizes[i], i))
        if seed is None:
            return order
        rng = random.Random(seed)
        out: list[int] = []
        block: list[int] = []
        size: int | None = None
        for i in order:
            if self.class_sizes[i] != size:
                rng.shuffle(block)
                out.extend(block)
                block, size = [], self.class_sizes[i]
            block.append(i)
        rng.shuffle(block)
        out.extend(block)
        return out


def _terminal_options(
    model: RestrictedModel, i: int, pos: tuple[int, int]
) -> list[tuple[int, Point]]:
    """Ways to finish line ``i`` from junction position ``pos`` outward.

    Each option covers every class node on one side of the junction and ends
    exactly at the outermost of them.
    """
    entries = model.node_params[i]
    m = len(entries)
    lt, le = pos
    pre = model._prefix[i]
    options: list[tuple[int, Point]] = []
    if lt > 0:
        options.append((pre[le], pt(*entries[0][2])))
    if le < m:
        options.append((pre[m] ^ pre[lt], pt(*entries[-1][2])))
    return options


def _search_exact(
    model: RestrictedModel,
    links: int,
    budget: _Budget,
    order: list[int],
) -> Iterator[PolygonalChain]:
    """All model trails with exactly ``links`` links that cover the grid."""
    n = model.n
    full = model.full_mask
    maxcov = model.max_class
    refs = model.refs
    junction = model.junction

    if links == 1:
        for i in order:
            budget.spend()
            entries = model.node_params[i]
            if not entries:
                continue
            mask = 0
            for _, bit, _ in entries:
                mask |= bit
            if mask != full:
                continue
            start = pt(*entries[0][2])
            if len(entries) > 1:
                end = pt(*entries[-1][2])
            else:
                dx, dy = refs[i].direction()
                end = Point(start.x + dx, start.y + dy)
            yield PolygonalChain(n, [start, end])
        return

    def rec(
        cur: int,
        pos_entry: tuple[int, int],
        covered: int,
        depth: int,
        verts: list[Point],
    ) -> Iterator[PolygonalChain]:
        budget.spend()
        if depth == links:
            for mask, terminal in _terminal_options(model, cur, pos_entry):
                if mask & ~covered == 0:
                    continue  # a final link adding nothing shortens to depth-1
                if (covered | mask) != full:
                    continue
                if terminal == verts[-1]:
                    continue
                try:
                    yield PolygonalChain(n, [*verts, terminal])
                except InvalidChainError:
                    continue
            return
        uncovered_now = (full & ~covered).bit_count()
        if uncovered_now - model.class_sizes[cur] > (links - depth) * maxcov:
            return
        for nxt in order:
            if nxt == cur:
                continue
            got = junction(cur, nxt)
            if got is None:
                continue
            j_point, pos_cur, pos_nxt = got
            if j_point == verts[-1]:
                continue
            new_cov = covered | model.interval_mask(cur, pos_entry, pos_cur)
            if (full & ~new_cov).bit_count() > (links - depth) * maxcov:
                continue
            verts.append(j_point)
            yield from rec(nxt, pos_nxt, new_cov, depth + 1, verts)
            verts.pop()

    for i1 in order:
        if model.class_sizes[i1] == 0:
            continue  # an opening link covering nothing shortens to links-1
        budget.spend()
        for i2 in order:
            if i2 == i1:
                continue
            got = junction(i1, i2)
            if got is None:
                continue
            j_point, pos_1, pos_2 = got
            for mask, start in _terminal_options(model, i1, pos_1):
                if mask == 0 or start == j_point:
                    continue
                if (full & ~mask).bit_count() > (links - 1) * maxcov:
                    continue
                yield from rec(i2, pos_2, mask, 2, [start, j_point])


@dataclass(frozen=True, slots=True)
class SearchResult:
    n: int
    padding: int
    links: int
    chain: PolygonalChain
    classification: Classification
    label: str = MODEL_LABEL


@dataclass(frozen=True, slots=True)
class SearchOutcome:
    """A deepening run's full story: witness or refutations, plus effort."""

    n: int
    padding: int
    max_edges: int
    result: SearchResult | None
    refuted: tuple[int, ...]
    explored: int
    label: str = MODEL_LABEL


def run_search(
    n: int,
    max_edges: int,
    *,
    padding: int = 2,
    budget: int = 4_000_000,
    seed: int | None = None,
    predicate: Callable[[Classification], bool] | None = None,
) -> SearchOutcome:
    """Deepen link count from 1 to ``max_edges`` within the restricted model.

    Stops at the first covering trail found; every smaller link count is
    then exhaustively refuted.  A run with ``result=None`` is itself an
    exhaustive claim about the model, so running out of budget raises
    instead of returning one.  ``predicate`` filters witnesses (deepening
    still starts at 1, so the result is minimal among trails satisfying
    it).
    """
    if max_edges < 1:
        raise DomainError(f"max_edges must be at least 1, got {max_edges}")
    model = RestrictedModel.shared(n, padding)
    order = model.search_order(seed)
    b = _Budget(budget)
    refuted: list[int] = []
    try:
        for links in range(1, max_edges + 1):
            for chain in _search_exact(model, links, b, order):
                cls = classify(chain)
                if not cls.is_covering_trail:
                    continue
                if predicate is not None and not predicate(cls):
                    continue
                result = SearchResult(
                    n=n,
                    padding=padding,
                    links=links,
                    chain=chain,
                    classification=cls,
                )
                return SearchOutcome(
                    n=n,
                    padding=padding,
                    max_edges=max_edges,
                    result=result,
                    refuted=tuple(refuted),
                    explored=b.spent,
                )
            refuted.append(links)
    except _Exhausted:
        raise UnimplementedPatternError(
            f"search budget ({budget} nodes) exhausted before deciding "
            f"{max_edges} links for n={n}"
        ) from None
    return SearchOutcome(
        n=n,
        padding=padding,
        max_edges=max_edges,
        result=None,
        refuted=tuple(refuted),
        explored=b.spent,
    )


def search_min_trail(
    n: int,
    max_edges: int,
    *,
    padding: int = 2,
    budget: int = 4_000_000,
    seed: int | None = None,
    predicate: Callable[[Classification], bool] | None = None,
) -> SearchResult | None:
    """Fewest-link covering trail within the model, or None if none fits.

    Thin wrapper over :func:`run_search` for callers that only want the
    witness.
    """
    return run_search(
        n,
        max_edges,
        padding=padding,
        budget=budget,
        seed=seed,
        predicate=predicate,
    ).result


def refute_links(
    n: int, links: int, *, padding: int = 2, budget: int = 4_000_000
) -> bool:
    """Exhaustively decide whether the model admits a covering trail of ``links`` links.

    True means refuted: the whole tree was explored and nothing covers the
    grid.  False means a witness exists.  An exhausted budget raises — an
    interrupted refutation proves nothing.
    """
    model = RestrictedModel.shared(n, padding)
    order = model.search_order()
    b = _Budget(budget)
    try:
        for chain in _search_exact(model, links, b, order):
            if classify(chain).is_covering_trail:
                return False
    except _Exhausted:
        raise UnimplementedPatternError(
            f"search budget ({budget} nodes) exhausted before deciding "
            f"{links} links for n={n}"
        ) from None
    return True


def find_trail_not_path(n: int) -> PolygonalChain:
    """A minimum-link covering trail that revisits the node (0, 0).

    Such witnesses separate trails from paths at the shared minimum link
    count.  The single-node grid has none — its minimum-link covering is one
    link visiting the node once, always a path.  Size 2 is found by the
    restricted search with padding 1; size 3 is the catalog's revisiting
    trail.  Larger grids are out of scope here: their minimum-link circuits
    already revisit nodes.
    """
    if n < 1:
        raise DomainError(f"grid size must be at least 1, got {n}")
    if n == 1:
        raise ImpossibleRequestError(
            "every minimum-link covering of the 1-grid visits its node "
            "exactly once, so no covering trail fails to be a covering path"
        )
    if n > 3:
        raise DomainError(
            "revisiting-trail witnesses are provided for sizes 2 and 3 only; "
            "for larger grids the minimum-link covering circuits already "
            "revisit a node (see covering_circuit)"
        )
    if n == 2:
        result = search_min_trail(
            2,
            min_link_length(2),
            padding=1,
            predicate=lambda cls: cls.report.count((0, 0)) >= 2,
        )
        if result is None:
            raise UnimplementedPatternError(
                "the padding-1 model unexpectedly has no revisiting trail for n=2"
            )
        certify(result.chain, Kind.TRAIL)
        return result.chain
    chain = catalog_get("trail-3-revisit").chain()
    certify(chain, Kind.TRAIL)
    return chain
