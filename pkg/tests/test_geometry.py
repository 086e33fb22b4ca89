"""Planar primitives: incidence, intersection, lattice enumeration, lengths."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridlink import (
    DomainError,
    Line,
    LineRelation,
    RadicalSum,
    Scalar,
    Segment,
    grid_nodes,
    in_grid,
    lattice_hits,
    lattice_hits_on_line,
    lattice_points_on_segment,
    line_intersection,
    point_on_segment,
    pt,
    segment_length,
)
from gridlink.geometry import segments_collinear

coords = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def seg(ax, ay, bx, by):
    return Segment(pt(ax, ay), pt(bx, by))


# The bridge line for the 4-grid passes through (0,1) and (2,2): y = 1 + x/2.
BRIDGE4 = Line.through(pt(0, 1), pt(2, 2))


class TestIncidence:
    @pytest.mark.parametrize(
        "p,s,expected",
        [
            (pt(1, 1), seg(0, 0, 2, 2), True),
            (pt(0, 1), seg(-2, 0, 3, F(5, 2)), True),
            (pt(1, 2), seg(0, 0, 2, 0), False),
            (pt(0, 0), seg(0, 0, 2, 2), True),  # endpoint counts
            (pt(3, 3), seg(0, 0, 2, 2), False),  # on the carrier, off the segment
        ],
    )
    def test_point_on_segment(self, p, s, expected):
        assert point_on_segment(p, s) is expected

    def test_off_lattice_point_exact(self):
        s = seg(0, 0, 1, 1)
        assert point_on_segment(pt(F(1, 3), F(1, 3)), s)
        assert not point_on_segment(pt(F(1, 3), F(1, 2)), s)

    @pytest.mark.parametrize(
        "s1,s2,expected",
        [
            (seg(0, 0, 1, 0), seg(1, 0, 3, 0), True),
            (seg(0, 0, 1, 0), seg(1, 0, 1, 1), False),
            (seg(0, 0, 2, 1), seg(2, 1, 6, 3), True),
            (seg(0, 0, 1, 0), seg(0, 1, 1, 1), False),  # parallel but distinct
        ],
    )
    def test_segments_collinear(self, s1, s2, expected):
        assert segments_collinear(s1, s2) is expected

    def test_degenerate_segment_rejected(self):
        with pytest.raises(DomainError):
            Segment(pt(1, 1), pt(1, 1))


class TestLines:
    def test_intersection_with_horizontal_axis(self):
        y0 = Line.through(pt(0, 0), pt(1, 0))
        assert line_intersection(y0, BRIDGE4) == pt(-2, 0)

    def test_intersection_with_vertical_line(self):
        x3 = Line.through(pt(3, 0), pt(3, 1))
        assert line_intersection(x3, BRIDGE4) == pt(3, F(5, 2))

    def test_parallel_and_coincident(self):
        y0 = Line.through(pt(0, 0), pt(1, 0))
        y1 = Line.through(pt(0, 1), pt(1, 1))
        y0_again = Line.through(pt(5, 0), pt(-3, 0))
        assert line_intersection(y0, y1) is LineRelation.PARALLEL
        assert line_intersection(y0, y0_again) is LineRelation.COINCIDENT

    def test_line_needs_two_distinct_points(self):
        with pytest.raises(DomainError):
            Line.through(pt(2, 2), pt(2, 2))

    def test_canonical_normalization_makes_lines_hashable(self):
        a = Line.through(pt(0, 0), pt(2, 2))
        b = Line.through(pt(-1, -1), pt(5, 5))
        assert a == b
        assert len({a, b}) == 1

    @given(ax=coords, ay=coords, bx=coords, by=coords)
    @settings(max_examples=150, deadline=None)
    def test_intersection_lies_on_both_lines(self, ax, ay, bx, by):
        if (ax, ay) == (bx, by):
            return
        l1 = Line.through(pt(ax, ay), pt(bx, by))
        l2 = BRIDGE4
        hit = line_intersection(l1, l2)
        if isinstance(hit, LineRelation):
            return
        assert l1.contains(hit)
        assert l2.contains(hit)


class TestLatticeEnumeration:
    def test_antidiagonal(self):
        got = lattice_points_on_segment(seg(0, 3, 3, 0), 4)
        assert got == [pt(0, 3), pt(1, 2), pt(2, 1), pt(3, 0)]

    def test_shallow_slope_with_off_grid_endpoints(self):
        got = lattice_points_on_segment(seg(-1, 0, F(11, 3), F(7, 3)), 5)
        assert got == [pt(1, 1), pt(3, 2)]

    def test_bridge_segment_of_the_4_grid(self):
        got = lattice_points_on_segment(seg(-2, 0, 3, F(5, 2)), 4)
        assert got == [pt(0, 1), pt(2, 2)]

    def test_traversal_order_follows_the_segment(self):
        forward = lattice_points_on_segment(seg(0, 3, 3, 0), 4)
        backward = lattice_points_on_segment(seg(3, 0, 0, 3), 4)
        assert backward == list(reversed(forward))

    def test_vertical_segment(self):
        got = lattice_points_on_segment(seg(2, -1, 2, 5), 4)
        assert got == [pt(2, 0), pt(2, 1), pt(2, 2), pt(2, 3)]

    def test_irrational_offset_never_hits_the_lattice(self):
        s = Segment(pt(Scalar(0, 1), 0), pt(Scalar(0, 1), 5))  # x = sqrt(2)
        assert lattice_points_on_segment(s, 6) == []

    def test_grid_size_guard(self):
        with pytest.raises(DomainError):
            lattice_points_on_segment(seg(0, 0, 1, 1), 0)

    @given(ax=coords, ay=coords, bx=coords, by=coords, n=st.integers(1, 6))
    @settings(max_examples=150, deadline=None)
    def test_hits_are_strictly_monotone_along_the_segment(self, ax, ay, bx, by, n):
        if (ax, ay) == (bx, by):
            return
        s = seg(ax, ay, bx, by)
        hits = lattice_hits(s)
        params = [t for _, t in hits]
        assert all(a < b for a, b in zip(params, params[1:]))
        for node, t in hits:
            assert Scalar(0) <= t <= Scalar(1)
            assert point_on_segment(pt(*node), s)

    @given(ax=coords, ay=coords, bx=coords, by=coords, n=st.integers(1, 5))
    @settings(max_examples=150, deadline=None)
    def test_membership_consistency_with_point_on_segment(self, ax, ay, bx, by, n):
        """A grid node is enumerated iff the incidence predicate says it is on."""
        if (ax, ay) == (bx, by):
            return
        s = seg(ax, ay, bx, by)
        enumerated = {p.lattice() for p in lattice_points_on_segment(s, n)}
        for node in grid_nodes(n):
            assert (node in enumerated) == point_on_segment(pt(*node), s)


class TestLatticeOnLine:
    def test_horizontal(self):
        y2 = Line.through(pt(0, 2), pt(1, 2))
        assert lattice_hits_on_line(y2, 4) == [(0, 2), (1, 2), (2, 2), (3, 2)]

    def test_vertical(self):
        x1 = Line.through(pt(1, 0), pt(1, 5))
        assert lattice_hits_on_line(x1, 3) == [(1, 0), (1, 1), (1, 2)]

    def test_bridge_line_hits(self):
        assert lattice_hits_on_line(BRIDGE4, 4) == [(0, 1), (2, 2)]

    def test_line_outside_grid(self):
        y9 = Line.through(pt(0, 9), pt(1, 9))
        assert lattice_hits_on_line(y9, 4) == []


class TestLengths:
    @pytest.mark.parametrize(
        "s,expected",
        [
            (seg(0, 0, 1, 0), RadicalSum({1: 1})),
            (seg(0, 0, 1, 2), RadicalSum({5: 1})),
            (seg(2, 2, 0, 0), RadicalSum({2: 2})),
            (seg(0, 0, 3, 4), RadicalSum({1: 5})),
        ],
    )
    def test_exact_lengths(self, s, expected):
        assert segment_length(s.a, s.b) == expected

    @given(ax=coords, ay=coords, bx=coords, by=coords)
    @settings(max_examples=150, deadline=None)
    def test_length_squared_identity(self, ax, ay, bx, by):
        if (ax, ay) == (bx, by):
            return
        s = seg(ax, ay, bx, by)
        dx, dy = s.direction()
        length = s.length()
        assert length * length == RadicalSum.from_scalar(dx * dx + dy * dy)

    def test_in_grid_window(self):
        assert in_grid((0, 0), 1)
        assert not in_grid((1, 0), 1)
        assert in_grid((3, 3), 4)
        assert not in_grid((-1, 2), 4)
