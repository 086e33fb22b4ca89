"""Triangular spirals, the two missed nodes, and full path assembly."""

from fractions import Fraction as F

import pytest

from gridlink import (
    ConstructionFailure,
    DomainError,
    Kind,
    Segment,
    assemble_path,
    bridge_line,
    catalog_get,
    certify,
    classify,
    grid_nodes,
    min_link_length,
    missed_points,
    mixed_spiral_extend,
    pt,
    triangular_spiral,
)
from gridlink.geometry import lattice_points_on_segment
from gridlink.spirals import lower_region, upper_region


class TestRegions:
    @pytest.mark.parametrize("n", range(3, 31))
    def test_regions_partition_the_grid(self, n):
        lower = lower_region(n)
        upper = upper_region(n)
        assert lower | upper == set(grid_nodes(n))
        assert not lower & upper
        assert all(x + y <= n - 2 for x, y in lower)
        assert all(x + y >= n - 1 for x, y in upper)

    def test_size_guard(self):
        with pytest.raises(DomainError):
            lower_region(2)
        with pytest.raises(DomainError):
            upper_region(2)


class TestMissedPoints:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (4, ((0, 1), (2, 2))),
            (7, ((1, 2), (4, 4))),
            (8, ((2, 2), (5, 4))),
            (9, ((2, 3), (6, 5))),
            (10, ((2, 3), (6, 6))),
        ],
    )
    def test_frozen_values(self, n, expected):
        assert missed_points(n) == expected

    @pytest.mark.parametrize("n", range(4, 41))
    def test_each_point_sits_in_its_own_region(self, n):
        p1, p2 = missed_points(n)
        assert p1 in lower_region(n)
        assert p2 in upper_region(n)


class TestTriangularSpirals:
    def test_bottom_spiral_smallest(self):
        c = triangular_spiral(4, "bottom")
        assert [v.lattice() for v in c.vertices] == [(0, 0), (2, 0), (0, 2)]

    def test_bottom_spiral_prefix(self):
        c = triangular_spiral(6, "bottom")
        assert [v.lattice() for v in c.vertices[:5]] == [
            (0, 0),
            (4, 0),
            (0, 4),
            (0, 1),
            (2, 1),
        ]

    def test_top_spiral_prefix(self):
        c = triangular_spiral(5, "top")
        assert [v.lattice() for v in c.vertices[:5]] == [
            (4, 4),
            (0, 4),
            (4, 0),
            (4, 3),
            (2, 3),
        ]

    @pytest.mark.parametrize("n", range(4, 13))
    def test_link_budgets(self, n):
        assert triangular_spiral(n, "bottom").link_count == n - 2
        assert triangular_spiral(n, "top").link_count == n - 1

    @pytest.mark.parametrize("n", range(4, 31))
    def test_bottom_covers_its_region_except_one_node(self, n):
        p1, _ = missed_points(n)
        covered = set(triangular_spiral(n, "bottom").covered_nodes())
        assert covered & lower_region(n) == lower_region(n) - {p1}

    @pytest.mark.parametrize("n", range(4, 31))
    def test_top_covers_its_region_except_one_node(self, n):
        _, p2 = missed_points(n)
        covered = set(triangular_spiral(n, "top").covered_nodes())
        assert covered & upper_region(n) == upper_region(n) - {p2}

    def test_region_word_guard(self):
        with pytest.raises(DomainError):
            triangular_spiral(6, "left")


class TestBridgeLine:
    @pytest.mark.parametrize("n", [n for n in range(4, 41) if n % 3])
    def test_positive_slope_below_one(self, n):
        line = bridge_line(n)
        slope = -line.a / line.b
        assert F(0) < slope.r < F(1)
        assert slope.s2 == 0

    @pytest.mark.parametrize("n", [4, 7, 8, 10, 11, 13])
    def test_passes_through_both_missed_points(self, n):
        line = bridge_line(n)
        for node in missed_points(n):
            assert line.contains(pt(*node))


class TestAssembly:
    def test_4_grid_path_is_the_catalog_one(self):
        assert assemble_path(4) == catalog_get("path-4").chain()

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_tiny_grids_come_from_the_catalog(self, n):
        assert assemble_path(n) == catalog_get(f"path-{n}").chain()

    @pytest.mark.parametrize("n", range(1, 15))
    def test_assembled_paths_certify_at_the_minimum(self, n):
        cls = certify(assemble_path(n), Kind.PATH)
        assert cls.link_count == min_link_length(n)

    @pytest.mark.parametrize("n", [7, 9])
    def test_expected_link_counts(self, n):
        assert assemble_path(n).link_count == 2 * (n - 1)

    @pytest.mark.parametrize("n", [4, 7, 8, 10, 11])
    def test_exactly_one_edge_rides_the_bridge_line(self, n):
        """The bridge edge exists, is unique, and picks up exactly the two
        nodes the spirals skipped."""
        path = assemble_path(n)
        line = bridge_line(n)
        edges_on_line = [
            i
            for i in range(path.link_count)
            if line.contains(path.vertices[i]) and line.contains(path.vertices[i + 1])
        ]
        assert len(edges_on_line) == 1
        i = edges_on_line[0]
        seg = Segment(path.vertices[i], path.vertices[i + 1])
        hits = [p.lattice() for p in lattice_points_on_segment(seg, n)]
        assert tuple(hits) in (missed_points(n), tuple(reversed(missed_points(n))))

    def test_guard(self):
        with pytest.raises(DomainError):
            assemble_path(0)


class TestExtension:
    def test_grow_the_5_grid_path_by_one(self):
        grown = mixed_spiral_extend(assemble_path(5))
        assert grown.n == 6
        assert grown.link_count == 10
        assert classify(grown).is_covering_path

    def test_non_path_input_is_rejected(self):
        with pytest.raises(DomainError):
            mixed_spiral_extend(catalog_get("trail-3-revisit").chain())

    def test_no_extension_exists_for_the_3_grid_catalog_path(self):
        with pytest.raises(ConstructionFailure):
            mixed_spiral_extend(catalog_get("path-3").chain())
