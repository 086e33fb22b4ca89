"""Polygonal chains over a grid window: validity, visit counts, symmetries."""

from fractions import Fraction as F

import pytest

from gridlink import (
    InvalidChainError,
    PolygonalChain,
    RadicalSum,
    catalog_entries,
    catalog_get,
    grid_nodes,
    link_length,
    pt,
    total_length,
    visit_counts,
)


def chain(n, coords):
    return PolygonalChain.from_coords(n, coords)


class TestValidity:
    def test_too_few_vertices(self):
        with pytest.raises(InvalidChainError):
            PolygonalChain(2, [pt(0, 0)])

    def test_coincident_consecutive_vertices(self):
        with pytest.raises(InvalidChainError) as exc:
            chain(3, [(0, 0), (1, 0), (1, 0), (2, 1)])
        assert exc.value.edge_indices == (1,)

    def test_consecutive_collinear_edges(self):
        with pytest.raises(InvalidChainError) as exc:
            chain(3, [(0, 0), (1, 0), (2, 0)])
        assert exc.value.edge_indices == (0, 1)

    def test_immediate_backtrack_is_collinear(self):
        with pytest.raises(InvalidChainError) as exc:
            chain(3, [(0, 0), (2, 2), (0, 0)])
        assert exc.value.edge_indices == (0, 1)

    def test_wraparound_collinearity_of_a_closed_chain(self):
        # The edge into the closing vertex continues straight through the
        # first edge out of it, which merges the two into one longer link.
        with pytest.raises(InvalidChainError) as exc:
            chain(4, [(0, 0), (3, 0), (3, 3), (-3, 0), (0, 0)])
        assert exc.value.edge_indices == (3, 0)

    def test_repeated_edge_same_direction(self):
        with pytest.raises(InvalidChainError) as exc:
            chain(3, [(0, 0), (2, 0), (2, 2), (0, 0), (2, 0)])
        assert exc.value.edge_indices == (0, 3)

    def test_repeated_edge_opposite_direction(self):
        with pytest.raises(InvalidChainError) as exc:
            chain(
                5,
                [(0, 2), (0, 0), (2, 0), (2, 2), (4, 1), (2, 0), (0, 0)],
            )
        assert exc.value.edge_indices == (1, 5)

    def test_crossing_edges_are_allowed(self):
        c = chain(3, [(0, 0), (2, 2), (2, 0), (0, 2)])
        assert c.link_count == 3

    def test_grid_size_guard(self):
        with pytest.raises(Exception):
            chain(0, [(0, 0), (1, 1)])


class TestBasics:
    def test_equality_and_construction_paths_agree(self):
        a = chain(2, [(0, 1), (0, 0), (1, 0), (1, 1)])
        b = PolygonalChain(2, [pt(0, 1), pt(0, 0), pt(1, 0), pt(1, 1)])
        assert a == b
        assert a != a.with_grid(3)

    def test_link_count(self):
        c = catalog_get("path-2").chain()
        assert c.link_count == 3
        assert link_length(c) == 3

    def test_is_closed(self):
        assert catalog_get("cycle-2").chain().is_closed
        assert not catalog_get("path-2").chain().is_closed

    def test_total_length_of_unit_staircase(self):
        c = catalog_get("path-2").chain()
        assert total_length(c) == RadicalSum({1: 3})
        assert c.total_length() == RadicalSum({1: 3})

    def test_total_length_mixes_radicals(self):
        c = catalog_get("trail-3-shortest").chain()
        assert total_length(c) == RadicalSum({1: 5, 2: 5})


class TestVisitCounts:
    def test_single_revisit_trail(self):
        """Four links over the 3-window, passing through the center twice."""
        report = visit_counts(catalog_get("trail-3-revisit").chain())
        assert report.covered
        assert report.count((0, 0)) == 2
        assert report.link_length == 4
        others = [v for k, v in report.counts.items() if k != (0, 0)]
        assert others == [1] * 8

    def test_smallest_square_window_path(self):
        report = catalog_get("path-2").chain().visit_report()
        assert report.covered
        assert set(report.counts.values()) == {1}
        assert report.link_length == 3
        assert report.total_length == RadicalSum({1: 3})

    def test_closed_eight_link_circuit_revisits_one_corner(self):
        report = visit_counts(catalog_get("circuit-5").chain())
        assert report.covered
        assert report.count((4, 0)) == 2
        assert all(
            v == 1 for k, v in report.counts.items() if k != (4, 0)
        )
        assert report.link_length == 8

    def test_closure_merge_counts_the_joint_once(self):
        report = visit_counts(catalog_get("cycle-2").chain())
        assert report.count((0, 0)) == 1
        assert set(report.counts.values()) == {1}

    def test_uncovered_nodes_are_reported(self):
        c = chain(3, [(0, 0), (2, 0), (2, 2), (0, 2)])
        report = c.visit_report()
        assert not report.covered
        assert (1, 1) in report.uncovered
        assert set(c.covered_nodes()) | set(report.uncovered) == set(grid_nodes(3))

    def test_interior_lattice_hits_count_without_being_vertices(self):
        # One straight stroke across the window visits all three nodes on it.
        c = chain(3, [(0, 0), (2, 2), (2, 0)])
        report = c.visit_report()
        assert report.count((1, 1)) == 1
        assert report.count((2, 2)) == 1

    def test_off_window_vertices_do_not_appear(self):
        report = visit_counts(catalog_get("trail-3-revisit").chain())
        assert (0, -1) not in report.counts
        assert (0, 3) not in report.counts


class TestSymmetries:
    @pytest.mark.parametrize("entry", catalog_entries(), ids=lambda e: e.entry_id)
    def test_reversal_preserves_the_report(self, entry):
        c = entry.chain()
        r = c.reversed()
        assert r.reversed() == c
        assert r.visit_report().counts == c.visit_report().counts
        assert r.total_length() == c.total_length()
        assert r.link_count == c.link_count

    def test_translation_shifts_counts_nodewise(self):
        base = catalog_get("trail-3-revisit").chain()
        moved = base.with_grid(6).translated(2, 1)
        base_report = base.visit_report()
        moved_report = moved.visit_report()
        for x, y in grid_nodes(3):
            assert moved_report.count((x + 2, y + 1)) == base_report.count((x, y))

    @pytest.mark.parametrize(
        "entry_id", ["path-3", "trail-4-shortest", "circuit-4", "cycle-4"]
    )
    def test_dihedral_images_are_equivalent(self, entry_id):
        """Reflections and rotations of the window change nothing measurable."""
        entry = catalog_get(entry_id)
        n = entry.n
        m = F(n - 1)
        transforms = [
            lambda x, y: (y, x),
            lambda x, y: (m - x, y),
            lambda x, y: (y, m - x),
            lambda x, y: (m - x, m - y),
        ]
        base = entry.chain()
        base_report = base.visit_report()
        for t in transforms:
            image = chain(n, [t(x, y) for x, y in entry.coords])
            report = image.visit_report()
            assert report.total_length == base_report.total_length
            assert report.link_length == base_report.link_length
            assert sorted(report.counts.values()) == sorted(
                base_report.counts.values()
            )
            for (x, y), count in base_report.counts.items():
                tx, ty = t(x, y)
                assert report.count((int(tx), int(ty))) == count
