"""Lattice collisions on the bridge line, by residue of the grid size."""

from math import gcd

import pytest

from gridlink import (
    DomainError,
    OracleViolation,
    collision_profile,
    divisibility_witness,
    predicted_hits,
)
from gridlink.geometry import Line, lattice_hits_on_line
from gridlink.spirals import bridge_line, missed_points


class TestPredictions:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (4, ((0, 1), (2, 2))),
            (7, ((1, 2), (4, 4))),
            (8, ((2, 2), (5, 4))),
            (9, ((0, 2), (2, 3), (4, 4), (6, 5), (8, 6))),
            (15, ((1, 3), (4, 5), (7, 7), (10, 9), (13, 11))),
        ],
    )
    def test_frozen_hit_lists(self, n, expected):
        assert predicted_hits(n) == expected

    @pytest.mark.parametrize("n", range(4, 121))
    def test_prediction_matches_exact_enumeration(self, n):
        """The residue formula agrees with brute-force incidence on the line."""
        assert predicted_hits(n) == tuple(lattice_hits_on_line(bridge_line(n), n))


class TestProfiles:
    def test_clean_profile(self):
        profile = collision_profile(7)
        assert profile.hits == ((1, 2), (4, 4))
        assert (profile.missed_lower, profile.missed_upper) == missed_points(7)
        assert profile.extras == ()
        assert profile.clean

    def test_crowded_profile(self):
        profile = collision_profile(9)
        assert profile.hits == ((0, 2), (2, 3), (4, 4), (6, 5), (8, 6))
        assert profile.extras == ((0, 2), (4, 4), (8, 6))
        assert not profile.clean

    @pytest.mark.parametrize("n", range(4, 121))
    def test_clean_exactly_off_the_bad_residue(self, n):
        """Extra lattice hits appear iff the size is 3 mod 6."""
        assert collision_profile(n).clean == (n % 6 != 3)

    @pytest.mark.parametrize("n", range(4, 61))
    def test_hits_all_lie_on_the_line(self, n):
        profile = collision_profile(n)
        assert isinstance(profile.line, Line)
        hits_on_line = set(lattice_hits_on_line(profile.line, n))
        assert set(profile.hits) <= hits_on_line

    @pytest.mark.parametrize("n", [3, 2, 0])
    def test_guard(self, n):
        with pytest.raises(DomainError):
            collision_profile(n)


class TestDivisibilityWitnesses:
    @pytest.mark.parametrize(
        "n,j,step,hit_xs",
        [(7, 2, 3, (1, 4)), (8, 2, 3, (2, 5)), (10, 3, 4, (2, 6))],
    )
    def test_frozen_witnesses(self, n, j, step, hit_xs):
        w = divisibility_witness(n)
        assert w.j == j
        assert w.step == step
        assert w.hit_xs == hit_xs
        assert w.slope_coprime

    def test_neighbours_fall_outside_the_window(self):
        w = divisibility_witness(8)
        assert w.prev_x == -1
        assert w.next_x == 8
        assert not 0 <= w.prev_x < 8
        assert not 0 <= w.next_x < 8

    @pytest.mark.parametrize("n", [n for n in range(4, 121) if n % 3])
    def test_spacing_and_coprimality_hold_generally(self, n):
        w = divisibility_witness(n)
        a, b = w.hit_xs
        assert b - a == w.step
        assert gcd(w.j, w.step) == 1
        assert w.slope_coprime
        assert w.prev_x == a - w.step
        assert w.next_x == b + w.step
        assert not 0 <= w.prev_x <= n - 1
        assert not 0 <= w.next_x <= n - 1

    @pytest.mark.parametrize("n", [6, 9, 12, 3, 0])
    def test_guard(self, n):
        with pytest.raises(DomainError):
            divisibility_witness(n)
