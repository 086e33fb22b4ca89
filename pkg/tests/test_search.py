"""The exhaustive restricted-model search on tiny grids."""

from fractions import Fraction as F

import pytest

from gridlink import (
    DomainError,
    ImpossibleRequestError,
    Kind,
    UnimplementedPatternError,
    catalog_get,
    classify,
    find_trail_not_path,
    pt,
    refute_links,
    run_search,
    search_min_trail,
)
from gridlink.exact import Scalar
from gridlink.search import MODEL_LABEL, RestrictedModel


def tiny_model():
    # built fresh (not .shared) so tests cannot leak state into each other
    return RestrictedModel(2, padding=0)


class TestModel:
    def test_guards(self):
        with pytest.raises(DomainError):
            RestrictedModel(0)
        with pytest.raises(DomainError):
            RestrictedModel(5)
        with pytest.raises(DomainError):
            RestrictedModel(2, padding=-1)

    def test_unpadded_2_grid_structure(self):
        model = tiny_model()
        # two horizontals, two verticals, two diagonals
        assert len(model.lines) == 6
        assert model.class_sizes == [2] * 6
        assert model.max_class == 2
        assert model.full_mask == 0b1111

    def test_position_distinguishes_hits_from_gaps(self):
        model = tiny_model()
        i = next(
            k
            for k, line in enumerate(model.lines)
            if line.contains(pt(0, 0)) and line.contains(pt(1, 0))
        )
        at_node = model.position(i, model.node_params[i][0][0])
        assert at_node[1] == at_node[0] + 1
        t0 = model.node_params[i][0][0]
        t1 = model.node_params[i][1][0]
        between = model.position(i, (t0 + t1) / 2)
        assert between[0] == between[1]

    def test_between_mask_matches_brute_force(self):
        """Prefix-mask arithmetic agrees with direct enumeration everywhere."""
        model = RestrictedModel(2, padding=1)
        probes = [Scalar(F(-3, 2)), Scalar(F(1, 3)), Scalar(F(2, 3)), Scalar(3)]
        for i, entries in enumerate(model.node_params):
            params = [t for t, _, _ in entries] + probes
            for t_a in params:
                for t_b in params:
                    lo, hi = min(t_a, t_b), max(t_a, t_b)
                    expected = 0
                    for t, bit, _ in entries:
                        if lo <= t <= hi:
                            expected |= bit
                    assert model.between_mask(i, t_a, t_b) == expected

    def test_junction_is_symmetric(self):
        model = tiny_model()
        i, j = 0, 3
        got_ij = model.junction(i, j)
        got_ji = model.junction(j, i)
        if got_ij is None:
            assert got_ji is None
        else:
            p, pos_i, pos_j = got_ij
            q, pos_j2, pos_i2 = got_ji
            assert p == q
            assert (pos_i, pos_j) == (pos_i2, pos_j2)

    def test_parallel_lines_have_no_junction(self):
        model = tiny_model()
        horizontals = [
            k
            for k, line in enumerate(model.lines)
            if line.contains(pt(0, 0))
            and line.contains(pt(1, 0))
            or line.contains(pt(0, 1))
            and line.contains(pt(1, 1))
        ]
        assert len(horizontals) == 2
        assert model.junction(*horizontals) is None

    def test_shared_instances_are_reused(self):
        assert RestrictedModel.shared(2, 1) is RestrictedModel.shared(2, 1)

    def test_search_order_ranks_by_class_size(self):
        model = RestrictedModel(2, padding=1)
        order = model.search_order()
        sizes = [model.class_sizes[i] for i in order]
        assert sizes == sorted(sizes, reverse=True)

    def test_seeded_order_permutes_only_within_rank_blocks(self):
        model = RestrictedModel(2, padding=1)
        plain = model.search_order()
        seeded = model.search_order(seed=5)
        assert sorted(plain) == sorted(seeded)
        assert [model.class_sizes[i] for i in plain] == [
            model.class_sizes[i] for i in seeded
        ]
        assert model.search_order(seed=5) == seeded


class TestRunSearch:
    def test_finds_the_3_link_minimum_on_the_2_grid(self):
        out = run_search(2, 3, padding=1)
        assert out.result is not None
        assert out.result.links == 3
        assert out.refuted == (1, 2)
        assert out.label == MODEL_LABEL
        assert out.result.classification.is_covering_trail

    def test_deterministic_without_a_seed(self):
        a = run_search(2, 3, padding=1)
        b = run_search(2, 3, padding=1)
        assert a.result.chain == b.result.chain
        assert a.explored == b.explored == 379

    def test_exhaustive_refutation_below_the_minimum(self):
        out = run_search(2, 2, padding=1)
        assert out.result is None
        assert out.refuted == (1, 2)

    def test_seed_changes_the_witness_not_the_answer(self):
        out = run_search(2, 3, padding=1, seed=11)
        assert out.result is not None
        assert out.result.links == 3

    def test_single_node_grid_is_covered_by_one_link(self):
        result = search_min_trail(1, 1)
        assert result is not None
        assert result.links == 1
        assert [v.lattice() for v in result.chain.vertices] == [(0, 0), (1, 0)]

    def test_unpadded_single_node_model_has_no_lines(self):
        out = run_search(1, 1, padding=0)
        assert out.result is None
        assert out.refuted == (1,)

    def test_budget_exhaustion_raises_instead_of_guessing(self):
        with pytest.raises(UnimplementedPatternError):
            run_search(2, 3, padding=1, budget=50)

    def test_max_edges_guard(self):
        with pytest.raises(DomainError):
            run_search(2, 0)

    def test_size_guard_applies_to_searches_too(self):
        with pytest.raises(DomainError):
            run_search(5, 4)

    def test_predicate_filters_witnesses(self):
        out = run_search(
            2,
            3,
            padding=1,
            predicate=lambda cls: cls.report.count((0, 0)) >= 2,
        )
        assert out.result is not None
        assert out.result.classification.report.count((0, 0)) >= 2


class TestRefuteLinks:
    def test_refutes_two_links(self):
        assert refute_links(2, 2, padding=1) is True

    def test_cannot_refute_three(self):
        assert refute_links(2, 3, padding=1) is False

    def test_interrupted_refutation_proves_nothing(self):
        with pytest.raises(UnimplementedPatternError):
            refute_links(2, 2, padding=1, budget=5)


class TestTrailNotPath:
    def test_2_grid_witness(self):
        chain = find_trail_not_path(2)
        cls = classify(chain)
        assert cls.is_covering_trail
        assert not cls.is_covering_path
        assert cls.link_count == 3
        assert cls.report.count((0, 0)) == 2

    def test_3_grid_witness_is_the_catalog_trail(self):
        assert find_trail_not_path(3) == catalog_get("trail-3-revisit").chain()

    def test_single_node_grid_has_no_such_trail(self):
        with pytest.raises(ImpossibleRequestError):
            find_trail_not_path(1)

    @pytest.mark.parametrize("n", [0, 4, 7])
    def test_out_of_scope_sizes(self, n):
        with pytest.raises(DomainError):
            find_trail_not_path(n)
