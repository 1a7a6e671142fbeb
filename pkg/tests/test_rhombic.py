"""Tests for limits, orderings, parallelograms, tiling and pictures."""

from fractions import Fraction

import pytest

from src.artubes import all_families, ar_sequences, build_tube, family_of
from src.errors import NotRegular
from src.grcompute import module_ipf
from src.measure import Measure, cmp_periodic, e_value
from src.models import Approach, ComponentClass, Ordering, TubeKind
from src.rhombic import (
    build_picture,
    chain_witness,
    coray_init_failures,
    descending,
    distinct_coray_pairs,
    distinguished_limits,
    family_wf,
    family_wf_star,
    gr_limit,
    parallelogram_check,
    rhombic_limit,
    rhombic_point,
    staircase_cmp,
    tiling_report,
    tube_discussion_checks,
    wf_cmp,
)
from src.strings import HomogeneousModule, make_string


def family(q, name):
    return next(f for f in all_families(q) if f.name == name)


class TestLimits:
    def test_limit_of_worked_example(self, ex1):
        limit = gr_limit(family_of(make_string(ex1, "c", 18)))
        assert limit.render() == "11(221)"
        assert e_value(limit) == Fraction(26, 31)

    @pytest.mark.parametrize(
        "label, dim, expected",
        [
            ("d", 13, "1121(221)"),
            ("c", 12, "1112(32)"),
        ],
    )
    def test_preinjective_limits(self, ex1, label, dim, expected):
        assert gr_limit(family_of(make_string(ex1, label, dim))).render() == expected

    def test_homogeneous_limit(self, ex1):
        assert gr_limit(family_of(HomogeneousModule(ex1, 1))).render() == "1121(5)"

    def test_approach(self, ex1):
        assert rhombic_limit(family(ex1, "bb_*")).approach is Approach.FROM_LEFT
        assert rhombic_limit(family(ex1, "aa_*")).approach is Approach.FROM_RIGHT
        assert rhombic_limit(family(ex1, "ce_*")).approach is Approach.FROM_BELOW

    @pytest.mark.parametrize("fixture", ["ex1", "ex2", "alternating"])
    def test_approach_agrees_with_component(self, request, fixture):
        q = request.getfixturevalue(fixture)
        expected = {
            ComponentClass.PREPROJECTIVE: Approach.FROM_LEFT,
            ComponentClass.PREINJECTIVE: Approach.FROM_RIGHT,
        }
        for f in all_families(q):
            assert rhombic_limit(f).approach is expected.get(f.component, Approach.FROM_BELOW), f.name

    def test_point(self, ex1):
        point = rhombic_point(make_string(ex1, "b", 1))
        assert point.mu == Measure.of(1)
        assert point.x == Fraction(1, 2)


class TestDistinguishedLimits:
    def test_example_one(self, ex1):
        limits = distinguished_limits(ex1)
        assert limits.takeoff.render() == "11(221)"
        assert limits.homogeneous.render() == "1121(5)"
        assert limits.landing.render() == "111(221)"

    def test_axis_order(self, ex1):
        limits = distinguished_limits(ex1)
        assert cmp_periodic(limits.takeoff, limits.homogeneous) is Ordering.LESS
        for value in limits.preinjective_limits:
            assert cmp_periodic(limits.homogeneous, value) is Ordering.LESS
            assert cmp_periodic(value, limits.landing) is not Ordering.GREATER
        for lower, upper in zip(limits.axis, limits.axis[1:]):
            assert cmp_periodic(lower, upper) is Ordering.LESS

    def test_intermediate_limits(self, ex1):
        rendered = {value.render() for value in distinguished_limits(ex1).preinjective_limits}
        assert {"11212(32)", "1121(221)", "1112(32)"} <= rendered

    def test_every_preprojective_family_takes_off_together(self, ex2):
        limits = distinguished_limits(ex2)
        for f in all_families(ex2):
            if f.component is ComponentClass.PREPROJECTIVE:
                assert gr_limit(f) == limits.takeoff


class TestOrderings:
    def test_staircase_is_antisymmetric(self, ex2):
        families = build_tube(ex2, TubeKind.RIGHT, 12).families()
        for fa in families:
            for fb in families:
                if gr_limit(fa) != gr_limit(fb):
                    continue
                assert staircase_cmp(fa, fb, 12) is staircase_cmp(fb, fa, 12).reverse(), (fa.name, fb.name)

    def test_staircase_chain(self, ex2):
        cd, cc, cb = (family(ex2, name) for name in ("cd_*", "cc_*", "cb_*"))
        assert staircase_cmp(cd, cc) is Ordering.LESS
        assert staircase_cmp(cc, cb) is Ordering.LESS

    def test_staircase_incomparable(self, ex2):
        assert staircase_cmp(family(ex2, "bc_*"), family(ex2, "bd_*")) is Ordering.INCOMPARABLE

    def test_staircase_is_reflexive(self, ex2):
        cc = family(ex2, "cc_*")
        assert staircase_cmp(cc, cc) is Ordering.EQUAL

    def test_staircase_depth(self, ex2):
        with pytest.raises(ValueError, match="at least 5"):
            staircase_cmp(family(ex2, "cc_*"), family(ex2, "cb_*"), depth=4)

    def test_waist_free_chain(self, ex2):
        cd, cc, cb = (family(ex2, name) for name in ("cd_*", "cc_*", "cb_*"))
        assert family_wf_star(cd) == Measure.of(1, 1, 1, 3)
        assert family_wf_star(cc) == Measure.of(1, 1, 1, 2)
        assert family_wf_star(cb) == Measure.of(1, 1, 1, 1)
        assert wf_cmp(cd, cc) is Ordering.LESS
        assert wf_cmp(cc, cb) is Ordering.LESS

    def test_waist_free_needs_regular_families(self, ex1):
        with pytest.raises(NotRegular):
            wf_cmp(family(ex1, "bb_*"), family(ex1, "ce_*"))

    def test_waist_free_needs_one_tube(self, ex1):
        with pytest.raises(NotRegular, match="different tubes"):
            wf_cmp(family(ex1, "ce_*"), family(ex1, "bd_*"))


class TestParallelogram:
    def test_mesh_in_right_tube(self, ex1):
        tube = build_tube(ex1, TubeKind.RIGHT, 9)
        seq = next(s for s in ar_sequences(tube) if s.describe() == "0->cc_6->ce_8+dc_5->de_7->0")
        report = parallelogram_check(seq)
        assert report.parallel_sides
        assert report.nondegenerate_wf

    @pytest.mark.parametrize("kind", [TubeKind.LEFT, TubeKind.RIGHT])
    def test_all_meshes_of_example_one(self, ex1, kind):
        tube = build_tube(ex1, kind, 8)
        for seq in ar_sequences(tube, 8):
            if seq.b2 is not None:
                assert parallelogram_check(seq).parallel_sides, seq.describe()

    def test_homogeneous_meshes_are_degenerate(self, ex1):
        tube = build_tube(ex1, TubeKind.HOMOGENEOUS, 5)
        for seq in ar_sequences(tube):
            if seq.b2 is None:
                continue
            report = parallelogram_check(seq)
            assert report.parallel_sides
            assert report.degenerate

    def test_single_middle_term(self, ex1):
        tube = build_tube(ex1, TubeKind.RIGHT, 3)
        with pytest.raises(ValueError, match="single middle term"):
            parallelogram_check(ar_sequences(tube, 1)[0])


class TestTiling:
    @pytest.mark.parametrize("kind", [TubeKind.LEFT, TubeKind.RIGHT])
    def test_example_one_is_tiled(self, ex1, kind):
        report = tiling_report(build_tube(ex1, kind, 9))
        assert report.applicable
        assert report.tiled
        assert report.extrema is not None

    def test_example_two_right_tube(self, ex2):
        report = tiling_report(build_tube(ex2, TubeKind.RIGHT, 9), require_unique_extrema=False)
        assert report.tiled
        assert report.extrema is None
        assert len(report.wf_order) == 9

    def test_descending_reverses_wf_order(self, ex1):
        report = tiling_report(build_tube(ex1, TubeKind.RIGHT, 9))
        assert descending(report.wf_order, family_wf) == report.wf_order[::-1]

    def test_cycles_follow_descending_waist_free_parts(self, ex1):
        report = tiling_report(build_tube(ex1, TubeKind.RIGHT, 9))
        corays = {tuple(f.name for f in descending(cycle, family_wf)) for cycle in report.coray_orders}
        rays = {tuple(f.name for f in descending(cycle, family_wf_star)) for cycle in report.ray_orders}
        assert corays == {("ab_*", "db_*", "cb_*"), ("ac_*", "dc_*", "cc_*"), ("ae_*", "de_*", "ce_*")}
        assert rays == {("ae_*", "ab_*", "ac_*"), ("ce_*", "cb_*", "cc_*"), ("de_*", "db_*", "dc_*")}

    def test_wf_order_is_ascending(self, ex1):
        report = tiling_report(build_tube(ex1, TubeKind.RIGHT, 9))
        keys = [family_wf(f) for f in report.wf_order]
        assert keys == sorted(keys)

    def test_homogeneous_tube_rejected(self, ex1):
        with pytest.raises(ValueError, match="exceptional"):
            tiling_report(build_tube(ex1, TubeKind.HOMOGENEOUS, 3))


class TestChains:
    @pytest.mark.parametrize(
        "component, starred, ascending",
        [
            (ComponentClass.PREPROJECTIVE, False, True),
            (ComponentClass.PREPROJECTIVE, True, True),
            (ComponentClass.PREINJECTIVE, False, False),
            (ComponentClass.PREINJECTIVE, True, False),
            (ComponentClass.REGULAR_RIGHT, False, True),
            (ComponentClass.REGULAR_RIGHT, True, False),
        ],
    )
    def test_directions(self, ex1, component, starred, ascending):
        witness = chain_witness(ex1, component, starred, 4)
        assert witness.ascending is ascending
        assert len(witness.measures) == 4
        assert len(set(witness.measures)) == 4

    def test_length(self, ex1):
        with pytest.raises(ValueError, match="at least 2"):
            chain_witness(ex1, ComponentClass.PREPROJECTIVE, False, 1)


class TestPicture:
    def test_axis_ticks_of_example_one(self, ex1):
        picture = build_picture(ex1)
        ticks = {value.render() for value in picture.mu_ticks}
        assert {"11(221)", "1121(5)", "111(221)", "1112(32)", "1121(221)", "11212(32)"} <= ticks

    def test_ticks_are_sorted(self, ex1):
        picture = build_picture(ex1)
        for lower, upper in zip(picture.mu_ticks, picture.mu_ticks[1:]):
            assert cmp_periodic(lower, upper) is Ordering.LESS

    def test_markers_cover_every_family_once(self, ex1):
        picture = build_picture(ex1)
        names = [name for marker in picture.markers for name in marker.families]
        assert sorted(names) == sorted(f.name for f in all_families(ex1))

    def test_four_markers_for_nine_families(self, ex2):
        markers = [m for m in build_picture(ex2).markers if m.component is ComponentClass.REGULAR_RIGHT]
        assert len(markers) == 4
        assert sum(len(m.families) for m in markers) == 9

    def test_regular_markers_of_example_two(self, ex2):
        markers = {m.families for m in build_picture(ex2).markers if m.component is ComponentClass.REGULAR_RIGHT}
        assert markers == {("ab_*",), ("ac_*", "ad_*"), ("cb_*", "db_*"), ("cc_*", "cd_*", "dc_*", "dd_*")}

    @pytest.mark.parametrize("fixture", ["ex1", "ex2"])
    def test_markers_keep_components_apart(self, request, fixture):
        q = request.getfixturevalue(fixture)
        components = {f.name: f.component for f in all_families(q)}
        for marker in build_picture(q).markers:
            assert {components[name] for name in marker.families} == {marker.component}

    def test_points(self, ex1):
        picture = build_picture(ex1, families=[family(ex1, "ce_*")], max_dim=10)
        assert [p.name for p in picture.points] == ["ce_3", "ce_8"]
        assert len(picture.markers) == 1

    def test_homogeneous_points(self, ex1):
        picture = build_picture(ex1, families=[family(ex1, "H")], max_dim=12)
        assert [p.name for p in picture.points] == ["H[1]", "H[2]"]


class TestTubeDiscussion:
    def test_example_one(self, ex1):
        assert tube_discussion_checks(ex1, 25) == []

    def test_symmetric(self, alternating):
        assert tube_discussion_checks(alternating, 20) == []

    def test_example_two(self, ex2):
        assert tube_discussion_checks(ex2, 30) == []

    def test_rank_one_tube_has_no_distinct_neighbours(self, ex2):
        assert distinct_coray_pairs(build_tube(ex2, TubeKind.LEFT, 30), 30) == []

    def test_rotated_families_are_skipped(self, alternating):
        assert distinct_coray_pairs(build_tube(alternating, TubeKind.LEFT, 20), 20) == []

    def test_neighbours_below_takeoff(self, ex2):
        pairs = {(a.name, b.name): (a, b) for a, b in distinct_coray_pairs(build_tube(ex2, TubeKind.RIGHT, 24), 24)}
        lower, upper = pairs[("db_15", "cb_16")]
        a, b = module_ipf(lower), module_ipf(upper)
        assert a.init == b.init == Measure.of(1, 1, 1)
        assert (a.fin, b.fin) == (Measure.of(2, 2), Measure.of(2, 3))
        assert gr_limit(family_of(lower)) == distinguished_limits(ex2).takeoff

    def test_neighbours_above_takeoff(self, ex1):
        takeoff = distinguished_limits(ex1).takeoff
        for lower, upper in distinct_coray_pairs(build_tube(ex1, TubeKind.LEFT, 25), 25):
            a, b = module_ipf(lower), module_ipf(upper)
            assert cmp_periodic(a.init, takeoff) is Ordering.GREATER
            assert a.fin == b.fin
            assert a.init.total != b.init.total

    def test_coray_initial_parts(self, ex1):
        assert coray_init_failures(ex1, 25) == []
