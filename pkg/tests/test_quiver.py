"""Tests for quiver parsing, hook systems and widest extrema."""

import itertools
import random

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given, settings

from src.errors import (
    BoundTooSmall,
    DuplicateLabel,
    EmptySequence,
    LabelCountMismatch,
    MalformedWord,
    OrientedCycle,
    UnknownLabel,
)
from src.measure import Measure
from src.models import Direction, Takeoff
from src.quiver import (
    cover_label,
    edge_direction,
    minimal_rotation,
    opposite_quiver,
    parse_quiver,
    random_quiver,
    widest_extrema_report,
)


class TestParseQuiver:
    def test_parses_word_and_labels(self, ex1):
        assert ex1.h == 5
        assert ex1.word == "><<><"
        assert ex1.labels == ("a", "b", "c", "d", "e")
        assert ex1.text == "><<><,a,b,c,d,e"

    def test_default_labels(self, alternating):
        assert alternating.labels == ("v0", "v1", "v2", "v3")

    def test_oriented_cycle(self):
        with pytest.raises(OrientedCycle):
            parse_quiver(">>>>")

    @pytest.mark.parametrize("text", [">", "", "><x", "<>-<"])
    def test_malformed_word(self, text):
        with pytest.raises(MalformedWord):
            parse_quiver(text)

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabel):
            parse_quiver("><<,a,a,b")

    def test_label_count(self):
        with pytest.raises(LabelCountMismatch, match="Expected 3 labels"):
            parse_quiver("><<,a,b")

    def test_error_codes_name_the_module(self):
        with pytest.raises(OrientedCycle) as info:
            parse_quiver("<<<")
        assert info.value.code == "quiver.OrientedCycle"


class TestArrows:
    def test_arrows(self, ex1):
        assert ex1.arrows() == [("a", "b"), ("c", "b"), ("d", "c"), ("d", "e"), ("a", "e")]

    def test_sinks_and_sources(self, ex1):
        assert ex1.sinks() == ["b", "e"]
        assert ex1.sources() == ["a", "d"]

    def test_edge_direction(self, ex1):
        assert edge_direction(ex1, "a", "b") is Direction.FORWARD
        assert edge_direction(ex1, "b", "a") is Direction.BACKWARD
        assert edge_direction(ex1, "e", "a") is Direction.BACKWARD

    def test_edge_direction_needs_neighbours(self, ex1):
        with pytest.raises(UnknownLabel):
            edge_direction(ex1, "a", "c")

    def test_unknown_label(self, ex1):
        with pytest.raises(UnknownLabel):
            ex1.index_of("z")

    def test_opposite_is_an_involution(self, ex1):
        op = opposite_quiver(ex1)
        assert op.word == "<>><>"
        assert op.sinks() == ex1.sources()
        assert opposite_quiver(op) == ex1


class TestHookSystem:
    def test_example_one(self, ex1):
        hooks = ex1.hooks
        assert hooks.L == Measure.of(3, 2)
        assert hooks.R == Measure.of(2, 2, 1)
        assert hooks.takeoff is Takeoff.RIGHT
        assert (hooks.s, hooks.t, hooks.h) == (2, 3, 5)
        assert not hooks.reflected

    def test_example_two_is_reflected(self, ex2):
        hooks = ex2.hooks
        assert hooks.L == Measure.of(4)
        assert hooks.R == Measure.of(2, 1, 1)
        assert hooks.reflected

    def test_reflected_cover_order(self, ex2):
        assert [cover_label(ex2, i) for i in range(4)] == ["a", "b", "c", "d"]

    def test_symmetric(self, alternating):
        assert alternating.hooks.L == alternating.hooks.R == Measure.of(2, 2)
        assert alternating.hooks.takeoff is Takeoff.SYMMETRIC

    def test_periods_are_distinct(self, alternating):
        assert alternating.hooks.periods() == [Measure.of(2, 2), Measure.of(4)]

    @pytest.mark.parametrize("text", ["><<><", ">>><", "><><", "<<>>>", "><>>><<"])
    def test_lengths_add_up(self, text):
        hooks = parse_quiver(text).hooks
        assert hooks.L.total == hooks.R.total == len(text)
        assert hooks.L <= hooks.R


class TestMinimalRotation:
    def test_rotation_and_shift(self):
        assert minimal_rotation((2, 1, 2)) == ((2, 2, 1), 2, True)

    def test_imprimitive(self):
        assert minimal_rotation((1, 1)) == ((1, 1), 0, False)

    def test_empty(self):
        with pytest.raises(EmptySequence):
            minimal_rotation(())

    @pytest.mark.parametrize("length", range(1, 13))
    def test_rotation_is_f_minimal(self, length):
        for seq in itertools.product((1, 2), repeat=length):
            rotated, shift, _ = minimal_rotation(seq)
            rotations = [seq[k:] + seq[:k] for k in range(length)]
            assert all(not Measure(r) < Measure(rotated) for r in rotations)
            assert rotations.index(rotated) == shift

    @given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=8))
    @settings(max_examples=500, deadline=None)
    def test_tails_of_primitive_rotation_are_larger(self, seq):
        rotated, _, primitive = minimal_rotation(seq)
        assume(primitive)
        for k in range(1, len(rotated)):
            assert Measure(rotated) < Measure(rotated[k:])


class TestWidestExtrema:
    def test_example_one_has_unique_valley_and_hill(self, ex1):
        report = widest_extrema_report(ex1, 20)
        assert report.unique_valley
        assert report.unique_hill

    def test_width_tables(self, ex1):
        report = widest_extrema_report(ex1, 20)
        assert report.width_table == {"b": 3, "e": 2}
        assert report.hill_width_table == {"a": 2, "d": 3}
        assert not report.syntactic_unique

    def test_bound_below_three_h(self, ex1):
        with pytest.raises(BoundTooSmall):
            widest_extrema_report(ex1, 14)

    def test_alternating_has_no_unique_valley(self, alternating):
        report = widest_extrema_report(alternating, 16)
        assert report.unique_valley is False


class TestRandomQuiver:
    def test_deterministic_and_valid(self):
        first = [random_quiver(random.Random(7), 7).text for _ in range(3)]
        second = [random_quiver(random.Random(7), 7).text for _ in range(3)]
        assert first == second

    def test_vertex_range(self):
        rng = random.Random(3)
        for _ in range(50):
            q = random_quiver(rng, 6)
            assert 3 <= q.h <= 6
            assert q.sinks() and q.sources()
