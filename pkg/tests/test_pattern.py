from itertools import product

import pytest
from hypothesis import given, strategies as st

from strategies import patterns, same_dim_patterns, spatial_patterns
from xforms.errors import (
    BoundTooSmall,
    DimensionMismatch,
    EnumerationGuard,
    NotSpatial,
    PatternFormatError,
)
from xforms.pattern import (
    BasePattern,
    ObjectivePattern,
    SequenceInstance,
    and_intersect,
    dumps_pattern,
    enumerate_universe,
    is_spatial,
    iter_universe,
    loads_pattern,
    next_concat,
    not_bounded,
    not_spatial,
    or_union,
    universe_size,
)

P = ObjectivePattern.of


def brute_universe(dim, l_max):
    return {
        SequenceInstance(dim, codes)
        for k in range(1, l_max + 1)
        for codes in product(range(2 ** dim), repeat=k)
    }


class TestBasePattern:
    def test_bit_order_leftmost_is_first_component(self):
        b = BasePattern.parse("10")
        assert b.bits == (1, 0)
        assert b.code == 2
        assert str(b) == "10"

    def test_from_bits_and_unit(self):
        assert BasePattern.from_bits([0, 1, 1]) == BasePattern.parse("011")
        assert BasePattern.unit(3, 1) == BasePattern.parse("100")
        assert BasePattern.unit(3, 3) == BasePattern.parse("001")

    @pytest.mark.parametrize("text", ["", "012", "#", "ab"])
    def test_rejects_non_bitstrings(self, text):
        with pytest.raises(ValueError):
            BasePattern.parse(text)

    def test_code_range_checked(self):
        with pytest.raises(ValueError):
            BasePattern(2, 4)


class TestSequence:
    def test_parse_sequences(self):
        s = SequenceInstance.parse("0 1 0 0 1")
        assert len(s) == 5 and s.dim == 1
        s2 = SequenceInstance.parse("00 01 10 00")
        assert len(s2) == 4 and s2.dim == 2
        assert [str(b) for b in s2.steps] == ["00", "01", "10", "00"]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            SequenceInstance(1, ())

    def test_mixed_dims_rejected(self):
        with pytest.raises(DimensionMismatch):
            SequenceInstance.of("0", "01")


class TestOperators:
    def test_union_with_empty_keeps_simple_sequence(self):
        p = P(1, "0 1 0 0 1")
        assert or_union(p, ObjectivePattern(1)) == p

    def test_union_of_singletons(self):
        assert or_union(P(2, "00"), P(2, "01")) == P(2, "00", "01")

    @given(patterns(2))
    def test_union_idempotent(self, p):
        assert or_union(p, p) == p

    def test_intersection(self):
        assert and_intersect(P(2, "00", "01"), P(2, "01", "10")) == P(2, "01")
        assert and_intersect(P(1, "0 1"), P(1, "1 0")) == ObjectivePattern(1)

    @given(patterns(2))
    def test_intersection_idempotent(self, p):
        assert and_intersect(p, p) == p

    def test_dimension_mismatch(self):
        for op in (or_union, and_intersect, next_concat):
            with pytest.raises(DimensionMismatch):
                op(P(1, "0"), P(2, "00"))

    def test_not_spatial_examples(self):
        assert not_spatial(P(2, "00", "01", "10")) == P(2, "11")
        assert not_spatial(ObjectivePattern(1)) == P(1, "0", "1")
        p = P(2, "01")
        assert not_spatial(not_spatial(p)) == p

    def test_not_spatial_rejects_sequences(self):
        with pytest.raises(NotSpatial):
            not_spatial(P(1, "0 1"))

    def test_not_spatial_guard(self):
        big = ObjectivePattern(25)
        with pytest.raises(EnumerationGuard):
            not_spatial(big)
        with pytest.raises(EnumerationGuard):
            not_spatial(P(4, "0000"), cap=8)

    @given(spatial_patterns(3))
    def test_not_spatial_size(self, p):
        assert len(not_spatial(p)) == 8 - len(p)

    def test_not_bounded_agrees_with_not_spatial_at_length_one(self):
        assert not_bounded(P(1, "0"), 1) == P(1, "1")

    def test_not_bounded_length_two(self):
        # Oracle: enumerate every sequence of length <= 2 and subtract.
        expected = brute_universe(1, 2) - {SequenceInstance.parse("0"), SequenceInstance.parse("1")}
        got = not_bounded(P(1, "0", "1"), 2)
        assert got.instances == expected
        assert got == P(1, "0 0", "0 1", "1 0", "1 1")

    def test_not_bounded_of_empty_is_universe(self):
        got = not_bounded(ObjectivePattern(1), 2)
        assert got.instances == brute_universe(1, 2)
        assert len(got) == 6

    def test_not_bounded_bound_too_small(self):
        with pytest.raises(BoundTooSmall):
            not_bounded(P(1, "0 1 1"), 2)

    def test_not_bounded_guard(self):
        with pytest.raises(EnumerationGuard):
            not_bounded(ObjectivePattern(2), 3, cap=50)

    def test_next_examples(self):
        assert next_concat(P(1, "1"), P(1, "0")) == P(1, "1 0")
        assert next_concat(P(1, "0", "1"), P(1, "1")) == P(1, "0 1", "1 1")
        assert next_concat(P(2, "00 01"), P(2, "10 00")) == P(2, "00 01 10 00")

    def test_next_not_commutative(self):
        assert next_concat(P(1, "0"), P(1, "1")) != next_concat(P(1, "1"), P(1, "0"))

    @given(same_dim_patterns(2))
    def test_next_size_bound(self, ps):
        p1, p2 = ps
        out = next_concat(p1, p2)
        assert len(out) <= len(p1) * len(p2)
        if len(set(p1.lengths())) <= 1 or len(set(p2.lengths())) <= 1:
            assert len(out) == len(p1) * len(p2)

    def test_next_size_can_shrink_with_ambiguous_splits(self):
        # [0]+[0 0] and [0 0]+[0] both give [0 0 0].
        p = P(1, "0", "0 0")
        assert len(next_concat(p, p)) == 3

    def test_operator_sugar(self):
        a, b = P(1, "0"), P(1, "1")
        assert (a | b) == or_union(a, b)
        assert (a & b) == and_intersect(a, b)
        assert (a >> b) == next_concat(a, b)


class TestUniverse:
    @pytest.mark.parametrize(
        "dim,l_max,size",
        [(1, 1, 2), (1, 2, 6), (2, 2, 20), (2, 4, 340)],
    )
    def test_sizes(self, dim, l_max, size):
        u = enumerate_universe(dim, l_max)
        assert len(u) == size == universe_size(dim, l_max)
        assert u.instances == brute_universe(dim, l_max)

    def test_iter_universe_order(self):
        got = [s.to_text() for s in iter_universe(1, 2)]
        assert got == ["0", "1", "0 0", "0 1", "1 0", "1 1"]

    def test_guard(self):
        with pytest.raises(EnumerationGuard):
            enumerate_universe(2, 20)
        with pytest.raises(EnumerationGuard):
            enumerate_universe(30, 1)


class TestSpatial:
    def test_is_spatial(self):
        assert is_spatial(P(1, "0", "1"))
        assert not is_spatial(P(1, "0 1"))
        assert is_spatial(ObjectivePattern(3))

    def test_duplicates_collapse(self):
        p = ObjectivePattern(1, [SequenceInstance.parse("0"), SequenceInstance.parse("0")])
        assert len(p) == 1

    def test_instance_dim_checked(self):
        with pytest.raises(DimensionMismatch):
            ObjectivePattern(2, [SequenceInstance.parse("0")])

    def test_immutable(self):
        p = P(1, "0")
        with pytest.raises(AttributeError):
            p.dim = 3


class TestPatFormat:
    def test_round_trip(self):
        text = "N=2\n# comment\n01 10 00\n\n11   # trailing\n01 10 00\n"
        p = loads_pattern(text)
        assert p == P(2, "01 10 00", "11")
        assert dumps_pattern(p) == "N=2\n11\n01 10 00\n"
        assert loads_pattern(dumps_pattern(p)) == p

    def test_empty_pattern(self):
        assert loads_pattern("N=3\n") == ObjectivePattern(3)

    @pytest.mark.parametrize(
        "text",
        ["", "01\n", "N=x\n", "N=0\n", "N=2\n012\n", "N=2\n0\n", "M=2\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(PatternFormatError):
            loads_pattern(text)

    @given(patterns(3, max_len=4))
    def test_dumps_loads(self, p):
        assert loads_pattern(dumps_pattern(p)) == p

    def test_sorted_by_length_then_bits(self):
        p = P(1, "1 1", "0", "1", "0 1")
        assert [s.to_text() for s in p.sorted()] == ["0", "1", "0 1", "1 1"]


@given(st.integers(1, 3), st.integers(1, 3))
def test_universe_size_formula(dim, l_max):
    assert universe_size(dim, l_max) == len(brute_universe(dim, l_max))
