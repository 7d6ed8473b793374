import pytest

from cylq.cylindric import (
    CylindricPartition,
    Profile,
    RowCountMismatch,
    UnsupportedProfile,
    borodin_product,
    cp_series,
    cp_series_weighted,
    dump_line,
    enumerate_partitions,
    is_valid,
    specialize_weighted,
)
from cylq.qpoly import IntPoly, mul_geometric, parse_poly, qq, series, series_inverse

TWO_ROW_PROFILES = [
    (1, 1), (2, 0), (2, 1), (3, 0), (4, 0), (3, 1), (2, 2), (5, 0), (4, 1), (3, 2),
]


def CP(*rows):
    return CylindricPartition(tuple(tuple(r) for r in rows))


class TestIsValid:
    def test_vacuous_single_column(self):
        assert is_valid(CP([1], [1]), Profile((2, 1)))

    def test_all_zero(self):
        for parts in TWO_ROW_PROFILES:
            assert is_valid(CP([0, 0], [0, 0]), Profile(parts))

    def test_profile_11_violation(self):
        # needs a_1 >= b_2 but a = (0,0), b = (1,1)
        assert not is_valid(CP([0, 0], [1, 1]), Profile((1, 1)))

    def test_row_count_mismatch(self):
        with pytest.raises(RowCountMismatch):
            is_valid(CP([1]), Profile((1, 1)))

    def test_non_decreasing_row_rejected(self):
        assert not is_valid(CP([1, 2], [0, 0]), Profile((2, 1)))


class TestEnumerate:
    def test_n0_only_empty(self):
        for parts in TWO_ROW_PROFILES:
            got = list(enumerate_partitions(Profile(parts), 0, 5))
            assert len(got) == 1 and got[0].size == 0

    def test_21_n1_size1(self):
        got = list(enumerate_partitions(Profile((2, 1)), 1, 1))
        assert [cp.rows for cp in got] == [((0,), (0,)), ((0,), (1,)), ((1,), (0,))]

    def test_11_n1_all_pairs(self):
        # no constraints at n=1: series is 1/(1-q)^2
        s = cp_series(Profile((1, 1)), 1, 3)
        assert s == series(parse_poly("1 + 2*q + 3*q^2"), 3)

    def test_everything_emitted_is_valid(self):
        for parts in [(2, 1), (2, 0), (3, 2)]:
            p = Profile(parts)
            for cp in enumerate_partitions(p, 3, 6):
                assert is_valid(cp, p)

    def test_rotation_counts(self):
        for parts in [(2, 1), (3, 0), (2, 0), (3, 2)]:
            a = sum(1 for _ in enumerate_partitions(Profile(parts), 3, 8))
            b = sum(1 for _ in enumerate_partitions(Profile(parts[::-1]), 3, 8))
            assert a == b

    def test_stabilization(self):
        p = Profile((2, 1))
        assert cp_series(p, 8, 8) == cp_series(p, 12, 8)

    def test_deterministic_lexicographic(self):
        got = [tuple(v for row in cp.rows for v in row)
               for cp in enumerate_partitions(Profile((1, 1)), 2, 3)]
        assert got == sorted(got)

    def test_dump_line(self):
        assert dump_line(CP([1, 0], [1, 1])) == "1 0 | 1 1"


class TestSeriesAgainstKnownValues:
    def test_cp21_n1(self):
        # (1+q)/((1-q)(1-q^2)) == 1/(1-q)^2
        expected = series_inverse(parse_poly("1 - 2*q + q^2"), 8)
        assert cp_series(Profile((2, 1)), 1, 8) == expected

    def test_cp30_n2(self):
        # (1+q^2)/(q;q)_4
        expected = series_inverse(qq(4), 10) * parse_poly("1 + q^2")
        assert cp_series(Profile((3, 0)), 2, 10) == expected

    def test_cp22_n2(self):
        expected = series_inverse(qq(4), 10) * parse_poly("1 + q + 2*q^2 + q^3 + q^4")
        assert cp_series(Profile((2, 2)), 2, 10) == expected

    def test_cp41_equals_cp31_small_n(self):
        for n in (1, 2, 3):
            assert cp_series(Profile((4, 1)), n, 12) == cp_series(Profile((3, 1)), n, 12)


class TestWeighted:
    def test_unsupported_profile(self):
        with pytest.raises(UnsupportedProfile):
            cp_series_weighted(Profile((2, 1)), 1, 4)

    def test_11_n1_product(self):
        # 1/((1-x1)(1-y1))
        from cylq.mvseries import MVSeries

        got = cp_series_weighted(Profile((1, 1)), 1, 4)
        expected = MVSeries.one(4).mul_geometric((("x1", 1),)).mul_geometric((("y1", 1),))
        assert got == expected

    def test_20_n1_product(self):
        # 1/((1-x1)(1-x1y1))
        from cylq.mvseries import MVSeries

        got = cp_series_weighted(Profile((2, 0)), 1, 4)
        expected = MVSeries.one(4).mul_geometric((("x1", 1),)).mul_geometric(
            (("x1", 1), ("y1", 1))
        )
        assert got == expected

    def test_specialization_consistency(self):
        for parts in [(1, 1), (2, 0)]:
            p = Profile(parts)
            for n in (1, 2, 3):
                w = cp_series_weighted(p, n, 8)
                assert specialize_weighted(w) == cp_series(p, n, 8)


class TestBorodin:
    def test_profile_11_exponents(self):
        from cylq.cylindric import borodin_exponents

        assert sorted(borodin_exponents(Profile((1, 1)))) == [1, 1, 3, 3, 4]

    def test_profile_21_product(self):
        # 1/((q;q)(q;q^5)(q^4;q^5)) as exponent multiset mod 5
        from cylq.cylindric import borodin_exponents

        assert sorted(borodin_exponents(Profile((2, 1)))) == [1, 1, 2, 3, 4, 4, 5]

    def test_profile_20_matches_euler_form(self):
        # (-q^2;q^2)_inf/(q;q)_inf
        from cylq.qpoly import PochhammerSpec, pochhammer, qq_inf

        d = 25
        lhs = borodin_product(Profile((2, 0)), d)
        neg = pochhammer(PochhammerSpec(2, -1, 2, None), d)
        rhs = neg * series_inverse(qq(d), d)
        assert lhs == rhs

    @pytest.mark.parametrize("parts", TWO_ROW_PROFILES)
    def test_borodin_agrees_with_enumeration(self, parts):
        d = 16
        p = Profile(parts)
        assert borodin_product(p, d) == cp_series(p, d, d)

    def test_three_row_borodin_against_enumeration(self):
        # general-k support is best effort; check a small 3-row profile
        p = Profile((1, 1, 0))
        d = 10
        assert borodin_product(p, d) == cp_series(p, d, d)
