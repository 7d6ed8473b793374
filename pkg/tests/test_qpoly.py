import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cylq.qpoly import (
    ONE,
    ZERO,
    IntPoly,
    NonUnitConstantTerm,
    NotDivisible,
    InfiniteWithoutTruncation,
    PochhammerSpec,
    mul_geometric,
    odd_poch,
    parse_poly,
    pochhammer,
    qbinom,
    qbinom_div,
    qbinom_primed,
    qq,
    series,
    series_inverse,
)


def P(text):
    return parse_poly(text)


class TestAddMul:
    def test_add_cancellation(self):
        assert P("1 + q") + P("1 - q") == IntPoly.const(2)

    def test_add_identity(self):
        p = P("1 + 3*q^2")
        assert ZERO + p == p

    def test_add_forced(self):
        assert P("1 + q + q^2") + IntPoly.monomial(-1, 2) == P("1 + q")

    def test_mul_expansion(self):
        assert P("1 - q") * P("1 - q^2") == P("1 - q - q^2 + q^3")

    def test_mul_identity(self):
        p = P("2 + q^4")
        assert p * ONE == p

    def test_mul_square(self):
        assert P("1 + q") * P("1 + q") == P("1 + 2*q + q^2")

    def test_degree_adds(self):
        p, r = P("1 + q^3"), P("q + q^5")
        assert (p * r).degree == p.degree + r.degree


class TestExactDiv:
    def test_telescoping(self):
        assert P("1 - q^2").exact_div(P("1 - q")) == P("1 + q")

    def test_self_division(self):
        p = P("3 - q + q^7")
        assert p.exact_div(p) == ONE

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            P("1 + q").exact_div(P("1 - q"))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(ZERO)


class TestPochhammer:
    def test_qq2(self):
        assert pochhammer(PochhammerSpec(1, 1, 1, 2)) == P("1 - q - q^2 + q^3")

    def test_empty_product(self):
        assert pochhammer(PochhammerSpec(3, -1, 2, 0)) == ONE

    def test_q_q2_1(self):
        # (q;q^2)_1 = 1 - q
        assert pochhammer(PochhammerSpec(1, 1, 2, 1)) == P("1 - q")

    def test_infinite_needs_truncation(self):
        with pytest.raises(InfiniteWithoutTruncation):
            pochhammer(PochhammerSpec(1, 1, 1, None))

    def test_infinite_truncated_euler(self):
        # (q;q)_inf mod q^10: pentagonal numbers 1,2,5,7 with signs
        s = pochhammer(PochhammerSpec(1, 1, 1, None), trunc=10)
        assert s == series(P("1 - q - q^2 + q^5 + q^7"), 10)

    def test_negative_base_sign(self):
        # (-q^2;q^2)_2 = (1+q^2)(1+q^4)
        assert pochhammer(PochhammerSpec(2, -1, 2, 2)) == P("1 + q^2 + q^4 + q^6")


class TestSeries:
    def test_inverse_geometric(self):
        assert series_inverse(P("1 - q"), 4) == series(P("1 + q + q^2 + q^3"), 4)

    def test_inverse_one(self):
        assert series_inverse(ONE, 7) == series(ONE, 7)

    def test_inverse_qq2(self):
        # 1/(q;q)_2 to order 4: partitions into parts <= 2
        inv = series_inverse(P("1 - q - q^2 + q^3"), 4)
        assert inv == series(P("1 + q + 2*q^2 + 2*q^3"), 4)
        assert (inv * qq(2)) == series(ONE, 4)

    def test_inverse_needs_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            series_inverse(P("2 + q"), 5)

    def test_order_mixing_takes_min(self):
        a = series(P("1 + q"), 10)
        b = series(P("1 + q^2"), 6)
        assert (a * b).order == 6

    def test_mul_geometric_matches_inverse(self):
        s = mul_geometric(series(ONE, 12), 3)
        assert s == series_inverse(P("1 - q^3"), 12)


class TestQBinom:
    def test_4_2(self):
        # partitions inside a 2x2 box: 1 + q + 2q^2 + q^3 + q^4
        assert qbinom(4, 2) == P("1 + 2*q^2 + q + q^3 + q^4")

    def test_b_zero(self):
        for n in range(6):
            assert qbinom(n, 0) == ONE

    def test_out_of_range(self):
        assert qbinom(2, 3) == ZERO
        assert qbinom(-1, 0) == ZERO
        assert qbinom(3, -1) == ZERO

    def test_primed(self):
        assert qbinom_primed(-1, 0) == ONE
        assert qbinom_primed(-2, 1) == ZERO
        assert qbinom_primed(4, 2) == qbinom(4, 2)

    @pytest.mark.parametrize("a", range(1, 31))
    def test_pascal_symmetry_degree_q1(self, a):
        for b in range(0, a + 1):
            p = qbinom(a, b)
            assert p == qbinom(a, a - b)
            assert p.degree == b * (a - b)
            if 1 <= b:
                assert p == qbinom(a - 1, b) + qbinom(a - 1, b - 1).shift(a - b)
            import math

            assert p.at_one() == math.comb(a, b)

    @pytest.mark.parametrize("a,b", [(5, 2), (8, 4), (11, 3), (12, 6)])
    def test_division_cross_check(self, a, b):
        assert qbinom(a, b) == qbinom_div(a, b)

    def test_box_counting_oracle(self):
        # brute force: partitions fitting in a b x (a-b) box
        def brute(a, b):
            w, h = a - b, b
            counts = {}

            def rec(row, mx, total):
                counts[total] = counts.get(total, 0) + 1
                if row == h:
                    return
                for v in range(1, mx + 1):
                    if total + v <= w * h:
                        rec(row + 1, v, total + v)

            rec(0, w, 0)
            return IntPoly(counts.items())

        for a, b in [(4, 2), (6, 3), (7, 2)]:
            assert qbinom(a, b) == brute(a, b)


@st.composite
def small_polys(draw, max_deg=6, max_coeff=5, nonzero=False):
    n = draw(st.integers(0 if not nonzero else 1, 4))
    terms = draw(
        st.lists(
            st.tuples(st.integers(0, max_deg), st.integers(-max_coeff, max_coeff)),
            min_size=n,
            max_size=6,
        )
    )
    p = IntPoly(terms)
    if nonzero and p.is_zero():
        p = p + ONE
    return p


class TestProperties:
    @given(small_polys(), small_polys(nonzero=True))
    @settings(max_examples=80)
    def test_exact_div_inverts_mul(self, p, d):
        assert (p * d).exact_div(d) == p

    @given(small_polys())
    @settings(max_examples=60)
    def test_series_inverse_round_trip(self, p):
        u = ONE + p.shift(1)  # force unit constant term
        inv = series_inverse(u, 12)
        assert inv * u == series(ONE, 12)

    @given(small_polys(), small_polys(), small_polys())
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)


class TestRendering:
    def test_zero(self):
        assert ZERO.render() == "0"

    def test_examples(self):
        assert P("1 + q").render() == "1 + q"
        assert qbinom(4, 2).render() == "1 + q + 2*q^2 + q^3 + q^4"
        assert (ZERO - P("q^2")).render() == "-q^2"
        assert P("1 - 3*q").render() == "1 - 3*q"

    def test_round_trip(self):
        for text in ["0", "1 + q", "-2 + q^3 - 7*q^9", "q"]:
            assert parse_poly(text).render() == parse_poly(parse_poly(text).render()).render()

    def test_at_one(self):
        assert qbinom(4, 2).at_one() == 6
        assert qq(2).at_one() == 0
        assert P("1 + q").at_one() == 2

    def test_odd_poch(self):
        assert odd_poch(1) == P("1 - q")
        assert odd_poch(2) == P("1 - q") * P("1 - q^3")
