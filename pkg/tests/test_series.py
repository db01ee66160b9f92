import json

import pytest

from qderiv.ring import QPoly
from qderiv.series import (
    CLASSICAL_MODE,
    Q_MODE,
    RING_INT,
    RING_Q,
    RING_XQ,
    Cos_q,
    DividedSeries,
    E_q,
    Sec_q,
    Sin_q,
    Tan_q,
    classical_sec,
    classical_sin,
    classical_tan,
    cos_q,
    e_q,
    one_series,
    q_secant2_number,
    q_secant_number,
    q_tangent_number,
    sec_q,
    sin_q,
    tan_product,
    tan_q,
    zero_series,
)


def P(*coeffs):
    return QPoly(coeffs)


class TestConstructors:
    def test_e_q_all_ones(self):
        assert all(c == P(1) for c in e_q(8).coeffs)

    def test_E_q_exponents(self):
        for n, c in enumerate(E_q(8).coeffs):
            assert c == QPoly.monomial(n * (n - 1) // 2)

    def test_sin_cos_support(self):
        s, c = sin_q(6), cos_q(6)
        assert [x.eval_at_one() for x in s.coeffs] == [0, 1, 0, -1, 0, 1, 0]
        assert [x.eval_at_one() for x in c.coeffs] == [1, 0, -1, 0, 1, 0, -1]

    def test_second_kind_exponents(self):
        # Sin/Cos carry the triangular exponents of the second exponential
        assert Sin_q(5).coefficient(3) == QPoly.monomial(3, -1)
        assert Cos_q(6).coefficient(4) == QPoly.monomial(6)

    def test_tangent_values(self):
        assert q_tangent_number(1) == P(1)
        assert q_tangent_number(3) == P(0, 1, 1)
        assert q_tangent_number(5) == P(0, 0, 1, 2, 3, 4, 3, 2, 1)

    def test_secant_values(self):
        assert q_secant_number(0) == P(1)
        assert q_secant_number(4) == P(0, 1, 2, 1, 1)
        assert q_secant2_number(2) == P(0, 1)
        assert q_secant2_number(4) == P(0, 0, 1, 1, 2, 1)
        assert q_secant2_number(0) == P(1)

    def test_parity_guards(self):
        with pytest.raises(ValueError):
            q_tangent_number(4)
        with pytest.raises(ValueError):
            q_secant_number(3)


class TestArithmetic:
    def test_sin_times_sec_is_tan(self):
        prod = sin_q(6).mul(sec_q(6))
        assert prod.coefficient(3) == P(0, 1, 1)
        assert prod == tan_q(6)

    def test_mul_identity(self):
        f = tan_q(7)
        assert f.mul(one_series(7)) == f

    def test_classical_product_coefficient(self):
        # Divided coefficient 3 of tan*sec with factorial weights:
        # sum_k C(3,k) T_k E_{3-k} = 3*1*1 + 1*2*1 = 5.
        prod = classical_tan(5).mul(classical_sec(5))
        assert prod.coefficient(3) == 5

    def test_invert(self):
        assert cos_q(8).invert() == sec_q(8)
        assert one_series(5).invert() == one_series(5)
        assert Cos_q(4).invert().coefficient(4) == P(0, 0, 1, 1, 2, 1)

    def test_invert_requires_unit(self):
        with pytest.raises(ValueError):
            sin_q(4).invert()

    def test_mode_mismatch(self):
        with pytest.raises(ValueError):
            tan_q(4).mul(classical_tan(4))

    def test_truncation_to_min_order(self):
        assert tan_q(8).mul(one_series(5)).order == 5


class TestOperators:
    def test_d_q_is_shift(self):
        assert tan_q(8).d_q().coefficient(0) == P(1)
        assert e_q(6).d_q() == e_q(5)

    def test_d_q_secant_identity(self):
        lhs = sec_q(9).d_q()
        rhs = sec_q(9).scale_arg(1).mul(tan_q(9))
        assert lhs == rhs.truncate(8)

    def test_d_q_guards(self):
        with pytest.raises(ValueError):
            one_series(0).d_q()
        with pytest.raises(ValueError):
            classical_tan(4).d_q()

    def test_scale_arg(self):
        scaled = e_q(6).scale_arg(1)
        assert all(c == QPoly.monomial(n) for n, c in enumerate(scaled.coeffs))
        assert tan_q(6).scale_arg(0) == tan_q(6)
        assert tan_q(5).scale_arg(1).coefficient(3) == P(0, 1, 1).shift(3)

    def test_scale_arg_guards(self):
        with pytest.raises(ValueError):
            classical_tan(4).scale_arg(1)
        with pytest.raises(ValueError):
            tan_q(4).scale_arg(-1)


class TestDerivativeIdentities:
    def test_derivative_identities_to_order_12(self):
        order = 12
        t, s, S = tan_q(order), sec_q(order), Sec_q(order)
        assert t.d_q() == one_series(order).add(t.mul(t.scale_arg(1))).truncate(order - 1)
        assert s.d_q() == s.scale_arg(1).mul(t).truncate(order - 1)
        assert S.d_q() == S.mul(t.scale_arg(1)).truncate(order - 1)

    def test_only_one_q_tangent(self):
        assert Tan_q(10) == tan_q(10)

    def test_reciprocity(self):
        for n in (1, 3, 5, 7, 9, 11):
            p = q_tangent_number(n)
            assert p.reverse(n * (n - 1) // 2) == p
        for n in (0, 2, 4, 6, 8, 10):
            assert q_secant_number(n).reverse(n * (n - 1) // 2) == q_secant2_number(n)


class TestClassicalMode:
    def test_tangent_numbers(self):
        t = classical_tan(9)
        assert [t.coefficient(n) for n in (1, 3, 5, 7, 9)] == [1, 2, 16, 272, 7936]

    def test_secant_numbers(self):
        s = classical_sec(10)
        assert [s.coefficient(n) for n in (0, 2, 4, 6, 8, 10)] == [1, 1, 5, 61, 1385, 50521]

    def test_classical_ring_guard(self):
        with pytest.raises(ValueError):
            DividedSeries(Q_MODE, RING_INT, (1, 1))


class TestTanProduct:
    def test_single_part_is_unit(self):
        assert tan_product((3,), 6) == one_series(6)

    def test_two_factor_products(self):
        expected = tan_q(6).mul(tan_q(6).scale_arg(1))
        assert tan_product((0, 1, 0), 6) == expected
        expected = tan_q(6).scale_arg(2).mul(tan_q(6).scale_arg(3))
        assert tan_product((2, 1, 0), 6) == expected

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            tan_product((), 5)


class TestPromotionAndJson:
    def test_promotions(self):
        s = classical_sin(4)
        q = s.promote(RING_Q)
        assert q.ring == RING_Q and q.coefficient(1) == P(1)
        xq = q.promote(RING_XQ)
        assert xq.ring == RING_XQ
        with pytest.raises(ValueError):
            xq.promote(RING_Q)

    def test_json_roundtrip_q(self):
        s = tan_q(5)
        data = json.loads(json.dumps(s.to_json()))
        assert DividedSeries.from_json(data) == s
        assert data["mode"] == "q" and data["ring"] == "q" and data["order"] == 5

    def test_json_roundtrip_classical(self):
        s = classical_sec(6)
        assert DividedSeries.from_json(json.loads(json.dumps(s.to_json()))) == s

    def test_json_roundtrip_xq(self):
        s = tan_q(4).promote(RING_XQ)
        assert DividedSeries.from_json(json.loads(json.dumps(s.to_json()))) == s

    def test_zero_series_shape(self):
        z = zero_series(3, CLASSICAL_MODE, RING_INT)
        assert z.coeffs == (0, 0, 0, 0)
