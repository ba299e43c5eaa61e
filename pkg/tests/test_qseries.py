from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from virrep.partitions import partitions_of
from virrep.qseries import (
    OffsetMismatchError,
    QSeries,
    euler_product,
    partition_generating,
    theta_series,
)

small_series = st.builds(
    lambda coeffs, off: QSeries(F(off), [F(c) for c in coeffs]),
    st.lists(st.integers(-5, 5), min_size=5, max_size=5),
    st.integers(-3, 3),
)


def test_mul_basic():
    one_plus_t = QSeries(0, [1, 1, 0])
    one_minus_t = QSeries(0, [1, -1, 0])
    assert one_plus_t * one_minus_t == QSeries(0, [1, 0, -1])


def test_mul_adds_offsets():
    a = QSeries(F(1, 2), [1])
    assert a * a == QSeries(1, [1])


def test_p_times_euler_product_is_one():
    p = partition_generating(10)
    assert p * euler_product(10) == QSeries.one(10)


def test_partition_generating_small():
    assert partition_generating(5) == QSeries(0, [1, 1, 2, 3, 5, 7])


def test_partition_generating_coefficients_vs_enumeration():
    # independent oracle: count partitions directly
    p = partition_generating(12)
    for n in range(13):
        assert p.coefficient(n) == len(partitions_of(n))


def test_theta_series():
    assert theta_series(4) == QSeries(0, [1, 2, 0, 0, 2])
    assert theta_series(0) == QSeries(0, [1])
    t = theta_series(10)
    assert [t.coefficient(n) for n in range(11)] == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]


def test_invert_geometric():
    one_minus_t = QSeries(0, [1, -1, 0, 0])
    assert one_minus_t.invert_unit() == QSeries(0, [1, 1, 1, 1])


def test_invert_one():
    assert QSeries.one(4).invert_unit() == QSeries.one(4)


def test_invert_euler_product_matches_partition_series():
    assert euler_product(6).invert_unit() == partition_generating(6)


def test_invert_requires_unit():
    with pytest.raises(ZeroDivisionError):
        QSeries(0, [0, 1]).invert_unit()


def test_invert_negates_offset():
    a = QSeries(F(1, 3), [2, 1])
    inv = a.invert_unit()
    assert inv.offset == F(-1, 3)
    assert a * inv == QSeries.one(1)


def test_add_aligns_integer_offsets():
    a = QSeries(F(1, 2), [1, 1, 1])
    b = QSeries(F(5, 2), [1, 1, 1])
    total = a + b
    assert total.offset == F(1, 2)
    assert total.coeffs == (F(1), F(1), F(2))  # window capped by b's validity


def test_add_rejects_non_integer_offset_gap():
    a = QSeries(F(1, 2), [1, 1])
    b = QSeries(0, [1, 1])
    with pytest.raises(OffsetMismatchError):
        a + b


def test_truncation_order_propagates_as_minimum():
    a = QSeries(0, [1] * 6)
    b = QSeries(0, [1] * 3)
    assert (a * b).order == 2
    assert (a + b).order == 2


@given(small_series, small_series, small_series)
def test_ring_axioms_through_common_order(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    # distributivity needs matching offsets for the additions
    b0 = QSeries(a.offset, b.coeffs)
    c0 = QSeries(a.offset, c.coeffs)
    lhs = a * (b0 + c0)
    rhs = a * b0 + a * c0
    assert lhs == rhs


@given(small_series)
def test_unit_times_inverse_is_one(a):
    if a.coeffs[0] == 0:
        return
    product = a * a.invert_unit()
    assert product == QSeries.one(a.order)


def test_coefficient_outside_window_rejected():
    a = QSeries(0, [1, 2])
    with pytest.raises(IndexError):
        a.coefficient(2)


def test_agrees_through():
    # b's coefficients below its own offset count as genuine zeros
    a = QSeries(0, [0, 2, 3])
    b = QSeries(1, [2, 3, 4])
    assert a.agrees_through(b)
    c = QSeries(0, [1, 2, 3])
    assert not c.agrees_through(b)


def test_leading():
    assert QSeries(F(1, 2), [0, 0, 3, 1]).leading() == (F(5, 2), F(3))
    assert QSeries.zero(3).leading() is None


def test_json_round_trip():
    a = QSeries(F(-1, 3), [F(1, 2), 0, F(7)])
    assert QSeries.from_json(a.to_json()) == a
    assert a.to_json() == {"offset": "-1/3", "order": 2, "coeffs": ["1/2", "0", "7"]}
