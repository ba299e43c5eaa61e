from fractions import Fraction as F

import pytest

from virrep.discrete import (
    classify_central_charge,
    discrete_c,
    discrete_h,
    discrete_membership,
    enumerate_discrete_pairs,
    is_allowed_pair,
)
from virrep.verma import VermaParams, unitarity_scan


def brute_force_membership(c):
    """Scan m upward until (m+2)(m+3) overshoots 6/(1-c)."""
    c = F(c)
    if c >= 1:
        return None
    target = 6 / (1 - c)
    m = 1
    while (m + 2) * (m + 3) <= target:
        if (m + 2) * (m + 3) == target:
            return m
        m += 1
    return None


def test_discrete_c_values():
    assert discrete_c(1) == F(1, 2)
    assert discrete_c(2) == F(7, 10)
    assert discrete_c(10) == F(25, 26)


def test_discrete_c_monotone_below_one():
    values = [discrete_c(m) for m in range(1, 40)]
    assert all(a < b < 1 for a, b in zip(values, values[1:]))


def test_discrete_c_rejects_m_below_one():
    with pytest.raises(ValueError):
        discrete_c(0)


def test_discrete_h_m1_values():
    assert discrete_h(1, 1, 1) == 0
    assert discrete_h(1, 2, 1) == F(1, 2)
    assert discrete_h(1, 2, 2) == F(1, 16)


def test_discrete_h_range_checks():
    with pytest.raises(ValueError):
        discrete_h(1, 3, 1)  # p > m+1
    with pytest.raises(ValueError):
        discrete_h(1, 1, 2)  # q > p
    with pytest.raises(ValueError):
        discrete_h(1, 1, 0)
    with pytest.raises(ValueError):
        discrete_h(0, 1, 1)


def test_enumerate_m1():
    pairs = enumerate_discrete_pairs(1)
    assert len(pairs) == 3
    assert {p.h for p in pairs} == {F(0), F(1, 2), F(1, 16)}
    assert all(p.c == F(1, 2) for p in pairs)


def test_enumerate_counts_and_order():
    for m in range(1, 7):
        pairs = enumerate_discrete_pairs(m)
        assert len(pairs) == (m + 1) * (m + 2) // 2
        assert [(p.p, p.q) for p in pairs] == sorted((p.p, p.q) for p in pairs)
        assert all(p.h >= 0 for p in pairs)


def test_membership_exact_solution_matches_brute_force():
    candidates = [discrete_c(m) for m in range(1, 30)]
    candidates += [F(1, 2), F(0), F(99, 100), F(7, 10) + F(1, 1000), F(4, 5), F(67, 72)]
    for c in candidates:
        assert discrete_membership(c) == brute_force_membership(c)


def test_classify_c_three_halves():
    report = classify_central_charge(F(3, 2))
    assert report.in_D_plus_1
    assert report.witness_m_plus_1 == 1
    assert report.infdim_applicable
    assert report.cmax_applicable
    assert report.h_threshold == F(1, 48)
    assert not report.in_D
    assert report.allowed


def test_classify_c_one():
    report = classify_central_charge(F(1))
    assert report.allowed
    assert not report.infdim_applicable
    assert not report.in_D
    assert not report.in_geq2


def test_classify_c_26():
    report = classify_central_charge(F(26))
    assert report.infdim_applicable
    assert not report.cmax_applicable
    assert report.in_geq2


def test_classify_flag_consistency():
    samples = [F(1, 2), F(7, 10), F(3, 2), F(17, 10), F(1), F(2), F(25), F(26), F(0)]
    for c in samples:
        r = classify_central_charge(c)
        assert r.infdim_applicable == (r.in_D_plus_1 or r.in_geq2)
        assert r.cmax_applicable == (r.in_D_plus_1 or (r.in_geq2 and c <= 25))
        assert r.allowed == (r.in_D or c >= 1)
        assert r.h_threshold == (c - 1) / 24


def test_is_allowed_pair():
    assert is_allowed_pair(F(1, 2), F(1, 16))
    assert not is_allowed_pair(F(1, 2), F(1, 10))
    assert is_allowed_pair(F(2), F(7, 3))
    assert not is_allowed_pair(F(2), F(-1))
    assert is_allowed_pair(F(7, 10), F(1, 10))  # h_{3,3}(2)
    assert not is_allowed_pair(F(3, 4), F(0))  # 3/4 is not a discrete c


def test_discrete_pairs_pass_unitarity_scan():
    # cross-module positivity: every discrete pair must be consistent
    for m in (1, 2, 3):
        for pair in enumerate_discrete_pairs(m):
            report = unitarity_scan(VermaParams(pair.c, pair.h), 6)
            assert report.consistent, (pair.c, pair.h)


@pytest.mark.parametrize("c,h", [(F(1, 2), F(1, 10)), (F(7, 10), F(1, 5))])
def test_off_series_weights_fail_by_level_8(c, h):
    report = unitarity_scan(VermaParams(c, h), 8)
    assert not report.consistent
    assert report.first_failure_level <= 8


def test_regime_report_json():
    obj = classify_central_charge(F(3, 2)).to_json()
    assert obj["c"] == "3/2"
    assert obj["h_threshold"] == "1/48"
    assert obj["in_D_plus_1"] is True
    assert obj["flags_kind"] == "theorem-metadata"
