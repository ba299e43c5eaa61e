import pytest

from virrep.partitions import (
    as_partition,
    level,
    multiplicities,
    partition_count,
    partitions_of,
    symmetry_factor,
)


def brute_force_partitions(n, cap=None):
    """Independent enumeration: descending first parts, recurse on the rest."""
    if n == 0:
        return [()]
    cap = n if cap is None else cap
    out = []
    for first in range(min(n, cap), 0, -1):
        out.extend((first,) + rest for rest in brute_force_partitions(n - first, first))
    return out


def test_partitions_of_zero():
    assert partitions_of(0) == [()]


def test_partitions_of_four_in_reverse_lex_order():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_eight_count():
    assert len(partitions_of(8)) == 22


@pytest.mark.parametrize("n", range(0, 21))
def test_count_matches_enumeration(n):
    parts = partitions_of(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    assert parts == brute_force_partitions(n)


def test_partitions_are_weakly_decreasing_and_sum_to_n():
    for n in range(0, 15):
        for mu in partitions_of(n):
            assert level(mu) == n
            assert all(mu[i] >= mu[i + 1] >= 1 for i in range(len(mu) - 1))


def test_count_values():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(-2) == 0


def test_symmetry_factor():
    assert symmetry_factor(()) == 1
    # 2^1 * 1! * 1^2 * 2! = 4
    assert symmetry_factor((2, 1, 1)) == 4
    assert symmetry_factor((3,)) == 3
    assert symmetry_factor((2, 2, 1)) == 8


def test_multiplicities():
    assert multiplicities((3, 2, 2, 1)) == {3: 1, 2: 2, 1: 1}


def test_as_partition_validation():
    assert as_partition([2, 1, 1]) == (2, 1, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([0])
    with pytest.raises(ValueError):
        as_partition([-1])


def test_negative_input_rejected():
    with pytest.raises(ValueError):
        partitions_of(-1)
