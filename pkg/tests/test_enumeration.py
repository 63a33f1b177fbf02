from itertools import permutations

import pytest

from geopoly.enumeration import (
    MAX_ENUM_N,
    barred_preferential_count,
    enumerate_oracle,
    iter_set_partitions,
    ordered_set_partitions_count,
    r_stirling_count,
    set_partitions_count,
)


def test_bell_numbers():
    assert [set_partitions_count(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_fubini_numbers():
    assert [ordered_set_partitions_count(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_block_count_profile():
    assert set_partitions_count(4, 2) == 7
    assert set_partitions_count(5, 1) == 1
    assert set_partitions_count(5, 5) == 1
    assert set_partitions_count(5, 6) == 0


def test_barred_hand_value():
    assert barred_preferential_count(2, 1) == 8
    assert barred_preferential_count(0, 3) == 1  # empty arrangement, bars only


def _barred_direct(n: int, s: int) -> int:
    """Fully explicit re-enumeration: every block sequence, every bar layout."""
    from itertools import combinations

    total = 0
    for part in iter_set_partitions(n):
        for _order in permutations(range(len(part))):
            total += sum(1 for _ in combinations(range(len(part) + s), s))
    return total


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("s", range(4))
def test_barred_matches_direct_enumeration(n, s):
    assert barred_preferential_count(n, s) == _barred_direct(n, s)


def test_r_stirling_counts():
    # {n k}_1 equals {n k}: separating a single element is vacuous
    for n in range(1, 6):
        for k in range(n + 1):
            assert r_stirling_count(n, k, 1) == set_partitions_count(n, k)
    # elements 0 and 1 must be split: {2 1}_2 = 0, {3 2}_2 = 2
    assert r_stirling_count(2, 1, 2) == 0
    assert r_stirling_count(3, 2, 2) == 2


def test_dispatcher():
    assert enumerate_oracle("set_partitions", 0) == 1
    assert enumerate_oracle("ordered_set_partitions", 3) == 13
    assert enumerate_oracle("barred_preferential", 2, 1) == 8
    assert enumerate_oracle("r_stirling_partitions", 3, 2, 1) == 3
    with pytest.raises(ValueError):
        enumerate_oracle("nope", 3)


def test_size_guard():
    with pytest.raises(ValueError):
        set_partitions_count(MAX_ENUM_N + 1)
    with pytest.raises(ValueError):
        ordered_set_partitions_count(11)
    with pytest.raises(ValueError):
        set_partitions_count(-1)
