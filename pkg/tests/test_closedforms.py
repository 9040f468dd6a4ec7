import pytest

from miscover import (
    max_partition_product,
    max_with_ones,
    min_separating_sets,
    perrin,
)
from miscover.oracles import brute_max_partition_product


def test_max_partition_product_small_values():
    assert max_partition_product(1) == 1
    assert max_partition_product(2) == 2
    assert max_partition_product(5) == 6  # brute force over partitions of 5
    assert max_partition_product(10) == 36


def test_max_partition_product_rejects_zero():
    with pytest.raises(ValueError):
        max_partition_product(0)
    with pytest.raises(ValueError):
        max_partition_product(-3)


def test_max_partition_product_three_cases():
    assert max_partition_product(9) == 3**3
    assert max_partition_product(10) == 4 * 3**2
    assert max_partition_product(11) == 2 * 3**3


def test_strictly_increasing_to_200():
    values = [max_partition_product(n) for n in range(1, 202)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_super_multiplicative():
    for a in range(1, 120):
        for b in range(1, 121 - a):
            assert (
                max_partition_product(a) * max_partition_product(b)
                <= max_partition_product(a + b)
            )


def test_cycle_strict_bound():
    # the degree-2 case of the extremal argument needs this strictly
    for j in range(6, 101):
        assert (
            2 * max_partition_product(j - 3) + max_partition_product(j - 4)
            < max_partition_product(j)
        )


def test_agrees_with_partition_search():
    for n in range(1, 41):
        assert max_partition_product(n) == brute_max_partition_product(n)


def test_min_separating_sets_small_values():
    assert min_separating_sets(1) == 1
    assert min_separating_sets(2) == 2
    assert min_separating_sets(10) == 7  # ell(6)=9 < 10 <= 12=ell(7)


def test_min_separating_sets_rejects_zero():
    with pytest.raises(ValueError):
        min_separating_sets(0)


def test_left_inverse_of_partition_product():
    for n in range(1, 201):
        assert min_separating_sets(max_partition_product(n)) == n


def test_min_separating_sets_is_min_threshold_form():
    # nondecreasing, and equal to min{n : max_partition_product(n) >= m}
    ell = [0]
    n = 0
    prev = 0
    for m in range(1, 10001):
        while ell[-1] < m:
            n += 1
            ell.append(max_partition_product(n))
        threshold = next(k for k in range(1, n + 1) if ell[k] >= m)
        s = min_separating_sets(m)
        assert s == threshold
        assert s >= prev
        prev = s


def test_perrin_seeds_and_values():
    assert [perrin(j) for j in range(1, 11)] == [0, 2, 3, 2, 5, 5, 7, 10, 12, 17]
    with pytest.raises(ValueError):
        perrin(0)


def test_perrin_recurrence_holds():
    vals = [perrin(j) for j in range(1, 60)]
    for j in range(3, 59):
        assert vals[j] == vals[j - 2] + vals[j - 3]


def test_max_with_ones_values():
    assert max_with_ones(1) == 1
    assert max_with_ones(7) == 12
    assert max_with_ones(12) == 81
    with pytest.raises(ValueError):
        max_with_ones(0)


def test_max_with_ones_matches_partition_product():
    for n in range(1, 41):
        assert max_with_ones(n) == max_partition_product(n)


def test_values_are_exact_big_ints():
    # 3**(n/3) leaves 64-bit range near n = 122; everything must stay exact
    assert max_partition_product(123) == 3**41
    assert max_with_ones(123) == 3**41
    assert min_separating_sets(3**41) == 123
