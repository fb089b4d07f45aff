import random

import pytest

from kncensus.arith import (
    KFreeTable,
    SieveSizeError,
    is_kth_power_free,
    is_perfect_power,
    is_prime,
    iroot,
    iter_kfree_segments,
    kfree_sieve,
    primes_up_to,
    valuation,
)


def test_valuation_basics():
    assert valuation(72, 3) == 2
    assert valuation(-64, 2) == 6
    assert valuation(7, 5) == 0
    assert valuation(1, 2) == 0
    assert valuation(-1, 7) == 0


def test_valuation_rejects_zero_and_composite_p():
    with pytest.raises(ValueError):
        valuation(0, 2)
    with pytest.raises(ValueError):
        valuation(12, 4)
    with pytest.raises(ValueError):
        valuation(12, 1)


def test_valuation_multiplicative():
    rng = random.Random(20260809)
    for _ in range(500):
        a = rng.randint(1, 10 ** 9) * rng.choice([1, -1])
        b = rng.randint(1, 10 ** 9) * rng.choice([1, -1])
        p = rng.choice([2, 3, 5, 7, 11, 13])
        assert valuation(a * b, p) == valuation(a, p) + valuation(b, p)


def test_is_prime_small_and_carmichael():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(561)          # Carmichael
    assert not is_prime(1)
    assert is_prime(2 ** 61 - 1)


def test_iroot_exact_near_powers():
    for k in (2, 3, 4, 6):
        for m in (1, 2, 9, 10 ** 6, 2 ** 31):
            n = m ** k
            assert iroot(n, k) == m
            assert iroot(n - 1, k) == m - 1
            assert iroot(n + 1, k) == m


def test_is_perfect_power():
    assert is_perfect_power(49, 2)
    assert is_perfect_power(-8, 3)
    assert not is_perfect_power(-4, 2)
    assert is_perfect_power(0, 2) and is_perfect_power(1, 5)
    assert is_perfect_power(-1, 3)
    assert not is_perfect_power(2 ** 62 + 1, 2)
    assert is_perfect_power(3 ** 40, 4)


def test_is_kth_power_free_basics():
    assert is_kth_power_free(10, 2)
    assert not is_kth_power_free(-48, 4)
    assert is_kth_power_free(32, 6)
    assert not is_kth_power_free(64, 6)
    with pytest.raises(ValueError):
        is_kth_power_free(0, 2)


def test_kth_power_free_monotone_in_k():
    for n in range(1, 2000):
        for k in (2, 3, 4):
            if is_kth_power_free(n, k):
                for kk in range(k + 1, 8):
                    assert is_kth_power_free(n, kk)


def brute_count(limit, k):
    return sum(1 for n in range(1, limit + 1) if is_kth_power_free(n, k))


def test_sieve_counts_against_brute_force():
    assert brute_count(100, 2) == 61
    assert kfree_sieve(100, 2).count() == 61
    assert kfree_sieve(64, 6).count() == 63
    assert kfree_sieve(16, 4).count() == 15


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_sieve_pointwise_matches_predicate(k):
    limit = 10 ** 5
    table = kfree_sieve(limit, k)
    assert table.limit == limit and table.k == k
    for n in range(1, limit + 1):
        assert bool(table.flags[n]) == is_kth_power_free(n, k), (n, k)
    assert table[1] is True


def test_segments_cover_table():
    limit = 54321
    for k, size in ((2, 1000), (4, 997), (6, 50000)):
        table = kfree_sieve(limit, k)
        seen = 0
        prev_hi = 0
        for lo, hi, seg in iter_kfree_segments(limit, k, segment_size=size):
            assert lo == prev_hi + 1
            prev_hi = hi
            assert bytes(seg) == bytes(table.flags[lo : hi + 1])
            seen += hi - lo + 1
        assert seen == limit


def test_sieve_segment_size_invariance():
    a = kfree_sieve(20000, 4, segment_size=77)
    b = kfree_sieve(20000, 4, segment_size=1 << 20)
    assert a.flags == b.flags


def test_table_index_guards():
    table = kfree_sieve(10, 2)
    with pytest.raises(IndexError):
        table[0]
    with pytest.raises(IndexError):
        table[11]


def test_sieve_input_validation():
    with pytest.raises(ValueError):
        kfree_sieve(0, 2)
    with pytest.raises(ValueError):
        kfree_sieve(10, 1)
    with pytest.raises(SieveSizeError):
        kfree_sieve(1 << 40, 2)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
