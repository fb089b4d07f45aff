"""Exact integer utilities: valuations, perfect powers, k-power-free sieves.

Everything here is exact integer arithmetic; no floating point is used in
any predicate.  Python integers are arbitrary precision, so the quantities
that arise in the censuses (heights up to 10^18, discriminants up to about
10^20) are handled without overflow.  Functions that build tables guard
their sizes explicitly instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

# Valuation of 0 would be +infinity; internally a few routines want a large
# finite sentinel for it instead.
_INF = 1 << 62

# Largest table a single sieve call may allocate (bytes of flags).
MAX_SIEVE_LIMIT = 1 << 31


class SieveSizeError(OverflowError):
    """Requested sieve table exceeds the supported size."""


def _miller_rabin(n: int, a: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    return all(_miller_rabin(n, a) for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37))


def primes_up_to(n: int) -> List[int]:
    """All primes <= n by Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = bytearray(len(range(start, n + 1, p)))
    return [i for i in range(2, n + 1) if sieve[i]]


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n.  Requires n != 0 and p prime."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p == 2:
        return ((n & -n).bit_length() - 1) if n > 0 else ((-n & n).bit_length() - 1)
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, by integer Newton iteration."""
    if n < 0:
        raise ValueError("iroot requires n >= 0")
    if k < 1:
        raise ValueError("iroot requires k >= 1")
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_perfect_power(n: int, k: int) -> bool:
    """True iff n = m^k for some integer m.  0 and 1 always qualify;
    negative n qualifies only for odd k."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if n in (0, 1):
        return True
    if n < 0:
        if k % 2 == 0:
            return False
        n = -n
    r = iroot(n, k)
    return r ** k == n


def is_kth_power_free(n: int, k: int) -> bool:
    """True iff no prime p has p^k | n (applied to |n|; n must be nonzero)."""
    if n == 0:
        raise ValueError("0 is divisible by every prime power")
    if k < 2:
        raise ValueError("k must be >= 2")
    n = abs(n)
    for p in primes_up_to(iroot(n, k)):
        if n % p ** k == 0:
            return False
    return True


@dataclass(frozen=True)
class KFreeTable:
    """k-power-free flags for 1..limit.  flags[n] is truthy iff n is
    k-power-free.  Treat as immutable; safe for shared read-only access."""

    limit: int
    k: int
    flags: bytearray = field(repr=False)

    def __getitem__(self, n: int) -> bool:
        if not 1 <= n <= self.limit:
            raise IndexError(f"n = {n} outside 1..{self.limit}")
        return bool(self.flags[n])

    def count(self) -> int:
        return self.flags.count(1)


def _sieve_segment(lo: int, hi: int, k: int, base_primes: List[int]) -> bytearray:
    """Flags for [lo, hi] inclusive; index i holds the flag of lo + i."""
    seg = bytearray([1]) * (hi - lo + 1)
    for p in base_primes:
        pk = p ** k
        if pk > hi:
            break
        start = ((lo + pk - 1) // pk) * pk
        if start <= hi:
            seg[start - lo :: pk] = bytearray(len(range(start, hi + 1, pk)))
    return seg


def iter_kfree_segments(
    limit: int, k: int, segment_size: int = 1 << 20
) -> Iterator[Tuple[int, int, bytearray]]:
    """Yield (lo, hi, flags) covering 1..limit in order, with peak memory
    O(segment_size) rather than O(limit)."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    if segment_size < 1:
        raise ValueError("segment_size must be >= 1")
    base = primes_up_to(iroot(limit, k))
    lo = 1
    while lo <= limit:
        hi = min(lo + segment_size - 1, limit)
        yield lo, hi, _sieve_segment(lo, hi, k, base)
        lo = hi + 1


def kfree_sieve(limit: int, k: int, segment_size: int = 1 << 20) -> KFreeTable:
    """k-power-free table for 1..limit, assembled from segments.

    Agrees pointwise with is_kth_power_free.  Marks multiples of p^k for
    the base primes p <= limit^(1/k); chosen over Moebius summation because
    callers need per-element flags, not just counts.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if limit > MAX_SIEVE_LIMIT:
        raise SieveSizeError(f"sieve limit {limit} exceeds {MAX_SIEVE_LIMIT}")
    flags = bytearray(limit + 1)
    for lo, hi, seg in iter_kfree_segments(limit, k, segment_size):
        flags[lo : hi + 1] = seg
    return KFreeTable(limit=limit, k=k, flags=flags)
