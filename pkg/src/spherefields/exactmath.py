"""Exact integer primitives: primes, p-adic valuations, factorization.

Everything here is arbitrary-precision integer arithmetic.  Floor-logs of
rational arguments are computed by repeated exact multiplication, never by
floating point, so results are correct for any operand size.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import isqrt
from typing import Iterator

_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def _grow_primes() -> None:
    """Append the next prime to the cache by trial division."""
    cand = _PRIMES[-1] + 2
    while True:
        for p in _PRIMES:
            if p * p > cand:
                _PRIMES.append(cand)
                return
            if cand % p == 0:
                break
        cand += 2


def first_primes(k: int) -> list[int]:
    """The first k primes, in order."""
    while len(_PRIMES) < k:
        _grow_primes()
    return _PRIMES[:k]


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, in order."""
    while _PRIMES[-1] < limit:
        _grow_primes()
    return _PRIMES[: bisect_right(_PRIMES, limit)]


def iter_primes() -> Iterator[int]:
    """Yield 2, 3, 5, ... indefinitely."""
    i = 0
    while True:
        if i == len(_PRIMES):
            _grow_primes()
        yield _PRIMES[i]
        i += 1


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (intended for n <= ~10^14)."""
    if n < 2:
        return False
    for p in primes_up_to(isqrt(n)):
        if n % p == 0:
            return n == p
    return True


def nu(p: int, m: int) -> int:
    """The exponent of the prime p in m, i.e. the p-adic valuation of m.

    m = 0 is rejected: its valuation is infinite and callers are expected
    to handle that case themselves.
    """
    if m < 1:
        raise ValueError(f"nu requires m >= 1, got {m}")
    if p < 2:
        raise ValueError(f"nu requires a prime p >= 2, got {p}")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def floor_log_ratio(p: int, num: int, den: int) -> int:
    """Largest e >= 0 with p**e * den <= num, by exact comparison.

    Equals floor(log_p(num/den)); requires num >= den >= 1 so the result
    is nonnegative.
    """
    if p < 2:
        raise ValueError(f"floor_log_ratio requires p >= 2, got {p}")
    if den < 1:
        raise ValueError(f"floor_log_ratio requires den >= 1, got {den}")
    if num < den:
        raise ValueError(f"floor_log_ratio requires num >= den, got {num} < {den}")
    e = 0
    acc = den * p
    while acc <= num:
        acc *= p
        e += 1
    return e


@dataclass
class FactoredInteger:
    """A positive integer together with its complete prime factorization.

    The exponent of any prime absent from the map is 0 by convention.
    """

    value: int
    factors: dict[int, int]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"value must be positive, got {self.value}")
        prod = 1
        for p, e in self.factors.items():
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    def exponent(self, p: int) -> int:
        return self.factors.get(p, 0)


def factorize(n: int) -> FactoredInteger:
    """Complete prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    rem = n
    for p in iter_primes():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 1
            rem //= p
            while rem % p == 0:
                rem //= p
                e += 1
            factors[p] = e
    if rem > 1:
        factors[rem] = 1  # remaining cofactor is prime: no divisor <= sqrt(rem)
    return FactoredInteger(n, factors)


def prime_prefix_length(n: FactoredInteger) -> int:
    """Largest r such that each of the first r primes 2, 3, 5, ... divides n.

    Returns 0 when n is odd.
    """
    r = 0
    for p in iter_primes():
        if n.exponent(p) == 0:
            return r
        r += 1
    raise AssertionError("unreachable")
