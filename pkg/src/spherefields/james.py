"""Prime valuations of the James numbers over R, C, and H.

The m-th James number over a base field F is the divisibility threshold for
the existence of m independent F-vector fields: m fields exist on the sphere
in F^n exactly when the number divides n.  These integers grow explosively
(their 2-adic valuation alone grows linearly in m), so they are represented
purely by their finite valuation profiles and never materialized.

Two evaluation routes are provided for the complex and quaternionic
valuations: the full maximum over all admissible indices (Adams-Walker for C,
Sigrist-Suter for H) and a refined maximum over a narrow index window.  The
two must agree everywhere; the equivalence sweep is part of the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Optional

from .exactmath import FactoredInteger, floor_log_ratio, nu, primes_up_to


class Field(enum.Enum):
    """The three associative division algebras over the reals."""

    R = "R"
    C = "C"
    H = "H"


@dataclass(frozen=True)
class ScanRange:
    """Inclusive window [lo, hi] of indices that can attain a valuation maximum."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"invalid scan range [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class JamesProfile:
    """Finite-support map prime -> valuation for one James number.

    Zero valuations are omitted so equality of profiles is canonical.
    Index m = 0 denotes the empty profile (the number 1: no constraint).
    """

    field: Field
    m: int
    valuations: dict[int, int]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"index must be >= 0, got {self.m}")
        if self.m == 0 and self.valuations:
            raise ValueError("index 0 must carry an empty profile")
        for p, v in self.valuations.items():
            if v < 1:
                raise ValueError(f"zero valuations must be omitted (prime {p})")
            if self.field is Field.R and p != 2:
                raise ValueError(f"real profiles are supported on 2 only, got {p}")
            if self.field is Field.C and p > self.m + 1:
                raise ValueError(f"complex support bound violated: {p} > {self.m + 1}")
            if self.field is Field.H and p > 2 * self.m + 1:
                raise ValueError(f"quaternionic support bound violated: {p} > {2 * self.m + 1}")

    def nu(self, p: int) -> int:
        return self.valuations.get(p, 0)


@lru_cache(maxsize=None)
def f_adams(m: int) -> int:
    """Adams' count of integers 0 < q <= m with q = 0, 1, 2 or 4 mod 8.

    The 2-adic valuation of the m-th real James number.
    """
    if m < 1:
        raise ValueError(f"f_adams requires m >= 1, got {m}")
    return sum(1 for q in range(1, m + 1) if q % 8 in (0, 1, 2, 4))


@lru_cache(maxsize=None)
def nu_full(field: Field, p: int, m: int) -> int:
    """Valuation at p of the m-th James number over `field`, full-range route.

    Over R this is f_adams(m) at p = 2 and 0 at odd primes.  Over C it is
    max{s + nu_p(s) : 0 <= s <= floor(m/(p-1))}.  Over H the 2-adic value is
    max{2m+1, 2s + nu_2(s) : 0 <= s <= m} and odd primes follow the complex
    formula with m doubled.  The s = 0 term contributes 0.
    """
    if m < 1:
        raise ValueError(f"nu_full requires m >= 1, got {m}")
    if field is Field.R:
        return f_adams(m) if p == 2 else 0
    if field is Field.H:
        if p == 2:
            best = 2 * m + 1
            for s in range(1, m + 1):
                cand = 2 * s + nu(2, s)
                if cand > best:
                    best = cand
            return best
        m = 2 * m
    best = 0
    for s in range(1, m // (p - 1) + 1):
        cand = s + nu(p, s)
        if cand > best:
            best = cand
    return best


def scan_range(m: int, p: int) -> ScanRange:
    """Window of indices that can attain the complex valuation maximum at p.

    For p > m + 1 only s = 0 is admissible.  Otherwise, with F = floor(m/(p-1))
    and L = floor(log_p(m/(p-1))), the maximum is attained within
    [F + nu_p(F) - L, F].  The window is never empty: nu_p(F) <= L.
    """
    if m < 1:
        raise ValueError(f"scan_range requires m >= 1, got {m}")
    if p > m + 1:
        return ScanRange(0, 0)
    cap = m // (p - 1)
    log = floor_log_ratio(p, m, p - 1)
    return ScanRange(cap + nu(p, cap) - log, cap)


def nu_refined(field: Field, p: int, m: int) -> int:
    """Same value as nu_full over C and H, evaluated only on the scan window."""
    if m < 1:
        raise ValueError(f"nu_refined requires m >= 1, got {m}")
    if field is Field.C:
        return max((s + nu(p, s)) if s else 0 for s in scan_range(m, p))
    if field is Field.H:
        if p == 2:
            best = 2 * m + 1
            for s in scan_range(m, 2):
                if s:
                    best = max(best, 2 * s + nu(2, s))
            return best
        return max((s + nu(p, s)) if s else 0 for s in scan_range(2 * m, p))
    raise ValueError("the refined route exists over C and H only")


@lru_cache(maxsize=None)
def profile_valuations(field: Field, m: int) -> Mapping[int, int]:
    """Cached read-only valuation map for the m-th James number over `field`."""
    if m == 0:
        return MappingProxyType({})
    if field is Field.R:
        return MappingProxyType({2: f_adams(m)})
    bound = m + 1 if field is Field.C else 2 * m + 1
    vals: dict[int, int] = {}
    for p in primes_up_to(bound):
        v = nu_full(field, p, m)
        if v:
            vals[p] = v
    return MappingProxyType(vals)


def profile(field: Field, m: int) -> JamesProfile:
    """Valuation profile of the m-th James number; m = 0 gives the empty profile."""
    if m < 0:
        raise ValueError(f"profile requires m >= 0, got {m}")
    return JamesProfile(field, m, dict(profile_valuations(field, m)))


def divides(c: JamesProfile, n: FactoredInteger) -> bool:
    """True when every valuation of `c` is covered by the factorization of n."""
    get = n.factors.get
    return all(get(p, 0) >= v for p, v in c.valuations.items())


def find_refinement_mismatch(
    m_max: int,
) -> Optional[tuple[Field, int, int, int, int]]:
    """Search for a disagreement between the refined and full valuation routes.

    Scans both C and H for 1 <= m <= m_max over all primes p <= 2m + 1 and
    returns the first (field, p, m, refined, full) mismatch, or None.
    """
    for m in range(1, m_max + 1):
        ps = primes_up_to(2 * m + 1)
        for field in (Field.C, Field.H):
            for p in ps:
                a = nu_refined(field, p, m)
                b = nu_full(field, p, m)
                if a != b:
                    return (field, p, m, a, b)
    return None
