"""Maximal counts of independent vector fields on spheres over R, C, and H.

Three independent routes are implemented and cross-checked:

* the Adams closed form 8d + 2^c - 1 for the real case,
* a direct formula for the complex and quaternionic cases that takes the
  minimum of per-prime caps over the maximal prefix 2, 3, ..., p_r of primes
  dividing n,
* a divisibility oracle that walks the James numbers until one stops
  dividing n.

Sweep helpers locate the first counterexample (if any) to the relations that
tie the three field cases together; counterexamples are returned as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exactmath import FactoredInteger, factorize, first_primes, nu, prime_prefix_length
from .james import Field, nu_full, profile_valuations

METHODS = ("adams_closed_form", "direct_formula", "oracle")

RELATION_KINDS = ("ss73", "aw_odd_even", "doubling", "adams_consistency")


@dataclass(frozen=True)
class RhoResult:
    """One computed count, tagged with the route that produced it."""

    field: Field
    n: int
    value: int
    method: str


@dataclass(frozen=True)
class GapRecord:
    """The gap d = rho_C(C^{2n}) - 2 rho_H(H^n), always 1 or 3."""

    n: int
    rho_c_2n: int
    rho_h_n: int
    d: int


@dataclass(frozen=True)
class RelationReport:
    """Outcome of a relation sweep; a counterexample is data, not an error."""

    kind: str
    lo: int
    hi: int
    ok: bool
    counterexample: Optional[dict]
    checked: int


@dataclass(frozen=True)
class GapSweepReport:
    """Histogram of observed gap values plus the first violation, if any."""

    histogram: dict[int, int]
    violation: Optional[dict]

    @property
    def ok(self) -> bool:
        return self.violation is None


def rho_real_adams(n: int) -> int:
    """Real count via the closed form 8d + 2^c - 1, where nu_2(n) = 4d + c."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d, c = divmod(nu(2, n), 4)
    return 8 * d + 2**c - 1


def _rho_oracle_factored(field: Field, n: FactoredInteger) -> int:
    get = n.factors.get
    m = 0
    while True:
        vals = profile_valuations(field, m + 1)
        for p, v in vals.items():
            if get(p, 0) < v:
                return m
        m += 1


def rho_oracle(field: Field, n: int) -> int:
    """Largest m whose James number over `field` divides n.

    Terminates because the 2-adic valuations of the James numbers grow
    without bound in m.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _rho_oracle_factored(field, factorize(n))


def _rho_direct_factored(field: Field, n: FactoredInteger) -> int:
    if field not in (Field.C, Field.H):
        raise ValueError("the direct formula applies over C and H only")
    r = prime_prefix_length(n)
    if r == 0:
        return 0
    ps = first_primes(r + 1)
    nxt = ps[r]
    cap = nxt - 2 if field is Field.C else (nxt - 3) // 2
    # Valuations are monotone in m, so each per-prime cap is found by a
    # downward scan, and the scan may start at the running minimum.
    best = cap
    for i in range(r):
        p = ps[i]
        t = n.factors[p]
        m = best
        while m > 0 and nu_full(field, p, m) > t:
            m -= 1
        best = m
        if best == 0:
            break
    return best


def rho_direct(field: Field, n: int) -> int:
    """Complex or quaternionic count via the minimum of per-prime caps.

    Writes n = p_1^{t_1} ... p_r^{t_r} l with 2, ..., p_r the maximal prime
    prefix dividing n; for each i the cap is the largest m below the next
    prime's bound whose James valuation at p_i fits inside t_i.  Odd n has
    an empty prefix and yields 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _rho_direct_factored(field, factorize(n))


def rho(field: Field, n: int, method: str = "auto") -> RhoResult:
    """Compute one count by the requested route (or the best route per field)."""
    if method == "auto":
        method = "adams_closed_form" if field is Field.R else "direct_formula"
    if method == "adams_closed_form":
        if field is not Field.R:
            raise ValueError("the closed form applies over R only")
        return RhoResult(field, n, rho_real_adams(n), method)
    if method == "direct_formula":
        return RhoResult(field, n, rho_direct(field, n), method)
    if method == "oracle":
        return RhoResult(field, n, rho_oracle(field, n), method)
    raise ValueError(f"unknown method {method!r}")


def _doubled(n: FactoredInteger) -> FactoredInteger:
    factors = dict(n.factors)
    factors[2] = factors.get(2, 0) + 1
    return FactoredInteger(2 * n.value, factors)


def gap_delta(n: int, cross_check: bool = True) -> GapRecord:
    """Gap between the complex count on C^{2n} and twice the quaternionic
    count on H^n.

    Both sides are computed by the direct formula and, unless disabled,
    cross-checked against the divisibility oracle.  A gap outside {1, 3} or
    a route disagreement is an implementation bug and raises.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fn = factorize(n)
    f2n = _doubled(fn)
    rc = _rho_direct_factored(Field.C, f2n)
    rh = _rho_direct_factored(Field.H, fn)
    if cross_check:
        oc = _rho_oracle_factored(Field.C, f2n)
        oh = _rho_oracle_factored(Field.H, fn)
        if rc != oc or rh != oh:
            raise ArithmeticError(
                f"route disagreement at n={n}: direct (C:{rc}, H:{rh}) "
                f"vs oracle (C:{oc}, H:{oh})"
            )
    d = rc - 2 * rh
    if d not in (1, 3):
        raise ArithmeticError(f"gap d={d} outside {{1, 3}} at n={n}")
    return GapRecord(n, rc, rh, d)


def find_direct_oracle_mismatch(
    field: Field, lo: int, hi: int, even_only: bool = True
) -> Optional[tuple[int, int, int]]:
    """First (n, direct, oracle) disagreement between the two routes, or None."""
    for n in range(max(lo, 1), hi + 1):
        if even_only and n % 2:
            continue
        fn = factorize(n)
        a = _rho_direct_factored(field, fn)
        b = _rho_oracle_factored(field, fn)
        if a != b:
            return (n, a, b)
    return None


def gap_sweep(lo: int, hi: int, cross_check: bool = True) -> GapSweepReport:
    """Sweep the gap over [lo, hi]; returns the d-histogram and first violation."""
    hist: dict[int, int] = {}
    for n in range(max(lo, 1), hi + 1):
        fn = factorize(n)
        f2n = _doubled(fn)
        rc = _rho_direct_factored(Field.C, f2n)
        rh = _rho_direct_factored(Field.H, fn)
        if cross_check:
            oc = _rho_oracle_factored(Field.C, f2n)
            oh = _rho_oracle_factored(Field.H, fn)
            if rc != oc or rh != oh:
                return GapSweepReport(
                    hist,
                    {
                        "n": n,
                        "reason": "route disagreement",
                        "direct": {"C": rc, "H": rh},
                        "oracle": {"C": oc, "H": oh},
                    },
                )
        d = rc - 2 * rh
        if d not in (1, 3):
            return GapSweepReport(
                hist, {"n": n, "reason": "gap outside {1, 3}", "d": d}
            )
        hist[d] = hist.get(d, 0) + 1
    return GapSweepReport(hist, None)


def relation_check(kind: str, lo: int, hi: int) -> RelationReport:
    """Check one cross-field relation over an inclusive integer range.

    kinds:
      ss73              quaternionic number m+1 vs complex number 2m+3:
                        odd-prime valuations agree exactly and the 2-adic
                        valuations differ by 0 or -1 (Sigrist-Suter halving)
      aw_odd_even       complex profiles at 2k+1 and 2k coincide (Adams-Walker)
      doubling          rho_R(R^{2n}) >= 2 rho_C(C^n) and
                        rho_C(C^{2n}) >= 2 rho_H(H^n), both via the oracle
      adams_consistency closed form equals the oracle over R

    Returns the first counterexample as data; no exception is raised.
    """
    if kind not in RELATION_KINDS:
        raise ValueError(f"unknown relation kind {kind!r}")
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    checked = 0

    if kind == "ss73":
        if lo < 0:
            raise ValueError("ss73 requires m >= 0")
        for m in range(lo, hi + 1):
            ph = profile_valuations(Field.H, m + 1)
            pc = profile_valuations(Field.C, 2 * m + 3)
            odd_h = {p: v for p, v in ph.items() if p != 2}
            odd_c = {p: v for p, v in pc.items() if p != 2}
            gap = ph.get(2, 0) - pc.get(2, 0)
            checked += 1
            if odd_h != odd_c or gap not in (0, -1):
                return RelationReport(
                    kind,
                    lo,
                    hi,
                    False,
                    {"m": m, "quaternionic": dict(ph), "complex": dict(pc)},
                    checked,
                )
        return RelationReport(kind, lo, hi, True, None, checked)

    if kind == "aw_odd_even":
        if lo < 1:
            raise ValueError("aw_odd_even requires k >= 1")
        for k in range(lo, hi + 1):
            odd = profile_valuations(Field.C, 2 * k + 1)
            even = profile_valuations(Field.C, 2 * k)
            checked += 1
            if odd != even:
                return RelationReport(
                    kind,
                    lo,
                    hi,
                    False,
                    {"k": k, "odd_index": dict(odd), "even_index": dict(even)},
                    checked,
                )
        return RelationReport(kind, lo, hi, True, None, checked)

    if lo < 1:
        raise ValueError(f"{kind} requires n >= 1")
    for n in range(lo, hi + 1):
        fn = factorize(n)
        checked += 1
        if kind == "doubling":
            f2n = _doubled(fn)
            rr = _rho_oracle_factored(Field.R, f2n)
            rc_n = _rho_oracle_factored(Field.C, fn)
            rc_2n = _rho_oracle_factored(Field.C, f2n)
            rh_n = _rho_oracle_factored(Field.H, fn)
            if rr < 2 * rc_n or rc_2n < 2 * rh_n:
                return RelationReport(
                    kind,
                    lo,
                    hi,
                    False,
                    {
                        "n": n,
                        "rho_R_2n": rr,
                        "rho_C_n": rc_n,
                        "rho_C_2n": rc_2n,
                        "rho_H_n": rh_n,
                    },
                    checked,
                )
        else:  # adams_consistency
            a = rho_real_adams(n)
            b = _rho_oracle_factored(Field.R, fn)
            if a != b:
                return RelationReport(
                    kind, lo, hi, False, {"n": n, "closed_form": a, "oracle": b}, checked
                )
    return RelationReport(kind, lo, hi, True, None, checked)
