"""James valuation tests.

Derived expectations are computed by independent brute-force oracles written
inline here (direct maxima over the full index range), then compared against
the library routes.
"""

import pytest

from spherefields.exactmath import factorize, nu, primes_up_to
from spherefields.james import (
    Field,
    JamesProfile,
    divides,
    f_adams,
    find_refinement_mismatch,
    nu_full,
    nu_refined,
    profile,
    scan_range,
)


def brute_nu(field: Field, p: int, m: int) -> int:
    """Oracle: evaluate the defining maxima term by term, no shortcuts."""
    if field is Field.C:
        return max((s + nu(p, s) if s else 0) for s in range(m // (p - 1) + 1))
    assert field is Field.H
    if p == 2:
        return max(2 * m + 1, *((2 * s + nu(2, s) if s else 0) for s in range(m + 1)))
    return max((s + nu(p, s) if s else 0) for s in range(2 * m // (p - 1) + 1))


def test_f_adams_examples():
    assert f_adams(1) == 1
    assert f_adams(4) == 3
    assert f_adams(8) == 4
    assert f_adams(9) == 5  # q in {1, 2, 4, 8, 9}


def test_f_adams_closed_form_oracle():
    # independent closed form: 4 per block of 8 plus the residues 1, 2, 4
    for m in range(1, 400):
        expected = 4 * (m // 8) + sum(1 for r in (1, 2, 4) if m % 8 >= r)
        assert f_adams(m) == expected


def test_nu_full_derived_values():
    assert brute_nu(Field.C, 2, 2) == 3
    assert nu_full(Field.C, 2, 2) == 3
    assert brute_nu(Field.H, 2, 1) == 3
    assert nu_full(Field.H, 2, 1) == 3
    assert nu_full(Field.C, 5, 2) == 0
    assert (
        nu_full(Field.H, 2, 2),
        nu_full(Field.H, 3, 2),
        nu_full(Field.H, 5, 2),
    ) == (5, 2, 1)  # so the second quaternionic number is 1440


def test_nu_full_matches_brute_force():
    for m in range(1, 40):
        for p in primes_up_to(2 * m + 1):
            assert nu_full(Field.C, p, m) == brute_nu(Field.C, p, m)
            assert nu_full(Field.H, p, m) == brute_nu(Field.H, p, m)


def test_nu_full_real_case():
    assert nu_full(Field.R, 2, 9) == f_adams(9)
    assert nu_full(Field.R, 3, 9) == 0


def test_scan_range_examples():
    assert (scan_range(2, 5).lo, scan_range(2, 5).hi) == (0, 0)
    assert (scan_range(4, 2).lo, scan_range(4, 2).hi) == (4, 4)
    assert (scan_range(3, 2).lo, scan_range(3, 2).hi) == (2, 3)


def test_scan_range_size_identity():
    # |window| = floor(log_p(m/(p-1))) - nu_p(floor(m/(p-1))) + 1 for p <= m+1
    from spherefields.exactmath import floor_log_ratio

    for m in range(1, 120):
        for p in primes_up_to(m + 1):
            cap = m // (p - 1)
            log = floor_log_ratio(p, m, p - 1)
            assert nu(p, cap) <= log  # nonemptiness
            assert len(scan_range(m, p)) == log - nu(p, cap) + 1


def test_nu_refined_examples():
    assert nu_refined(Field.C, 2, 2) == nu_full(Field.C, 2, 2) == 3
    assert nu_refined(Field.H, 2, 4) == nu_full(Field.H, 2, 4) == 10
    assert nu_refined(Field.C, 3, 2) == nu_full(Field.C, 3, 2) == 1
    with pytest.raises(ValueError):
        nu_refined(Field.R, 2, 4)


def test_refinement_equivalence_sweep():
    assert find_refinement_mismatch(120) is None


def test_profile_examples():
    assert profile(Field.C, 2).valuations == {2: 3, 3: 1}
    assert profile(Field.H, 0).valuations == {}
    assert profile(Field.R, 9).valuations == {2: 5}
    assert profile(Field.H, 1).valuations == {2: 3, 3: 1}  # the number 24


def test_profile_support_bounds():
    for m in range(1, 60):
        for p, v in profile(Field.C, m).valuations.items():
            assert p <= m + 1 and v >= 1
        for p, v in profile(Field.H, m).valuations.items():
            assert p <= 2 * m + 1 and v >= 1
    # beyond the bound the valuation vanishes
    assert nu_full(Field.C, 11, 9) == 0
    assert nu_full(Field.H, 23, 10) == 0


def test_profile_monotone_in_m():
    for field in (Field.C, Field.H):
        prev: dict[int, int] = {}
        for m in range(1, 80):
            cur = profile(field, m).valuations
            for p, v in prev.items():
                assert cur.get(p, 0) >= v
            prev = cur


def test_profile_complex_odd_even_identity():
    for k in range(1, 60):
        assert profile(Field.C, 2 * k + 1).valuations == profile(Field.C, 2 * k).valuations


def test_profile_validation():
    with pytest.raises(ValueError):
        JamesProfile(Field.R, 3, {3: 1})
    with pytest.raises(ValueError):
        JamesProfile(Field.C, 2, {5: 1})
    with pytest.raises(ValueError):
        JamesProfile(Field.C, 0, {2: 1})
    with pytest.raises(ValueError):
        JamesProfile(Field.C, 2, {2: 0})


def test_divides_examples():
    assert divides(profile(Field.H, 1), factorize(24))
    assert not divides(profile(Field.H, 1), factorize(12))
    assert divides(profile(Field.C, 0), factorize(1))
    assert divides(profile(Field.C, 0), factorize(7))
