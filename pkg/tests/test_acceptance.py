"""Acceptance sweep.

Each test runs one criterion at full scale with exact (zero-tolerance)
comparisons, prints a single PASS/FAIL line, and enforces the runtime bound.
Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; `spherefields verify all` covers the sweep criteria from the shell.

Criterion 10 is expected to fail: it asserts that lifting one quaternionic
structure matrix from the realified quaternion line produces four matrices
satisfying the Hurwitz-Radon relations on R^4.  No four matrices can do so:
skew orthogonal pairwise-anticommuting matrices on R^4 number at most three
(their values would otherwise be four orthonormal tangent vectors on the
3-sphere, whose tangent spaces are 3-dimensional).  More specifically, any
matrix anticommuting with the right-multiplication structures for i and j
necessarily commutes with the one for k, so its k-composite is symmetric,
never skew.  The test states the contract as written and fails honestly;
everything the construction can satisfy (cardinality, per-member
certificates) is asserted first.
"""

import time

from spherefields.algebra import run_identity_trials
from spherefields.cli import main
from spherefields.fields import (
    FieldFamily,
    default_points,
    example4,
    hurwitz_radon_check,
    is_vector_field,
    lift,
    sampled_independence,
    structure_matrix,
)
from spherefields.james import Field, find_refinement_mismatch
from spherefields.rho import (
    find_direct_oracle_mismatch,
    gap_delta,
    gap_sweep,
    relation_check,
)

EXPECTED_TABLE = [
    (1, 3, 1, 0),
    (2, 7, 1, 0),
    (4, 8, 1, 0),
    (6, 7, 1, 0),
    (12, 8, 3, 0),
    (24, 9, 3, 1),
    (1440, 15, 5, 2),
]


def _report(num, label, ok, elapsed, limit, detail=""):
    status = "PASS" if ok else "FAIL"
    extra = f" [{detail}]" if detail else ""
    print(f"[criterion {num:2d}] {status} {label}: {elapsed:.2f}s (limit {limit:g}s){extra}")


def test_criterion_01_reference_table(capsys):
    t0 = time.perf_counter()
    code = main(["table", "--format", "csv"])
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    rows = [tuple(int(x) for x in line.split(",")) for line in lines[1:]]
    elapsed = time.perf_counter() - t0
    ok = code == 0 and lines[0] == "n,rho_R_4n,rho_C_2n,rho_H_n" and rows == EXPECTED_TABLE
    with capsys.disabled():
        _report(1, "reference table of rho values", ok, elapsed, 1)
    assert ok, f"table mismatch: {rows}"
    assert elapsed < 1.0


def test_criterion_02_refined_equals_full():
    t0 = time.perf_counter()
    mismatch = find_refinement_mismatch(200)
    elapsed = time.perf_counter() - t0
    _report(2, "refined valuation route (m <= 200, p <= 2m+1, C and H)", mismatch is None, elapsed, 10)
    assert mismatch is None, f"first mismatch: {mismatch}"
    assert elapsed < 10.0


def test_criterion_03_direct_formula_equals_oracle():
    t0 = time.perf_counter()
    bad_c = find_direct_oracle_mismatch(Field.C, 1, 100_000, even_only=True)
    bad_h = find_direct_oracle_mismatch(Field.H, 1, 100_000, even_only=True)
    elapsed = time.perf_counter() - t0
    ok = bad_c is None and bad_h is None
    _report(3, "direct formula vs oracle (even n <= 1e5, C and H)", ok, elapsed, 60)
    assert ok, f"C: {bad_c}, H: {bad_h}"
    assert elapsed < 60.0


def test_criterion_04_closed_form_equals_oracle():
    t0 = time.perf_counter()
    report = relation_check("adams_consistency", 1, 100_000)
    elapsed = time.perf_counter() - t0
    _report(4, "real closed form vs oracle (n <= 1e5)", report.ok, elapsed, 30)
    assert report.ok, f"first counterexample: {report.counterexample}"
    assert elapsed < 30.0


def test_criterion_05_gap_membership_and_witnesses():
    t0 = time.perf_counter()
    sweep = gap_sweep(1, 100_000, cross_check=True)
    w1 = gap_delta(24)
    w3 = gap_delta(12)
    elapsed = time.perf_counter() - t0
    ok = (
        sweep.ok
        and set(sweep.histogram) == {1, 3}
        and w1.d == 1
        and w3.d == 3
    )
    detail = " ".join(f"d={d}: {c}" for d, c in sorted(sweep.histogram.items()))
    _report(5, "gap in {1, 3} with both witnesses (n <= 1e5)", ok, elapsed, 60, detail)
    assert sweep.ok, f"violation: {sweep.violation}"
    assert w1.d == 1 and w3.d == 3
    assert set(sweep.histogram) == {1, 3}
    assert elapsed < 60.0


def test_criterion_06_halving_and_parity_relations():
    t0 = time.perf_counter()
    halves = relation_check("ss73", 0, 100)
    parity = relation_check("aw_odd_even", 1, 100)
    elapsed = time.perf_counter() - t0
    ok = halves.ok and parity.ok
    _report(6, "halving (m <= 100) and odd/even parity (k <= 100)", ok, elapsed, 10)
    assert halves.ok, f"halving counterexample: {halves.counterexample}"
    assert parity.ok, f"parity counterexample: {parity.counterexample}"
    assert elapsed < 10.0


def test_criterion_07_doubling_inequalities():
    t0 = time.perf_counter()
    report = relation_check("doubling", 1, 100_000)
    elapsed = time.perf_counter() - t0
    _report(7, "doubling inequalities (n <= 1e5)", report.ok, elapsed, 60)
    assert report.ok, f"first counterexample: {report.counterexample}"
    assert elapsed < 60.0


def test_criterion_08_algebra_identities():
    t0 = time.perf_counter()
    failure = run_identity_trials(1000, seed=42, dims=(1, 2, 3, 5))
    elapsed = time.perf_counter() - t0
    _report(8, "six identities x 1000 exact seeded trials (dims 1,2,3,5)", failure is None, elapsed, 10)
    assert failure is None, f"first failing trial: {failure}"
    assert elapsed < 10.0


def test_criterion_09_classical_field_certification():
    t0 = time.perf_counter()
    failures = []
    for n in (2, 4, 8, 16, 32):  # real dimensions 4, 8, 16, 32, 64
        m1, m2 = example4(n)
        if not (is_vector_field(m1).ok and is_vector_field(m2).ok):
            failures.append((2 * n, "member certificate"))
            continue
        family = FieldFamily(2 * n, (m1, m2), Field.R)
        if not hurwitz_radon_check(family):
            failures.append((2 * n, "hurwitz-radon"))
            continue
        ok, witness = sampled_independence(family, default_points(2 * n, 100, seed=0))
        if not ok:
            failures.append((2 * n, f"sampled independence at {witness}"))
    elapsed = time.perf_counter() - t0
    _report(9, "classical pair certified on R^4 ... R^64 (100 points)", not failures, elapsed, 10)
    assert not failures, failures
    assert elapsed < 10.0


def test_criterion_10_quaternionic_lift_contract():
    # Contract under test: lifting a single quaternionic structure matrix on
    # the realified quaternion line yields the four composites (the member
    # itself and its i, j, k composites) and those four pass the
    # Hurwitz-Radon check on R^4.  The cardinality and the per-member
    # situation are recorded; the final assertion cannot hold (see module
    # docstring) and the failure is intentional.
    t0 = time.perf_counter()
    member = structure_matrix("i", Field.H, 4)
    assert is_vector_field(member).ok
    lifted = lift(FieldFamily(4, (member,), Field.H), "h_to_r")
    assert len(lifted) == 4
    assert lifted.claimed_field is Field.R
    hr = hurwitz_radon_check(lifted)
    elapsed = time.perf_counter() - t0
    _report(
        10,
        "quaternionic lift yields a 4-member Hurwitz-Radon family on R^4",
        hr,
        elapsed,
        1,
        "unsatisfiable: at most 3 skew anticommuting orthogonal matrices exist on R^4",
    )
    assert elapsed < 1.0
    assert hr, (
        "four skew, orthogonal, pairwise-anticommuting matrices cannot exist "
        "on R^4: their values at any sphere point would be four orthonormal "
        "tangent vectors in a 3-dimensional tangent space.  Equivalently, a "
        "matrix anticommuting with the i and j right-multiplication "
        "structures commutes with the k structure, making the k-composite "
        "symmetric instead of skew.  The lifted family here is "
        f"{[m.name for m in lifted.members]} and its skew pattern is "
        f"{[is_vector_field(m).skew for m in lifted.members]}."
    )
