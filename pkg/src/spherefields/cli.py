"""Command-line front end.

Subcommands: rho, james, table, verify, construct, check-family.  Exit codes:
0 success, 1 mathematical counterexample or failed certificate, 2 usage
error.  All output is deterministic given the flags and --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .algebra import run_identity_trials
from .fields import (
    FieldFamily,
    as_real_family,
    default_points,
    example4,
    family_from_json,
    family_to_json,
    hurwitz_radon_check,
    is_vector_field,
    lift,
    promotes_to,
    sampled_independence,
)
from .james import Field, find_refinement_mismatch, profile
from .rho import (
    find_direct_oracle_mismatch,
    gap_sweep,
    relation_check,
    rho as rho_compute,
    rho_direct,
    rho_real_adams,
)

TABLE_DEFAULT_NS = (1, 2, 4, 6, 12, 24, 1440)

VERIFY_CHECKS = (
    "lemma7",
    "theorem8",
    "theorem9",
    "ss73",
    "aw-parity",
    "corollary6",
    "adams",
    "identities",
    "all",
)

_FIELD_BY_LETTER = {"r": Field.R, "c": Field.C, "h": Field.H}

_METHOD_BY_FLAG = {
    "auto": "auto",
    "closed-form": "adams_closed_form",
    "direct": "direct_formula",
    "oracle": "oracle",
}


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_n_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _field_arg(text: str) -> Field:
    try:
        return _FIELD_BY_LETTER[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"field must be r, c or h, got {text!r}") from None


# ---------------------------------------------------------------------------
# rho


def _methods_for(field: Field) -> list[str]:
    if field is Field.R:
        return ["adams_closed_form", "oracle"]
    return ["direct_formula", "oracle"]


def _cmd_rho(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.range is None):
        print("error: provide exactly one of --n or --range", file=sys.stderr)
        return 2
    ns = [args.n] if args.n is not None else list(range(args.range[0], args.range[1] + 1))
    if any(n < 1 for n in ns):
        print("error: n must be >= 1", file=sys.stderr)
        return 2

    rows = []
    for n in ns:
        if args.all_methods:
            values = {m: rho_compute(args.field, n, m).value for m in _methods_for(args.field)}
            if len(set(values.values())) != 1:
                print(f"DISAGREEMENT at n={n}: {values}", file=sys.stderr)
                return 1
            rows.append((n, values))
        else:
            method = _METHOD_BY_FLAG[args.method]
            if method == "adams_closed_form" and args.field is not Field.R:
                print("error: --method closed-form applies to --field r only", file=sys.stderr)
                return 2
            if method == "direct_formula" and args.field is Field.R:
                print("error: --method direct applies to --field c or h", file=sys.stderr)
                return 2
            res = rho_compute(args.field, n, method)
            rows.append((n, {res.method: res.value}))

    if args.format == "json":
        doc = [
            {"field": args.field.value, "n": n, "values": vals} for n, vals in rows
        ]
        print(json.dumps(doc if len(doc) > 1 else doc[0], indent=2))
    elif args.format == "csv":
        print("field,n,method,value")
        for n, vals in rows:
            for m, v in vals.items():
                print(f"{args.field.value},{n},{m},{v}")
    else:
        for n, vals in rows:
            if args.all_methods:
                detail = " ".join(f"{m}={v}" for m, v in vals.items())
                print(f"{n} {detail}" if len(rows) > 1 else detail)
            else:
                v = next(iter(vals.values()))
                print(f"{n} {v}" if len(rows) > 1 else v)
    return 0


# ---------------------------------------------------------------------------
# james


def _cmd_james(args: argparse.Namespace) -> int:
    if args.m < 0:
        print("error: --m must be >= 0", file=sys.stderr)
        return 2
    prof = profile(args.field, args.m)
    vals = dict(sorted(prof.valuations.items()))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "field": prof.field.value,
                    "m": prof.m,
                    "valuations": {str(p): v for p, v in vals.items()},
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print("field,m,prime,valuation")
        for p, v in vals.items():
            print(f"{prof.field.value},{prof.m},{p},{v}")
    else:
        if not vals:
            print("1")
        else:
            print(" * ".join(f"{p}^{v}" if v > 1 else str(p) for p, v in vals.items()))
    return 0


# ---------------------------------------------------------------------------
# table


def table_rows(ns: Sequence[int]) -> list[tuple[int, int, int, int]]:
    """One row (n, rho_R(R^{4n}), rho_C(C^{2n}), rho_H(H^n)) per requested n."""
    return [
        (n, rho_real_adams(4 * n), rho_direct(Field.C, 2 * n), rho_direct(Field.H, n))
        for n in ns
    ]


def _cmd_table(args: argparse.Namespace) -> int:
    ns = args.n_list if args.n_list is not None else list(TABLE_DEFAULT_NS)
    if any(n < 1 for n in ns):
        print("error: table entries must be >= 1", file=sys.stderr)
        return 2
    rows = table_rows(ns)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"n": n, "rho_R_4n": a, "rho_C_2n": b, "rho_H_n": c}
                    for n, a, b, c in rows
                ],
                indent=2,
            )
        )
    elif args.format == "csv":
        print("n,rho_R_4n,rho_C_2n,rho_H_n")
        for n, a, b, c in rows:
            print(f"{n},{a},{b},{c}")
    else:
        headers = ["n", "rho_R_4n", "rho_C_2n", "rho_H_n"]
        cols = [[h] + [str(row[i]) for row in rows] for i, h in enumerate(headers)]
        # transpose to the row-per-quantity layout with aligned fixed widths
        widths = [max(len(cols[i][j]) for i in range(4)) for j in range(len(rows) + 1)]
        label_w = max(len(h) for h in headers)
        for i, h in enumerate(headers):
            cells = [h.rjust(label_w)] + [
                cols[i][j + 1].rjust(widths[j + 1]) for j in range(len(rows))
            ]
            print("  ".join(cells))
    return 0


# ---------------------------------------------------------------------------
# verify


def _verify_lemma7(m_max: int) -> tuple[bool, str]:
    bad = find_refinement_mismatch(m_max)
    if bad is None:
        return True, f"refined valuation route equals the full route (m <= {m_max}, C and H, p <= 2m+1)"
    fld, p, m, a, b = bad
    return False, f"first counterexample field={fld.value} p={p} m={m}: refined={a} full={b}"


def _verify_theorem8(lo: int, hi: int) -> tuple[bool, str]:
    for fld in (Field.C, Field.H):
        bad = find_direct_oracle_mismatch(fld, lo, hi, even_only=True)
        if bad is not None:
            n, a, b = bad
            return False, f"first counterexample field={fld.value} n={n}: direct={a} oracle={b}"
    return True, f"direct formula equals the oracle for even n in [{lo}, {hi}] over C and H"


def _verify_theorem9(lo: int, hi: int) -> tuple[bool, str]:
    report = gap_sweep(lo, hi, cross_check=True)
    if not report.ok:
        return False, f"first counterexample {report.violation}"
    hist = " ".join(f"d={d}: {c}" for d, c in sorted(report.histogram.items()))
    return True, f"gap in {{1, 3}} for n in [{lo}, {hi}] ({hist})"


def _verify_relation(kind: str, lo: int, hi: int) -> tuple[bool, str]:
    report = relation_check(kind, lo, hi)
    if report.ok:
        return True, f"{report.checked} cases in [{lo}, {hi}]"
    return False, f"first counterexample {report.counterexample}"


def _verify_identities(trials: int, seed: int) -> tuple[bool, str]:
    failure = run_identity_trials(trials, seed)
    if failure is None:
        return True, f"6 identities x {trials} exact random trials (seed {seed}, dims 1,2,3,5)"
    return False, f"first counterexample {failure}"


def _cmd_verify(args: argparse.Namespace) -> int:
    def run_one(check: str) -> tuple[bool, str]:
        if check == "lemma7":
            return _verify_lemma7(args.m_max if args.m_max is not None else 200)
        if check == "theorem8":
            lo, hi = args.range or (1, 100_000)
            return _verify_theorem8(lo, hi)
        if check == "theorem9":
            lo, hi = args.range or (1, 100_000)
            return _verify_theorem9(lo, hi)
        if check == "ss73":
            lo, hi = args.range or (0, 100)
            return _verify_relation("ss73", lo, hi)
        if check == "aw-parity":
            lo, hi = args.range or (1, 100)
            return _verify_relation("aw_odd_even", lo, hi)
        if check == "corollary6":
            lo, hi = args.range or (1, 100_000)
            return _verify_relation("doubling", lo, hi)
        if check == "adams":
            lo, hi = args.range or (1, 100_000)
            return _verify_relation("adams_consistency", lo, hi)
        if check == "identities":
            return _verify_identities(args.trials, args.seed)
        raise AssertionError(check)

    checks = [c for c in VERIFY_CHECKS if c != "all"] if args.check == "all" else [args.check]
    exit_code = 0
    for check in checks:
        try:
            ok, detail = run_one(check)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"{'PASS' if ok else 'FAIL'} {check}: {detail}")
        if not ok:
            exit_code = 1
    return exit_code


# ---------------------------------------------------------------------------
# construct / check-family


def _certificate_summary(family: FieldFamily) -> tuple[bool, list[str]]:
    lines = []
    all_ok = True
    for m in family.members:
        cert = is_vector_field(m)
        lines.append(
            f"{m.name or '(unnamed)'}: skew={'yes' if cert.skew else 'NO'} "
            f"nonsingular={'yes' if cert.nonsingular else 'NO'}"
        )
        all_ok = all_ok and cert.ok
    hr = hurwitz_radon_check(as_real_family(family))
    lines.append(f"hurwitz-radon relations: {'hold' if hr else 'do not hold'}")
    return all_ok, lines


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.what == "example4":
        if args.n is None:
            print("error: construct example4 needs --n", file=sys.stderr)
            return 2
        try:
            m1, m2 = example4(args.n)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        family = FieldFamily(2 * args.n, (m1, m2), Field.R)
    else:  # lift
        if args.input is None or args.direction is None:
            print("error: construct lift needs --input and --direction", file=sys.stderr)
            return 2
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                source = family_from_json(fh.read())
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 2
        except ValueError as exc:
            print(f"error: malformed family file: {exc}", file=sys.stderr)
            return 2
        try:
            family = lift(source, args.direction.replace("-", "_"))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    text = family_to_json(family)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        out = sys.stdout
    else:
        print(text)
        out = sys.stderr
    ok, lines = _certificate_summary(family)
    for line in lines:
        print(line, file=out)
    if not ok:
        print("constructed members failed their own certificate", file=sys.stderr)
        return 1
    return 0


def _cmd_check_family(args: argparse.Namespace) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            family = family_from_json(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: malformed family file: {exc}", file=sys.stderr)
        return 2

    print(
        f"members: {len(family)}, dim {family.dim}, claimed field {family.claimed_field.value}"
    )
    try:
        expanded = as_real_family(family)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    count = args.points if args.points is not None else 2 * (family.dim - 1) + 48
    points = default_points(family.dim, count, args.seed)

    failed = [m.name for m in expanded.members if not is_vector_field(m).ok]
    if failed:
        print(f"certificate: FAIL, not a vector field: {', '.join(failed)}")
        return 1
    print("certificate: all members skew and nonsingular")

    if args.target == "none":
        if hurwitz_radon_check(expanded):
            print("independence: sufficient (hurwitz-radon relations hold everywhere)")
            return 0
        ok, witness = sampled_independence(family, points)
        if ok:
            print(f"independence: sampled-only ({len(points)} exact points, necessary condition)")
            return 0
        print(f"independence: FAIL at sample point {tuple(str(c) for c in witness.coords)}")
        return 1

    try:
        report = promotes_to(family, args.target.replace("-", "_"), points)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if report.level == "sufficient":
        print(f"promotion to {args.target}: sufficient (hurwitz-radon relations hold)")
        return 0
    if report.level == "sampled_only":
        print(f"promotion to {args.target}: sampled-only ({len(points)} exact points)")
        return 0
    if report.failed_member is not None:
        print(f"promotion to {args.target}: FAIL, composite {report.failed_member} is not a vector field")
    else:
        print(
            f"promotion to {args.target}: FAIL at sample point "
            f"{tuple(str(c) for c in report.witness.coords)}"
        )
    return 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spherefields",
        description="Exact counts, constructions and certificates for vector fields on spheres over R, C, H.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rho = sub.add_parser("rho", help="maximal number of independent vector fields")
    p_rho.add_argument("--field", type=_field_arg, required=True, help="r, c or h")
    p_rho.add_argument("--n", type=int, help="single dimension over the chosen field")
    p_rho.add_argument("--range", type=_parse_range, help="inclusive range A:B of dimensions")
    p_rho.add_argument(
        "--method",
        choices=sorted(_METHOD_BY_FLAG),
        default="auto",
        help="route: closed-form (R), direct (C/H), oracle, or auto",
    )
    p_rho.add_argument(
        "--all-methods",
        action="store_true",
        help="compute every applicable route and require agreement",
    )
    p_rho.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_rho.set_defaults(func=_cmd_rho)

    p_james = sub.add_parser("james", help="valuation profile of a James number")
    p_james.add_argument("--field", type=_field_arg, required=True)
    p_james.add_argument("--m", type=int, required=True)
    p_james.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_james.set_defaults(func=_cmd_james)

    p_table = sub.add_parser("table", help="table of rho_R(R^{4n}), rho_C(C^{2n}), rho_H(H^n)")
    p_table.add_argument("--n-list", type=_parse_n_list, help="comma-separated n values")
    p_table.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run a named verification sweep")
    p_verify.add_argument("check", choices=VERIFY_CHECKS)
    p_verify.add_argument("--range", type=_parse_range, help="inclusive range A:B")
    p_verify.add_argument("--m-max", type=int, help="upper index bound (lemma7)")
    p_verify.add_argument("--trials", type=int, default=1000, help="random trials (identities)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_con = sub.add_parser("construct", help="build a field family file")
    p_con.add_argument("what", choices=("example4", "lift"))
    p_con.add_argument("--n", type=int, help="complex dimension (example4; must be even)")
    p_con.add_argument("--input", help="family file to lift")
    p_con.add_argument(
        "--direction", choices=("c-to-r", "h-to-c", "h-to-r"), help="lift direction"
    )
    p_con.add_argument("--output", help="output family file (default: stdout)")
    p_con.set_defaults(func=_cmd_construct)

    p_chk = sub.add_parser("check-family", help="certify a field family file")
    p_chk.add_argument("--input", required=True, help="family file")
    p_chk.add_argument(
        "--target",
        choices=("none", "c", "h-via-c", "h-via-r"),
        default="none",
        help="promotion target (default: plain independence check)",
    )
    p_chk.add_argument("--points", type=int, help="number of exact sample points")
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.set_defaults(func=_cmd_check_family)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
