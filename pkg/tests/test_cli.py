"""Command-line surface tests: outputs, exit codes, determinism, round-trips."""

import json

import pytest

from spherefields.cli import main
from spherefields.fields import family_from_json
from spherefields.james import Field, profile


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rho_single(capsys):
    code, out, _ = run(capsys, "rho", "--field", "h", "--n", "1440")
    assert code == 0 and out.strip() == "2"


def test_rho_all_methods(capsys):
    code, out, _ = run(capsys, "rho", "--field", "c", "--n", "24", "--all-methods")
    assert code == 0
    assert "direct_formula=3" in out and "oracle=3" in out


def test_rho_odd_is_zero(capsys):
    code, out, _ = run(capsys, "rho", "--field", "r", "--n", "7")
    assert code == 0 and out.strip() == "0"


def test_rho_range_csv(capsys):
    code, out, _ = run(
        capsys, "rho", "--field", "r", "--range", "1:4", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "field,n,method,value"
    assert lines[1:] == [
        "R,1,adams_closed_form,0",
        "R,2,adams_closed_form,1",
        "R,3,adams_closed_form,0",
        "R,4,adams_closed_form,3",
    ]


def test_rho_usage_errors(capsys):
    code, _, err = run(capsys, "rho", "--field", "c")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "rho", "--field", "c", "--n", "4", "--method", "closed-form")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rho", "--field", "x", "--n", "4"])
    assert exc.value.code == 2


def test_james_json_roundtrip(capsys):
    code, out, _ = run(capsys, "james", "--field", "c", "--m", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"field": "C", "m": 2, "valuations": {"2": 3, "3": 1}}
    rebuilt = profile(Field(doc["field"]), doc["m"])
    assert {str(p): v for p, v in rebuilt.valuations.items()} == doc["valuations"]


def test_james_text(capsys):
    code, out, _ = run(capsys, "james", "--field", "h", "--m", "1")
    assert code == 0 and out.strip() == "2^3 * 3"
    code, out, _ = run(capsys, "james", "--field", "r", "--m", "8")
    assert code == 0 and out.strip() == "2^4"
    code, out, _ = run(capsys, "james", "--field", "c", "--m", "0")
    assert code == 0 and out.strip() == "1"


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == [
        "n,rho_R_4n,rho_C_2n,rho_H_n",
        "1,3,1,0",
        "2,7,1,0",
        "4,8,1,0",
        "6,7,1,0",
        "12,8,3,0",
        "24,9,3,1",
        "1440,15,5,2",
    ]


def test_table_custom_columns(capsys):
    # n=3: nu_2(12)=2 so 2^2-1=3; n=10: nu_2(40)=3 so 2^3-1=7
    code, out, _ = run(capsys, "table", "--n-list", "3,10", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[1:] == ["3,3,1,0", "10,7,1,0"]


def test_table_text_aligned(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert len({len(line) for line in lines}) == 1  # fixed width rows
    assert lines[0].split() == ["n", "1", "2", "4", "6", "12", "24", "1440"]
    assert lines[1].split() == ["rho_R_4n", "3", "7", "8", "7", "8", "9", "15"]


def test_verify_pass_paths(capsys):
    code, out, _ = run(capsys, "verify", "lemma7", "--m-max", "40")
    assert code == 0 and out.startswith("PASS lemma7")
    code, out, _ = run(capsys, "verify", "theorem8", "--range", "1:400")
    assert code == 0 and out.startswith("PASS theorem8")
    code, out, _ = run(capsys, "verify", "theorem9", "--range", "1:400")
    assert code == 0 and "d=1" in out and "d=3" in out
    code, out, _ = run(capsys, "verify", "ss73", "--range", "0:20")
    assert code == 0
    code, out, _ = run(capsys, "verify", "aw-parity", "--range", "1:20")
    assert code == 0
    code, out, _ = run(capsys, "verify", "corollary6", "--range", "1:80")
    assert code == 0
    code, out, _ = run(capsys, "verify", "adams", "--range", "1:400")
    assert code == 0
    code, out, _ = run(capsys, "verify", "identities", "--trials", "20", "--seed", "42")
    assert code == 0 and out.startswith("PASS identities")


def test_verify_bad_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "theorem8", "--range", "10:1"])
    assert exc.value.code == 2


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "identities", "--trials", "10", "--seed", "9")
    _, out2, _ = run(capsys, "verify", "identities", "--trials", "10", "--seed", "9")
    assert out1 == out2


def test_construct_example4_file_roundtrip(tmp_path, capsys):
    target = tmp_path / "ex4.json"
    code, out, _ = run(capsys, "construct", "example4", "--n", "2", "--output", str(target))
    assert code == 0
    assert "hurwitz-radon relations: hold" in out
    fam = family_from_json(target.read_text())
    assert fam.dim == 4 and len(fam) == 2
    assert [m.name for m in fam.members] == ["M1", "M2"]
    # byte-identical reruns
    code2, out2, _ = run(capsys, "construct", "example4", "--n", "2", "--output", str(target))
    assert (code, out) == (code2, out2)


def test_construct_example4_stdout(capsys):
    code, out, err = run(capsys, "construct", "example4", "--n", "2")
    assert code == 0
    fam = family_from_json(out)
    assert len(fam) == 2
    assert "hurwitz-radon" in err


def test_construct_example4_odd_rejected(capsys):
    code, _, err = run(capsys, "construct", "example4", "--n", "3")
    assert code == 2 and "even" in err


def test_construct_lift(tmp_path, capsys):
    src = tmp_path / "src.json"
    out_file = tmp_path / "lifted.json"
    code, out, _ = run(capsys, "construct", "example4", "--n", "2", "--output", str(src))
    assert code == 0
    # reuse only the first member, claimed complex, then lift to the reals
    fam = family_from_json(src.read_text())
    from spherefields.fields import FieldFamily, family_to_json

    src.write_text(family_to_json(FieldFamily(4, fam.members[:1], Field.C)))
    code, out, _ = run(
        capsys,
        "construct",
        "lift",
        "--input",
        str(src),
        "--direction",
        "c-to-r",
        "--output",
        str(out_file),
    )
    assert code == 0
    lifted = family_from_json(out_file.read_text())
    assert len(lifted) == 2 and lifted.claimed_field is Field.R


def test_construct_lift_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    code, _, err = run(
        capsys, "construct", "lift", "--input", str(bad), "--direction", "c-to-r"
    )
    assert code == 2 and "malformed" in err


def test_check_family_pass_sufficient(tmp_path, capsys):
    target = tmp_path / "fam.json"
    run(capsys, "construct", "example4", "--n", "2", "--output", str(target))
    code, out, _ = run(capsys, "check-family", "--input", str(target))
    assert code == 0 and "sufficient" in out


def test_check_family_dependent_fails(tmp_path, capsys):
    from fractions import Fraction as Fr

    from spherefields.fields import FieldFamily, LinearField, example4, family_to_json

    m1, _ = example4(2)
    neg = LinearField(tuple(tuple(-x for x in row) for row in m1.matrix), name="neg")
    target = tmp_path / "dep.json"
    target.write_text(family_to_json(FieldFamily(4, (m1, neg), Field.R)))
    code, out, _ = run(capsys, "check-family", "--input", str(target))
    assert code == 1 and "FAIL at sample point" in out


def test_check_family_dimension_obstruction(tmp_path, capsys):
    target = tmp_path / "fam.json"
    run(capsys, "construct", "example4", "--n", "2", "--output", str(target))
    code, out, _ = run(capsys, "check-family", "--input", str(target), "--target", "c")
    assert code == 1 and "FAIL" in out


def test_check_family_promotion_sufficient(tmp_path, capsys):
    from spherefields.fields import FieldFamily, example4, family_to_json

    m1, _ = example4(2)
    target = tmp_path / "single.json"
    target.write_text(family_to_json(FieldFamily(4, (m1,), Field.R)))
    code, out, _ = run(capsys, "check-family", "--input", str(target), "--target", "c")
    assert code == 0 and "sufficient" in out


def test_check_family_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"space_dim": 4}')
    code, _, err = run(capsys, "check-family", "--input", str(bad))
    assert code == 2 and "malformed" in err


def test_check_family_missing_file(capsys):
    code, _, err = run(capsys, "check-family", "--input", "/nonexistent/f.json")
    assert code == 2 and "cannot read" in err
