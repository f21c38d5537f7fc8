"""Command-line interface: verbs, schemas, exit codes, scan determinism."""

import json

import pytest

from prymlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_human(capsys):
    code, out, _ = run(capsys, "classify", "3", "4")
    assert code == 0
    assert "j = 7/16" in out
    assert "J(E_6)" in out
    assert "Z/3" in out


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, "classify", "-4", "2", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["curve"] == {"a": "-4", "b": "2"}
    assert rec["j"] == "-1"
    assert rec["endo"]["cm_discriminant"] == -24
    assert rec["endo"]["sato_tate"] == "J(E_3)"
    assert rec["dual"] == {"a": "-32", "b": "128"}
    assert rec["oracle"] is None
    # every rational is a string; no floats anywhere
    def no_floats(node):
        if isinstance(node, dict):
            return all(no_floats(v) for v in node.values())
        if isinstance(node, list):
            return all(no_floats(v) for v in node)
        return not isinstance(node, float)

    assert no_floats(rec)


def test_classify_with_oracle_upgrades(capsys):
    code, out, _ = run(capsys, "classify", "--json", "--primes", "7,13", "-5", "4")
    assert code == 0
    rec = json.loads(out)
    assert rec["oracle"] is not None
    assert rec["oracle"]["gcd"] % 9 == 0
    assert rec["torsion"]["group"] == "Z/3 x Z/3"


def test_degenerate_exit_2(capsys):
    code, _, err = run(capsys, "classify", "2", "1")
    assert code == 2
    assert "discriminant vanishes" in err


def test_parse_error_exit_1(capsys):
    code, _, err = run(capsys, "classify", "x", "4")
    assert code == 1


def test_dual_twist_json(capsys):
    code, out, _ = run(capsys, "dual", "1", "1")
    assert code == 0 and json.loads(out) == {"a": "8", "b": "-48"}
    code, out, _ = run(capsys, "twist", "3", "4", "-1")
    assert code == 0 and json.loads(out) == {"a": "-3", "b": "4"}


def test_family_list_and_instantiate(capsys):
    code, out, _ = run(capsys, "family", "list")
    assert code == 0
    entries = json.loads(out)
    ids = [e["id"] for e in entries]
    assert "table2_Z6" in ids and "gl2_sqrt2_F9" in ids
    assert len(ids) == 16

    code, out, _ = run(
        capsys, "family", "instantiate", "table2_Z3xZ6", "--param", "c=2"
    )
    assert code == 0 and json.loads(out) == {"a": "-720", "b": "82944"}


def test_family_errors(capsys):
    code, _, err = run(capsys, "family", "instantiate", "nope")
    assert code == 1
    code, _, err = run(
        capsys, "family", "instantiate", "table2_Z3xZ6", "--param", "c=1"
    )
    assert code == 2  # degenerate parameters


def test_oracle_verb(capsys):
    code, out, _ = run(capsys, "oracle", "-5", "4", "--primes", "5,7")
    assert code == 0
    data = json.loads(out)
    assert data["gcd"] == 9
    assert [row["p"] for row in data["per_prime"]] == [5, 7]
    assert data["per_prime"][1]["prym_order"] == 63


def test_oracle_bad_prime_exit_1(capsys):
    code, _, err = run(capsys, "oracle", "-5", "4", "--primes", "4")
    assert code == 1


def test_scan_box_deterministic(capsys, tmp_path):
    code, out1, _ = run(capsys, "scan", "--box", "a=-2..2", "b=1..3")
    assert code == 0
    code, out2, _ = run(capsys, "scan", "--box", "a=-2..2", "b=1..3")
    assert out1 == out2
    records = [json.loads(line) for line in out1.splitlines()]
    # (a, b) = (2, 1) and (-2, 1) are degenerate and skipped
    assert len(records) == 5 * 3 - 2
    pairs = [(r["curve"]["a"], r["curve"]["b"]) for r in records]
    assert pairs == sorted(pairs, key=lambda t: (int(t[0]), int(t[1])))


def test_scan_family_sweep(capsys):
    code, out, _ = run(
        capsys, "scan", "--family", "table2_Z6", "--param", "c=1..20"
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert len(records) == 20
    for rec in records:
        group = rec["torsion"]["group"]
        assert rec["torsion"]["two_rank"] >= 1
        assert rec["torsion"]["three_rank"] >= 1
        assert group in ("Z/6", "Z/6 x Z/3")


def test_scan_resume(capsys, tmp_path):
    out_path = tmp_path / "scan.jsonl"
    code, _, _ = run(capsys, "scan", "--box", "a=-2..2", "b=1..3",
                     "--out", str(out_path))
    assert code == 0
    full = out_path.read_text()
    # truncate to the first 4 lines and resume
    lines = full.splitlines(keepends=True)
    out_path.write_text("".join(lines[:4]))
    code, _, _ = run(capsys, "scan", "--box", "a=-2..2", "b=1..3",
                     "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == full
    # running again on a complete file appends nothing
    code, _, _ = run(capsys, "scan", "--box", "a=-2..2", "b=1..3",
                     "--out", str(out_path))
    assert out_path.read_text() == full


def test_scan_jobs_byte_identical(capsys, tmp_path):
    one = tmp_path / "one.jsonl"
    four = tmp_path / "four.jsonl"
    run(capsys, "scan", "--box", "a=-3..3", "b=1..4", "--out", str(one))
    run(capsys, "scan", "--box", "a=-3..3", "b=1..4", "--jobs", "4",
        "--out", str(four))
    assert one.read_text() == four.read_text()


def test_scan_rejects_conflicting_modes(capsys):
    code, _, err = run(capsys, "scan", "--box", "a=1..2", "b=1..2",
                       "--family", "table2_Z6")
    assert code == 1


def test_usage_error_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["classify"])  # missing b
    assert exc.value.code == 1


def test_negative_rational_positional(capsys):
    code, out, _ = run(capsys, "classify", "-5/9", "2", "--json")
    assert code == 0
    assert json.loads(out)["curve"]["a"] == "-5/9"
