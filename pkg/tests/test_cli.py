import json

import pytest

from braidact import endo
from braidact.cli import main


@pytest.fixture(autouse=True)
def restore_length_cap():
    original = endo.get_length_cap()
    yield
    endo.set_length_cap(original)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apply_examples(capsys):
    code, out, _ = run(capsys, "apply", "1", "b1", "--genus", "2")
    assert code == 0 and out.strip() == "a1 b1"
    code, out, _ = run(capsys, "apply", "3", "b2", "--genus", "2")
    assert code == 0 and out.strip() == "a2 A1 b2"
    code, out, _ = run(capsys, "apply", "", "a1", "--genus", "2")
    assert code == 0 and out.strip() == "a1"


def test_apply_json(capsys):
    code, out, _ = run(capsys, "apply", "1", "b1", "--json")
    assert code == 0
    assert json.loads(out) == {"result": "a1 b1"}


def test_apply_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "apply", "1 x", "b1")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "apply", "1", "q9")
    assert code == 2


def test_apply_resource_cap_exits_3(capsys):
    code, _, err = run(capsys, "apply", "1 1 1 1 1 1", "b1", "--max-len", "3")
    assert code == 3
    assert "cap" in err


def test_matrix_examples(capsys):
    code, out, _ = run(capsys, "matrix", "1", "--genus", "2", "--json")
    assert code == 0
    assert json.loads(out) == [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    code, out, _ = run(capsys, "matrix", "DELTA6", "--genus", "2", "--json")
    assert json.loads(out) == [[0, -1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]
    code, out, _ = run(capsys, "matrix", "", "--genus", "2", "--json")
    assert json.loads(out) == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_matrix_text_output_is_aligned(capsys):
    code, out, _ = run(capsys, "matrix", "DELTA6")
    assert code == 0
    assert out.count("\n") == 4


def test_equal_examples(capsys):
    code, out, _ = run(capsys, "equal", "1 2 1", "2 1 2", "--strands", "6")
    assert code == 0 and out.strip() == "equal"
    code, out, _ = run(capsys, "equal", "GAMMA", "1 -3 5")
    assert code == 0
    code, out, _ = run(capsys, "equal", "1", "2")
    assert code == 1 and out.strip() == "not equal"


def test_parse_subcommand(capsys):
    code, out, _ = run(capsys, "parse", "word", "A1  a1   b2", "--genus", "2")
    assert code == 0 and out.strip() == "b2"
    code, out, _ = run(capsys, "parse", "braid", "ALPHA", "--strands", "6")
    assert code == 0 and out.strip() == "4 5 4 5 4 5"
    code, out, _ = run(capsys, "parse", "omega", "u1 U2", "--genus", "2")
    assert code == 0 and out.strip() == "u1 U2"


def test_verify_relations_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "relations", "--genus", "2")
    assert code == 0
    assert "10/10" in out


def test_verify_center_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "center", "--genus", "1", "--json")
    assert code == 0
    checks = json.loads(out)
    assert isinstance(checks, list)
    for check in checks:
        assert set(check) <= {"check_id", "description", "status", "witness"}
        assert check["status"] in ("pass", "fail", "quotient-level-pass")


def test_verify_sp4_reports_the_defects_and_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "sp4", "--json")
    assert code == 1
    checks = json.loads(out)
    failing = sorted(c["check_id"] for c in checks if c["status"] == "fail")
    assert "sp4.kernel.matrix.alpha-beta" in failing
    assert "sp4.presentation.cube-conjugation" in failing
    assert "sp4.gamma17.jump" in failing
    by_id = {c["check_id"]: c for c in checks}
    assert by_id["sp4.gamma17.jump-corrected"]["status"] == "pass"


def test_verify_monoid_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "monoid", "--genus", "2", "--max-len", "3")
    assert code == 0


def test_verify_symplectic_prints_seed(capsys):
    code, out, _ = run(capsys, "verify", "symplectic", "--seed", "11")
    assert code == 0
    assert "seed: 11" in out


def test_verify_output_is_sorted_by_check_id(capsys):
    _, out, _ = run(capsys, "verify", "relations", "--genus", "2")
    ids = [line.split()[1] for line in out.splitlines() if line.startswith(("PASS", "FAIL", "QPASS"))]
    assert ids == sorted(ids)


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "everything"])
    assert exc.value.code == 2
