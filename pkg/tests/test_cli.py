import json
import subprocess
import sys

import pytest

from conjsizes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("limit,count", [(1, 0), (2, 1), (12, 4)])
def test_pairs_text(capsys, limit, count):
    code, out, _ = run(capsys, "pairs", "--limit", str(limit))
    assert code == 0
    assert len(out.splitlines()) == count


def test_pairs_bound_p(capsys):
    code, out, _ = run(capsys, "pairs", "--limit", "200", "--bound", "p", "--format", "json")
    assert code == 0
    pairs = json.loads(out)["pairs"]
    assert len(pairs) == 10 and pairs[0] == [2, 5] and pairs[-1] == [89, 179]


def test_verify_p5(capsys):
    code, out, _ = run(capsys, "verify", "--p", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] and data["num_checks"] >= 25 and data["num_failed"] == 0


def test_verify_bad_r_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "--p", "5", "--r", "2")
    assert code == 2 and out == ""
    assert "error" in err


def test_verify_over_budget_refused(capsys):
    code, _, err = run(capsys, "verify", "--p", "11")
    assert code == 2
    assert "bytes" in err


def test_classes_Q(capsys):
    code, out, _ = run(capsys, "classes", "--group", "Q", "--q", "2")
    assert code == 0
    assert out.splitlines()[2:] == ["1 2", "2 3"]


@pytest.mark.parametrize(
    "group,sizes",
    [("P", [1, 5, 125]), ("G", [1, 2, 5, 10, 125, 250])],
)
def test_classes_family(capsys, group, sizes):
    code, out, _ = run(capsys, "classes", "--group", group, "--p", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["distinct_sizes"] == sizes


def test_classes_needs_p(capsys):
    code, _, _ = run(capsys, "classes", "--group", "G")
    assert code == 2


def test_lemmas_rejects_zero_samples(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lemmas", "--samples", "0"])
    assert exc.value.code == 2


def test_lemmas_rerun_is_byte_identical(capsys):
    _, first, _ = run(capsys, "lemmas", "--samples", "200", "--seed", "42", "--format", "json")
    _, second, _ = run(capsys, "lemmas", "--samples", "200", "--seed", "42", "--format", "json")
    assert first == second
    assert json.loads(first)["passed"]


def test_verify_json_independent_of_threads(capsys):
    _, one, _ = run(capsys, "verify", "--p", "5", "--format", "json", "--threads", "1")
    _, three, _ = run(capsys, "verify", "--p", "5", "--format", "json", "--threads", "3")
    assert one == three


def test_text_output_uses_plain_integers(capsys):
    _, out, _ = run(capsys, "verify", "--p", "5")
    assert "e+" not in out and "250" in out


def test_output_file(tmp_path, capsys):
    path = tmp_path / "pairs.json"
    assert main(["pairs", "--limit", "12", "--format", "json", "-o", str(path)]) == 0
    assert capsys.readouterr().out == ""
    assert len(json.loads(path.read_text())["pairs"]) == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "conjsizes", "pairs", "--limit", "12"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["2 5", "3 7", "5 11", "11 23"]
