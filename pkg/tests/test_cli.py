"""The qtwist command-line driver."""

import json

import pytest

from qtwist.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_basis_table_json(capsys):
    status, out, _ = run(capsys, "basis", "--type", "A2", "--word", "1,2,1", "--height", "4",
                         "--format", "json")
    assert status == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["word"] == [1, 2, 1]
    assert {"degree": [0, 1], "label": [0, 0, 1], "element": "(1 - q^2)*f2"} in data["basis"]
    # degree (a, b) carries min(a, b) + 1 elements in A2
    expected = sum(min(a, b) + 1 for a in range(5) for b in range(5) if a + b <= 4)
    assert len(data["basis"]) == expected == 22


def test_output_is_deterministic(capsys):
    first = run(capsys, "basis", "--type", "B2", "--height", "3", "--format", "json")
    second = run(capsys, "basis", "--type", "B2", "--height", "3", "--format", "json")
    assert first == second


def test_period_in_b2(capsys):
    status, out, _ = run(capsys, "period", "--type", "B2", "--element", "f1", "--n", "6")
    assert status == 0
    assert "identity: true" in out.splitlines()


def test_mutate_twice_echoes_initial_seed(capsys):
    _, start, _ = run(capsys, "seed", "--type", "A2", "--word", "1,2,1", "--format", "json")
    status, out, _ = run(capsys, "mutate", "--type", "A2", "--word", "1,2,1", "--path", "1,1",
                         "--format", "json")
    assert status == 0
    data = json.loads(out)
    assert data["returns_to_initial"]
    assert data["seed"]["lambda"] == json.loads(start)["seed"]["lambda"]
    assert data["seed"]["path"] == [1, 1]


def test_mutate_a_pair_from_file(capsys, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"lambda": [[0, -1], [1, 0]], "btilde": [[0], [1]]}))
    status, out, _ = run(capsys, "mutate", "--type", "A2", "--pair", str(path), "--path", "1",
                         "--format", "json")
    assert status == 0
    assert json.loads(out)["seed"]["lambda"] == [[0, 1], [-1, 0]]


def test_pair_minor_and_twist(capsys):
    assert run(capsys, "pair", "--type", "A2", "--x", "f1", "--y", "f1")[1].strip() == "-1/(-1 + q^2)"
    status, out, _ = run(capsys, "minor", "--type", "A2", "--left", "1", "--lam", "1,0")
    assert status == 0 and out.strip() == "(1 - q^2)*f1"
    status, out, _ = run(capsys, "twist", "--type", "A1", "--element", "1", "--lam", "1",
                         "--format", "json")
    assert status == 0 and json.loads(out)["output"]["denominator"] == [0]


def test_seed_with_exchange_checks(capsys):
    status, out, _ = run(capsys, "seed", "--type", "A2", "--exchange")
    assert status == 0
    assert "dual_canonical=true" in out


@pytest.mark.parametrize("argv", [
    ["basis", "--type", "A2"],
    ["frobnicate"],
    ["basis", "--type", "A2", "--height", "x"],
    ["basis", "--type", "Z9", "--height", "2"],
    ["basis", "--type", "A2", "--word", "1,1", "--height", "2"],
    ["mutate", "--type", "A2", "--path", "5"],
    ["pair", "--type", "A2", "--x", "f7", "--y", "f1"],
    ["verify"],
])
def test_bad_flags_exit_2(capsys, argv):
    try:
        status = main(argv)
    except SystemExit as exc:
        status = exc.code
    assert status == 2
    assert "usage" in capsys.readouterr().err


def test_computation_error_is_structured(capsys):
    status, _, err = run(capsys, "basis", "--type", "A2", "--height", "40")
    assert status == 1
    payload = json.loads(err)
    assert payload["error"] == "HeightCapError" and payload["verb"] == "basis"
    status, _, err = run(capsys, "seed", "--type", "B2")
    assert status == 1 and json.loads(err)["error"] == "ClusterError"


def test_verify_reports_each_property(capsys):
    status, out, _ = run(capsys, "verify", "--module", "scalars", "--module", "qcluster")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "PASS scalars.bar_involution"
    assert all(line.startswith("PASS ") for line in lines)
