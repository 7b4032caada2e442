import json

import pytest

from vertexkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--dwbc", "3")
    assert code == 0 and json.loads(out) == {"schema": 1, "states": 7}
    code, out, _ = run(capsys, "enumerate", "--dwbc", "2", "--render")
    assert len(json.loads(out)["renders"]) == 2


def test_partition_symbolic_text(capsys):
    code, out, _ = run(capsys, "partition", "--dwbc", "1", "--scheme", "ff", "--symbolic")
    assert code == 0 and out.strip() == "1 - a1*b1"


def test_partition_points_are_reproducible(capsys, tmp_path):
    args = ("partition", "--dwbc", "2", "--points", "3", "--seed", "5", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    data = json.loads(first)
    assert data["state_count"] == 2 and len(data["values"]) == 3
    pfile = tmp_path / "pt.json"
    pfile.write_text(json.dumps(data["values"][0]["point"]))
    _, out, _ = run(capsys, "partition", "--dwbc", "2", "--point", str(pfile), "--engine", "brute")
    assert out.strip() == data["values"][0]["value"]


def test_model_file(capsys, tmp_path):
    model = tmp_path / "m.json"
    model.write_text(json.dumps({"rows": 2, "cols": 3, "top": [3], "right": [1]}))
    code, out, _ = run(capsys, "enumerate", "--model", str(model))
    assert code == 0 and json.loads(out)["states"] == 1


def test_ybe(capsys):
    code, out, _ = run(capsys, "ybe", "solve", "--pair", "2,1", "--orientation", "h", "--symbolic")
    assert code == 0 and "b2 = 1" in out.splitlines()
    code, out, _ = run(capsys, "ybe", "check", "--pair", "1,2", "--orientation", "v", "--points", "2", "--seed", "1")
    assert code == 0 and json.loads(out)["passed"]


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--model-size", "5,5", "--alpha", "5,3,2", "--beta", "4,2,1", "--emit-word")
    assert json.loads(out)["word"] == "dH1 dH2 dH4 dH3 dV4 dV2 dV3 dV1 dV2"
    code, out, _ = run(capsys, "reduce", "--model-size", "3,3", "--alpha", "3,1", "--beta", "2,1", "--symbolic")
    assert code == 0 and json.loads(out)["equal"]


def test_literal_word_form_is_reported(capsys):
    code, out, _ = run(capsys, "reduce", "--model-size", "5,5", "--alpha", "5,3,2", "--beta", "4,2,1",
                       "--form", "product", "--points", "1", "--seed", "1")
    data = json.loads(out)
    assert code == 1 and not data["passed"]
    assert not data["transport"]["ok"] and "needs" in data["transport"]["error"]


def test_verify_and_schur(capsys):
    code, out, _ = run(capsys, "verify", "admissibility", "--seed", "1")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "schur", "alternant", "--lambda", "1", "--n", "1", "--sign", "minus")
    assert out.strip() == "x1 - a1"
    code, out, _ = run(capsys, "schur", "factor-dwbc", "--n", "2")
    assert code == 0 and json.loads(out)["complete"]


@pytest.mark.parametrize("argv", [
    ["enumerate"],
    ["enumerate", "--dwbc", "2", "--base", "2,2,1"],
    ["partition", "--dwbc", "2", "--points", "2"],
    ["ybe", "solve", "--pair", "1,1", "--orientation", "h", "--symbolic"],
    ["reduce", "--model-size", "3,3", "--alpha", "2,2", "--beta", "2,1", "--symbolic"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
