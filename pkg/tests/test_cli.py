import json

import pytest

from omega3rb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("args, expect", [(("0", "1", "2"), "4*L_2"), (("1", "3", "5"), "0"), (("2", "2", "9"), "0")])
def test_bracket(capsys, args, expect):
    code, out, _ = run(capsys, "bracket", *args)
    assert code == 0 and out.strip() == expect


def test_check_pass_and_envelope(capsys):
    code, out, _ = run(capsys, "check", "--case", "FIN-2", "--window", "10")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "omega3rb/1" and doc["tool_version"]
    assert doc["counts"]["failed"] == 0 and doc["counts"]["checked"] == 21 ** 3
    assert doc["approximation_notes"]
    code, _, _ = run(capsys, "check", "--case", "FIN-3", "--params", "f0=0,f1=-1", "--window", "10")
    assert code == 0


def test_check_validation_exit(capsys):
    code, _, err = run(capsys, "check", "--case", "F0A-2", "--params", "a=-1/2,m0=1")
    assert code == 2 and "-1/2" in err


def test_check_failure_exit_and_witnesses(capsys):
    code, out, _ = run(capsys, "check", "--case", "F0A3-A3", "--params", "m0=1,cprime=2", "--window", "6")
    doc = json.loads(out)
    assert code == 1 and 0 < len(doc["witnesses"]) <= 10


def test_check_params_file(tmp_path, capsys):
    p = tmp_path / "f.ini"
    p.write_text("[family]\ncase = F0A-2\na = 1\nm0 = 1\n")
    code, out, _ = run(capsys, "check", "--params-file", str(p), "--window", "6")
    assert code == 0 and json.loads(out)["family"]["case"] == "F0A-2"


def test_float_rejected(capsys):
    code, _, _ = run(capsys, "check", "--case", "FIN-2", "--weight", "0.5")
    assert code == 2
    code, _, _ = run(capsys, "search", "--window", "2", "--values", "0,0.5")
    assert code == 2


def test_identities(capsys):
    assert run(capsys, "identities", "--suite", "fundamental", "--window", "6", "--trials", "200", "--seed", "7")[0] == 0
    assert run(capsys, "identities", "--suite", "det-criterion", "--window", "12")[0] == 0
    code, _, _ = run(capsys, "identities", "--suite", "derived-a-branch", "--case", "F0A-1",
                     "--params", "a=2,m0=1", "--window", "10")
    assert code == 0
    assert run(capsys, "identities", "--suite", "nope")[0] == 2
    assert run(capsys, "identities", "--suite", "derived-a-branch")[0] == 2


def test_identities_deterministic(capsys):
    a = run(capsys, "identities", "--suite", "fundamental", "--trials", "50", "--seed", "3")[1]
    b = run(capsys, "identities", "--suite", "fundamental", "--trials", "50", "--seed", "3")[1]
    assert a == b


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--window", "2", "--values", "0", "--margin", "1")
    assert code == 0 and json.loads(out)["solutions"] == 1
    code, out, _ = run(capsys, "search", "--window", "3", "--values", "0,-1", "--k", "1", "--margin", "1")
    doc = json.loads(out)
    assert code == 0 and doc["nonzero_on_reachable"] == []
    dest = tmp_path / "r.json"
    run(capsys, "search", "--window", "3", "--values", "0,-1", "--output", str(dest), "--margin", "1")
    assert json.loads(dest.read_text())["schema"] == "omega3rb/1"


def test_search_budget_exit(capsys):
    code, _, err = run(capsys, "search", "--window", "12", "--values", "0,-1,2", "--budget", "1000")
    assert code == 3 and "budget" in err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 40
    a2 = next(l for l in lines if l.startswith("F0A3-A2"))
    assert "c" in a2 and "d" in a2
    assert "m0" in next(l for l in lines if l.startswith("R01-1"))


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
