import json

import pytest

from bbwlab.certificate import Certificate
from bbwlab.cli import main
from bbwlab.ledger import DATA
from bbwlab.scenarios import ScenarioError, ScenarioResult, available, run_scenario


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_determined(capsys):
    code, out, _ = run(capsys, "cohomology", "--space", "igr:3:7", "O")
    assert code == 0 and "H^0 = k^1" in out


def test_cohomology_inconclusive_exit_2(capsys):
    code, out, _ = run(capsys, "cohomology", "--space", "igr:3:7", "O(1)")
    assert code == 2 and "Euler characteristic: 28" in out


def test_cohomology_gr(capsys):
    code, out, _ = run(capsys, "cohomology", "--space", "gr:1:2", "--json", "O(-2)")
    d = json.loads(out)
    assert code == 0 and d["payload"]["cohomology"] == {"1": 1}


def test_cohomology_even_igr(capsys):
    code, out, _ = run(capsys, "cohomology", "--space", "igr:2:4", "O(-1)")
    assert code == 0 and "acyclic" in out
    code, out, _ = run(capsys, "cohomology", "--space", "igr:3:8", "O")
    assert code == 2 and "INCONCLUSIVE" in out
    code, _, err = run(capsys, "cohomology", "--space", "igr:2:4", "Q")
    assert code == 1 and "error" in err


def test_input_errors_exit_1(capsys):
    code, _, err = run(capsys, "cohomology", "--space", "igr:3:7", "wedge^2")
    assert code == 1 and "position" in err
    code, _, err = run(capsys, "cohomology", "--space", "igr:4:7", "O")
    assert code == 1
    code, _, err = run(capsys, "verify", "nope")
    assert code == 1 and "igr37-main" in err
    assert run(capsys, "cohomology")[0] == 1
    assert run(capsys, "replay", "/no/such/file.json")[0] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "igr37-main")
    assert code == 0 and "50 cells" in out
    code, out, _ = run(capsys, "verify", "igr37-rank-wrong-codim", "--quiet")
    assert code == 2 and out.strip().endswith("FAIL")


def test_replay(capsys):
    code, out, _ = run(capsys, "replay", str(DATA / "igr37-fullness.json"))
    assert code == 0 and "32 of 32" in out
    code, out, _ = run(capsys, "replay", str(DATA / "igr37-fullness-no-q2.json"))
    assert code == 2 and "FAIL at Step 7" in out


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and out.split() == available()


@pytest.mark.parametrize("name", available())
def test_bundled_scenarios(name):
    res = run_scenario(name)
    want = "FAIL" if "wrong" in name else "PASS"
    assert res.verdict.value == want, res.messages


def test_json_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "igr37-s2", "--json")
    d = json.loads(out)
    assert d["schema"] == "bbwlab/1"
    assert ScenarioResult.from_dict(d).to_dict() == d
    cert = d["payload"]["grid"][0]["certificate"]
    assert Certificate.from_dict(cert).to_dict() == cert
    with pytest.raises(ValueError):
        ScenarioResult.from_dict({**d, "schema": "other/2"})


def test_scenario_file(tmp_path, capsys):
    p = tmp_path / "mine.json"
    p.write_text(json.dumps({"kind": "lefschetz", "basis": ["U", "O"], "r": 2}))
    code, out, _ = run(capsys, "verify", str(p))
    assert code == 0 and out.startswith("mine: PASS")
    p.write_text(json.dumps({"kind": "lefschetz", "basis": ["O", "U"], "r": 2}))
    code, out, _ = run(capsys, "verify", str(p))
    assert code == 2 and "i=0 j=1 t=0: FAIL" in out
    p.write_text(json.dumps({"kind": "lefschetz"}))
    with pytest.raises(ScenarioError):
        run_scenario(str(p))
