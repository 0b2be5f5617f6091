import json
import math

import pytest

from lo_invariants import io
from lo_invariants.cli import cli_main
from lo_invariants.fock import Convention, FockState
from lo_invariants.scalars import GaussianRational as G


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


ONE_ONE = {"n": 2, "m": 2, "convention": "ket", "amplitudes": [{"occ": [1, 1], "re": "1"}]}
HALF_TWO_ZERO = {"n": 2, "m": 2, "convention": "ket",
                 "amplitudes": [{"occ": [2, 0], "re": repr(1 / math.sqrt(2))}]}
HOM_OUT = {"n": 2, "m": 2, "convention": "ket",
           "amplitudes": [{"occ": [2, 0], "re": repr(1 / math.sqrt(2))},
                          {"occ": [0, 2], "re": repr(-1 / math.sqrt(2))}]}


def test_state_round_trip():
    s = FockState(2, 2, {(1, 1): G(1, -2), (2, 0): G(0, 1)}, Convention.MONOMIAL)
    assert io.state_from_dict(io.state_to_dict(s), exact=True) == s


def test_state_rejects_unknown_fields():
    with pytest.raises(ValueError, match="unknown"):
        io.state_from_dict({**ONE_ONE, "extra": 1})
    with pytest.raises(ValueError, match="unknown"):
        io.state_from_dict({**ONE_ONE, "amplitudes": [{"occ": [1, 1], "re": "1", "phase": "0"}]})


def test_unitary_parsing():
    u = io.unitary_from_dict({"m": 2, "entries": [[{"re": "0"}, {"re": "1"}], [{"re": "1"}, {"re": "0"}]]},
                             exact=True)
    assert u.unitarity_defect() == 0
    assert io.unitary_from_dict(io.unitary_to_dict(u), exact=True) == u
    with pytest.raises(ValueError, match="not unitary"):
        io.unitary_from_dict({"m": 1, "entries": [[{"re": "2"}]]})


def test_reach_unreachable_exit_code(tmp_path, capsys):
    code = cli_main(["reach", "--src", write(tmp_path, "a.json", ONE_ONE),
                     "--dst", write(tmp_path, "b.json", HALF_TWO_ZERO)])
    out = capsys.readouterr().out
    assert code == 1
    assert "UNREACHABLE" in out and "f2: 0.0625 vs 0" in out


def test_reach_reachable(tmp_path, capsys):
    code = cli_main(["reach", "--src", write(tmp_path, "a.json", ONE_ONE),
                     "--dst", write(tmp_path, "b.json", HOM_OUT), "--json"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["status"] == "REACHABLE"


def test_molien(capsys):
    assert cli_main(["molien", "--full", "-n", "2", "-m", "2", "-D", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "1 1 2 2 3" and out[1] == "closed form: match"
    assert cli_main(["molien", "--phase", "-n", "2", "-m", "2", "-D", "4"]) == 0
    assert capsys.readouterr().out.strip() == "1 3 8 16 29"


def test_phase_gens_golden(capsys):
    assert cli_main(["phase-gens", "-n", "4", "-m", "2", "--golden"]) == 0
    assert "37 generators, golden match" in capsys.readouterr().out


def test_avg_and_wg(capsys):
    assert cli_main(["avg", "a[2,0]*abar[0,2]"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert cli_main(["avg", "a[2,0]*abar[2,0]"]) == 0
    assert capsys.readouterr().out.strip() == "1/3*a[2,0]*abar[2,0] + 1/6*a[1,1]*abar[1,1] + 1/3*a[0,2]*abar[0,2]"
    assert cli_main(["wg", "-d", "2", "-m", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["wg"] == {"1,1": "1/8", "2": "-1/24"}


def test_apply_norm_basis(tmp_path, capsys):
    state = write(tmp_path, "s.json", {"n": 2, "m": 2, "convention": "monomial",
                                        "amplitudes": [{"occ": [2, 0], "re": "1"}]})
    swap = write(tmp_path, "u.json", {"m": 2, "entries": [[{"re": "0"}, {"re": "1"}],
                                                          [{"re": "1"}, {"re": "0"}]]})
    assert cli_main(["apply", "--state", state, "--unitary", swap, "--exact"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["amplitudes"] == [{"occ": [0, 2], "re": "1", "im": "0"}]
    assert cli_main(["norm", "--state", state, "--exact"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert cli_main(["basis", "-n", "2", "-m", "2"]) == 0
    assert capsys.readouterr().out.split("\n")[:3] == ["2 0", "1 1", "0 2"]


def test_invariants(capsys):
    assert cli_main(["invariants", "-n", "2", "-m", "2", "-D", "4", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["generators"]) == 2
    assert [r["achieved"] for r in report["report"]] == [1, 2, 2, 3]
    assert report["caveat"]


def test_malformed_input_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli_main(["norm", "--state", str(bad)]) == 2
    assert cli_main(["norm", "--state", write(tmp_path, "x.json", {**ONE_ONE, "bogus": 1})]) == 2
    assert cli_main(["norm", "--state", str(tmp_path / "missing.json")]) == 2
    assert cli_main(["avg", "a[2,0]*b[1,1]"]) == 2
    assert cli_main(["molien", "-n", "2"]) == 2
    assert cli_main(["nonsense"]) == 2


def test_deterministic_output(tmp_path, capsys):
    args = ["reach", "--src", write(tmp_path, "a.json", ONE_ONE),
            "--dst", write(tmp_path, "b.json", HALF_TWO_ZERO), "--json", "--seed", "3"]
    cli_main(args)
    first = capsys.readouterr().out
    cli_main(args)
    assert capsys.readouterr().out == first
