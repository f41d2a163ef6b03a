"""The command-line front end: documented examples, exit codes, schemas, determinism."""

from __future__ import annotations

import io
import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from wronski_schubert.cli import CONFIG_SCHEMA, SYSTEM_SCHEMA, run
from wronski_schubert.exactalg import UniPoly
from wronski_schubert.wmap import LinearSystemP1, wronskian_of_system


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None), err.getvalue()


@pytest.fixture
def sys_file(tmp_path):
    def write(obj, name="sys.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding="utf-8")
        return str(path)

    return write


def test_grass_degree_example():
    code, data, _ = call("grass", "degree", "--r", "1", "--d", "3")
    assert code == 0 and data["degree"] == 2


def test_schur_delta_example():
    code, data, _ = call("schur", "delta", "--r", "1", "--lambda", "1,1")
    assert code == 0 and data["value"] == "e_2"


def test_profile_example(sys_file):
    path = sys_file({"d": 2, "basis": [["1"], ["0", "0", "1"]]})
    code, data, _ = call("wmap", "profile", "--file", path)
    assert code == 0
    assert [(p["point"], p["weight"]) for p in data["points"]] == [("0", 1), ("inf", 1)]
    assert data["total_weight"] == 2


def test_ode_solve_example():
    code, data, _ = call("ode", "solve", "--coeffs", "2", "--init", "1", "--order", "8")
    assert code == 0
    assert data["convention"] == "exponential"
    assert data["coefficients"] == [str(2**n) for n in range(9)]


def test_giambelli_example():
    code, data, _ = call("wronsk", "giambelli", "--r", "2", "--lambda", "2,1", "--order", "10")
    assert code == 0 and data["residual"] == "0"


def test_intersect_example():
    code, data, _ = call("grass", "intersect", "--r", "1", "--d", "3", "--partitions", "1;1;1;1")
    assert code == 0 and data == {"count": 2}


def test_global_flags_either_side_of_the_subcommand():
    a = call("--order", "5", "ode", "solve", "--coeffs", "1", "--init", "1")
    b = call("ode", "solve", "--coeffs", "1", "--init", "1", "--order", "5")
    assert a == b
    assert a[1]["order"] == 5
    out = io.StringIO()
    assert run(["grass", "degree", "--r", "1", "--d", "3", "--json-indent", "2"], out, io.StringIO()) == 0
    assert out.getvalue().startswith("{\n  ")


def test_default_order_is_twelve():
    _, data, _ = call("ode", "solve", "--coeffs", "2", "--init", "1")
    assert data["order"] == 12


def test_domain_error_exit_code_and_json():
    code, data, _ = call("wronsk", "liouville", "--r", "1", "--k", "3")
    assert code == 1
    assert data["error"]["type"] == "DomainError"
    code, data, _ = call("grass", "degree", "--r", "3", "--d", "1")
    assert code == 1 and "error" in data


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["grass", "degree", "--r", "1"],
        ["grass", "degree", "--r", "x", "--d", "3"],
        ["partition", "syt", "--lambda", "1,2"],
        ["ode", "solve", "--init", "1"],
        ["wmap", "profile", "--file", "/nonexistent/sys.json"],
        ["ode", "solve", "--coeffs", "2", "--init", "1", "--order", "-1"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, data, err = call(*argv)
    assert code == 2 and data is None and err


@pytest.mark.parametrize(
    "payload",
    [
        {"basis": [["1"]]},
        {"d": 2, "basis": [["1"], ["0", "0", "x"]]},
        {"d": 2, "basis": [["1"], [0.5]]},
        {"d": -1, "basis": [["1"]]},
        [1, 2],
    ],
)
def test_schema_violation_exit_2(sys_file, payload):
    code, data, err = call("wmap", "wronskian", "--file", sys_file(payload))
    assert code == 2 and "schema" in err


def test_config_schema_violation(sys_file):
    s = sys_file({"d": 2, "basis": [["1"], ["0", "0", "1"]]})
    c = sys_file({"points": ["0"], "partitions": [[-1]]}, "cfg.json")
    code, _, err = call("wmap", "nondeg", "--file", s, "--config", c)
    assert code == 2 and "schema" in err


def test_invalid_json_exit_2(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert call("wmap", "profile", "--file", str(path))[0] == 2


def test_outputs_are_byte_identical(sys_file):
    path = sys_file({"d": 3, "basis": [["1", "2"], ["0", "0", "1", "1/2"]]})
    for argv in (
        ["wmap", "flag", "--file", path],
        ["wmap", "solve", "--roots", "0,1,3,-2", "--d", "3"],
        ["grass", "class", "--r", "2", "--d", "5", "--lambda", "1;2,1"],
    ):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            assert run(argv, buf, io.StringIO()) == 0
            outs.append(buf.getvalue())
        assert outs[0] == outs[1]


def test_system_output_round_trips(sys_file):
    payload = {"d": 3, "basis": [["1/3", "-2"], ["0", "0", "1", "7/5"]]}
    code, data, _ = call("wmap", "wronskian", "--file", sys_file(payload))
    assert code == 0
    jsonschema.validate(data["system"], SYSTEM_SCHEMA)
    V = LinearSystemP1.from_json(data["system"])
    assert V == LinearSystemP1.from_json(payload)
    assert UniPoly([Fraction(c) for c in data["wronskian"]]) == wronskian_of_system(V)


def test_profile_config_round_trips(sys_file):
    payload = {"d": 3, "basis": [["1"], ["0", "0", "0", "1"]]}
    s = sys_file(payload)
    code, prof, _ = call("wmap", "profile", "--file", s)
    assert code == 0
    finite = [p for p in prof["points"] if p["point"] != "inf"]
    infinity = [p for p in prof["points"] if p["point"] == "inf"]
    cfg = {
        "points": [p["point"] for p in finite],
        "partitions": [p["partition"] for p in finite],
        "infinity": infinity[0]["partition"] if infinity else [],
    }
    jsonschema.validate(cfg, CONFIG_SCHEMA)
    code, data, _ = call("wmap", "nondeg", "--file", s, "--config", sys_file(cfg, "cfg.json"))
    assert code == 0 and data["nondegenerate"] in (True, False)


def test_solve_output_is_exact_with_labelled_floats():
    code, data, _ = call("wmap", "solve", "--roots", "0,1,3,-2", "--d", "3")
    assert code == 0 and data["expected"] == 2 and len(data["planes"]) == 2
    # exact parts carry strings only; floats live under "approximate"
    for plane in data["planes"]:
        assert all(isinstance(c, str) for row in plane["basis"] for c in row)
        assert plane["field"]["modulus"] == ["113/3", "40/3", "1"]
    assert set(data["approximate"]) >= {"note", "w0_roots"}


def test_every_subcommand_runs(sys_file):
    s = sys_file({"d": 2, "basis": [["1"], ["0", "0", "1"]]})
    c = sys_file({"points": ["0"], "partitions": [[1]], "infinity": [1]}, "cfg.json")
    commands = [
        ["schur", "h", "--r", "1", "--n", "3"],
        ["schur", "delta", "--r", "1", "--lambda", "2", "--a", "1,2,3"],
        ["grass", "class", "--r", "1", "--d", "3", "--lambda", "1;1"],
        ["ode", "basis", "--r", "1", "--order", "4"],
        ["ode", "solve", "--r", "1", "--init", "x_0,x_1", "--order", "4"],
        ["ode", "solve", "--coeffs", "0,-1", "--init", "0,1", "--forcing", "1"],
        ["wronsk", "general", "--lambda", "1", "--series", "1,1,1;0,1,2"],
        ["wronsk", "pieri", "--r", "1", "--i", "1", "--lambda", "1"],
        ["wronsk", "liouville", "--r", "2", "--k", "3"],
        ["wronsk", "expand", "--h", "2", "--r", "1", "--series", "1,2,3,4;0,1,0,5"],
        ["wmap", "wronskian", "--file", s],
        ["wmap", "flag", "--file", s, "--config", c],
        ["wmap", "phi", "--config", c, "--full"],
        ["wmap", "nondeg", "--file", s],
        ["wmap", "solve", "--roots", "0,1", "--d", "2"],
        ["partition", "syt", "--lambda", "3,2"],
        ["partition", "hooks", "--lambda", "3,2"],
        ["partition", "strips", "--lambda", "2,1", "--i", "1", "--rect", "2x3"],
    ]
    for argv in commands:
        code, data, err = call(*argv)
        assert code == 0, (argv, err, data)
    assert call("partition", "syt", "--lambda", "3,2")[1]["syt"] == 5
    assert call("wronsk", "pieri", "--r", "1", "--i", "1", "--lambda", "1")[1]["residual"] == "0"
    assert call("wronsk", "expand", "--h", "2", "--r", "1", "--series", "1,2,3,4;0,1,0,5")[1]["residual"] == "0"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wronski_schubert", "grass", "degree", "--r", "2", "--d", "4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degree"] == 5
