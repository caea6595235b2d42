import json
import subprocess
import sys

import jsonschema
import pytest

from cfindep.cli import RunConfig, main

SCHEMA_PATH = "src/cfindep/schemas/report.schema.json"


def _run_cli(args, **kw):
    return subprocess.run([sys.executable, "-m", "cfindep.cli", *args],
                          capture_output=True, text=True, **kw)


def _schema():
    with open(SCHEMA_PATH) as fh:
        return json.load(fh)


def test_config_roundtrip():
    cfg = RunConfig(
        task="check-theorem1",
        field={"minpoly": [14, -8, 1], "root": ["1/1", "3/1"]},
        sequences={"a": {"kind": "doubly-exponential", "d": 3}},
        params={"N": 4, "gamma": "1/2"},
        output={"format": "json"},
    )
    assert RunConfig.from_dict(cfg.to_dict()) == cfg


def test_config_rejects_bad_task():
    with pytest.raises(ValueError):
        RunConfig.from_dict({"task": "no-such"})
    with pytest.raises(ValueError):
        RunConfig.from_dict([])


def test_named_example_pass_exit_zero(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["check-named-example", "ex1", "--N", "3", "--precision", "128",
               "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["status"] == "pass"
    assert report["result"]["overall"] == "pass"
    jsonschema.validate(report, _schema())


def test_failing_example_exit_one(tmp_path):
    out = tmp_path / "r.json"
    rc = main(["check-named-example", "hanluc", "--N", "2", "--precision", "128",
               "--out", str(out)])
    assert rc == 1
    report = json.loads(out.read_text())
    assert report["status"] == "fail"
    inter = next(c for c in report["result"]["conditions"] if c["name"] == "interleaving")
    assert inter["verdict"] == "fail" and inter["failing_index"] == [1]
    jsonschema.validate(report, _schema())


def test_malformed_config_exit_two(tmp_path):
    cfgfile = tmp_path / "bad.json"
    cfgfile.write_text(json.dumps({
        "task": "check-theorem1",
        "field": {"minpoly": [], "root": ["1/1", "2/1"]},
        "sequences": {},
        "params": {},
    }))
    rc = main(["check-theorem1", "--config", str(cfgfile)])
    assert rc == 2
    rc2 = main(["check-theorem1", "--config", str(tmp_path / "missing.json")])
    assert rc2 == 2


def test_unknown_named_example_exit_two():
    assert main(["check-named-example", "nope"]) == 2


def test_byte_identical_reports(tmp_path):
    # identical config + seed -> identical bytes
    out = tmp_path / "r.json"
    rc = main(["lemma2", "--trials", "50", "--seed", "9", "--out", str(out)])
    assert rc == 0
    first = out.read_bytes()
    rc = main(["lemma2", "--trials", "50", "--seed", "9", "--out", str(out)])
    assert rc == 0
    assert out.read_bytes() == first


def test_list_examples_content(tmp_path):
    out = tmp_path / "cat.json"
    rc = main(["list-examples", "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    names = {e["name"]: e for e in report["result"]["examples"]}
    assert "ex1" in names
    assert names["ex1"]["D"] == 2 and names["ex1"]["M"] == 2 and names["ex1"]["d"] == 3
    assert "hanluc" in names
    assert names["hanluc"]["field_minpoly"] == [-2, 0, 1]
    assert len(names) >= 8
    jsonschema.validate(report, _schema())


def test_text_format(capsys):
    rc = main(["remark", "--N", "50", "--format", "text"])
    assert rc == 0
    captured = capsys.readouterr()
    assert "monotone increasing: True" in captured.out


def test_config_driven_theorem_check(tmp_path):
    cfg = {
        "task": "check-theorem1",
        "field": {"minpoly": [14, -8, 1], "root": ["5/2", "3/1"]},
        "sequences": {
            "big": {"kind": "root-scaled", "poly": [14, -8, 1], "root_index": 2,
                    "base": {"kind": "doubly-exponential", "d": 3}},
            "small": {"kind": "root-scaled", "poly": [14, -8, 1], "root_index": 1,
                      "base": {"kind": "doubly-exponential", "d": 3}},
        },
        "params": {"order": ["big", "small"], "N": 3, "precision": 128, "gamma": "1/2"},
        "output": {},
    }
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    out = tmp_path / "rep.json"
    rc = main(["check-theorem1", "--config", str(f), "--out", str(out)])
    assert rc == 0
    report = json.loads(out.read_text())
    assert report["result"]["overall"] == "pass"
    # config echo allows reproducing the run
    assert report["config"]["params"]["N"] == 3


def test_enclose_and_convergents_tasks(tmp_path):
    cfg = {
        "task": "enclose",
        "sequences": {"s": {"kind": "constant", "value": "2/1"}},
        "params": {"sequence": "s", "N": 8, "precision": 96},
    }
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    out = tmp_path / "rep.json"
    assert main(["enclose", "--config", str(f), "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["result"]["value"]["value"].startswith("0.414213")
    cfg["task"] = "convergents"
    f.write_text(json.dumps(cfg))
    assert main(["convergents", "--config", str(f), "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    rows = rep["result"]["convergents"]
    assert rows[4]["q"]["exact"] == "70/1"
    assert all(r["determinant"] in ("+1", "-1") for r in rows)


def test_relation_task_planted(tmp_path):
    cfg = {
        "task": "relation",
        "sequences": {
            "golden": {"kind": "constant", "value": "1/1"},
            "var": {"kind": "constant", "value": "1/1"},
        },
        "params": {"values": ["golden", "var"], "N": 110, "precision": 128,
                   "height": 50, "expand_field": False},
    }
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    out = tmp_path / "rep.json"
    assert main(["relation", "--config", str(f), "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    # identical sequences: c1 - c2 = 0 is found immediately
    assert rep["result"]["status"] == "found"
    assert rep["result"]["coefficients"] == [1, -1, 0]


def test_cli_subprocess_entrypoint():
    proc = _run_cli(["list-examples", "--format", "text"])
    assert proc.returncode == 0
    assert "ex1" in proc.stdout


def test_config_driven_sqrt_j_family(tmp_path):
    cfg = {
        "task": "check-theorem1",
        "sequences": {
            "s2": {"kind": "sqrt-j-scaled", "K": 2, "j": 2,
                   "base": {"kind": "doubly-exponential", "d": 4}},
            "s1": {"kind": "sqrt-j-scaled", "K": 2, "j": 1,
                   "base": {"kind": "doubly-exponential", "d": 4}},
        },
        "params": {"order": ["s2", "s1"], "N": 3, "precision": 128, "gamma": "1/2"},
        "output": {},
    }
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps(cfg))
    out = tmp_path / "rep.json"
    rc = main(["check-theorem1", "--config", str(f), "--out", str(out)])
    report = json.loads(out.read_text())
    assert report["result"]["overall"] == "pass"
    assert rc == 0
