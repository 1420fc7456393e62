import json
import subprocess
import sys
from importlib import resources

import jsonschema

from ttd.cli import run

SCHEMA = json.loads(resources.files("ttd").joinpath("schema/ttd-1.schema.json").read_text())


def _run(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = run(list(argv) + ["--out", str(out)])
    data = json.loads(out.read_text()) if out.exists() else None
    if data is not None:
        jsonschema.validate(data, SCHEMA)
    return code, data


def _ints(poly):
    assert all(c["den"] == "1" for c in poly)
    return [int(c["num"]) for c in poly]


def test_build_example(tmp_path):
    code, d = _run(["build", "--rst", "2,-1,-2"], tmp_path)
    assert code == 0 and d["status"] == "pass" and d["schema"] == "ttd/1"
    assert _ints(d["F"]) == [68, 192, 768, 688, 312, 72, 12]
    assert all(r["pass"] for r in d["isotropy"])


def test_build_degenerate(tmp_path):
    code, d = _run(["build", "--rst", "1,1,1"], tmp_path)
    assert code == 1 and d["status"] == "degenerate" and d["vanishing"] == ["delta4"]


def test_build_over_fp(tmp_path):
    code, d = _run(["build", "--rst", "2,-1,-2", "--p", "101"], tmp_path)
    assert code == 0


def test_usage_errors(tmp_path):
    assert _run(["build", "--rst", "2,x,1"], tmp_path)[0] == 1
    assert _run(["build", "--rst", "2,1"], tmp_path)[0] == 1
    assert run(["frobnicate"]) == 1
    assert run(["build"]) == 1


def test_isogeny(tmp_path):
    code, d = _run(["isogeny", "--rst", "-2,1,2"], tmp_path)
    assert code == 0 and all(d["certificates"].values())


def test_count(tmp_path):
    code, d = _run(["count", "--rst", "2,-1,-2", "--p", "13"], tmp_path)
    assert code == 0 and d["Jorder"] == 198
    code, d2 = _run(["count", "--rst", "2,-1,-2", "--p", "13", "--tilde"], tmp_path, "t.json")
    assert d2["Jorder"] == 198
    code, _ = _run(["count", "--rst", "2,-1,-2", "--p", "11"], tmp_path, "bad.json")
    assert code == 1


def test_auto(tmp_path):
    code, d = _run(["auto", "--map", "psi1", "--rst", "2,-1,-2"], tmp_path)
    assert code == 0 and d["image"] == _run(["auto", "--map", "psi1", "--rst", "2,-1,-2"], tmp_path,
                                            "b.json")[1]["image"]
    code, _ = _run(["auto", "--map", "psi1", "--rst", "0,1,2"], tmp_path, "c.json")
    assert code == 1


def test_verify_point(tmp_path):
    code, d = _run(["verify", "--rst", "2,-1,-2"], tmp_path)
    assert code == 0 and d["magic_identity"] is True


def test_verify_random(tmp_path):
    code, d = _run(["verify", "--p", "1000003", "--samples", "30"], tmp_path)
    assert code == 0


def test_certify_identities(tmp_path):
    code, d = _run(["certify-identities", "--identity", "det", "--identity", "magic"], tmp_path)
    assert code == 0 and [r["identity"] for r in d["identities"]] == ["det", "magic"]
    code, d = _run(["certify-identities", "--identity", "falsified"], tmp_path, "f.json")
    assert code == 2 and d["status"] == "fail"
    code, d = _run(["certify-identities", "--identity", "det", "--dims", "2,2,2"], tmp_path, "g.json")
    assert code == 1


def test_selmer_minus2_1_2_and_determinism(tmp_path):
    code, d = _run(["selmer", "--rst", "-2,1,2", "--direction", "sigma-dual"], tmp_path)
    assert code == 0 and d["dimension"] == 5
    _run(["selmer", "--rst", "-2,1,2", "--direction", "sigma-dual"], tmp_path, "again.json")
    assert (tmp_path / "out.json").read_bytes() == (tmp_path / "again.json").read_bytes()


def test_console_script_stdout():
    out = subprocess.run([sys.executable, "-m", "ttd", "build", "--rst", "-3,-3,-3"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    d = json.loads(out.stdout)
    assert _ints(d["F"]) == [11349, 972, 648, -3054, -216, 108, 157]
