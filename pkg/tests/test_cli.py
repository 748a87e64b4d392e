import json

import pytest

from origami_lab import core
from origami_lab.cli import main, parse_complex


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_w(capsys):
    code, out, _ = run(capsys, "info", "--builtin", "W")
    d = json.loads(out)
    assert code == 0
    assert (d["n"], d["genus"], d["vertices"], d["stratum"]) == (8, 3, 4, [1, 1, 1, 1])


def test_info_from_file(capsys, tmp_path):
    f = tmp_path / "o.txt"
    f.write_text("h=(1,2)(3); v=(1,3)(2)")
    code, out, _ = run(capsys, "info", "--file", str(f))
    assert code == 0 and json.loads(out)["n"] == 3
    f.write_text("h=(1,1)")
    assert run(capsys, "info", "--file", str(f))[0] == 1
    assert run(capsys, "info", "--file", str(tmp_path / "missing"))[0] == 1


def test_veech_and_autos(capsys):
    code, out, _ = run(capsys, "veech", "--builtin", "L")
    assert code == 0 and json.loads(out)["index"] == 3
    code, out, _ = run(capsys, "autos")
    d = json.loads(out)
    assert d["count"] == 16
    assert {r["name"] for r in d["automorphisms"]} >= {"sigma", "-tau", "c"}


def test_wms(capsys):
    code, out, _ = run(capsys, "wms")
    assert code == 0
    assert all(v["passed"] for v in json.loads(out).values())


def test_torsion(capsys):
    code, out, _ = run(capsys, "torsion", "--n", "4")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 12
    assert set(rows[0]) == {"x", "y", "order", "zeta", "lambda"}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--lambda", "2", "--seed", "1")
    assert code == 0 and json.loads(out)["passed"]
    code, _, err = run(capsys, "verify", "--lambda", "1")
    assert code == 1 and "DegenerateLambda" in err


def test_theorem(capsys):
    code, out, _ = run(capsys, "theorem", "--n", "3", "--control", "1/3")
    d = json.loads(out)
    assert code == 0 and d["count"] == 8 and d["control"]["order"] is None
    assert run(capsys, "theorem", "--n", "2")[0] == 1


def test_intersect(capsys):
    code, out, _ = run(capsys, "intersect", "--n", "5", "--a", "2", "--b", "1", "--emit", "origami")
    assert code == 0
    o = core.from_dict(json.loads(out))
    assert o.n == 50 and core.genus(o) == 3
    code, out, _ = run(capsys, "intersect", "--n", "4", "--a", "1", "--b", "0")
    assert code == 0 and json.loads(out)["passed"]
    assert run(capsys, "intersect", "--n", "4", "--a", "2", "--b", "2")[0] == 1


def test_text_format_and_determinism(capsys):
    a = run(capsys, "torsion", "--n", "5")[1]
    b = run(capsys, "torsion", "--n", "5")[1]
    assert a == b
    code, out, _ = run(capsys, "info", "--builtin", "E3", "--format", "text")
    assert code == 0 and "genus: 1" in out


def test_round_trip_of_emitted_origami(capsys, tmp_path):
    _, out, _ = run(capsys, "intersect", "--n", "3", "--a", "1", "--b", "0", "--emit", "origami")
    f = tmp_path / "d.json"
    f.write_text(out)
    _, info, _ = run(capsys, "info", "--file", str(f))
    assert json.loads(info)["genus"] == 3


def test_parse_complex():
    assert parse_complex("i") == 1j
    assert parse_complex("2-3i") == 2 - 3j
    assert parse_complex("1/3") == pytest.approx(1 / 3)
