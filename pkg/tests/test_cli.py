import json
import xml.etree.ElementTree as ET

import pytest

from projconf.cli import main
from projconf.render import FIGURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sample_json(capsys):
    code, out, _ = run(capsys, "sample", "--n", "6", "--hypothesis", "inscribed", "--seed", "3")
    assert code == 0
    d = json.loads(out)
    assert d["n"] == 6 and len(d["vertices"]) == 6
    assert all(isinstance(x, str) for v in d["vertices"] for x in v)
    assert run(capsys, "sample", "--n", "6", "--hypothesis", "inscribed", "--seed", "3")[1] == out


def test_sample_too_small_is_usage_error(capsys):
    assert run(capsys, "sample", "--n", "4", "--hypothesis", "inscribed")[0] == 2


def test_unknown_command_and_flag(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "--nope")[0] == 2


def test_verify_statement_file(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"n": 6, "hypothesis": "inscribed", "word": "2",
                                "conclusion": "equivalent-to-input"}))
    code, out, _ = run(capsys, "verify", "--statement", str(good), "--trials", "3")
    assert code == 0
    assert json.loads(out)["reports"][0]["passes"] == 3

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 7, "hypothesis": "inscribed", "word": "2",
                               "conclusion": "equivalent-to-input"}))
    assert run(capsys, "verify", "--statement", str(bad), "--trials", "3")[0] == 1

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "verify", "--statement", str(broken))[0] == 2
    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"n": 6, "hypothesis": "inscribed", "word": "9", "conclusion": "inscribed"}))
    assert run(capsys, "verify", "--statement", str(invalid))[0] == 2


def test_verify_classical(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "classical", "--trials", "5")
    assert code == 0
    assert json.loads(out)["classical"]


def test_verify_output_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(capsys, "verify", "--trials", "2", "--seed", "9", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("name", FIGURES)
def test_render_figures_well_formed(name, capsys):
    code, out, _ = run(capsys, "render", "--figure", name)
    assert code == 0
    root = ET.fromstring(out)
    assert root.tag.endswith("svg")
    assert len(root.get("viewBox").split()) == 4


def test_render_errors(tmp_path, capsys):
    assert run(capsys, "render")[0] == 2
    assert run(capsys, "render", "--figure", "teapot")[0] == 2
    scene = tmp_path / "s.json"
    scene.write_text(json.dumps({"points": [{"coords": [1, 0, 0]}]}))
    assert run(capsys, "render", "--scene", str(scene))[0] == 2


def test_render_scene(tmp_path, capsys):
    scene = tmp_path / "s.json"
    scene.write_text(json.dumps({
        "polygons": [{"vertices": [[0, 0, 1], [4, 0, 1], [0, 3, 1]]}],
        "conics": [{"coefficients": [1, 0, 1, 0, 0, -4]}],
    }))
    code, out, _ = run(capsys, "render", "--scene", str(scene))
    assert code == 0
    ET.fromstring(out)


def test_config_defaults_and_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sample": {"n": 7, "hypothesis": "circumscribed", "seed": 2}}))
    code, out, _ = run(capsys, "--config", str(cfg), "sample")
    assert code == 0 and json.loads(out)["n"] == 7
    code, out, _ = run(capsys, "--config", str(cfg), "sample", "--n", "8")
    assert json.loads(out)["n"] == 8
    cfg.write_text(json.dumps({"sample": {"colour": "red"}}))
    assert run(capsys, "--config", str(cfg), "sample", "--n", "6", "--hypothesis", "inscribed")[0] == 2


def test_search_small(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "search", "--n-min", "5", "--n-max", "7", "--max-word-length", "3",
                     "--quiet", "--out", str(out))
    assert code == 0
    d = json.loads(out.read_text())
    assert d["novel"] == [] and d["completeness"]["missed"] == []
    assert run(capsys, "search", "--n-min", "9", "--n-max", "5")[0] == 2
