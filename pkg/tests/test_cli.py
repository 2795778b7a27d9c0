"""End-to-end command-line checks, including exit codes and determinism."""

import json
import random

import pytest

from d4vgit.cli import main
from d4vgit.equations import witness_E1_not_E2
from d4vgit.gitcore import point_to_json
from d4vgit.mckay import base_point
from d4vgit.sampling import rand_orbit_point


@pytest.fixture
def base_file(tmp_path):
    path = tmp_path / "base.json"
    path.write_text(json.dumps(point_to_json(base_point(x=(1, 2)))))
    return str(path)


@pytest.fixture
def off_z_file(tmp_path):
    path = tmp_path / "off.json"
    path.write_text(json.dumps(point_to_json(witness_E1_not_E2())))
    return str(path)


@pytest.fixture
def unstable_file(tmp_path):
    path = tmp_path / "unstable.json"
    path.write_text(json.dumps(point_to_json(base_point(x=(0, 0)))))
    return str(path)


def test_verify_point(base_file, capsys):
    assert main(["verify-point", "--point", base_file, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["on_Z"] is True and out["in_Zo"] is True


def test_verify_point_off_z(off_z_file, capsys):
    assert main(["verify-point", "--point", off_z_file, "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["on_Z"] is False
    assert any(lab.startswith("E2") for lab in out["nonzero_components"])


def test_stability_exit_codes(base_file, unstable_file, off_z_file, capsys):
    assert main(["stability", "--point", base_file,
                 "--character", "theta", "--json"]) == 0
    capsys.readouterr()
    assert main(["stability", "--point", unstable_file,
                 "--character", "theta", "--json"]) == 2
    out = json.loads(capsys.readouterr().out)
    assert out["certificate"]["subset"] == "{x=0}"
    assert main(["stability", "--point", off_z_file,
                 "--character", "minus-theta", "--json"]) == 3
    out = json.loads(capsys.readouterr().out)
    assert out["off_Z_flags"]["strictly_semistable_behavior"] is True


def test_quiver_command(base_file, capsys):
    assert main(["quiver", "--point", base_file, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["preprojective"] is True
    assert out["king_stable"] is True


def test_chart_commands(base_file, capsys):
    assert main(["chart", "--closure-check", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["ok"] is True and len(out["components"]) == 24
    assert main(["chart", "--point", base_file, "--index", "1", "--json"]) == 0


def test_orbit_command(base_file, capsys):
    assert main(["orbit", "--point", base_file, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 8 and out["quaternion_signature"] is True
    capsys.readouterr()
    assert main(["orbit", "--point", base_file, "--relax-beta", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["order"] == 16


def test_examples_commands(capsys):
    assert main(["examples", "an", "--n", "4", "--chi", "1,1,1", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["interior_rays"] == 3
    assert main(["examples", "s3", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["stabilizer_order"] == 6


def test_suite_determinism(capsys):
    assert main(["suite", "examples", "--seed", "11", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["suite", "examples", "--seed", "11", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second


def test_usage_errors(capsys):
    assert main(["suite", "nonsense"]) == 64
    capsys.readouterr()
    assert main([]) == 64


def test_orbit_sample_file_roundtrip(tmp_path, capsys):
    p = rand_orbit_point(random.Random(9))
    path = tmp_path / "sample.json"
    path.write_text(json.dumps(point_to_json(p)))
    assert main(["verify-point", "--point", str(path), "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["on_Z"] is True
