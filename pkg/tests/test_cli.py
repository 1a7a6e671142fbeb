"""Tests for the command-line entry point."""

import json

import pytest

from src.config import Config
from src.main import main

EXAMPLE_ONE = "><<><,a,b,c,d,e"


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestVerbs:
    def test_measure(self, capsys):
        status, out, _ = run(capsys, "measure", "--quiver", EXAMPLE_ONE, "--module", "c:18")
        assert status == 0
        assert json.loads(out)["measure"] == [1, 1, 2, 2, 1, 2, 2, 1, 2, 2, 2]

    def test_comeasure_and_oracle(self, capsys):
        status, out, _ = run(capsys, "comeasure", "--quiver", EXAMPLE_ONE, "--module", "c:18")
        assert status == 0
        assert json.loads(out)["branch"] == "dual"
        status, out, _ = run(capsys, "oracle", "--quiver", EXAMPLE_ONE, "--module", "c:18")
        assert json.loads(out)["measure"] == [1, 1, 2, 2, 1, 2, 2, 1, 2, 2, 2]

    def test_ipf(self, capsys):
        status, out, _ = run(capsys, "ipf", "--quiver", EXAMPLE_ONE, "--module", "c:18")
        assert status == 0
        assert json.loads(out) == {"init": [1, 1], "period": [2, 2, 1], "mult": 2, "fin": [2, 2, 2]}

    def test_homogeneous_module(self, capsys):
        status, out, _ = run(capsys, "measure", "--quiver", EXAMPLE_ONE, "--homogeneous", "2")
        assert status == 0
        assert json.loads(out)["measure"] == [1, 1, 2, 1, 5]

    def test_classify(self, capsys):
        status, out, _ = run(capsys, "classify", "--quiver", EXAMPLE_ONE, "--module", "b:1")
        assert json.loads(out)["component"] == "preprojective"

    def test_hooks(self, capsys):
        status, out, _ = run(capsys, "hooks", "--quiver", EXAMPLE_ONE)
        data = json.loads(out)
        assert (data["L"], data["R"]) == ([3, 2], [2, 2, 1])

    def test_family_by_name(self, capsys):
        status, out, _ = run(capsys, "family", "--quiver", EXAMPLE_ONE, "--family", "ce", "--depth", "2")
        assert status == 0
        assert json.loads(out)["members"] == ["ce_3", "ce_8"]

    def test_family_csv(self, capsys):
        status, out, _ = run(capsys, "family", "--quiver", EXAMPLE_ONE, "--module", "c:18", "--format", "csv")
        assert status == 0
        assert out.splitlines()[1].startswith("ce_*,regular-right-tube,")

    def test_tube(self, capsys):
        status, out, _ = run(capsys, "tube", "--quiver", EXAMPLE_ONE, "--kind", "left")
        data = json.loads(out)
        assert data["mouth"] == ["bd_3", "ea_2"]
        assert data["rank"] == 2

    def test_limits(self, capsys):
        status, out, _ = run(capsys, "limits", "--quiver", EXAMPLE_ONE)
        data = json.loads(out)
        assert data["takeoff"] == {"prefix": [1, 1], "period": [2, 2, 1]}
        assert data["homogeneous"] == {"prefix": [1, 1, 2, 1], "period": [5]}

    def test_tiling(self, capsys):
        status, out, _ = run(capsys, "tiling", "--quiver", EXAMPLE_ONE, "--kind", "right")
        assert status == 0
        assert json.loads(out)["tiled"] is True

    def test_rhombic_svg_to_file(self, capsys, tmp_path):
        target = tmp_path / "picture.svg"
        status, out, _ = run(capsys, "rhombic", "--quiver", EXAMPLE_ONE, "--format", "svg", "--out", str(target))
        assert status == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").startswith("<?xml")

    def test_rhombic_csv_to_stdout(self, capsys):
        status, out, _ = run(capsys, "rhombic", "--quiver", EXAMPLE_ONE, "--format", "csv", "--max-dim", "10")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].startswith("Family,Component,")
        assert "Module,Component,Mu,MuStar,X,Y" in lines

    def test_rhombic_csv_to_directory(self, capsys, tmp_path):
        target = tmp_path / "tables"
        status, out, _ = run(
            capsys, "rhombic", "--quiver", EXAMPLE_ONE, "--format", "csv", "--max-dim", "10", "--out", str(target)
        )
        assert status == 0
        assert out == ""
        assert (target / "families.csv").read_text(encoding="utf-8").startswith("Family,")
        assert (target / "points.csv").read_text(encoding="utf-8").startswith("Module,")

    def test_ipf_of_small_module(self, capsys):
        status, out, _ = run(capsys, "ipf", "--quiver", ">>><,a,d,c,b", "--module", "c:1")
        assert status == 0
        assert json.loads(out)["mult"] is None

    def test_rhombic_is_byte_identical(self, capsys):
        _, first, _ = run(capsys, "rhombic", "--quiver", EXAMPLE_ONE, "--format", "tikz")
        _, second, _ = run(capsys, "rhombic", "--quiver", EXAMPLE_ONE, "--format", "tikz")
        assert first == second

    def test_verify_oracle(self, capsys):
        status, out, _ = run(capsys, "verify", "oracle", "--quiver", EXAMPLE_ONE, "--max-dim", "40")
        assert status == 0
        assert json.loads(out)["passed"] is True

    def test_verify_random_orientations(self, capsys, monkeypatch):
        monkeypatch.setattr(Config, "RANDOM_MAX_VERTICES", 5)
        status, out, _ = run(capsys, "verify", "oracle", "--quiver", "><><", "--random", "3", "--seed", "4", "--max-dim", "12")
        assert status == 0
        assert json.loads(out)["checked"] > 0


class TestErrors:
    def test_oriented_cycle(self, capsys):
        status, _, err = run(capsys, "measure", "--quiver", ">>>>")
        assert status == 2
        assert "error: [quiver.OrientedCycle]" in err

    def test_missing_module(self, capsys):
        status, _, err = run(capsys, "measure", "--quiver", EXAMPLE_ONE)
        assert status == 2
        assert "cli.UsageError" in err

    def test_bad_module_spec(self, capsys):
        status, _, err = run(capsys, "measure", "--quiver", EXAMPLE_ONE, "--module", "c18")
        assert status == 2

    def test_unsupported_format(self, capsys):
        status, _, err = run(capsys, "measure", "--quiver", EXAMPLE_ONE, "--module", "c:3", "--format", "svg")
        assert status == 2
        assert "supports --format json" in err

    def test_unknown_verb(self, capsys):
        status, _, _ = run(capsys, "draw", "--quiver", EXAMPLE_ONE)
        assert status == 2

    def test_verify_needs_suite(self, capsys):
        status, _, err = run(capsys, "verify")
        assert status == 2

    def test_help(self, capsys):
        status, out, _ = run(capsys, "--help")
        assert status == 0
        assert "measure" in out

    def test_bad_configuration(self, capsys, monkeypatch):
        monkeypatch.setattr(Config, "STAIRCASE_DEPTH", 2)
        status, _, err = run(capsys, "hooks", "--quiver", EXAMPLE_ONE)
        assert status == 2
        assert "STAIRCASE_DEPTH" in err

    @pytest.mark.parametrize("verb", ["measure", "tube", "limits"])
    def test_single_quiver_only(self, capsys, verb):
        status, _, err = run(capsys, verb, "--quiver", EXAMPLE_ONE, "--quiver", "><><")
        assert status == 2
        assert "single --quiver" in err
