"""
Tests for the command-line interface
"""

import json

import pytest
from click.testing import CliRunner

from wkb_engine.cli import cli
from wkb_engine.utils import setup_logger

pytestmark = [pytest.mark.integration, pytest.mark.cli]

IDENTITY_MAP = {
    "dim": 1,
    "forward": {"f": ["x1"], "g": ["u1"]},
    "inverse": {"x": ["x1"], "u": ["u1"]},
}
ROTATION_MAP = {
    "dim": 1,
    "forward": {"f": ["u1"], "g": ["-x1"]},
    "inverse": {"x": ["-u1"], "u": ["x1"]},
}


@pytest.fixture
def runner(tmp_path, monkeypatch):
    """Runner inside an empty directory so no config/config.yaml is picked up."""
    monkeypatch.chdir(tmp_path)
    yield CliRunner()
    setup_logger()


@pytest.fixture
def write_json(tmp_path):
    def write(name: str, data: dict) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write


def identity_covering(charts: int) -> dict:
    return {
        "charts": list(range(charts)),
        "depth": 2,
        "transitions": [
            {"from": j, "to": i, "map": IDENTITY_MAP}
            for i in range(charts)
            for j in range(i + 1, charts)
        ],
    }


class TestSymbolCommands:
    def test_star(self, runner):
        result = runner.invoke(cli, ["star", "u1", "x1", "--dim", "1"])
        assert result.exit_code == 0
        assert result.output == "x1*u1 + tau^-1\n"

    def test_dimension_is_inferred(self, runner):
        result = runner.invoke(cli, ["commutator", "u2", "x2"])
        assert result.exit_code == 0
        assert result.output.strip() == "tau^-1"

    def test_json_output(self, runner):
        result = runner.invoke(cli, ["--output", "json", "invert", "2", "--dim", "0"])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["dim"] == 0
        assert document["terms"] == [{"tau": 0, "monomials": [{"c": "1/2", "x": [], "u": []}]}]

    @pytest.mark.parametrize("sign,expected", [("+", "1 + u1*tau^-1"), ("-", "-1 - u1*tau^-1")])
    def test_sqrt(self, runner, sign, expected):
        result = runner.invoke(
            cli, ["sqrt", "1 + 2*tau^-1*u1 + tau^-2*u1^2", "--depth", "2", "--sign", sign]
        )
        assert result.exit_code == 0
        assert result.output.strip() == expected

    def test_order(self, runner):
        result = runner.invoke(cli, ["order", "x1*u1 + tau^-1"])
        assert result.output.strip() == "(0, x1*u1)"

    def test_central(self, runner):
        result = runner.invoke(cli, ["central", "2 + tau^-1 + x1"])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["central: 2 + tau^-1", "residual: x1"]

    def test_adjoint(self, runner):
        result = runner.invoke(cli, ["adjoint", "x1*u1"])
        assert result.output.strip() == "x1*u1 + tau^-1"

    def test_symbol_file_operand(self, runner, write_json):
        path = write_json("p.json", {"dim": 1, "floor": -3, "terms": [
            {"tau": 0, "monomials": [{"c": "1", "x": [0], "u": [1]}]}
        ]})
        result = runner.invoke(cli, ["star", f"@{path}", "x1"])
        assert result.exit_code == 0
        assert result.output.strip() == "x1*u1 + tau^-1"

    @pytest.mark.parametrize(
        "args",
        [
            ["star", "x1 +", "u1"],
            ["star", "x2", "u1", "--dim", "1"],
            ["invert", "x1"],
            ["sqrt", "2"],
        ],
    )
    def test_input_errors(self, runner, args):
        result = runner.invoke(cli, args)
        assert result.exit_code == 2


class TestQuantizeCommands:
    def test_rotation(self, runner, write_json):
        result = runner.invoke(cli, ["quantize", write_json("rot.json", ROTATION_MAP)])
        assert result.exit_code == 0
        assert result.output.splitlines() == ["X1 = u1", "U1 = -x1", "a = -x1*u1", "c = 0"]

    def test_record_json(self, runner, write_json):
        path = write_json("rot.json", ROTATION_MAP)
        result = runner.invoke(cli, ["quantize", path, "--output", "json", "--depth", "3"])
        record = json.loads(result.output)
        assert record["depth"] == 3
        assert record["primitive"] == "-x1*u1"

    def test_not_symplectic(self, runner, write_json):
        doubled = {
            "dim": 1,
            "forward": {"f": ["x1"], "g": ["2*u1"]},
            "inverse": {"x": ["x1"], "u": ["1/2*u1"]},
        }
        result = runner.invoke(cli, ["quantize", write_json("bad.json", doubled)])
        assert result.exit_code == 2
        assert "{f1,g1}" in result.output

    def test_apply_record(self, runner, tmp_path, write_json):
        quantized = runner.invoke(
            cli, ["quantize", write_json("rot.json", ROTATION_MAP), "--output", "json"]
        )
        record = tmp_path / "record.json"
        record.write_text(quantized.output, encoding="utf-8")
        result = runner.invoke(cli, ["apply", str(record), "x1*u1"])
        assert result.exit_code == 0
        assert result.output.strip() == "-x1*u1 - tau^-1"

    def test_rotation_is_not_recognized(self, runner, tmp_path, write_json):
        quantized = runner.invoke(
            cli, ["quantize", write_json("rot.json", ROTATION_MAP), "--output", "json"]
        )
        record = tmp_path / "record.json"
        record.write_text(quantized.output, encoding="utf-8")
        result = runner.invoke(cli, ["recognize", str(record)])
        assert result.exit_code == 1

    def test_missing_map_file(self, runner):
        result = runner.invoke(cli, ["quantize", "nowhere.json"])
        assert result.exit_code == 2


class TestDescentCommands:
    def test_identity_covering(self, runner, write_json):
        result = runner.invoke(cli, ["descent", write_json("cover.json", identity_covering(4))])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "all defects trivial"

    def test_summary_json(self, runner, write_json):
        path = write_json("cover.json", identity_covering(3))
        result = runner.invoke(cli, ["--output", "json", "descent", path])
        summary = json.loads(result.output)
        assert summary["passed"] is True
        assert summary["reports"][0]["check"] == "triple"
        assert summary["reports"][0]["indices"] == ["0", "1", "2"]

    def test_non_inner_triple(self, runner, write_json):
        document = identity_covering(3)
        document["transitions"][0]["map"] = ROTATION_MAP
        result = runner.invoke(cli, ["descent", write_json("cover.json", document)])
        assert result.exit_code == 1

    def test_lien_of_covering(self, runner, write_json):
        result = runner.invoke(cli, ["lien3", write_json("cover.json", identity_covering(4))])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "all defects trivial"

    def test_failed_lien_condition(self, runner, write_json):
        section = {"dim": 1, "floor": -2, "terms": [
            {"tau": 0, "monomials": [{"c": "1", "x": [0], "u": [0]}]},
            {"tau": -1, "monomials": [{"c": "1", "x": [1], "u": [0]}]},
        ]}
        lien = {"dim": 1, "charts": [0, 1, 2], "depth": 2,
                "sections": [{"indices": [0, 1, 2], "symbol": section}]}
        result = runner.invoke(cli, ["lien3", write_json("lien.json", lien)])
        assert result.exit_code == 1
        assert result.output.splitlines()[-1] == "verification failed: 1 of 1 checks"

    def test_lien_isomorphism(self, runner, write_json):
        lien = write_json("lien.json", {"dim": 1, "charts": [0, 1, 2], "depth": 2, "sections": []})
        iso = write_json("iso.json", {})
        result = runner.invoke(cli, ["lieniso", lien, lien, iso])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "all defects trivial"


class TestConfiguration:
    def test_missing_config(self, runner):
        result = runner.invoke(cli, ["--config", "absent.yaml", "star", "u1", "x1"])
        assert result.exit_code == 2

    def test_config_depth(self, runner, tmp_path):
        (tmp_path / "config").mkdir()
        (tmp_path / "config" / "config.yaml").write_text("engine:\n  depth: 1\n", encoding="utf-8")
        result = runner.invoke(cli, ["invert", "1 - tau^-1*u1"])
        assert result.output.strip() == "1 + u1*tau^-1"

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output
