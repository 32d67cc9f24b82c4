"""Unit tests for main application module."""

import json
from pathlib import Path
from unittest.mock import ANY, MagicMock

import pytest
import typer
from typer.testing import CliRunner

from simplicial_dgla.cli.app import EXIT_INPUT, EXIT_MATH, EXIT_OK, _run, app
from simplicial_dgla.models.exceptions import SimplicialDglaError
from simplicial_dgla.models.results import PipelineResult
from tests.fixtures.builders import DOCUMENTS

runner = CliRunner()

CROSSED = str(DOCUMENTS / "crossed_module.json")
WEIGHTED = str(DOCUMENTS / "two_crossed_weighted.json")
MODULES = str(DOCUMENTS / "module_complex.json")


class TestVersionAndSchema:
    """Test cases for the informational commands."""

    def test_version_command_displays_version(self) -> None:
        """Test that version command displays version information."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == EXIT_OK
        assert "Simplicial DGLA version 0.1.0" in result.stdout

    def test_schema_command_prints_input_schema(self) -> None:
        """Test that schema prints every input kind."""
        result = runner.invoke(app, ["schema"])
        assert result.exit_code == EXIT_OK
        assert "two_crossed_module" in result.stdout


class TestValidateCommand:
    """Test cases for the validate command."""

    def test_valid_crossed_module(self) -> None:
        """Test exit code 0 and the check summary."""
        result = runner.invoke(app, ["validate", CROSSED])
        assert result.exit_code == EXIT_OK
        assert "check(s) passed" in result.stdout

    def test_broken_crossed_module(self) -> None:
        """Test that a failing law gives exit code 1 and names the law."""
        result = runner.invoke(
            app, ["validate", str(DOCUMENTS / "broken_crossed_module.json"), "-f", "json"]
        )
        assert result.exit_code == EXIT_MATH
        assert "CM-equivariance" in result.stdout

    def test_non_jacobi_is_a_math_failure(self) -> None:
        """Test that structure constants failing Jacobi are reported, not crashed on."""
        result = runner.invoke(app, ["validate", str(DOCUMENTS / "non_jacobi.json"), "-f", "json"])
        assert result.exit_code == EXIT_MATH
        assert "lie-jacobi" in result.stdout

    def test_malformed_rational(self) -> None:
        """Test that "1/0" is an input error."""
        result = runner.invoke(app, ["validate", str(DOCUMENTS / "malformed_rational.json")])
        assert result.exit_code == EXIT_INPUT

    def test_shape_mismatch(self) -> None:
        """Test that wrong array shapes are an input error."""
        result = runner.invoke(app, ["validate", str(DOCUMENTS / "shape_mismatch.json")])
        assert result.exit_code == EXIT_INPUT

    def test_missing_file(self, tmp_path) -> None:
        """Test that a missing input file is an input error."""
        result = runner.invoke(app, ["validate", str(tmp_path / "missing.json")])
        assert result.exit_code == EXIT_INPUT

    def test_invalid_format(self) -> None:
        """Test that an unknown report format is an input error."""
        result = runner.invoke(app, ["validate", CROSSED, "--format", "yaml"])
        assert result.exit_code == EXIT_INPUT


class TestMooreCommand:
    """Test cases for the moore command."""

    def test_json_report(self) -> None:
        """Test the Moore section of the JSON report."""
        result = runner.invoke(app, ["moore", WEIGHTED, "-f", "json"])
        assert result.exit_code == EXIT_OK
        moore = json.loads(result.stdout)["moore"]
        assert moore["dims"][:3] == [1, 1, 1]
        assert moore["length"] == 2
        assert moore["symmetric_peiffer"] == [[["2"]]]

    def test_truncation_is_passed_to_the_service(self, mocker) -> None:
        """Test that --truncation overrides the document and a failed stage exits 1."""
        service = MagicMock()
        service.moore.return_value = PipelineResult(
            command="moore", kind="crossed_module", failed_stage="moore", message="boom"
        )
        mocker.patch("simplicial_dgla.cli.app._service", return_value=service)
        result = runner.invoke(app, ["moore", CROSSED, "-K", "3"])
        assert result.exit_code == EXIT_MATH
        service.moore.assert_called_once_with(ANY, 3)


class TestDglaCommand:
    """Test cases for the dgla command."""

    def test_text_report(self) -> None:
        """Test the DGLA table and the oracle comparison in text output."""
        result = runner.invoke(app, ["dgla", CROSSED])
        assert result.exit_code == EXIT_OK
        assert "DGLA of length 1" in result.stdout
        assert "Oracle comparison" in result.stdout

    def test_json_report(self) -> None:
        """Test the DGLA section of the JSON report."""
        result = runner.invoke(app, ["dgla", WEIGHTED, "-f", "json"])
        assert result.exit_code == EXIT_OK
        data = json.loads(result.stdout)
        assert data["ok"] is True
        bracket = next(b for b in data["dgla"]["brackets"] if b["degrees"] == [1, 1])
        assert bracket["values"] == [[["-2"]]]

    def test_out_and_recheck(self, tmp_path) -> None:
        """Test that a written report can be rechecked."""
        out = tmp_path / "report.json"
        result = runner.invoke(app, ["dgla", WEIGHTED, "-f", "json", "--out", str(out)])
        assert result.exit_code == EXIT_OK
        assert json.loads(out.read_text())["command"] == "dgla"

        recheck = runner.invoke(app, ["dgla", str(out), "--recheck", "-f", "json", "-o", str(out)])
        assert recheck.exit_code == EXIT_OK
        data = json.loads(out.read_text())
        assert data["command"] == "recheck"
        assert data["verification"]["ok"] is True

    def test_recheck_of_input_document(self) -> None:
        """Test that --recheck on an input document is an input error."""
        result = runner.invoke(app, ["dgla", CROSSED, "--recheck"])
        assert result.exit_code == EXIT_INPUT

    def test_unexpected_computation_error(self, mocker) -> None:
        """Test that a computation error outside the pipeline stages exits 1."""
        service = MagicMock()
        service.dgla.side_effect = SimplicialDglaError("boom")
        mocker.patch("simplicial_dgla.cli.app._service", return_value=service)
        result = runner.invoke(app, ["dgla", CROSSED])
        assert result.exit_code == EXIT_MATH
        assert not isinstance(result.exception, SimplicialDglaError)


class TestOracleCommand:
    """Test cases for the oracle command."""

    def test_level_zero(self) -> None:
        """Test the oracle tables at level 0."""
        result = runner.invoke(app, ["oracle", CROSSED, "--level", "0"])
        assert result.exit_code == EXIT_OK
        assert "Oracle at level 0" in result.stdout

    def test_level_above_moore_length(self) -> None:
        """Test that a level above k is an input error."""
        result = runner.invoke(app, ["oracle", CROSSED, "-n", "2"])
        assert result.exit_code == EXIT_INPUT

    def test_level_above_configured_maximum(self) -> None:
        """Test that a level above the configured maximum is an input error."""
        result = runner.invoke(app, ["oracle", WEIGHTED, "-n", "9"])
        assert result.exit_code == EXIT_INPUT

    def test_missing_level_is_an_input_error(self) -> None:
        """Test that the shared runner refuses an oracle run without a level."""
        with pytest.raises(typer.Exit) as exc_info:
            _run("oracle", Path(CROSSED), None, "json", None)
        assert exc_info.value.exit_code == EXIT_INPUT


class TestNerveCommand:
    """Test cases for the nerve command."""

    def test_nerve_round_trip(self, tmp_path) -> None:
        """Test that the emitted simplicial document validates and gives the same DGLA."""
        nerve = tmp_path / "nerve.json"
        result = runner.invoke(app, ["nerve", WEIGHTED, "--out", str(nerve)])
        assert result.exit_code == EXIT_OK
        document = json.loads(nerve.read_text())
        assert document["kind"] == "simplicial"
        assert document["options"] == {"truncation": 3}

        dgla = runner.invoke(app, ["dgla", str(nerve), "-f", "json"])
        assert dgla.exit_code == EXIT_OK
        brackets = json.loads(dgla.stdout)["dgla"]["brackets"]
        bracket = next(b for b in brackets if b["degrees"] == [1, 1])
        assert bracket["values"] == [[["-2"]]]

    def test_nerve_to_stdout(self) -> None:
        """Test that without --out the document goes to stdout."""
        result = runner.invoke(app, ["nerve", CROSSED, "-K", "2"])
        assert result.exit_code == EXIT_OK
        assert len(json.loads(result.stdout)["levels"]) == 3

    def test_truncation_below_generator_minimum(self) -> None:
        """Test that K = 1 for a crossed module is an input error."""
        result = runner.invoke(app, ["nerve", CROSSED, "-K", "1"])
        assert result.exit_code == EXIT_INPUT

    def test_length_three_simplicial_document(self, tmp_path) -> None:
        """Test a module complex written as a simplicial document through the full dgla run."""
        nerve = tmp_path / "modules.json"
        result = runner.invoke(app, ["nerve", MODULES, "--out", str(nerve)])
        assert result.exit_code == EXIT_OK
        assert json.loads(nerve.read_text())["options"] == {"truncation": 4}

        dgla = runner.invoke(app, ["dgla", str(nerve), "-f", "json"])
        assert dgla.exit_code == EXIT_OK
        data = json.loads(dgla.stdout)
        assert data["provenance"]["kind"] == "simplicial"
        assert data["dgla"]["dims"] == [2, 1, 1, 1]
        comparison = data["oracle_comparison"]
        assert comparison["ok"] is True
        assert [row["n"] for row in comparison["sign_table"]] == [2, 3, 3, 3]
