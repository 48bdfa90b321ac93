"""End-to-end tests of the command-line interface."""

import json
from pathlib import Path

import pytest

from chaincode.main import create_parser, main

FIRST_EXAMPLE = """\
ring.family = integer-modular
ring.p = 5
ring.nu = 2
n = 25
gen = 5
gen = (z-1)^24
"""

SECOND_EXAMPLE = """\
ring.family = poly-extension
ring.p = 5
ring.nu = 2
n = 25
gen = (z-1)^24
"""


@pytest.fixture
def spec_file(tmp_path: Path):
    def _write(text: str, name: str = "code.spec") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


class TestParser:
    """Argument parsing."""

    def test_subcommands(self) -> None:
        """Verify the three sub-commands are registered."""
        parser = create_parser()

        for argv in (["analyze", "--input", "x"], ["verify-paper"], ["random-check"]):
            assert callable(parser.parse_args(argv).handler)

    def test_usage_error_exits_one(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify bad usage is an input error, not the budget exit code."""
        assert main(["analyze"]) == 1


class TestAnalyzeCommand:
    """chaincode analyze."""

    @pytest.mark.integration
    def test_text_report(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify the first example analyses with exit code 0."""
        code = main(["analyze", "--input", spec_file(FIRST_EXAMPLE)])
        out = capsys.readouterr().out

        assert code == 0
        assert "rank: 25" in out
        assert "torsion-search: 1" in out
        assert "MHDR: yes" in out

    @pytest.mark.integration
    def test_json_report(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify --format json emits the report schema."""
        code = main(["analyze", "--input", spec_file(SECOND_EXAMPLE), "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert code == 0
        assert data["rank"] == 1
        assert data["mds"]["verdict"] is True
        assert data["mds"]["tor0_exponent"] == data["mds"]["tor0_singleton_exponent"] == 1
        methods = {d["method"] for d in data["distance"]}
        assert methods == {"torsion-search", "exhaustive", "paper-formula"}

    @pytest.mark.integration
    def test_output_is_deterministic(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify two runs print identical bytes."""
        path = spec_file(SECOND_EXAMPLE)
        main(["analyze", "--input", path, "--format", "json"])
        first = capsys.readouterr().out
        main(["analyze", "--input", path, "--format", "json"])

        assert capsys.readouterr().out == first

    @pytest.mark.integration
    def test_zero_code(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify a zero generator exits 0 with a zero-code report."""
        text = FIRST_EXAMPLE.replace("gen = 5\ngen = (z-1)^24\n", "gen = 0\n")

        assert main(["analyze", "--input", spec_file(text)]) == 0
        assert "zero code" in capsys.readouterr().out

    @pytest.mark.integration
    def test_budget_exit_two(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify an exceeded budget exits 2 with a hint."""
        code = main(
            [
                "analyze",
                "--input",
                spec_file(SECOND_EXAMPLE),
                "--distance-method",
                "torsion-search",
                "--max-enum",
                "1",
            ]
        )

        assert code == 2
        assert "error: instance too large" in capsys.readouterr().err

    @pytest.mark.integration
    def test_budget_falls_back_to_formula(
        self, spec_file, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Verify an over-budget search with the formula requested still reports verdicts."""
        text = "ring.family = poly-extension\nring.p = 2\nring.nu = 2\nn = 8\ngen = (z+1)^3\n"

        code = main(
            [
                "analyze",
                "--input",
                spec_file(text),
                "--distance-method",
                "formula",
                "--max-enum",
                "4",
            ]
        )
        out = capsys.readouterr().out

        assert code == 0
        assert "skipped torsion-search: instance too large" in out
        assert "paper-formula: 2, trusted" in out
        assert "MHDR: no (d = 2, n - rank + 1 = 4) [advisory: d from paper-formula]" in out

    @pytest.mark.integration
    def test_parse_error_exit_one(self, spec_file, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify a malformed generator exits 1 and names the offset."""
        text = FIRST_EXAMPLE.replace("gen = 5", "gen = z^")

        assert main(["analyze", "--input", spec_file(text)]) == 1
        assert "offset 2" in capsys.readouterr().err

    @pytest.mark.integration
    def test_missing_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify a missing input file exits 1."""
        assert main(["analyze", "--input", str(tmp_path / "none.spec")]) == 1
        assert capsys.readouterr().err.startswith("error: cannot read")


class TestVerifyPaperCommand:
    """chaincode verify-paper."""

    @pytest.mark.integration
    def test_all_examples(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify every worked example meets its recorded expectations."""
        code = main(["verify-paper"])
        out = capsys.readouterr().out

        assert code == 0
        for example_id in ("4.1", "4.2", "4.3", "4.4", "4.5"):
            assert f"Example {example_id}:" in out
        assert "MISMATCH" not in out

    @pytest.mark.integration
    def test_single_example_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify --example with JSON output."""
        code = main(["verify-paper", "--example", "4.4", "--format", "json"])
        data = json.loads(capsys.readouterr().out)

        assert code == 0
        assert [e["example_id"] for e in data["examples"]] == ["4.4"]


class TestRandomCheckCommand:
    """chaincode random-check."""

    @pytest.mark.integration
    def test_zero_trials(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify trials = 0 exits 0."""
        assert main(["random-check", "--seed", "1", "--trials", "0"]) == 0
        assert "all properties hold" in capsys.readouterr().out

    @pytest.mark.integration
    def test_seeded_run(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Verify a short seeded run passes and repeats exactly."""
        argv = ["random-check", "--seed", "4", "--trials", "5", "--max-n", "3", "--format", "json"]

        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first
