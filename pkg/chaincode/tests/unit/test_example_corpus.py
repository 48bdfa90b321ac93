"""Unit tests for the worked-example corpus."""

import pytest

from chaincode.core.exceptions import SpecFileError
from chaincode.services.example_corpus import (
    AGREE,
    EXAMPLES,
    EXPECTED_DIVERGENCE,
    render_corpus_text,
    select_examples,
    verify_paper,
)


class TestSelectExamples:
    """Example selectors."""

    def test_all(self) -> None:
        """Verify 'all' selects the five examples in order."""
        assert [e.example_id for e in select_examples("all")] == ["4.1", "4.2", "4.3", "4.4", "4.5"]

    def test_single(self) -> None:
        """Verify one id selects one example."""
        assert select_examples("4.2") == (EXAMPLES[1],)

    def test_unknown(self) -> None:
        """Verify unknown ids are refused with the valid choices."""
        with pytest.raises(SpecFileError, match="unknown example '9.9'"):
            select_examples("9.9")


class TestVerifyExamples:
    """Expected-versus-computed comparisons."""

    def test_fourth_example_agrees(self) -> None:
        """Verify every quantity of 4.4 matches its published value."""
        report = verify_paper("4.4")

        assert report.ok
        assert {q.status for q in report.examples[0].quantities} == {AGREE}

    def test_third_example_divergences(self) -> None:
        """Verify d and MDS of 4.3 are expected divergences."""
        report = verify_paper("4.3")
        status = {q.quantity: q.status for q in report.examples[0].quantities}

        assert report.ok
        assert status["d"] == EXPECTED_DIVERGENCE
        assert status["mds"] == EXPECTED_DIVERGENCE
        assert status["mhdr"] == AGREE

    def test_second_example_distance(self) -> None:
        """Verify the distance 25 is recorded against the printed 24."""
        quantities = verify_paper("4.2").examples[0].quantities
        distance = next(q for q in quantities if q.quantity == "d")

        assert distance.published == 24
        assert distance.computed == 25
        assert distance.status == EXPECTED_DIVERGENCE

    def test_text_rendering(self) -> None:
        """Verify the text lists statuses and the overall result."""
        text = render_corpus_text(verify_paper("4.2"))

        assert "Example 4.2: F_5[u]/(u^2), n = 25" in text
        assert "EXPECTED-DIVERGENCE" in text
        assert text.endswith("result: all expectations met\n")
