"""Worked examples with their published values and the values we expect.

Each quantity records the published value and the value the analysis must
produce. Where the two differ the published value failed verification, and the
comparison is reported as EXPECTED-DIVERGENCE rather than AGREE.
"""

import logging
from dataclasses import dataclass

from pydantic import BaseModel

from chaincode.core.exceptions import SpecFileError
from chaincode.schemas.analysis import AnalysisReport
from chaincode.schemas.code_spec import CodeSpecFile
from chaincode.schemas.report import DistanceMethod
from chaincode.schemas.ring import RingDescriptor, RingFamily
from chaincode.services.analysis_service import analyze

logger = logging.getLogger(__name__)

AGREE = "AGREE"
EXPECTED_DIVERGENCE = "EXPECTED-DIVERGENCE"
MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class Expectation:
    quantity: str
    published: int | bool
    expected: int | bool
    note: str = ""


@dataclass(frozen=True)
class WorkedExample:
    example_id: str
    spec: CodeSpecFile
    expectations: tuple[Expectation, ...]


def _spec(family: RingFamily, p: int, nu: int, n: int, *gens: str) -> CodeSpecFile:
    return CodeSpecFile(
        ring=RingDescriptor(family=family, p=p, nu=nu),
        n=n,
        generators=gens,
        distance_method="auto",
    )


def _same(quantity: str, value: int | bool) -> Expectation:
    return Expectation(quantity, value, value)


EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(
        "4.1",
        _spec(RingFamily.INTEGER_MODULAR, 5, 2, 25, "5", "(z-1)^24"),
        (
            _same("i_0", 1),
            _same("i_1", 0),
            _same("t_0", 0),
            _same("t_1", 24),
            _same("rank", 25),
            _same("d", 1),
            _same("mhdr", True),
            _same("mds", False),
        ),
    ),
    WorkedExample(
        "4.2",
        _spec(RingFamily.POLY_EXTENSION, 5, 2, 25, "(z-1)^24"),
        (
            _same("i_0", 0),
            _same("t_0", 24),
            _same("rank", 1),
            Expectation("d", 24, 25, "(z-1)^24 over F_5 has all 25 coefficients nonzero"),
            _same("mhdr", True),
            _same("mds", True),
        ),
    ),
    WorkedExample(
        "4.3",
        _spec(
            RingFamily.POLY_EXTENSION, 2, 4, 6, "(z^2-1) + g*(z-1) + g^2*(z-1) + g^3"
        ),
        (
            Expectation("i_0", 0, 1, "g(z+1+g^2) lies in C, so a degree-1 generator exists"),
            Expectation("t_0", 2, 1, "the generator does not divide z^6-1"),
            Expectation("rank", 4, 5, "rank = n - t_0"),
            Expectation("d", 3, 2, "Tor_1 = <z+1> has a weight-2 word"),
            Expectation("mds", True, False, "|C| = 2^19 but the Singleton bound needs 2^20"),
            _same("mhdr", True),
        ),
    ),
    WorkedExample(
        "4.4",
        _spec(RingFamily.POLY_EXTENSION, 2, 4, 6, "g^2*(z^3-1) + g^3*(z^2-1)"),
        (
            _same("i_0", 2),
            _same("t_0", 3),
            _same("rank", 3),
            _same("d", 2),
            _same("mds", False),
            _same("mhdr", False),
        ),
    ),
    WorkedExample(
        "4.5",
        _spec(RingFamily.POLY_EXTENSION, 3, 3, 18, "g^2*(z^2-1)", "g*(z^2-1)^3 + g^2*(z-1)"),
        (
            _same("i_0", 2),
            _same("i_1", 1),
            _same("t_0", 2),
            _same("t_1", 6),
            _same("rank", 16),
            _same("d", 2),
            _same("mds", False),
            _same("mhdr", False),
        ),
    ),
)


class QuantityResult(BaseModel):
    quantity: str
    published: int | bool
    expected: int | bool
    computed: int | bool | None
    status: str
    note: str = ""


class ExampleResult(BaseModel):
    example_id: str
    ring: str
    n: int
    generators: list[str]
    quantities: list[QuantityResult]
    flags: int

    @property
    def ok(self) -> bool:
        return all(q.status != MISMATCH for q in self.quantities)


class CorpusReport(BaseModel):
    examples: list[ExampleResult]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.examples)


def _computed(report: AnalysisReport, quantity: str) -> int | bool | None:
    if quantity == "rank":
        return report.rank
    if quantity == "d":
        for result in report.distance:
            if result.method is DistanceMethod.TORSION_SEARCH:
                return result.value
        return None
    if quantity == "mds":
        return report.mds.verdict if report.mds else None
    if quantity == "mhdr":
        return report.mhdr.verdict if report.mhdr else None
    name, _, index = quantity.partition("_")
    gens = report.canonical.generators if report.canonical else []
    j = int(index)
    if j >= len(gens):
        return None
    return getattr(gens[j], name)


def _status(expectation: Expectation, computed: int | bool | None) -> str:
    if computed != expectation.expected or type(computed) is not type(expectation.expected):
        return MISMATCH
    if computed == expectation.published:
        return AGREE
    return EXPECTED_DIVERGENCE


def select_examples(selector: str = "all") -> tuple[WorkedExample, ...]:
    if selector == "all":
        return EXAMPLES
    chosen = tuple(e for e in EXAMPLES if e.example_id == selector)
    if not chosen:
        known = ", ".join(e.example_id for e in EXAMPLES)
        raise SpecFileError(f"unknown example {selector!r}; choose one of {known} or all")
    return chosen


def verify_paper(
    selector: str = "all", budget: int | None = None, workers: int | None = None
) -> CorpusReport:
    results = []
    for example in select_examples(selector):
        report = analyze(example.spec, budget=budget, workers=workers)
        quantities = []
        for expectation in example.expectations:
            computed = _computed(report, expectation.quantity)
            status = _status(expectation, computed)
            if status == MISMATCH:
                logger.warning(
                    "example %s: %s computed %s, expected %s",
                    example.example_id,
                    expectation.quantity,
                    computed,
                    expectation.expected,
                )
            quantities.append(
                QuantityResult(
                    quantity=expectation.quantity,
                    published=expectation.published,
                    expected=expectation.expected,
                    computed=computed,
                    status=status,
                    note=expectation.note if status != AGREE else "",
                )
            )
        results.append(
            ExampleResult(
                example_id=example.example_id,
                ring=report.ring.label,
                n=report.n,
                generators=report.generators,
                quantities=quantities,
                flags=len(report.flags.mismatches),
            )
        )
    return CorpusReport(examples=results)


def render_corpus_text(report: CorpusReport) -> str:
    lines = []
    for example in report.examples:
        lines.append(f"Example {example.example_id}: {example.ring}, n = {example.n}")
        lines.append(f"  C = <{', '.join(example.generators)}>")
        for q in example.quantities:
            line = (
                f"  {q.quantity:<5} published={_show(q.published):<5} "
                f"computed={_show(q.computed):<5} {q.status}"
            )
            if q.note:
                line += f"  ({q.note})"
            lines.append(line)
        lines.append(f"  consistency flags: {example.flags}")
    lines.append("result: " + ("all expectations met" if report.ok else "MISMATCH"))
    return "\n".join(lines) + "\n"


def _show(value: int | bool | None) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return "-" if value is None else str(value)
