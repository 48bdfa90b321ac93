"""The analyze pipeline: from a code spec to a full analysis report."""

import logging

from chaincode.core.config import settings
from chaincode.schemas.analysis import (
    AnalysisReport,
    CanonicalGenerator,
    CanonicalSummary,
    FlagSummary,
    NormalFormGenerator,
    NormalFormSummary,
    RingSummary,
    TorsionLevelSummary,
)
from chaincode.schemas.code_spec import CodeSpecFile
from chaincode.schemas.report import DistanceMethod
from chaincode.services.classify_service import consistency_report
from chaincode.services.code_structure import CyclicCode, minimal_spanning_set
from chaincode.services.poly_parser import format_fpoly, format_poly
from chaincode.services.spec_file_service import build_code_from_spec

logger = logging.getLogger(__name__)

METHOD_CHOICES: dict[str, tuple[DistanceMethod, ...]] = {
    "auto": (DistanceMethod.EXHAUSTIVE, DistanceMethod.PAPER_FORMULA),
    "torsion-search": (),
    "exhaustive": (DistanceMethod.EXHAUSTIVE,),
    "formula": (DistanceMethod.PAPER_FORMULA,),
}


def _ring_summary(code: CyclicCode) -> RingSummary:
    desc = code.ring.descriptor
    return RingSummary(
        label=desc.label(),
        family=desc.family.value,
        p=desc.p,
        s=desc.s,
        nu=desc.nu,
        q=desc.q,
        field_modulus=list(code.ring.field.modulus) if desc.s > 1 else None,
    )


def analyze_code(
    code: CyclicCode,
    distance_method: str = "auto",
    budget: int | None = None,
    workers: int | None = None,
) -> AnalysisReport:
    """Run the full pipeline on an already built code.

    The torsion search always runs; ``distance_method`` selects which other
    distance methods are listed and cross-checked.
    """
    budget = settings.max_enum if budget is None else budget
    classification = consistency_report(code, budget, workers, METHOD_CHOICES[distance_method])
    tower = code.tower
    torsion = [
        TorsionLevelSummary(level=lv.level, degree=lv.degree, generator=format_fpoly(lv.generator))
        for lv in tower.levels
    ]
    canonical = normal = None
    if not code.is_zero:
        canonical = CanonicalSummary(
            m=code.canonical.m,
            generators=[
                CanonicalGenerator(i=e.i, t=e.t, f=format_poly(e.f), h=format_poly(e.h))
                for e in code.canonical.entries
            ],
        )
        normal = NormalFormSummary(
            generators=[
                NormalFormGenerator(
                    i=e.i,
                    t=e.t,
                    generator=format_poly(e.poly),
                    levels=[format_fpoly(b) for b in e.levels],
                )
                for e in code.normal_form.entries
            ],
            minimal_spanning_set_size=len(minimal_spanning_set(code)),
        )
    return AnalysisReport(
        ring=_ring_summary(code),
        n=code.n,
        generators=[format_poly(g) for g in code.input_gens],
        canonical=canonical,
        normal_form=normal,
        torsion=torsion,
        cardinality_exponent=classification.cardinality_exponent,
        rank=classification.rank,
        distance=classification.distances,
        mds=classification.mds,
        mhdr=classification.mhdr,
        flags=FlagSummary(
            zero_code=classification.zero_code,
            mismatches=classification.flags,
            skipped=classification.skipped,
        ),
    )


def analyze(
    spec: CodeSpecFile,
    distance_method: str | None = None,
    budget: int | None = None,
    workers: int | None = None,
) -> AnalysisReport:
    """Analyze the code described by ``spec``.

    Explicit arguments override the method and budget recorded in the code-spec file.
    """
    code = build_code_from_spec(spec)
    method = distance_method or spec.distance_method
    if budget is None:
        budget = spec.budget
    logger.info("analyzing %s, n=%d, method %s", spec.ring.label(), spec.n, method)
    return analyze_code(code, method, budget, workers)
