from pydantic import BaseModel

from chaincode.schemas.report import (
    ConsistencyFlag,
    DistanceResult,
    MdsVerdict,
    MhdrVerdict,
    SkippedCheck,
)


class RingSummary(BaseModel):
    label: str
    family: str
    p: int
    s: int
    nu: int
    q: int
    field_modulus: list[int] | None = None


class CanonicalGenerator(BaseModel):
    i: int
    t: int
    f: str
    h: str


class CanonicalSummary(BaseModel):
    m: int
    generators: list[CanonicalGenerator]


class NormalFormGenerator(BaseModel):
    i: int
    t: int
    generator: str
    levels: list[str]


class NormalFormSummary(BaseModel):
    generators: list[NormalFormGenerator]
    minimal_spanning_set_size: int


class TorsionLevelSummary(BaseModel):
    level: int
    degree: int
    generator: str


class FlagSummary(BaseModel):
    zero_code: bool = False
    mismatches: list[ConsistencyFlag] = []
    skipped: list[SkippedCheck] = []


class AnalysisReport(BaseModel):
    """Full analysis of one code; the JSON report is this model's dump."""

    ring: RingSummary
    n: int
    generators: list[str]
    canonical: CanonicalSummary | None
    normal_form: NormalFormSummary | None
    torsion: list[TorsionLevelSummary]
    cardinality_exponent: int
    rank: int
    distance: list[DistanceResult]
    mds: MdsVerdict | None
    mhdr: MhdrVerdict | None
    flags: FlagSummary
