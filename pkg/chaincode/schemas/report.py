from enum import Enum

from pydantic import BaseModel, Field


class DistanceMethod(str, Enum):
    TORSION_SEARCH = "torsion-search"
    EXHAUSTIVE = "exhaustive"
    PAPER_FORMULA = "paper-formula"


class DistanceResult(BaseModel):
    value: int = Field(ge=1)
    method: DistanceMethod
    enumerated: int = 0
    # Only set for the closed-form distance: True iff n' = 1.
    applicable: bool | None = None


class MdsVerdict(BaseModel):
    verdict: bool
    definitional_route: bool
    theorem_route: bool
    cardinality_exponent: int
    singleton_exponent: int
    principal_monic: bool
    field_mds: bool | None = None
    # |Tor_0| = p^tor0_exponent against |F_q|^(n - d + 1) = p^tor0_singleton_exponent
    tor0_exponent: int | None = None
    tor0_singleton_exponent: int | None = None
    routes_agree: bool
    # True when d comes from the closed form because no search fit the budget.
    advisory: bool = False


class MhdrVerdict(BaseModel):
    verdict: bool
    d: int
    rank: int
    t0: int
    advisory: bool = False


class PredicateVerdict(BaseModel):
    mhdr: bool
    applicable: bool
    n_prime: int
    r: int


class ConsistencyFlag(BaseModel):
    check: str
    left: str
    left_value: int | bool
    right: str
    right_value: int | bool
    trusted: bool | None = None


class SkippedCheck(BaseModel):
    check: str
    reason: str


class ClassificationReport(BaseModel):
    rank: int
    cardinality_exponent: int
    distances: list[DistanceResult] = []
    mds: MdsVerdict | None = None
    mhdr: MhdrVerdict | None = None
    flags: list[ConsistencyFlag] = []
    skipped: list[SkippedCheck] = []
    zero_code: bool = False

    @property
    def distance(self) -> int | None:
        for result in self.distances:
            if result.method is DistanceMethod.TORSION_SEARCH:
                return result.value
        return self.distances[0].value if self.distances else None
