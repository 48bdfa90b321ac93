"""MDS and MHDR classification and the consistency engine.

Search-based distances are authoritative. The closed-form distance for
repeated-root codes and the MHDR predicate are shortcuts: they are evaluated
only inside their domain (p | n, t0 < p^r) and any disagreement with search is
recorded as a flag, marked trusted when n = p^r.
"""

import logging

from chaincode.core.exceptions import BudgetExceededError, ChainCodeError, DomainError
from chaincode.schemas.report import (
    ClassificationReport,
    ConsistencyFlag,
    DistanceMethod,
    DistanceResult,
    MdsVerdict,
    MhdrVerdict,
    PredicateVerdict,
    SkippedCheck,
)
from chaincode.services.code_structure import CyclicCode, cardinality_exponent, rank
from chaincode.services.distance_service import (
    code_distance_exhaustive,
    code_distance_via_torsion,
    field_code_distance,
)
from chaincode.services.poly_arith import FPoly, fpoly_mul
from chaincode.services.residue_field import ResidueField

logger = logging.getLogger(__name__)


def split_length(n: int, p: int) -> tuple[int, int]:
    """Write n = n' p^r with gcd(n', p) = 1."""
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return n, r


def paper_distance_formula(t0: int, p: int, r: int) -> int:
    """Closed-form distance of <(z - 1)^t0> over F_p of length p^r.

    Raises:
        DomainError: If r < 1 or t0 is outside 0..p^r - 1.
    """
    if r < 1:
        raise DomainError(f"r must be at least 1, got {r}")
    if not 0 <= t0 < p**r:
        raise DomainError(f"t0 = {t0} outside 0..{p**r - 1}")
    if t0 == 0:
        return 1
    for ell in range(p - 1):
        if ell * p ** (r - 1) + 1 <= t0 <= (ell + 1) * p ** (r - 1):
            return ell + 2
    for k in range(1, r):
        for i in range(1, p):
            low = p**r - p ** (r - k) + (i - 1) * p ** (r - k - 1) + 1
            high = p**r - p ** (r - k) + i * p ** (r - k - 1)
            if low <= t0 <= high:
                return (i + 1) * p**k
    raise DomainError(f"no case of the distance formula covers t0 = {t0}")


def theorem_mhdr_predicate(n: int, p: int, t0: int) -> PredicateVerdict:
    """MHDR predicate for lengths n = n' p^r with r >= 1.

    r = 1 gives MHDR for every t0; r > 1 gives MHDR iff t0 is 0, 1 or p^r - 1.
    """
    n_prime, r = split_length(n, p)
    if r == 0:
        raise DomainError(f"p = {p} does not divide n = {n}")
    verdict = True if r == 1 else t0 in (0, 1, p**r - 1)
    return PredicateVerdict(mhdr=verdict, applicable=n_prime == 1, n_prime=n_prime, r=r)


def is_field_mds(
    field: ResidueField,
    n: int,
    gen: FPoly,
    budget: int | None = None,
    workers: int | None = None,
    distance: int | None = None,
) -> bool:
    """Singleton equality n - deg gen = n - d + 1 for a cyclic code over F_q.

    ``distance`` skips the search when d is already known.
    """
    d = field_code_distance(field, n, gen, budget, workers) if distance is None else distance
    return n - int(gen.degree) == n - d + 1


def _principal_monic(code: CyclicCode) -> bool:
    gens = code.canonical
    return gens.m == 0 and gens.entries[0].i == 0


def is_mds(
    code: CyclicCode,
    budget: int | None = None,
    workers: int | None = None,
    distance: int | None = None,
) -> MdsVerdict:
    """Both MDS routes; the definitional one is the verdict.

    The theorem route applies to principal codes <h_0> with h_0 monic: C is
    MDS iff Tor_0 = <h_0 mod gamma> is MDS over the residue field.
    """
    ring, n = code.ring, code.n
    if distance is None:
        distance = code_distance_via_torsion(code, budget, workers).value
    exponent = cardinality_exponent(code)
    singleton = ring.s * ring.nu * (n - distance + 1)
    definitional = exponent == singleton
    principal = _principal_monic(code)
    field_mds = tor0_exponent = tor0_singleton = None
    if principal:
        # i_0 = 0 makes Tor_0 the top torsion code, so it shares C's distance
        tor0 = code.tower.levels[0]
        field_mds = is_field_mds(ring.field, n, tor0.generator, budget, workers, distance)
        tor0_exponent = ring.s * (n - tor0.degree)
        tor0_singleton = ring.s * (n - distance + 1)
    theorem = principal and bool(field_mds)
    if definitional != theorem:
        logger.warning("MDS routes disagree: definitional %s, theorem %s", definitional, theorem)
    return MdsVerdict(
        verdict=definitional,
        definitional_route=definitional,
        theorem_route=theorem,
        cardinality_exponent=exponent,
        singleton_exponent=singleton,
        principal_monic=principal,
        field_mds=field_mds,
        tor0_exponent=tor0_exponent,
        tor0_singleton_exponent=tor0_singleton,
        routes_agree=definitional == theorem,
    )


def is_mhdr(
    code: CyclicCode,
    budget: int | None = None,
    workers: int | None = None,
    distance: int | None = None,
) -> MhdrVerdict:
    if distance is None:
        distance = code_distance_via_torsion(code, budget, workers).value
    r = rank(code)
    t0 = code.canonical.entries[0].t
    return MhdrVerdict(verdict=distance == code.n - r + 1, d=distance, rank=r, t0=t0)


def _flag(check: str, left: str, lv, right: str, rv, trusted=None) -> ConsistencyFlag:
    logger.warning("consistency mismatch in %s: %s=%s vs %s=%s", check, left, lv, right, rv)
    return ConsistencyFlag(
        check=check, left=left, left_value=lv, right=right, right_value=rv, trusted=trusted
    )


def consistency_report(
    code: CyclicCode,
    budget: int | None = None,
    workers: int | None = None,
    methods: tuple[DistanceMethod, ...] | None = None,
) -> ClassificationReport:
    """Run every applicable method and record disagreements as flags.

    The torsion search is authoritative. When it exceeds the budget and the
    closed form was requested and applies, the search is recorded as skipped
    and both verdicts rest on the closed form, marked advisory.

    Args:
        code: The code to classify.
        budget: Enumeration budget for every search.
        workers: Processes for the torsion search.
        methods: Distance methods listed besides the torsion search; all of
            them when omitted.

    Raises:
        BudgetExceededError: If no requested method can produce a distance.
    """
    if code.is_zero:
        return ClassificationReport(rank=0, cardinality_exponent=0, zero_code=True)
    if methods is None:
        methods = tuple(DistanceMethod)
    ring, n = code.ring, code.n
    report = ClassificationReport(rank=rank(code), cardinality_exponent=cardinality_exponent(code))
    t0 = code.canonical.entries[0].t
    n_prime, r = split_length(n, ring.p)
    in_domain = r >= 1 and t0 < ring.p**r
    formula_usable = DistanceMethod.PAPER_FORMULA in methods and in_domain

    d: int | None = None
    source = DistanceMethod.TORSION_SEARCH
    try:
        search = code_distance_via_torsion(code, budget, workers)
    except BudgetExceededError as exc:
        if not formula_usable:
            raise
        logger.info("torsion search over budget, falling back to the closed form")
        report.skipped.append(SkippedCheck(check="torsion-search", reason=exc.message))
    else:
        report.distances.append(search)
        d = search.value

    if DistanceMethod.EXHAUSTIVE in methods:
        try:
            exhaustive = code_distance_exhaustive(code, budget)
        except ChainCodeError as exc:
            report.skipped.append(SkippedCheck(check="exhaustive-distance", reason=exc.message))
        else:
            report.distances.append(exhaustive)
            if d is None:
                d = exhaustive.value
                source = DistanceMethod.EXHAUSTIVE
            elif exhaustive.value != d:
                report.flags.append(
                    _flag("distance-oracle", "torsion-search", d, "exhaustive", exhaustive.value)
                )

    advisory = False
    if DistanceMethod.PAPER_FORMULA in methods:
        if not in_domain:
            report.skipped.append(
                SkippedCheck(check="paper-formula", reason=_domain_reason(ring.p, r, t0))
            )
        else:
            value = paper_distance_formula(t0, ring.p, r)
            report.distances.append(
                DistanceResult(
                    value=value, method=DistanceMethod.PAPER_FORMULA, applicable=n_prime == 1
                )
            )
            if d is None:
                d = value
                advisory = True
            elif value != d:
                report.flags.append(
                    _flag(
                        "paper-formula", "paper-formula", value, source.value, d, n_prime == 1
                    )
                )

    report.mds = is_mds(code, budget, workers, distance=d)
    report.mhdr = is_mhdr(code, budget, workers, distance=d)
    report.mds.advisory = report.mhdr.advisory = advisory
    if not report.mds.routes_agree:
        report.flags.append(
            _flag(
                "mds-routes",
                "definitional",
                report.mds.definitional_route,
                "theorem",
                report.mds.theorem_route,
            )
        )
    if report.mds.verdict and not report.mhdr.verdict:
        report.flags.append(_flag("mds-implies-mhdr", "mds", True, "mhdr", False))

    if in_domain:
        predicate = theorem_mhdr_predicate(n, ring.p, t0)
        if predicate.mhdr != report.mhdr.verdict:
            report.flags.append(
                _flag(
                    "mhdr-predicate",
                    "predicate",
                    predicate.mhdr,
                    "is_mhdr",
                    report.mhdr.verdict,
                    predicate.applicable,
                )
            )
    else:
        report.skipped.append(
            SkippedCheck(check="mhdr-predicate", reason=_domain_reason(ring.p, r, t0))
        )
    return report


FORMULA_SWEEP = ((2, 2, 0), (2, 3, 0), (3, 2, 0), (2, 4, 0), (5, 2, 20))


def _domain_reason(p: int, r: int, t0: int) -> str:
    if r == 0:
        return f"p = {p} does not divide n"
    return f"t0 = {t0} is not below p^r = {p**r}"


def formula_sweep(
    lengths: tuple[tuple[int, int, int], ...] = FORMULA_SWEEP,
    budget: int | None = None,
) -> list[tuple[int, int, int, int, int]]:
    """Compare the closed form with search on <(z - 1)^t0> over F_p, n = p^r.

    Each entry of ``lengths`` is (p, r, smallest t0). Returns the mismatches as
    (p, r, t0, formula, search) tuples.
    """
    mismatches = []
    for p, r, start in lengths:
        field = ResidueField(p)
        n = p**r
        base = FPoly(field, (field.neg(1), 1))
        gen = FPoly(field, (1,))
        for _ in range(start):
            gen = fpoly_mul(gen, base)
        for t0 in range(start, n):
            formula = paper_distance_formula(t0, p, r)
            try:
                search = field_code_distance(field, n, gen, budget)
            except BudgetExceededError:
                search = -1
            if formula != search:
                mismatches.append((p, r, t0, formula, search))
            gen = fpoly_mul(gen, base)
    return mismatches
