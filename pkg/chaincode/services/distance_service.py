"""Minimum Hamming distance of cyclic codes.

Two exact methods: a message search over the top torsion code (a cyclic code
over the residue field) and an exhaustive walk of all codewords of C. Both
enumerate with numpy table lookups in fixed-size blocks and refuse work beyond
the enumeration budget instead of approximating.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from chaincode.core.config import settings
from chaincode.core.exceptions import BudgetExceededError, DomainError, ZeroCodeError
from chaincode.schemas.report import DistanceMethod, DistanceResult
from chaincode.services.code_structure import CyclicCode, cardinality_exponent
from chaincode.services.oracle_service import enumerate_codewords
from chaincode.services.poly_arith import FPoly, fpoly_divides, fpoly_monic, weight, zn_minus_one
from chaincode.services.residue_field import ResidueField

logger = logging.getLogger(__name__)

SEARCH_HINT = "raise --max-enum, or use --distance-method formula when p divides n"


def _search_range(
    add: np.ndarray,
    mul: np.ndarray,
    rows: np.ndarray,
    q: int,
    start: int,
    stop: int,
    chunk: int,
    lower: int,
) -> tuple[int, int]:
    """Minimum weight over messages start..stop-1 with constant term 1.

    Message index x encodes the coefficients of z^1..z^{k-1} as base-q digits.
    """
    n = rows.shape[1]
    free = rows.shape[0] - 1
    best = n + 1
    examined = 0
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        index = np.arange(lo, hi, dtype=np.int64)
        words = np.repeat(rows[:1], hi - lo, axis=0)
        place = 1
        for j in range(free):
            digit = (index // place) % q
            words = add[words, mul[digit[:, None], rows[j + 1][None, :]]]
            place *= q
        examined += hi - lo
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        if best <= lower:
            break
    return best, examined


def _lower_bound(field: ResidueField, n: int, gen: FPoly) -> int:
    if gen.degree >= 1 and fpoly_divides(gen, zn_minus_one(field, n)):
        return 2
    return 1


def field_code_search(
    field: ResidueField,
    n: int,
    gen: FPoly,
    budget: int | None = None,
    workers: int | None = None,
) -> tuple[int, int]:
    """Exact minimum weight of the cyclic code generated by ``gen`` over F_q.

    Returns:
        (distance, number of messages examined).

    Raises:
        DomainError: If gen is zero or has degree >= n.
        BudgetExceededError: If q^(n - deg gen) exceeds the budget.
    """
    budget = settings.max_enum if budget is None else budget
    workers = settings.threads if workers is None else workers
    if gen.is_zero():
        raise DomainError("field code generator must be nonzero")
    gen = fpoly_monic(gen)
    t = int(gen.degree)
    if t >= n:
        raise DomainError(f"generator degree {t} is not below the length {n}")
    if t == 0:
        return 1, 1
    lower = _lower_bound(field, n, gen)
    first = weight(gen)
    if first <= lower:
        return first, 1
    k = n - t
    needed = field.q**k
    if needed > budget:
        logger.info("distance search refused: %d > budget %d", needed, budget)
        raise BudgetExceededError(needed, budget, SEARCH_HINT)

    base = gen.coeffs + (0,) * (n - len(gen.coeffs))
    rows = np.array([base[n - j :] + base[: n - j] for j in range(k)], dtype=np.int64)
    total = field.q ** (k - 1)
    chunk = settings.search_chunk
    args = (field.add_table, field.mul_table, rows, field.q)
    if workers <= 1 or total <= chunk:
        best, examined = _search_range(*args, 0, total, chunk, lower)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        logger.debug("distance search: %d messages in %d shards", total, len(bounds))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_search_range, *args, lo, hi, chunk, lower) for lo, hi in bounds
            ]
            results = [f.result() for f in futures]
        best = min(r[0] for r in results)
        examined = sum(r[1] for r in results)
    if best <= lower:
        logger.debug("distance search stopped early at lower bound %d", lower)
    return best, examined


def field_code_distance(
    field: ResidueField,
    n: int,
    gen: FPoly,
    budget: int | None = None,
    workers: int | None = None,
) -> int:
    return field_code_search(field, n, gen, budget, workers)[0]


def code_distance_via_torsion(
    code: CyclicCode, budget: int | None = None, workers: int | None = None
) -> DistanceResult:
    """Distance of C as the distance of its top torsion code <h_0 mod gamma>."""
    if code.is_zero:
        raise ZeroCodeError("no nonzero codeword")
    top = code.tower.levels[code.canonical.entries[0].i]
    value, examined = field_code_search(code.ring.field, code.n, top.generator, budget, workers)
    return DistanceResult(value=value, method=DistanceMethod.TORSION_SEARCH, enumerated=examined)


def code_distance_exhaustive(code: CyclicCode, budget: int | None = None) -> DistanceResult:
    """Minimum weight over every nonzero codeword of C."""
    budget = settings.max_enum if budget is None else budget
    if code.is_zero:
        raise ZeroCodeError("no nonzero codeword")
    needed = code.ring.p ** cardinality_exponent(code)
    if needed > budget:
        logger.info("exhaustive distance refused: %d > budget %d", needed, budget)
        raise BudgetExceededError(needed, budget, "exhaustive enumeration of C")
    best = code.n
    examined = 0
    for block in enumerate_codewords(code):
        weights = np.count_nonzero(block, axis=1)
        examined += len(block)
        nonzero = weights[weights > 0]
        if nonzero.size:
            best = min(best, int(nonzero.min()))
        if best == 1:
            break
    return DistanceResult(value=best, method=DistanceMethod.EXHAUSTIVE, enumerated=examined)
