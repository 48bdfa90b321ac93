"""Seeded property checks over random codes from a small ring pool.

Every property is a theorem about cyclic codes, so a failure means an
implementation bug; failures are collected into the report with a witness
rather than raised.
"""

import logging
import random
from typing import Callable

import numpy as np
from pydantic import BaseModel

from chaincode.core.exceptions import ChainCodeError
from chaincode.schemas.ring import RingDescriptor, RingFamily
from chaincode.services.chain_ring import ChainRing, make_ring
from chaincode.services.classify_service import FORMULA_SWEEP, consistency_report, formula_sweep
from chaincode.services.code_structure import (
    CyclicCode,
    build_code,
    cardinality_exponent,
    groebner_check,
    membership,
    minimal_spanning_set,
    normal_form_code,
    rank,
    spanning_set,
    verify_tower,
)
from chaincode.services.distance_service import code_distance_exhaustive, code_distance_via_torsion
from chaincode.services.oracle_service import span_closure, span_of_polys
from chaincode.services.poly_arith import RPoly, rpoly_mod_zn, rpoly_mul
from chaincode.services.poly_parser import format_poly

logger = logging.getLogger(__name__)

RING_POOL: tuple[RingDescriptor, ...] = (
    RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=2, nu=2),
    RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=2, nu=3),
    RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=3, nu=2),
    RingDescriptor(family=RingFamily.INTEGER_MODULAR, p=5, nu=2),
    RingDescriptor(family=RingFamily.POLY_EXTENSION, p=2, nu=2),
    RingDescriptor(family=RingFamily.POLY_EXTENSION, p=2, nu=4),
    RingDescriptor(family=RingFamily.POLY_EXTENSION, p=3, nu=3),
)

PROPERTIES = (
    "cardinality",
    "distance-oracle",
    "presentation-invariance",
    "idempotence",
    "generation",
    "tower",
    "spanning-set",
    "groebner",
    "weight-one",
    "mds-implies-mhdr",
)
MAX_WITNESSES = 5
MINIMALITY_LIMIT = 8
GROEBNER_SAMPLE = 256


class PropertyResult(BaseModel):
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    witnesses: list[str] = []


class RandomCheckReport(BaseModel):
    seed: int
    trials: int
    max_n: int
    pool: list[str]
    properties: list[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(p.failed == 0 for p in self.properties)


# -- random codes ------------------------------------------------------------


def _random_poly(rng: random.Random, ring: ChainRing, n: int) -> RPoly:
    length = rng.randint(1, n)
    return RPoly(ring, tuple(rng.randrange(ring.size) for _ in range(length)))


def _random_generator(rng: random.Random, ring: ChainRing, n: int) -> RPoly:
    if rng.random() < 0.05:
        return RPoly.zero(ring)
    one = ring.one
    c = rng.randrange(n)
    factor = (
        RPoly(ring, (ring.neg(one),) + (0,) * (c - 1) + (one,)) if c else RPoly.constant(ring, one)
    )
    body = rpoly_mod_zn(rpoly_mul(factor, _random_poly(rng, ring, n)), n)
    a = rng.randrange(ring.nu)
    g = body * ring.gamma_pow(a)
    if a + 1 < ring.nu and rng.random() < 0.5:
        b = rng.randint(a + 1, ring.nu - 1)
        g = g + _random_poly(rng, ring, n) * ring.gamma_pow(b)
    return g


def random_code(rng: random.Random, ring: ChainRing, n: int) -> CyclicCode:
    gens = [_random_generator(rng, ring, n) for _ in range(rng.randint(1, 3))]
    return build_code(ring, n, gens)


def _random_unit(rng: random.Random, ring: ChainRing) -> int:
    while True:
        r = rng.randrange(ring.size)
        if ring.is_unit(r):
            return r


def represent_again(rng: random.Random, code: CyclicCode) -> CyclicCode:
    """Same ideal, different generators: unit scaling, permutation,
    redundant combinations and a gamma-multiple."""
    ring, n = code.ring, code.n
    gens = [g * _random_unit(rng, ring) for g in code.input_gens]
    rng.shuffle(gens)
    if len(gens) > 1:
        i, j = rng.sample(range(len(gens)), 2)
        gens[i] = gens[i] + rpoly_mod_zn(rpoly_mul(_random_poly(rng, ring, n), gens[j]), n)
    extra = rpoly_mod_zn(rpoly_mul(_random_poly(rng, ring, n), gens[0]), n)
    gens.append(extra)
    gens.append(gens[0] * ring.gamma_pow(1))
    return build_code(ring, n, gens)


# -- properties --------------------------------------------------------------


def _describe(code: CyclicCode) -> str:
    gens = ", ".join(format_poly(g) for g in code.input_gens)
    return f"{code.ring.descriptor.label()} n={code.n} <{gens}>"


def _check_properties(rng: random.Random, code: CyclicCode) -> dict[str, bool | None]:
    """Outcome per property: True passed, False failed, None skipped."""
    out: dict[str, bool | None] = {}
    ring = code.ring
    words = span_closure(code)
    exponent = cardinality_exponent(code)
    out["cardinality"] = ring.p**exponent == len(words)
    out["tower"] = not verify_tower(code) and all(
        a >= b for a, b in zip(code.tower.degrees, code.tower.degrees[1:])
    )
    if code.is_zero:
        for name in PROPERTIES:
            out.setdefault(name, None)
        return out

    torsion = code_distance_via_torsion(code).value
    out["distance-oracle"] = code_distance_exhaustive(code).value == torsion
    weights = np.count_nonzero(words, axis=1)
    out["weight-one"] = (torsion == 1) == bool((weights == 1).any())

    other = represent_again(rng, code)
    out["presentation-invariance"] = (
        other.canonical == code.canonical and other.normal_form == code.normal_form
    )
    rebuilt = normal_form_code(code)
    out["idempotence"] = rebuilt.normal_form.polys == code.normal_form.polys
    out["generation"] = all(membership(rebuilt, g) for g in code.input_gens) and all(
        membership(code, u) for u in code.normal_form.polys
    )

    minimal = minimal_spanning_set(code)
    span_size = len(span_of_polys(ring, code.n, minimal))
    ok = span_size == len(words) and len(minimal) == rank(code)
    ok = ok and len(span_of_polys(ring, code.n, spanning_set(code))) == len(words)
    if ok and len(minimal) <= MINIMALITY_LIMIT:
        for k in range(len(minimal)):
            rest = minimal[:k] + minimal[k + 1 :]
            if len(span_of_polys(ring, code.n, rest)) >= span_size:
                ok = False
                break
    out["spanning-set"] = ok

    sample = words[: GROEBNER_SAMPLE]
    out["groebner"] = all(
        groebner_check(code, RPoly(ring, tuple(int(c) for c in row))) for row in sample if row.any()
    )
    report = consistency_report(code)
    out["mds-implies-mhdr"] = not report.mds.verdict or report.mhdr.verdict
    return out


def random_check(
    seed: int = 1, trials: int = 200, max_n: int = 4, max_space: int = 2**12
) -> RandomCheckReport:
    """Run the property suite on ``trials`` random codes.

    Args:
        seed: Seed of the generator; equal seeds give identical reports.
        trials: Number of random codes.
        max_n: Largest code length.
        max_space: Largest |R|^n, keeping the brute-force oracles cheap.
    """
    rng = random.Random(seed)
    rings = [make_ring(d) for d in RING_POOL]
    results = {name: PropertyResult(name=name) for name in PROPERTIES}

    def record(name: str, outcome: bool | None, witness: Callable[[], str]) -> None:
        result = results[name]
        if outcome is None:
            result.skipped += 1
        elif outcome:
            result.passed += 1
        else:
            result.failed += 1
            if len(result.witnesses) < MAX_WITNESSES:
                result.witnesses.append(witness())

    for trial in range(trials):
        ring = rng.choice(rings)
        lengths = [n for n in range(1, max_n + 1) if ring.size**n <= max_space] or [1]
        n = rng.choice(lengths)
        code = random_code(rng, ring, n)
        try:
            outcomes = _check_properties(rng, code)
        except ChainCodeError as exc:
            logger.warning("trial %d raised %s", trial, exc.message)
            message = exc.message
            for name in PROPERTIES:
                record(name, False, lambda: f"{_describe(code)}: {message}")
            continue
        for name in PROPERTIES:
            record(name, outcomes.get(name), lambda: _describe(code))

    properties = [results[name] for name in PROPERTIES]
    if trials > 0:
        sweep = PropertyResult(name="distance-formula")
        mismatches = formula_sweep()
        total = sum(p**r - start for p, r, start in FORMULA_SWEEP)
        sweep.failed = len(mismatches)
        sweep.passed = total - len(mismatches)
        sweep.witnesses = [
            f"p={p} r={r} t0={t0}: formula {f}, search {s}"
            for p, r, t0, f, s in mismatches[:MAX_WITNESSES]
        ]
        properties.append(sweep)
    else:
        properties = []
    return RandomCheckReport(
        seed=seed,
        trials=trials,
        max_n=max_n,
        pool=[d.label() for d in RING_POOL],
        properties=properties,
    )


def render_random_check_text(report: RandomCheckReport) -> str:
    lines = [
        f"random check: seed {report.seed}, {report.trials} trials, n <= {report.max_n}",
        "ring pool: " + ", ".join(report.pool),
    ]
    for prop in report.properties:
        lines.append(
            f"  {prop.name:<24} passed {prop.passed:>4}  failed {prop.failed:>3}  "
            f"skipped {prop.skipped:>3}"
        )
        lines.extend(f"    witness: {w}" for w in prop.witnesses)
    lines.append("result: " + ("all properties hold" if report.ok else "FAILURES"))
    return "\n".join(lines) + "\n"
