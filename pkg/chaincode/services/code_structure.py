"""Structure of a cyclic code C, an ideal of R[z]/(z^n - 1).

The code is held as a fully reduced gamma-adic echelon basis of the module
spanned by all cyclic shifts of its generators: at most one row per leading
degree, each with leading coefficient exactly gamma^e. Every structural
quantity (canonical generators, normal form, torsion tower, cardinality,
rank) is read off that basis.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from chaincode.core.exceptions import DomainError, InvariantViolation, RingError, ZeroCodeError
from chaincode.services.chain_ring import ChainRing
from chaincode.services.poly_arith import (
    FPoly,
    RPoly,
    fpoly_divides,
    fpoly_monic,
    gamma_level,
    phi,
    rpoly_mod_zn,
    rpoly_scale,
    zn_minus_one,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EchelonRow:
    degree: int
    valuation: int
    row: RPoly


@dataclass(frozen=True)
class EchelonBasis:
    rows: tuple[EchelonRow, ...]

    @cached_property
    def by_degree(self) -> dict[int, EchelonRow]:
        return {r.degree: r for r in self.rows}

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CanonicalEntry:
    i: int
    t: int
    f: RPoly
    h: RPoly


@dataclass(frozen=True)
class CanonicalGenSet:
    entries: tuple[CanonicalEntry, ...]

    @property
    def m(self) -> int:
        return len(self.entries) - 1

    @property
    def i(self) -> tuple[int, ...]:
        return tuple(e.i for e in self.entries)

    @property
    def t(self) -> tuple[int, ...]:
        return tuple(e.t for e in self.entries)


@dataclass(frozen=True)
class NormalFormEntry:
    i: int
    t: int
    poly: RPoly
    levels: tuple[FPoly, ...]  # b_{j,l} for l = i..nu-1


@dataclass(frozen=True)
class NormalForm:
    entries: tuple[NormalFormEntry, ...]

    @property
    def polys(self) -> tuple[RPoly, ...]:
        return tuple(e.poly for e in self.entries)


@dataclass(frozen=True)
class TorsionLevel:
    level: int
    generator: FPoly
    degree: int


@dataclass(frozen=True)
class TorsionTower:
    levels: tuple[TorsionLevel, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(lv.degree for lv in self.levels)


# -- echelon form ------------------------------------------------------------


class _Echelon:
    """Mutable working state of the gamma-adic elimination."""

    def __init__(self, ring: ChainRing, n: int):
        self.ring = ring
        self.n = n
        self.rows: dict[int, tuple[int, list[int]]] = {}

    def _axpy(self, v: list[int], x: int, row: list[int]) -> None:
        """v <- v - x * row."""
        ring = self.ring
        for k, c in enumerate(row):
            if c:
                v[k] = ring.sub(v[k], ring.mul(x, c))

    def _scale(self, v: list[int], c: int) -> list[int]:
        return [self.ring.mul(c, x) for x in v]

    def _normalise(self, v: list[int], d: int) -> tuple[int, list[int]]:
        ring = self.ring
        e = ring.gamma_val(v[d])
        unit = ring.shift_down(v[d], e)
        v = self._scale(v, ring.unit_inverse(unit))
        return e, v

    def insert(self, vector: list[int]) -> None:
        ring, nu = self.ring, self.ring.nu
        queue = [vector]
        while queue:
            v = list(queue.pop())
            while True:
                d = _top(v)
                if d < 0:
                    break
                e = ring.gamma_val(v[d])
                held = self.rows.get(d)
                if held is None:
                    e, v = self._normalise(v, d)
                    self.rows[d] = (e, v)
                    if e > 0:
                        queue.append(self._scale(v, ring.gamma_pow(nu - e)))
                    break
                e_d, row = held
                if e >= e_d:
                    self._axpy(v, ring.shift_down(v[d], e_d), row)
                    continue
                e, v = self._normalise(v, d)
                self.rows[d] = (e, v)
                queue.append(self._scale(v, ring.gamma_pow(nu - e)))
                queue.append(row)
                break

    def reduce_fully(self) -> None:
        ring = self.ring
        for d in sorted(self.rows):
            e, row = self.rows[d]
            for lower in sorted((k for k in self.rows if k < d), reverse=True):
                e_low, low_row = self.rows[lower]
                x = ring.shift_down(row[lower], e_low)
                if x:
                    self._axpy(row, x, low_row)
            self.rows[d] = (e, row)

    def basis(self) -> EchelonBasis:
        return EchelonBasis(
            tuple(
                EchelonRow(d, e, RPoly(self.ring, row)) for d, (e, row) in sorted(self.rows.items())
            )
        )


def _top(v: list[int]) -> int:
    for k in range(len(v) - 1, -1, -1):
        if v[k]:
            return k
    return -1


def _shift_vectors(gens: Sequence[RPoly], n: int) -> list[list[int]]:
    out = []
    for g in gens:
        base = g.vector(n)
        if not any(base):
            continue
        for k in range(n):
            out.append(base[n - k :] + base[: n - k])
    return out


def echelonize_rows(ring: ChainRing, n: int, gens: Sequence[RPoly]) -> EchelonBasis:
    work = _Echelon(ring, n)
    for vector in _shift_vectors(gens, n):
        work.insert(vector)
    work.reduce_fully()
    basis = work.basis()
    logger.debug("echelon basis: %d rows over %s, n=%d", len(basis), ring.descriptor.label(), n)
    return basis


# -- the code ----------------------------------------------------------------


@dataclass(frozen=True)
class CyclicCode:
    ring: ChainRing
    n: int
    input_gens: tuple[RPoly, ...]
    echelon: EchelonBasis

    @property
    def is_zero(self) -> bool:
        return len(self.echelon) == 0

    @cached_property
    def canonical(self) -> CanonicalGenSet:
        return _canonical_generators(self)

    @cached_property
    def normal_form(self) -> NormalForm:
        return _normal_form(self)

    @cached_property
    def tower(self) -> TorsionTower:
        return _torsion_tower(self)


def build_code(ring: ChainRing, n: int, gens: Sequence[RPoly]) -> CyclicCode:
    """Store the generators reduced modulo z^n - 1 and echelonize eagerly."""
    if n < 1:
        raise DomainError(f"code length must be positive, got {n}")
    reduced = tuple(rpoly_mod_zn(g, n) for g in gens)
    if not reduced:
        reduced = (RPoly.zero(ring),)
    for g in reduced:
        if g.ring != ring:
            raise RingError(f"generator over {g.ring!r} used in a code over {ring!r}")
    code = CyclicCode(ring, n, reduced, echelonize_rows(ring, n, reduced))
    if code.is_zero:
        logger.info("code over %s of length %d is the zero code", ring.descriptor.label(), n)
    return code


def echelonize(code: CyclicCode) -> EchelonBasis:
    return code.echelon


def _require_nonzero(code: CyclicCode, what: str) -> None:
    if code.is_zero:
        raise ZeroCodeError(f"{what} is undefined for the zero code")


def _canonical_generators(code: CyclicCode) -> CanonicalGenSet:
    _require_nonzero(code, "canonical generators")
    ring = code.ring
    entries = []
    running = ring.nu
    for row in code.echelon.rows:
        if row.valuation >= running:
            continue
        running = row.valuation
        f = row.row
        if any(ring.gamma_val(c) < row.valuation for c in f.coeffs):
            raise InvariantViolation(
                f"gamma^{row.valuation} does not divide the generator of degree {row.degree}"
            )
        h = RPoly(ring, tuple(ring.shift_down(c, row.valuation) for c in f.coeffs))
        if h.lc != ring.one or h.degree != row.degree:
            raise InvariantViolation(f"h of degree {row.degree} is not normalised")
        entries.append(CanonicalEntry(row.valuation, row.degree, f, h))
    gens = CanonicalGenSet(tuple(entries))
    if gens.entries[0].i == 0 and gens.m != 0:
        raise InvariantViolation("i_0 = 0 but more than one canonical generator")
    logger.debug("canonical corners (i, t): %s", list(zip(gens.i, gens.t)))
    return gens


def canonical_generators(code: CyclicCode) -> CanonicalGenSet:
    """Valuation-drop corners f_j = gamma^{i_j} h_j of the echelon basis."""
    return code.canonical


def _class_index(entries: Sequence[CanonicalEntry], level: int) -> int:
    for r, entry in enumerate(entries):
        if entry.i <= level:
            return r
    raise InvariantViolation(f"no generator class covers level {level}")


def _normal_form(code: CyclicCode) -> NormalForm:
    ring = code.ring
    entries = code.canonical.entries
    out = []
    for j, entry in enumerate(entries):
        u = entry.f
        for level in range(entry.i + 1, ring.nu):
            r = _class_index(entries, level)
            pivot = entries[r]
            while True:
                digits = gamma_level(u, level)
                if digits.degree < pivot.t:
                    break
                c = ring.teich(digits.lc)
                factor = ring.mul(ring.gamma_pow(level - pivot.i), c)
                u = u - rpoly_scale(pivot.f, factor).shift(int(digits.degree) - pivot.t)
        levels = tuple(gamma_level(u, level) for level in range(entry.i, ring.nu))
        if levels[0] != phi(entry.h):
            raise InvariantViolation(f"normal form disturbed level {entry.i} of generator {j}")
        out.append(NormalFormEntry(entry.i, entry.t, u, levels))
    return NormalForm(tuple(out))


def normal_form(code: CyclicCode) -> NormalForm:
    """The unique generators u_j with their gamma-level digit polynomials."""
    return code.normal_form


def _level_generator(code: CyclicCode, level: int) -> TorsionLevel:
    field = code.ring.field
    if code.is_zero:
        return TorsionLevel(level, FPoly(field, ()), code.n)
    for entry in code.canonical.entries:
        if entry.i <= level:
            return TorsionLevel(level, phi(entry.h), entry.t)
    return TorsionLevel(level, FPoly(field, ()), code.n)


def _torsion_tower(code: CyclicCode) -> TorsionTower:
    tower = TorsionTower(tuple(_level_generator(code, i) for i in range(code.ring.nu)))
    problems = _tower_problems(code, tower)
    if problems:
        raise InvariantViolation("torsion tower check failed: " + "; ".join(problems))
    return tower


def torsion_tower(code: CyclicCode) -> TorsionTower:
    return code.tower


def torsional_degrees(code: CyclicCode) -> list[int]:
    return list(code.tower.degrees)


def _tower_problems(code: CyclicCode, tower: TorsionTower) -> list[str]:
    ring, n = code.ring, code.n
    problems = []
    modulus = zn_minus_one(ring.field, n)
    echelon = code.echelon.rows
    for lv in tower.levels:
        expected = min((r.degree for r in echelon if r.valuation <= lv.level), default=n)
        if lv.degree != expected:
            problems.append(f"level {lv.level} degree {lv.degree} != echelon degree {expected}")
        if lv.generator.is_zero():
            continue
        if fpoly_monic(lv.generator) != lv.generator:
            problems.append(f"level {lv.level} generator is not monic")
        if not fpoly_divides(lv.generator, modulus):
            problems.append(f"level {lv.level} generator does not divide z^{n} - 1")
        witness = _witness_for_level(code, lv.level)
        if witness is None or not membership(code, witness):
            problems.append(f"no gamma^{lv.level}-multiple witnesses level {lv.level}")
        if lv.level > 0:
            below = tower.levels[lv.level - 1].generator
            if not below.is_zero() and not fpoly_divides(lv.generator, below):
                problems.append(f"level {lv.level} does not contain level {lv.level - 1}")
    return problems


def _witness_for_level(code: CyclicCode, level: int) -> RPoly | None:
    ring = code.ring
    for entry in code.canonical.entries:
        if entry.i <= level:
            return rpoly_scale(entry.h, ring.gamma_pow(level))
    return None


def verify_tower(code: CyclicCode) -> list[str]:
    """Independent checks of the torsion tower; an empty list means it holds."""
    levels = tuple(_level_generator(code, i) for i in range(code.ring.nu))
    return _tower_problems(code, TorsionTower(levels))


def cardinality_exponent(code: CyclicCode) -> int:
    """E with |C| = p^E; 0 for the zero code."""
    ring, n = code.ring, code.n
    if code.is_zero:
        return 0
    entries = code.canonical.entries
    total = n * ring.nu - n * entries[-1].i
    previous = ring.nu
    for entry in entries:
        total -= entry.t * (previous - entry.i)
        previous = entry.i
    exponent = ring.s * total
    by_rows = ring.s * sum(ring.nu - r.valuation for r in code.echelon.rows)
    by_tower = ring.s * sum(n - d for d in torsional_degrees(code))
    if not exponent == by_rows == by_tower:
        raise InvariantViolation(
            f"cardinality disagreement: formula {exponent}, echelon {by_rows}, tower {by_tower}"
        )
    return exponent


def membership(code: CyclicCode, x: RPoly) -> bool:
    """Reduce x against the echelon rows from the top degree down."""
    ring, n = code.ring, code.n
    v = rpoly_mod_zn(x, n).vector(n)
    rows = code.echelon.by_degree
    for d in range(n - 1, -1, -1):
        c = v[d]
        if not c:
            continue
        held = rows.get(d)
        if held is None or ring.gamma_val(c) < held.valuation:
            return False
        factor = ring.shift_down(c, held.valuation)
        for k, a in enumerate(held.row.coeffs):
            if a:
                v[k] = ring.sub(v[k], ring.mul(factor, a))
    return True


def groebner_check(code: CyclicCode, element: RPoly) -> bool:
    """Leading-term reducibility of a nonzero codeword by some f_j."""
    if element.is_zero():
        return True
    ring = code.ring
    element = rpoly_mod_zn(element, code.n)
    val = ring.gamma_val(element.lc)
    return any(e.t <= element.degree and e.i <= val for e in code.canonical.entries)


def rank(code: CyclicCode) -> int:
    if code.is_zero:
        return 0
    return code.n - code.canonical.entries[0].t


def minimal_spanning_set(code: CyclicCode) -> list[RPoly]:
    """S' = {z^k u_m : k < n - t_m} and {z^k u_j : k < t_{j+1} - t_j} for j < m."""
    if code.is_zero:
        return []
    entries = code.normal_form.entries
    out = []
    for j, entry in enumerate(entries):
        stop = code.n - entry.t if j == len(entries) - 1 else entries[j + 1].t - entry.t
        out.extend(entry.poly.shift(k) for k in range(stop))
    if len(out) != rank(code):
        raise InvariantViolation(f"spanning set has {len(out)} elements, rank is {rank(code)}")
    return out


def spanning_set(code: CyclicCode) -> list[RPoly]:
    """S = {z^k u_j : 0 <= k < n - t_j}."""
    if code.is_zero:
        return []
    return [e.poly.shift(k) for e in code.normal_form.entries for k in range(code.n - e.t)]


def normal_form_code(code: CyclicCode) -> CyclicCode:
    """The same code rebuilt from its normal-form generators."""
    return build_code(code.ring, code.n, code.normal_form.polys)

