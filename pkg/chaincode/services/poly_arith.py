"""Polynomials over a chain ring R and over its residue field F_q.

Coefficients are element codes (see ``chain_ring``), lowest degree first, with
trailing zeros stripped. The zero polynomial has degree ``NEG_INF``, which
compares below every integer.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Iterable

from chaincode.core.exceptions import DomainError, RingError
from chaincode.services.chain_ring import ChainRing
from chaincode.services.residue_field import ResidueField

NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RPoly:
    """Polynomial in z over a chain ring."""

    ring: ChainRing = dataclass_field(compare=True, repr=False)
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls, ring: ChainRing) -> "RPoly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: ChainRing, c: int) -> "RPoly":
        return cls(ring, (c,))

    @classmethod
    def monomial(cls, ring: ChainRing, c: int, degree: int) -> "RPoly":
        return cls(ring, (0,) * degree + (c,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        """True when the leading coefficient is a unit."""
        return bool(self.coeffs) and self.ring.is_unit(self.lc)

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def vector(self, n: int) -> list[int]:
        """Length-n coefficient vector; the polynomial must have degree < n."""
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def shift(self, k: int) -> "RPoly":
        return RPoly(self.ring, (0,) * k + self.coeffs) if self.coeffs else self

    def __add__(self, other: "RPoly") -> "RPoly":
        return rpoly_add(self, other)

    def __sub__(self, other: "RPoly") -> "RPoly":
        return rpoly_sub(self, other)

    def __neg__(self) -> "RPoly":
        return RPoly(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __mul__(self, other: "RPoly | int") -> "RPoly":
        if isinstance(other, int):
            return rpoly_scale(self, other)
        return rpoly_mul(self, other)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FPoly:
    """Polynomial in z over the residue field."""

    field: ResidueField = dataclass_field(compare=True, repr=False)
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "FPoly") -> "FPoly":
        return fpoly_add(self, other)

    def __sub__(self, other: "FPoly") -> "FPoly":
        return fpoly_sub(self, other)

    def __mul__(self, other: "FPoly") -> "FPoly":
        return fpoly_mul(self, other)


# -- polynomials over R ------------------------------------------------------


def _same_ring(a: RPoly, b: RPoly) -> ChainRing:
    if a.ring != b.ring:
        raise RingError(f"mixed rings: {a.ring!r} and {b.ring!r}")
    return a.ring


def rpoly_add(a: RPoly, b: RPoly) -> RPoly:
    ring = _same_ring(a, b)
    size = max(len(a.coeffs), len(b.coeffs))
    return RPoly(ring, tuple(ring.add(a.coefficient(i), b.coefficient(i)) for i in range(size)))


def rpoly_sub(a: RPoly, b: RPoly) -> RPoly:
    ring = _same_ring(a, b)
    size = max(len(a.coeffs), len(b.coeffs))
    return RPoly(ring, tuple(ring.sub(a.coefficient(i), b.coefficient(i)) for i in range(size)))


def rpoly_mul(a: RPoly, b: RPoly) -> RPoly:
    ring = _same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return RPoly.zero(ring)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return RPoly(ring, out)


def rpoly_scale(a: RPoly, c: int) -> RPoly:
    ring = a.ring
    return RPoly(ring, tuple(ring.mul(c, x) for x in a.coeffs))


def rpoly_mod_zn(a: RPoly, n: int) -> RPoly:
    """Reduce modulo z^n - 1 by folding degree d onto d mod n."""
    if len(a.coeffs) <= n:
        return a
    ring = a.ring
    out = [0] * n
    for d, c in enumerate(a.coeffs):
        if c:
            out[d % n] = ring.add(out[d % n], c)
    return RPoly(ring, out)


def rpoly_mul_mod_zn(a: RPoly, b: RPoly, n: int) -> RPoly:
    return rpoly_mod_zn(rpoly_mul(a, b), n)


def rpoly_power_mod_zn(a: RPoly, e: int, n: int | None = None) -> RPoly:
    result = RPoly.constant(a.ring, a.ring.one)
    base = a
    while e:
        if e & 1:
            result = rpoly_mul(result, base)
            if n is not None:
                result = rpoly_mod_zn(result, n)
        e >>= 1
        if e:
            base = rpoly_mul(base, base)
            if n is not None:
                base = rpoly_mod_zn(base, n)
    return result


def gamma_level_decompose(k: RPoly) -> tuple[FPoly, ...]:
    """Split k into its gamma-levels a_0..a_{nu-1}: k = sum gamma^l T(a_l)."""
    ring = k.ring
    digit_rows = [ring.digits(c) for c in k.coeffs]
    return tuple(
        FPoly(ring.field, tuple(row[level] for row in digit_rows)) for level in range(ring.nu)
    )


def gamma_level(k: RPoly, level: int) -> FPoly:
    ring = k.ring
    return FPoly(ring.field, tuple(ring.digits(c)[level] for c in k.coeffs))


def recompose(ring: ChainRing, levels: Iterable[FPoly]) -> RPoly:
    """Inverse of ``gamma_level_decompose``."""
    levels = list(levels)
    size = max((len(a.coeffs) for a in levels), default=0)
    coeffs = []
    for i in range(size):
        coeffs.append(ring.from_digits([a.coeffs[i] if i < len(a.coeffs) else 0 for a in levels]))
    return RPoly(ring, coeffs)


def phi(k: RPoly) -> FPoly:
    """Reduction modulo gamma."""
    return gamma_level(k, 0)


def lift(ring: ChainRing, a: FPoly) -> RPoly:
    """Teichmuller lift of a residue-field polynomial."""
    return RPoly(ring, tuple(ring.teich(c) for c in a.coeffs))


def divide_scaled_monic(k: RPoly, i: int, w: RPoly, j: int) -> tuple[RPoly, RPoly]:
    """Divide gamma^i k by gamma^j w.

    Args:
        k: The dividend factor.
        i: Exponent of gamma on the dividend.
        w: Divisor factor; its leading coefficient must be a unit.
        j: Exponent of gamma on the divisor, at most i.

    Returns:
        (q, s) with gamma^i k = q gamma^j w + gamma^i s and deg s < deg w.

    Raises:
        DomainError: If w is not monic or i < j.
    """
    ring = _same_ring(k, w)
    if i < j:
        raise DomainError(f"divide_scaled_monic needs i >= j, got i={i}, j={j}")
    if not w.is_monic():
        raise DomainError("divisor is not monic")
    inv_lc = ring.unit_inverse(w.lc)
    dw = int(w.degree)
    remainder = list(k.coeffs)
    quotient = [0] * max(len(remainder) - dw, 0)
    for d in range(len(remainder) - 1, dw - 1, -1):
        c = remainder[d]
        if not c:
            continue
        factor = ring.mul(c, inv_lc)
        quotient[d - dw] = factor
        for e, wc in enumerate(w.coeffs):
            remainder[d - dw + e] = ring.sub(remainder[d - dw + e], ring.mul(factor, wc))
    q = rpoly_scale(RPoly(ring, quotient), ring.gamma_pow(i - j))
    return q, RPoly(ring, remainder[:dw])


# -- polynomials over F_q ----------------------------------------------------


def _same_field(a: FPoly, b: FPoly) -> ResidueField:
    if a.field != b.field:
        raise RingError("mixed residue fields")
    return a.field


def fpoly_add(a: FPoly, b: FPoly) -> FPoly:
    f = _same_field(a, b)
    size = max(len(a.coeffs), len(b.coeffs))
    pad_a = a.coeffs + (0,) * (size - len(a.coeffs))
    pad_b = b.coeffs + (0,) * (size - len(b.coeffs))
    return FPoly(f, tuple(f.add(x, y) for x, y in zip(pad_a, pad_b)))


def fpoly_sub(a: FPoly, b: FPoly) -> FPoly:
    return fpoly_add(a, FPoly(b.field, tuple(b.field.neg(c) for c in b.coeffs)))


def fpoly_scale(a: FPoly, c: int) -> FPoly:
    return FPoly(a.field, tuple(a.field.mul(c, x) for x in a.coeffs))


def fpoly_mul(a: FPoly, b: FPoly) -> FPoly:
    f = _same_field(a, b)
    if a.is_zero() or b.is_zero():
        return FPoly(f, ())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return FPoly(f, out)


def fpoly_mod_zn(a: FPoly, n: int) -> FPoly:
    if len(a.coeffs) <= n:
        return a
    out = [0] * n
    for d, c in enumerate(a.coeffs):
        out[d % n] = a.field.add(out[d % n], c)
    return FPoly(a.field, out)


def fpoly_mul_mod_zn(a: FPoly, b: FPoly, n: int) -> FPoly:
    return fpoly_mod_zn(fpoly_mul(a, b), n)


def fpoly_divmod(a: FPoly, b: FPoly) -> tuple[FPoly, FPoly]:
    f = _same_field(a, b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    inv_lc = f.inv(b.lc)
    db = len(b.coeffs) - 1
    rem = list(a.coeffs)
    quot = [0] * max(len(rem) - db, 0)
    for d in range(len(rem) - 1, db - 1, -1):
        c = rem[d]
        if not c:
            continue
        factor = f.mul(c, inv_lc)
        quot[d - db] = factor
        for e, bc in enumerate(b.coeffs):
            rem[d - db + e] = f.sub(rem[d - db + e], f.mul(factor, bc))
    return FPoly(f, quot), FPoly(f, rem[:db])


def fpoly_monic(a: FPoly) -> FPoly:
    if a.is_zero():
        return a
    return fpoly_scale(a, a.field.inv(a.lc))


def fpoly_divides(a: FPoly, b: FPoly) -> bool:
    """True when a divides b."""
    if a.is_zero():
        return b.is_zero()
    return fpoly_divmod(b, a)[1].is_zero()


def zn_minus_one(f: ResidueField, n: int) -> FPoly:
    return FPoly(f, (f.neg(1),) + (0,) * (n - 1) + (1,))


def weight(a: FPoly | RPoly, n: int | None = None) -> int:
    """Number of nonzero coefficients, after folding modulo z^n - 1 if n is given."""
    if n is not None:
        a = fpoly_mod_zn(a, n) if isinstance(a, FPoly) else rpoly_mod_zn(a, n)
    return sum(1 for c in a.coeffs if c)
