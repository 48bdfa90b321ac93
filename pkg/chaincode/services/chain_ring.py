"""Exact arithmetic in the finite chain rings Z_{p^nu} and F_{p^s}[u]/(u^nu).

Ring elements are plain integer codes:

* integer-modular: the residue of the element modulo p^nu;
* poly-extension: c_0 + c_1 q + ... + c_{nu-1} q^{nu-1} where c_i is the
  residue-field code of the coefficient of u^i.

For both families the gamma-adic digits are residue-field codes, so
``from_digits(digits(r)) == r`` and ``teich(a)`` lifts a residue-field code to
its Teichmuller representative.
"""

import itertools
import logging
from functools import cached_property

import numpy as np

from chaincode.core.config import settings
from chaincode.core.exceptions import BudgetExceededError, NotAUnitError, RingError
from chaincode.schemas.ring import RingDescriptor, RingFamily
from chaincode.services.residue_field import ResidueField
from chaincode.utils.ring_cache import get_ring_cache

logger = logging.getLogger(__name__)


class ChainRing:
    """Handle on one chain ring; immutable after construction."""

    def __init__(self, descriptor: RingDescriptor):
        self.descriptor = descriptor
        self.family = descriptor.family
        self.field = ResidueField(descriptor.p, descriptor.s, descriptor.field_modulus)
        self.p = descriptor.p
        self.s = descriptor.s
        self.nu = descriptor.nu
        self.q = self.field.q
        self.size = self.q**self.nu
        self.zero = 0
        self.one = 1
        if self.family is RingFamily.INTEGER_MODULAR:
            self.gamma = self.p if self.nu > 1 else 0
            self._teich = [self._hensel_lift(a) for a in range(self.q)]
        else:
            self.gamma = self.q if self.nu > 1 else 0
            self._teich = list(range(self.q))
        self._units_order = (self.q - 1) * self.q ** (self.nu - 1)

    def _hensel_lift(self, a: int) -> int:
        modulus = self.size
        x = a
        while True:
            nxt = pow(x, self.p, modulus)
            if nxt == x:
                return x
            x = nxt

    @property
    def is_integer_modular(self) -> bool:
        return self.family is RingFamily.INTEGER_MODULAR

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainRing):
            return NotImplemented
        return self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"ChainRing({self.descriptor.label()})"

    def __reduce__(self):
        return (make_ring, (self.descriptor,))

    # -- coordinates ---------------------------------------------------------

    def digits(self, r: int) -> tuple[int, ...]:
        """Teichmuller digits r_0..r_{nu-1} (residue-field codes) of r."""
        if not self.is_integer_modular:
            out = []
            for _ in range(self.nu):
                r, c = divmod(r, self.q)
                out.append(c)
            return tuple(out)
        p, modulus = self.p, self.size
        out = []
        for _ in range(self.nu):
            d = r % p
            out.append(d)
            r = ((r - self._teich[d]) % modulus) // p
        return tuple(out)

    def from_digits(self, digits) -> int:
        if not self.is_integer_modular:
            code = 0
            for c in reversed(tuple(digits)[: self.nu]):
                code = code * self.q + c
            return code
        total = 0
        scale = 1
        for d in tuple(digits)[: self.nu]:
            total += self._teich[d] * scale
            scale *= self.p
        return total % self.size

    def teich(self, a: int) -> int:
        """Teichmuller representative of the residue-field element a."""
        return self._teich[a]

    def residue(self, r: int) -> int:
        if self.is_integer_modular:
            return r % self.p
        return r % self.q

    def gamma_val(self, r: int) -> int:
        """Largest v with gamma^v | r; nu for r = 0."""
        for v, d in enumerate(self.digits(r)):
            if d:
                return v
        return self.nu

    def is_unit(self, r: int) -> bool:
        return self.residue(r) != 0

    def gamma_pow(self, k: int) -> int:
        if k >= self.nu:
            return 0
        if self.is_integer_modular:
            return self.p**k
        return self.q**k

    def shift_down(self, r: int, e: int) -> int:
        """The element sum_{i>=e} r_i gamma^(i-e); gamma^e times it keeps the
        digits of r from position e on."""
        return self.from_digits(self.digits(r)[e:])

    def from_int(self, k: int) -> int:
        """The element k * 1."""
        if self.is_integer_modular:
            return k % self.size
        return self.field.from_int(k)

    def field_generator(self) -> int:
        """The constant w of the residue field, as a ring element."""
        if self.is_integer_modular:
            raise RingError("w is only defined for poly-extension rings with s > 1")
        return self.field.generator

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.is_integer_modular:
            return (a + b) % self.size
        field, q = self.field, self.q
        code, scale = 0, 1
        for _ in range(self.nu):
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            code += field.add(x, y) * scale
            scale *= q
        return code

    def neg(self, a: int) -> int:
        if self.is_integer_modular:
            return (-a) % self.size
        return self.from_digits(self.field.neg(d) for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_integer_modular:
            return (a * b) % self.size
        if a == 0 or b == 0:
            return 0
        field, nu = self.field, self.nu
        da, db = self.digits(a), self.digits(b)
        out = [0] * nu
        for i, x in enumerate(da):
            if x:
                for j in range(nu - i):
                    y = db[j]
                    if y:
                        out[i + j] = field.add(out[i + j], field.mul(x, y))
        return self.from_digits(out)

    def power(self, a: int, e: int) -> int:
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def unit_inverse(self, r: int) -> int:
        if not self.is_unit(r):
            raise NotAUnitError(f"not a unit: {r} in {self.descriptor.label()}")
        if self.is_integer_modular:
            return pow(r, -1, self.size)
        return self.power(r, self._units_order - 1)

    def elements(self) -> range:
        return range(self.size)

    # -- derived sets and tables --------------------------------------------

    def teichmuller_set(self) -> tuple[int, ...]:
        return tuple(sorted(self._teich))

    def gamma_adic_expand(self, r: int) -> tuple[int, ...]:
        """Teichmuller digits of r as ring elements."""
        return tuple(self._teich[d] for d in self.digits(r))

    def representatives(self, k: int) -> list[int]:
        """All elements whose digits vanish from position k on, i.e. a
        transversal of R / gamma^k R, in increasing digit order."""
        return [self.from_digits(tail) for tail in itertools.product(range(self.q), repeat=k)]

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense (add, mul) tables indexed by element codes."""
        if self.size > settings.table_limit:
            raise BudgetExceededError(
                self.size, settings.table_limit, "ring too large for dense tables"
            )
        size = self.size
        codes = np.arange(size, dtype=np.int64)
        if self.is_integer_modular:
            add = np.add.outer(codes, codes) % size
            mul = np.multiply.outer(codes, codes) % size
            return add, mul
        digits = np.array([self.digits(r) for r in range(size)], dtype=np.int64)
        fadd, fmul = self.field.add_table, self.field.mul_table
        weights = self.q ** np.arange(self.nu, dtype=np.int64)
        add = np.zeros((size, size), dtype=np.int64)
        mul = np.zeros((size, size), dtype=np.int64)
        for k in range(self.nu):
            add += fadd[digits[:, None, k], digits[None, :, k]] * weights[k]
            level = np.zeros((size, size), dtype=np.int64)
            for i in range(k + 1):
                level = fadd[level, fmul[digits[:, None, i], digits[None, :, k - i]]]
            mul += level * weights[k]
        logger.debug("built dense tables for %s", self.descriptor.label())
        return add, mul


def make_ring(descriptor: RingDescriptor) -> ChainRing:
    """Build (or fetch from the cache) the ring described by ``descriptor``.

    Raises:
        RingError: If p is not prime or the field modulus is missing or reducible.
    """
    cache = get_ring_cache()
    ring = cache.get_ring(descriptor)
    if ring is None:
        ring = ChainRing(descriptor)
        cache.set_ring(descriptor, ring)
        logger.info("constructed ring %s (|R| = %d)", descriptor.label(), ring.size)
    return ring


def ring_from_params(
    family: str, p: int, nu: int, s: int = 1, field_modulus: tuple[int, ...] | None = None
) -> ChainRing:
    return make_ring(
        RingDescriptor(family=RingFamily(family), p=p, s=s, nu=nu, field_modulus=field_modulus)
    )
