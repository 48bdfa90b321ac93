"""Residue field F_q = F_p[w]/(modulus) with table-driven arithmetic.

Elements are integer codes 0..q-1: the code of a_0 + a_1 w + ... + a_{s-1} w^{s-1}
is a_0 + a_1 p + ... + a_{s-1} p^{s-1}. Addition and multiplication are looked
up in dense tables built once per field; numpy copies of the same tables drive
the vectorised codeword searches.
"""

import itertools
import logging

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_monic, gf_rem

from chaincode.core.exceptions import NotAUnitError, RingError

logger = logging.getLogger(__name__)

MAX_FIELD_SIZE = 2**12


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial-divide a monic polynomial over F_p by every monic polynomial of
    degree at most half its own.

    Args:
        modulus: Coefficients, lowest degree first.
        p: The characteristic.

    Returns:
        True if no proper factor exists.
    """
    dense = [ZZ(c % p) for c in reversed(modulus)]
    degree = len(dense) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = [ZZ(1)] + [ZZ(c) for c in tail]
            if not gf_rem(dense, divisor, p, ZZ):
                return False
    return True


class ResidueField:
    """The finite field F_{p^s} used as residue field and digit alphabet."""

    def __init__(self, p: int, s: int = 1, modulus: tuple[int, ...] | None = None):
        if not isprime(p):
            raise RingError(f"p not prime: {p}")
        if s < 1:
            raise RingError(f"field degree must be positive, got {s}")
        if s == 1:
            modulus = (0, 1)
        elif modulus is None:
            raise RingError(f"field modulus required for s = {s}")
        modulus = tuple(int(c) % p for c in modulus)
        while modulus and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != s:
            raise RingError(f"field modulus must have degree {s}, got {len(modulus) - 1}")
        _, monic = gf_monic([ZZ(c) for c in reversed(modulus)], p, ZZ)
        modulus = tuple(int(c) for c in reversed(monic))
        if p**s > MAX_FIELD_SIZE:
            raise RingError(f"residue field F_{p**s} is larger than {MAX_FIELD_SIZE}")
        if s > 1 and not is_irreducible(modulus, p):
            raise RingError(f"field modulus {modulus} is reducible over F_{p}")

        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = modulus
        self._build_tables()
        logger.debug("built residue field F_%d with modulus %s", self.q, modulus)

    def _coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def _from_coeffs(self, coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def _slow_mul(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        ca, cb = self._coeffs(a), self._coeffs(b)
        prod = [0] * (2 * s - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus, highest degree first
        for d in range(len(prod) - 1, s - 1, -1):
            c = prod[d]
            if c:
                for k in range(s + 1):
                    prod[d - s + k] = (prod[d - s + k] - c * self.modulus[k]) % p
        return self._from_coeffs(prod[:s])

    def _build_tables(self) -> None:
        q = self.q
        digits = np.array([self._coeffs(a) for a in range(q)], dtype=np.int64).reshape(q, self.s)
        weights = self.p ** np.arange(self.s, dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % self.p
        self.add_table = (summed * weights).sum(axis=2)
        self.neg_table = ((-digits) % self.p * weights).sum(axis=1)
        if self.s == 1:
            self.mul_table = np.multiply.outer(np.arange(q), np.arange(q)) % self.p
        else:
            self.mul_table = np.array(
                [[self._slow_mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
            )
        self._add = self.add_table.tolist()
        self._mul = self.mul_table.tolist()
        self._neg = self.neg_table.tolist()
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            self._inv[a] = row.index(1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ResidueField):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus))

    def __repr__(self) -> str:
        return f"ResidueField(p={self.p}, s={self.s}, modulus={self.modulus})"

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotAUnitError("not a unit: 0 in the residue field")
        return self._inv[a]

    def from_int(self, k: int) -> int:
        """Image of the integer k, i.e. k mod p as a constant."""
        return k % self.p

    @property
    def generator(self) -> int:
        """Code of w, the class of the variable of the field modulus."""
        if self.s == 1:
            raise RingError("w is only defined when s > 1")
        return self.p

    def coefficients(self, a: int) -> list[int]:
        """Coefficients of a as a polynomial in w, lowest degree first."""
        return self._coeffs(a)

    def elements(self) -> range:
        return range(self.q)
