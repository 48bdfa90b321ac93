"""Brute-force enumerations used as independent oracles.

``module_span`` closes a set of vectors under addition and R-scaling without
looking at any echelon structure; ``enumerate_codewords`` walks the unique
representation of each codeword through the echelon basis, block by block.
Both work on dense ring tables and are meant for small instances.
"""

import itertools
import logging
from typing import Iterator, Sequence

import numpy as np

from chaincode.core.config import settings
from chaincode.services.chain_ring import ChainRing
from chaincode.services.code_structure import CyclicCode
from chaincode.services.poly_arith import RPoly

logger = logging.getLogger(__name__)


def _additive_generators(ring: ChainRing) -> list[tuple[int, int]]:
    """(element, additive order) pairs generating (R, +)."""
    if ring.is_integer_modular:
        return [(1, ring.size)]
    return [
        (ring.from_digits((0,) * i + (ring.p**k,)), ring.p)
        for i in range(ring.nu)
        for k in range(ring.s)
    ]


def module_span(ring: ChainRing, n: int, vectors: Sequence[Sequence[int]]) -> np.ndarray:
    """All R-linear combinations of ``vectors``, one distinct row each."""
    add, mul = ring.tables
    span = np.zeros((1, n), dtype=np.int64)
    gens = _additive_generators(ring)
    for vector in vectors:
        base = np.asarray(vector, dtype=np.int64)
        for scalar, order in gens:
            v = mul[scalar, base]
            if not v.any() or (span == v).all(axis=1).any():
                continue
            multiples = np.zeros((order, n), dtype=np.int64)
            for c in range(1, order):
                multiples[c] = add[multiples[c - 1], v]
            span = add[span[:, None, :], multiples[None, :, :]].reshape(-1, n)
            span = np.unique(span, axis=0)
    return span


def span_closure(code: CyclicCode) -> np.ndarray:
    """Every codeword of C, generated from the cyclic shifts of the input generators."""
    n = code.n
    vectors = []
    for g in code.input_gens:
        base = g.vector(n)
        vectors.extend(base[n - k :] + base[: n - k] for k in range(n))
    return module_span(code.ring, n, vectors)


def span_of_polys(ring: ChainRing, n: int, polys: Sequence[RPoly]) -> np.ndarray:
    """R-span (not the ideal) of the given polynomials."""
    return module_span(ring, n, [p.vector(n) for p in polys])


def enumerate_codewords(code: CyclicCode, chunk: int | None = None) -> Iterator[np.ndarray]:
    """Yield blocks of codewords covering C exactly once, zero word included.

    The coefficient of the echelon row with pivot valuation e ranges over a
    transversal of R / gamma^(nu - e), which makes the representation unique.
    """
    chunk = chunk or settings.search_chunk
    ring, n = code.ring, code.n
    add, mul = ring.tables
    blocks = []
    for row in code.echelon.rows:
        reps = np.asarray(ring.representatives(ring.nu - row.valuation), dtype=np.int64)
        vec = np.asarray(row.row.vector(n), dtype=np.int64)
        blocks.append(mul[reps[:, None], vec[None, :]])

    inner = np.zeros((1, n), dtype=np.int64)
    split = 0
    while split < len(blocks) and inner.shape[0] * len(blocks[split]) <= chunk:
        inner = add[inner[:, None, :], blocks[split][None, :, :]].reshape(-1, n)
        split += 1
    outer = blocks[split:]
    logger.debug("codeword enumeration: inner block %d, %d outer rows", inner.shape[0], len(outer))
    for choice in itertools.product(*(range(len(b)) for b in outer)):
        offset = np.zeros(n, dtype=np.int64)
        for block, c in zip(outer, choice):
            offset = add[offset, block[c]]
        yield add[inner, offset[None, :]]
