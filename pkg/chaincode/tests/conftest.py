from typing import Callable

import pytest

from chaincode.core.config import settings
from chaincode.services.chain_ring import ChainRing, ring_from_params
from chaincode.services.code_structure import CyclicCode, build_code
from chaincode.services.example_corpus import EXAMPLES
from chaincode.services.poly_parser import parse_poly
from chaincode.services.spec_file_service import build_code_from_spec


@pytest.fixture
def z4() -> ChainRing:
    return ring_from_params("integer-modular", 2, 2)


@pytest.fixture
def z25() -> ChainRing:
    return ring_from_params("integer-modular", 5, 2)


@pytest.fixture
def f2u2() -> ChainRing:
    return ring_from_params("poly-extension", 2, 2)


@pytest.fixture
def f2u4() -> ChainRing:
    return ring_from_params("poly-extension", 2, 4)


@pytest.fixture
def f3u3() -> ChainRing:
    return ring_from_params("poly-extension", 3, 3)


@pytest.fixture
def make_code() -> Callable[..., CyclicCode]:
    """Build a code from generator expressions: make_code(ring, n, "2", "z-1")."""

    def _make(ring: ChainRing, n: int, *sources: str) -> CyclicCode:
        return build_code(ring, n, [parse_poly(src, ring, n) for src in sources])

    return _make


@pytest.fixture(scope="session")
def example_codes() -> dict[str, CyclicCode]:
    """The worked examples 4.1 to 4.5 keyed by id."""
    return {e.example_id: build_code_from_spec(e.spec) for e in EXAMPLES}


@pytest.fixture
def override_settings(monkeypatch: pytest.MonkeyPatch) -> Callable[..., None]:
    """Temporarily replace settings fields for one test."""

    def _override(**values) -> None:
        for key, value in values.items():
            monkeypatch.setattr(settings, key, value)

    return _override
