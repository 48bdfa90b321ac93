"""Reading code-spec files.

The line format is ``key = value`` with one generator per ``gen`` line::

    # Example: <5, (z-1)^24> over Z_25
    ring.family = integer-modular
    ring.p = 5
    ring.nu = 2
    n = 25
    gen = 5
    gen = (z-1)^24

``ring.modulus`` lists the field modulus coefficients, lowest degree first,
separated by commas. Files ending in ``.json`` hold an object with the same
keys (flat, or with a nested ``ring`` object and a ``generators`` list).
"""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from chaincode.core.exceptions import SpecFileError
from chaincode.schemas.code_spec import CodeSpecFile
from chaincode.services.chain_ring import make_ring
from chaincode.services.code_structure import CyclicCode, build_code
from chaincode.services.poly_parser import parse_poly

logger = logging.getLogger(__name__)

RING_KEYS = {
    "ring.family": "family",
    "ring.p": "p",
    "ring.s": "s",
    "ring.nu": "nu",
    "ring.modulus": "field_modulus",
}
TOP_KEYS = {"n", "distance_method", "distance-method", "budget"}


def _modulus(value: Any) -> Any:
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",") if p.strip()]
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise SpecFileError(
                f"ring.modulus must be comma-separated integers: {value!r}"
            ) from exc
    return value


def _validate(data: dict[str, Any]) -> CodeSpecFile:
    try:
        return CodeSpecFile.model_validate(data)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}" for err in exc.errors()
        )
        raise SpecFileError(f"invalid code spec: {problems}") from exc


def spec_from_mapping(raw: dict[str, Any]) -> CodeSpecFile:
    """Build a spec from flat ``ring.*`` keys or a nested ``ring`` object."""
    ring: dict[str, Any] = dict(raw.get("ring") or {}) if isinstance(raw.get("ring"), dict) else {}
    data: dict[str, Any] = {}
    gens: list[str] = []
    for key, value in raw.items():
        if key == "ring" and isinstance(value, dict):
            continue
        if key in RING_KEYS:
            ring[RING_KEYS[key]] = value
        elif key in ("gen", "generators"):
            gens.extend(value if isinstance(value, list) else [value])
        elif key in TOP_KEYS:
            data[key.replace("-", "_")] = value
        else:
            raise SpecFileError(f"unknown key {key!r}")
    if "field_modulus" in ring:
        ring["field_modulus"] = _modulus(ring["field_modulus"])
    data["ring"] = ring
    data["generators"] = tuple(str(g) for g in gens)
    return _validate(data)


def parse_spec_text(text: str) -> CodeSpecFile:
    raw: dict[str, Any] = {}
    gens: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise SpecFileError(f"line {lineno}: expected key = value")
        key, value = key.strip(), value.strip()
        if key == "gen":
            gens.append(value)
        elif key in RING_KEYS or key in TOP_KEYS:
            if key in raw:
                raise SpecFileError(f"line {lineno}: duplicate key {key!r}")
            raw[key] = value
        else:
            raise SpecFileError(f"line {lineno}: unknown key {key!r}")
    raw["gen"] = gens
    return spec_from_mapping(raw)


def load_spec(path: str | Path) -> CodeSpecFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror}") from exc
    if path.suffix == ".json":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecFileError(f"{path}: invalid JSON at line {exc.lineno}") from exc
        if not isinstance(raw, dict):
            raise SpecFileError(f"{path}: top level must be an object")
        spec = spec_from_mapping(raw)
    else:
        spec = parse_spec_text(text)
    logger.info("loaded code spec from %s", path)
    return spec


def build_code_from_spec(spec: CodeSpecFile) -> CyclicCode:
    ring = make_ring(spec.ring)
    gens = [parse_poly(src, ring, spec.n) for src in spec.generators]
    return build_code(ring, spec.n, gens)
