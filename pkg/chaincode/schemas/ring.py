from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class RingFamily(str, Enum):
    INTEGER_MODULAR = "integer-modular"
    POLY_EXTENSION = "poly-extension"


class RingDescriptor(BaseModel):
    """Parameters of a finite chain ring.

    ``integer-modular`` realises Z_{p^nu} with gamma = p; ``poly-extension``
    realises F_{p^s}[u]/(u^nu) with gamma = u. ``field_modulus`` lists the
    coefficients of the monic modulus of F_{p^s} over F_p, lowest degree first.
    Primality and irreducibility are checked when the ring is built.
    """

    model_config = ConfigDict(frozen=True)

    family: RingFamily
    p: int = Field(ge=2)
    s: int = Field(default=1, ge=1)
    nu: int = Field(ge=1)
    field_modulus: tuple[int, ...] | None = None

    @field_validator("field_modulus")
    @classmethod
    def _normalise_modulus(cls, value: tuple[int, ...] | None) -> tuple[int, ...] | None:
        if value is not None and len(value) == 0:
            return None
        return value

    @model_validator(mode="after")
    def _check_family(self) -> "RingDescriptor":
        if self.family is RingFamily.INTEGER_MODULAR and self.s != 1:
            raise ValueError("integer-modular rings have s = 1")
        return self

    @property
    def q(self) -> int:
        return self.p**self.s

    @property
    def size(self) -> int:
        return self.q**self.nu

    def label(self) -> str:
        if self.family is RingFamily.INTEGER_MODULAR:
            return f"Z_{self.p**self.nu}"
        return f"F_{self.q}[u]/(u^{self.nu})"
