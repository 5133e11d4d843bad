"""
Cohomology Models
Pydantic models for cohomology classes and quasilocality radii
"""

from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CohClass(BaseModel):
    """A class in H0 ⊕ H1 of the circle, read against the unit and the volume form"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    h0: Fraction = Fraction(0)
    h1: Fraction = Fraction(0)

    @field_validator("h0", "h1", mode="before")
    @classmethod
    def coerce_fraction(cls, v):
        if isinstance(v, float):
            raise ValueError("Cohomology coefficients must be exact")
        return Fraction(v)

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return self.h0, self.h1

    def is_zero(self) -> bool:
        return self.h0 == 0 and self.h1 == 0


class QRadius(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int = Field(default=0, ge=0, description="Largest input-to-output cell distance")

    def within(self, ell: int) -> bool:
        """True if every entry stays inside radius ell"""
        return self.value <= ell

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)
