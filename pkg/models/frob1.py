"""
Frobenius Models
Pydantic models for the abstract Frob1 components, the H(S1) homology model and generator bookkeeping
"""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


def _exact(v):
    if isinstance(v, float):
        raise ValueError("Coefficients must be exact rationals, not floats")
    return Fraction(v)


class Frob1Elem(BaseModel):
    """coeff · e_{m,n}; the (1,1) component is zero"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = Field(..., ge=1, description="Number of inputs")
    n: int = Field(..., ge=1, description="Number of outputs")
    coeff: Fraction = Fraction(1)

    @field_validator("coeff", mode="before")
    @classmethod
    def coerce_coeff(cls, v):
        return _exact(v)

    @model_validator(mode="before")
    @classmethod
    def zero_on_trivial_component(cls, data):
        if isinstance(data, dict) and data.get("m") == 1 and data.get("n") == 1:
            data = {**data, "coeff": Fraction(0)}
        return data

    @property
    def degree(self) -> int:
        return self.n - 1

    def is_zero(self) -> bool:
        return self.coeff == 0


class HElem(BaseModel):
    """c1 · 1 + cw · ω in H(S1)"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    c1: Fraction = Fraction(0)
    cw: Fraction = Fraction(0)

    @field_validator("c1", "cw", mode="before")
    @classmethod
    def coerce_coeffs(cls, v):
        return _exact(v)


class GenStats(BaseModel):
    m: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    beta: int = Field(..., ge=0, description="Genus of the underlying graph")
    n_mult: int
    n_comult: int
    coh_degree: int
    name: Optional[str] = None

    @model_validator(mode="after")
    def check_counts(self):
        if self.n_mult != self.beta + self.m - 1 or self.n_comult != self.beta + self.n - 1:
            raise ValueError("Vertex counts do not match genus and arity")
        if self.coh_degree != 2 - (self.beta + self.m):
            raise ValueError("Cohomological degree must be 2 - (beta + m)")
        return self

    @property
    def weight(self) -> int:
        return self.n_mult + self.n_comult
