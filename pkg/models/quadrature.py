"""
Quadrature Models
Uniform 1-D grids and sampled profiles for the smooth-model integrals
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Grid1D(BaseModel):
    model_config = ConfigDict(frozen=True)

    half_width: float = Field(..., gt=0, description="L: the grid covers [-L, L]")
    step: float = Field(..., gt=0, description="h: spacing between samples")
    samples: int = Field(..., ge=3)

    @field_validator("samples")
    @classmethod
    def odd_samples(cls, v):
        if v % 2 == 0:
            raise ValueError("Grid needs an odd sample count so that 0 is a node")
        return v

    @model_validator(mode="after")
    def consistent_extent(self):
        if abs((self.samples - 1) * self.step - 2 * self.half_width) > 1e-9 * self.half_width:
            raise ValueError("samples, step and half_width disagree")
        return self

    @property
    def mid(self) -> int:
        return self.samples // 2

    @property
    def points(self) -> np.ndarray:
        # exact mirror symmetry about 0
        return (np.arange(self.samples) - self.mid) * self.step

    def index_of(self, x: float) -> int:
        return self.mid + int(round(x / self.step))


class Profile(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    grid: Grid1D
    values: np.ndarray
    name: str = ""

    @field_validator("values")
    @classmethod
    def one_dimensional(cls, v):
        v = np.asarray(v, dtype=float)
        if v.ndim != 1:
            raise ValueError("Profile values must be a 1-D array")
        return v

    @model_validator(mode="after")
    def matches_grid(self):
        if self.values.shape[0] != self.grid.samples:
            raise ValueError(f"Profile has {self.values.shape[0]} values for a grid of {self.grid.samples}")
        return self

    def scaled(self, factor: float) -> "Profile":
        return Profile(grid=self.grid, values=self.values * factor, name=f"{factor}*{self.name}")
