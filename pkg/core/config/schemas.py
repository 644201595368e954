"""
Norm config schema.

    {"kind": "pnorm", "dim": 2, "p": "inf"}
    {"kind": "weighted-pnorm", "dim": 3, "p": 1.5, "weights": [1, 2, 3]}
    {"kind": "quadratic", "dim": 2, "matrix": [[2, 1], [1, 2]]}
    {"kind": "polyhedral", "dim": 2, "vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]]}
"""
import math
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator

from core.normspace.space import NormSpec
from core.normspace.types import P_INF

Exponent = Union[float, Literal["inf"]]


def _exponent(p: Exponent):
    return P_INF if p == "inf" or math.isinf(p) else p


class _NormConfigBase(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    dim: int = Field(ge=1)


class PNormConfig(_NormConfigBase):
    kind: Literal["pnorm"]
    p: Exponent

    def to_spec(self) -> NormSpec:
        return NormSpec.pnorm(_exponent(self.p), self.dim)


class WeightedPNormConfig(_NormConfigBase):
    kind: Literal["weighted-pnorm"]
    p: Exponent
    weights: list[PositiveFloat]

    @model_validator(mode="after")
    def _weights_match_dim(self):
        if len(self.weights) != self.dim:
            raise ValueError(f"weights has {len(self.weights)} entries, dim is {self.dim}")
        return self

    def to_spec(self) -> NormSpec:
        return NormSpec.weighted_pnorm(_exponent(self.p), self.weights)


class QuadraticConfig(_NormConfigBase):
    kind: Literal["quadratic"]
    matrix: list[list[float]]

    @model_validator(mode="after")
    def _square(self):
        if len(self.matrix) != self.dim or any(len(row) != self.dim for row in self.matrix):
            raise ValueError(f"matrix must be {self.dim}x{self.dim}")
        return self

    def to_spec(self) -> NormSpec:
        return NormSpec.quadratic(self.matrix)


class PolyhedralConfig(_NormConfigBase):
    kind: Literal["polyhedral"]
    vertices: list[list[float]] = Field(min_length=2)

    @model_validator(mode="after")
    def _vertex_dim(self):
        if any(len(v) != self.dim for v in self.vertices):
            raise ValueError(f"every vertex needs {self.dim} coordinates")
        return self

    def to_spec(self) -> NormSpec:
        return NormSpec.polyhedral(self.vertices)


NormConfig = Annotated[
    Union[PNormConfig, WeightedPNormConfig, QuadraticConfig, PolyhedralConfig],
    Field(discriminator="kind"),
]
