"""
File and transcript schemas.

Canonical pydantic contracts for everything the engine reads from or
writes to disk: quivers, central charges, run transcripts, DT series and
independence reports. Vertex labels are 1-based throughout.
"""

from __future__ import annotations

from typing import List, Optional, Union

from pydantic import BaseModel, Field, StrictInt, StrictStr, validator


RationalText = Union[StrictInt, StrictStr]


# ---------------------------------------------------------------------
# Inputs
# ---------------------------------------------------------------------

class QuiverFileSchema(BaseModel):
    vertices: StrictInt = Field(..., description="Vertex count n")
    arrows: List[List[StrictInt]] = Field(
        default_factory=list,
        description="[source, target] or [source, target, multiplicity]",
    )

    class Config:
        extra = "ignore"

    @validator("arrows")
    def _arrow_shape(cls, arrows: List[List[int]]) -> List[List[int]]:
        for arrow in arrows:
            if len(arrow) not in (2, 3):
                raise ValueError(f"arrow {arrow} must have 2 or 3 entries")
        return arrows


class ChargeFileSchema(BaseModel):
    z: List[List[RationalText]] = Field(
        ...,
        description="[re, im] per simple; integers or 'p/q' strings",
    )

    class Config:
        extra = "ignore"

    @validator("z")
    def _pair_shape(cls, z: List[List[RationalText]]) -> List[List[RationalText]]:
        for index, pair in enumerate(z, start=1):
            if len(pair) != 2:
                raise ValueError(f"charge component z_{index} = {pair} must be [re, im]")
        return z


# ---------------------------------------------------------------------
# Outputs
# ---------------------------------------------------------------------

class StepSchema(BaseModel):
    vertex: int
    class_: List[int] = Field(..., alias="class")
    phase: float

    class Config:
        frozen = True
        allow_population_by_field_name = True


class RunTranscriptSchema(BaseModel):
    status: str = Field(..., description="maximal | budget_exceeded")
    steps: List[StepSchema] = Field(default_factory=list)
    permutation: Optional[List[int]] = Field(
        None,
        description="Present iff the run reached the all-red state",
    )
    final_quiver: QuiverFileSchema

    class Config:
        frozen = True


class SeriesTermSchema(BaseModel):
    exp: List[StrictInt]
    num: StrictStr
    den: StrictStr

    class Config:
        frozen = True


class SeriesFileSchema(BaseModel):
    rank: StrictInt
    degree: StrictInt
    terms: List[SeriesTermSchema] = Field(default_factory=list)

    class Config:
        frozen = True


class ChargeResultSchema(BaseModel):
    charge_index: int
    status: str = Field(..., description="ok | nondiscrete | infinite")
    length: Optional[int] = Field(None, description="Number of stable classes recorded")

    class Config:
        frozen = True


class ComparisonSchema(BaseModel):
    i: int
    j: int
    equal: bool

    class Config:
        frozen = True


class CheckReportSchema(BaseModel):
    results: List[ChargeResultSchema] = Field(default_factory=list)
    comparisons: List[ComparisonSchema] = Field(default_factory=list)

    class Config:
        frozen = True
