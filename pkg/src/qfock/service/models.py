"""Request/response models shared by the HTTP service and the CLI client.

Coefficients travel as objects mapping the v-exponent (as a string integer)
to the coefficient (string integer, or "p/q" for the rational variants), the
same canonical JSON form the value types emit.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

Coeff = dict[str, str]


class SchurTerm(BaseModel):
    partition: list[int]
    coeff: Coeff


class VectorTerm(BaseModel):
    charge: int
    partition: list[int]
    coeff: Coeff


class VectorJson(BaseModel):
    sector: int
    terms: list[VectorTerm]


class StraightenRequest(BaseModel):
    entries: list[int]


class StraightenResponse(BaseModel):
    sign: int  # 0 when the tuple is degenerate
    partition: Optional[list[int]] = None
    text: str


class ConjugateRequest(BaseModel):
    partition: list[int]


class ConjugateResponse(BaseModel):
    partition: list[int]
    text: str


class LrRequest(BaseModel):
    lam: list[int]
    mu: list[int]


class PolyResponse(BaseModel):
    terms: list[SchurTerm]
    text: str


class PieriRequest(BaseModel):
    kind: Literal["h", "e"]
    n: int = Field(ge=0)
    partition: list[int]


class JtRequest(BaseModel):
    partition: list[int]


class JtTerm(BaseModel):
    coeff: int
    parts: list[int]


class JtResponse(BaseModel):
    terms: list[JtTerm]
    text: str


class ConvertRequest(BaseModel):
    to: Literal["power", "schur"]
    partition: list[int]


class MixedRequest(BaseModel):
    mu: list[int]
    nu: list[int]


class MixedResponse(BaseModel):
    sign: int
    partition: Optional[list[int]] = None
    text: str


class XRequest(BaseModel):
    sign: Literal["plus", "minus"]
    n: int
    sector: Literal[0, 1] = 0
    charge: int = 0
    mu: list[int] = Field(default_factory=list)


class DividedRequest(XRequest):
    r: int = Field(ge=1)


class VectorResponse(BaseModel):
    vector: VectorJson
    text: str


class ApplyRequest(BaseModel):
    word: str
    sector: Literal[0, 1] = 0
    charge: int = 0
    mu: list[int] = Field(default_factory=list)


class InnerRequest(BaseModel):
    kind: Literal["hall", "deformed"]
    lam: list[int]
    mu: list[int]


class InnerResponse(BaseModel):
    numerator: Coeff
    denominator: Coeff
    text: str


class CheckRequest(BaseModel):
    suites: Optional[list[str]] = None
    overrides: dict[str, dict[str, int]] = Field(default_factory=dict)


class ReportJson(BaseModel):
    suite: str
    config: dict
    passed: bool = Field(alias="pass")
    violations: list[dict]

    model_config = {"populate_by_name": True}


class CheckResponse(BaseModel):
    passed: bool
    reports: list[ReportJson]
    text: str
