"""Pydantic request/response models for the geometry service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ConstructRequest(BaseModel):
    script: str
    tolerance: float | None = Field(default=None, gt=0)


class ObjectOut(BaseModel):
    name: str
    kind: str
    data: dict[str, float]
    note: str | None = None


class AssertOut(BaseModel):
    description: str
    passed: bool
    measured: float
    expected: float
    tolerance: float
    line: int | None = None


class ErrorOut(BaseModel):
    kind: str
    message: str
    line: int | None = None
    column: int | None = None


class ConstructResponse(BaseModel):
    exit_code: int
    objects: list[ObjectOut] = []
    asserts: list[AssertOut] = []
    artifacts: dict[str, str] = {}
    error: ErrorOut | None = None


class PiTableRequest(BaseModel):
    rounds: int = Field(default=4, ge=0)
    stabilized: bool = False
    start_n: int = 6
    max_rounds: int = 24


class PiRowOut(BaseModel):
    n: int
    side: float
    perimeter: float
    pi_estimate: float
    error_vs_reference: float


class PiTableResponse(BaseModel):
    rows: list[PiRowOut]


class CfRequest(BaseModel):
    value: str | None = None
    a: float | None = Field(default=None, gt=0)
    b: float | None = Field(default=None, gt=0)
    steps: int = Field(default=16, ge=1)


class CfRowOut(BaseModel):
    k: int
    quotient: int
    p: int
    q: int
    value: float
    error: float


class CfResponse(BaseModel):
    quotients: list[int]
    terminated: bool
    target: float
    rows: list[CfRowOut]


class TriangleRequest(BaseModel):
    a: float = Field(gt=0)
    b: float = Field(gt=0)
    c: float = Field(gt=0)


class BisectorSplitOut(BaseModel):
    toward_first: float
    toward_second: float


class TriangleResponse(BaseModel):
    a: float
    b: float
    c: float
    area: float
    semiperimeter: float
    projection_c_on_a: float
    projection_b_on_a: float
    heights: list[float]
    medians: list[float]
    angle_classes: list[str]
    circumradius: float
    inradius: float
    bisector_splits: list[BisectorSplitOut]


class PlaneAreaRequest(BaseModel):
    shape: str
    params: dict[str, float]


class PlaneAreaResponse(BaseModel):
    shape: str
    area: float


class SolidRequest(BaseModel):
    kind: str
    params: dict[str, float]


class SolidResponse(BaseModel):
    kind: str
    volume: float | None
    lateral: float | None
    total: float | None
    degenerate: bool


class LanternRequest(BaseModel):
    radius: float = Field(gt=0)
    height: float = Field(ge=0)
    m: int = Field(ge=1)
    n: int = Field(ge=3)


class LanternResponse(BaseModel):
    m: int
    n: int
    triangle_count: int
    area: float


class VerifyRequest(BaseModel):
    seed: int = 0
    samples: int | None = Field(default=None, ge=1)


class VerifyResponse(BaseModel):
    name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    detail: str = ""


class NgonResponse(BaseModel):
    n: int
    constructible: bool
