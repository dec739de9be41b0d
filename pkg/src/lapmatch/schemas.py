"""Pydantic request/response models for the HTTP service.

One JSON object per result; report keys are part of the stable contract and
only change across major releases.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class PolyRequest(BaseModel):
    graph6: str
    kind: Literal["matching", "laplacian"] = "laplacian"
    max_size: int | None = None


class PolyResponse(BaseModel):
    graph: str
    kind: str
    degree: int
    coefficients: list[int] = Field(description="lowest power first")
    b: list[int] | None = None
    routes: list[str] | None = None
    routes_agree: bool | None = None


class RootsRequest(BaseModel):
    graph6: str
    width: str = "1e-12"
    max_size: int | None = None


class RootEntry(BaseModel):
    value: str
    multiplicity: int
    low: str
    high: str


class RootsResponse(BaseModel):
    graph: str
    n: int
    roots: list[RootEntry]
    total_multiplicity: int


class CensusRequest(BaseModel):
    graph6: str
    i: int
    max_size: int | None = None


class CensusResponse(BaseModel):
    graph: str
    i: int
    b_i: int
    spanning_trees: int
    unicyclic_spanning: int
    girth: int | None
    cycle_dim: int
    ratio_holds: bool | None = None
    ratio_error: str | None = None


class RatioRequest(BaseModel):
    graph6: str
    max_size: int | None = None


class RatioResponse(BaseModel):
    graph: str
    spanning_trees: int
    unicyclic_spanning: int
    girth: int
    cycle_dim: int
    holds: bool


class VerifyRequest(BaseModel):
    graphs: list[str] = Field(description="graph6 records, one per entry")
    suite: Literal["identities", "roots", "census", "partitions", "all"] = "all"
    jobs: int = 1
    max_size: int | None = None


class VerifyRecord(BaseModel):
    line: int
    graph: str
    suite: str
    ok: bool
    failures: list[str]
    error: str | None = None


class VerifySummary(BaseModel):
    graphs: int
    failed: int
    parse_errors: int
    passed: bool


class VerifyResponse(BaseModel):
    records: list[VerifyRecord]
    summary: VerifySummary


class ScanRequest(BaseModel):
    graphs: list[str]
    jobs: int = 1
    max_size: int | None = None


class ObstructionModel(BaseModel):
    tag: str
    witness: dict


class VariationModel(BaseModel):
    graph: str
    edge: list[int]
    degrees: list[int]
    deltas: list[str]
    interlacing_ok: bool
    sum_increment: int
    one_place: bool
    two_place: bool
    obstructions: list[ObstructionModel]
    near_miss: str | None


class ScanNotice(BaseModel):
    line: int
    message: str


class ScanResponse(BaseModel):
    reports: list[VariationModel]
    notices: list[ScanNotice]
    summary: dict


class ErrorBody(BaseModel):
    error: str
    detail: str
