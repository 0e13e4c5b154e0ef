"""Request and response models for the HTTP service."""
from __future__ import annotations

from pydantic import BaseModel, Field


class SolveRequest(BaseModel):
    dimacs: str = Field(description="CNF formula in DIMACS format")
    prune: bool = True
    max_rows: int | None = None


class RowOut(BaseModel):
    symbols: list[str]
    count: str


class StatsOut(BaseModel):
    rows_produced: int
    impositions: int
    prune_calls: int
    prune_hits: int


class SolveResponse(BaseModel):
    rows: list[RowOut]
    models: str
    stats: StatsOut


class CountResponse(BaseModel):
    rows: int
    models: str


class EnumerateRequest(SolveRequest):
    max_models: int = 4096


class EnumerateResponse(BaseModel):
    models: list[str]
    count: str


class VerifyRequest(SolveRequest):
    oracle_limit: int = 24


class VerifyResponse(BaseModel):
    disjoint: bool
    overlap_rows: list[int] | None
    covered: bool
    missing: str | None
    extra: str | None
    oracle_count: str
    solver_count: str
    ok: bool


class ExpandResponse(BaseModel):
    rows: list[RowOut]
    models: str


class StatsResponse(BaseModel):
    rows: int
    models: str
    ratio: float
    expanded_rows: int
    impositions: int
    rows_produced: int
    prune_calls: int
    prune_hits: int


class HealthResponse(BaseModel):
    status: str = "ok"
