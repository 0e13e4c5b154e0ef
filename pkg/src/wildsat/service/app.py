"""HTTP service wrapping the solver.

Every endpoint accepts a DIMACS formula in the request body and runs a fresh
solve; domain problems (bad DIMACS, resource caps) come back as 422 with a
message in ``detail``.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..engine import Options, RowLimitExceeded, Solution, solve
from ..formula import Cnf, DimacsError, parse_dimacs
from ..oracle import OracleLimitError, check_partition
from ..rows import Row
from .schemas import (
    CountResponse,
    EnumerateRequest,
    EnumerateResponse,
    ExpandResponse,
    HealthResponse,
    RowOut,
    SolveRequest,
    SolveResponse,
    StatsOut,
    StatsResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="wildsat", version="0.1.0")


def _solve(req: SolveRequest) -> tuple[Cnf, Solution]:
    try:
        cnf = parse_dimacs(req.dimacs)
    except DimacsError as exc:
        raise HTTPException(status_code=422, detail=f"parse error: {exc}")
    try:
        return cnf, solve(cnf, Options(prune=req.prune, max_rows=req.max_rows))
    except RowLimitExceeded as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _rows_out(rows) -> list[RowOut]:
    return [RowOut(**row.to_json_dict()) for row in rows]


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse()


@app.post("/solve", response_model=SolveResponse)
def solve_endpoint(req: SolveRequest) -> SolveResponse:
    _, result = _solve(req)
    return SolveResponse(
        rows=_rows_out(result.final_rows),
        models=str(result.model_count),
        stats=StatsOut(**vars(result.stats)),
    )


@app.post("/count", response_model=CountResponse)
def count_endpoint(req: SolveRequest) -> CountResponse:
    _, result = _solve(req)
    return CountResponse(rows=len(result.final_rows), models=str(result.model_count))


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    _, result = _solve(req)
    if result.model_count > req.max_models:
        raise HTTPException(
            status_code=422,
            detail=f"{result.model_count} models exceed max_models={req.max_models}",
        )
    models = [
        "".join(map(str, bits)) for row in result.final_rows for bits in row.members()
    ]
    return EnumerateResponse(models=models, count=str(result.model_count))


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    cnf, result = _solve(req)
    try:
        report = check_partition(result.final_rows, cnf, limit=req.oracle_limit)
    except OracleLimitError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return VerifyResponse(**report.to_json_dict())


@app.post("/expand", response_model=ExpandResponse)
def expand_endpoint(req: SolveRequest) -> ExpandResponse:
    _, result = _solve(req)
    plain: list[Row] = [p for row in result.final_rows for p in row.expand_012()]
    return ExpandResponse(rows=_rows_out(plain), models=str(result.model_count))


@app.post("/stats", response_model=StatsResponse)
def stats_endpoint(req: SolveRequest) -> StatsResponse:
    _, result = _solve(req)
    k = len(result.final_rows)
    expanded = sum(len(row.expand_012()) for row in result.final_rows)
    return StatsResponse(
        rows=k,
        models=str(result.model_count),
        ratio=round(result.model_count / k, 2) if k else 0.0,
        expanded_rows=expanded,
        impositions=result.stats.impositions,
        rows_produced=result.stats.rows_produced,
        prune_calls=result.stats.prune_calls,
        prune_hits=result.stats.prune_hits,
    )
