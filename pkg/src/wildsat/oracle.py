"""Brute-force ground truth for desk-scale verification.

Sets of assignments are materialized as arbitrary-precision integers with one
bit per minterm: bit m stands for the assignment where variable v takes value
(m >> (v-1)) & 1. Variable masks have closed forms, and clause/formula/row
sets follow by bitwise algebra, so exhaustive checks over 2^t assignments run
at machine-word speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .formula import Clause, Cnf
from .rows import Row

DEFAULT_LIMIT = 24


class OracleLimitError(RuntimeError):
    """The instance is larger than the configured exhaustive-check limit."""


def _guard(t: int, limit: int) -> None:
    if t > limit:
        raise OracleLimitError(f"t={t} exceeds oracle limit {limit}")
    if t < 1:
        raise ValueError("t must be >= 1")


@lru_cache(maxsize=None)
def var_mask(t: int, v: int) -> int:
    """Minterm set {a : a_v = 1} as a 2^t-bit integer.

    The bit pattern is the block 1^b 0^b repeated, b = 2^(v-1); the repetition
    is a geometric sum, giving a closed form with no Python-level loop.
    """
    if not 1 <= v <= t:
        raise ValueError(f"variable {v} out of range 1..{t}")
    b = 1 << (v - 1)
    period = b << 1
    unit = ((1 << b) - 1) << b
    reps = 1 << (t - v)
    return unit * (((1 << (period * reps)) - 1) // ((1 << period) - 1))


def full_mask(t: int) -> int:
    return (1 << (1 << t)) - 1


def clause_mask(t: int, clause: Clause) -> int:
    mask = 0
    for v in clause.pos:
        mask |= var_mask(t, v)
    full = full_mask(t)
    for v in clause.neg:
        mask |= full ^ var_mask(t, v)
    return mask


def formula_mask(cnf: Cnf) -> int:
    if cnf.has_empty_clause:
        return 0
    mask = full_mask(cnf.num_vars)
    for clause in cnf.clauses:
        mask &= clause_mask(cnf.num_vars, clause)
    return mask


def row_mask(t: int, row: Row) -> int:
    if row.t != t:
        raise ValueError(f"row has {row.t} positions, expected {t}")
    full = full_mask(t)
    mask = full
    for v, s in enumerate(row.sym, start=1):
        if s == "1":
            mask &= var_mask(t, v)
        elif s == "0":
            mask &= full ^ var_mask(t, v)
    for (kind, _), positions in row.groups().items():
        some_one = 0
        some_zero = 0
        for v in positions:
            some_one |= var_mask(t, v)
            some_zero |= full ^ var_mask(t, v)
        if kind in ("e", "m"):
            mask &= some_one
        if kind in ("n", "m"):
            mask &= some_zero
    return mask


def _assignment(m: int, t: int) -> tuple[int, ...]:
    return tuple((m >> (v - 1)) & 1 for v in range(1, t + 1))


def _first_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def brute_models(cnf: Cnf, limit: int = DEFAULT_LIMIT) -> set[tuple[int, ...]]:
    """Exact model set by exhaustive evaluation (guarded by ``limit``)."""
    _guard(cnf.num_vars, limit)
    mask = formula_mask(cnf)
    t = cnf.num_vars
    models: set[tuple[int, ...]] = set()
    while mask:
        m = _first_bit(mask)
        models.add(_assignment(m, t))
        mask &= mask - 1
    return models


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a row list against the exhaustive model set.

    ``overlap`` names the first offending pair of row list indices (0-based)
    when rows intersect; ``missing``/``extra`` hold the first assignment in
    minterm order witnessing a coverage gap or spill.
    """

    disjoint: bool
    overlap: tuple[int, int] | None
    covered: bool
    missing: tuple[int, ...] | None
    extra: tuple[int, ...] | None
    oracle_count: int
    solver_count: int

    @property
    def ok(self) -> bool:
        return self.disjoint and self.covered

    def to_text(self) -> str:
        lines = [
            f"disjoint={'true' if self.disjoint else 'false'}",
            f"covered={'true' if self.covered else 'false'}",
            f"oracle_count={self.oracle_count}",
            f"solver_count={self.solver_count}",
        ]
        if self.overlap is not None:
            lines.insert(1, f"overlap_rows={self.overlap[0]},{self.overlap[1]}")
        if self.missing is not None:
            lines.append("missing=" + "".join(map(str, self.missing)))
        if self.extra is not None:
            lines.append("extra=" + "".join(map(str, self.extra)))
        lines.append(f"result={'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "disjoint": self.disjoint,
            "overlap_rows": list(self.overlap) if self.overlap else None,
            "covered": self.covered,
            "missing": "".join(map(str, self.missing)) if self.missing else None,
            "extra": "".join(map(str, self.extra)) if self.extra else None,
            "oracle_count": str(self.oracle_count),
            "solver_count": str(self.solver_count),
            "ok": self.ok,
        }


def check_partition(
    rows: list[Row] | tuple[Row, ...],
    cnf: Cnf,
    limit: int = DEFAULT_LIMIT,
) -> VerifyReport:
    """Verify that ``rows`` partition the formula's model set exactly."""
    t = cnf.num_vars
    _guard(t, limit)
    masks = [row_mask(t, r) for r in rows]

    overlap = None
    union = 0
    for i, m in enumerate(masks):
        if union & m:
            for j in range(i):
                if masks[j] & m:
                    overlap = (j, i)
                    break
            break
        union |= m
    disjoint = overlap is None

    target = formula_mask(cnf)
    union = 0
    for m in masks:
        union |= m
    missing_mask = target & ~union
    extra_mask = union & ~target
    missing = _assignment(_first_bit(missing_mask), t) if missing_mask else None
    extra = _assignment(_first_bit(extra_mask), t) if extra_mask else None

    return VerifyReport(
        disjoint=disjoint,
        overlap=overlap,
        covered=not missing_mask and not extra_mask,
        missing=missing,
        extra=extra,
        oracle_count=target.bit_count(),
        solver_count=sum(r.cardinality() for r in rows),
    )


def count_models(cnf: Cnf, limit: int = DEFAULT_LIMIT) -> int:
    """Exhaustive model count (cheaper than materializing brute_models)."""
    _guard(cnf.num_vars, limit)
    return formula_mask(cnf).bit_count()
