"""wildsat: enumerate all models of a CNF as disjoint wildcard-compressed rows."""
from .engine import Options, RowLimitExceeded, Solution, Stats, emit_trace, pending, solve
from .formula import Clause, Cnf, DimacsError, all_assignments, format_dimacs, parse_dimacs
from .impose import Chunk, chunks, force_ones, impose_clause, impose_negative, impose_positive, restrict
from .oracle import (
    OracleLimitError,
    VerifyReport,
    brute_models,
    check_partition,
    count_models,
)
from .rows import Row, full_row, parse_row
from .satcheck import feasible, satisfiable

__version__ = "0.1.0"

__all__ = [
    "Chunk",
    "Clause",
    "Cnf",
    "DimacsError",
    "Options",
    "OracleLimitError",
    "Row",
    "RowLimitExceeded",
    "Solution",
    "Stats",
    "VerifyReport",
    "all_assignments",
    "brute_models",
    "check_partition",
    "chunks",
    "count_models",
    "emit_trace",
    "feasible",
    "force_ones",
    "format_dimacs",
    "full_row",
    "impose_clause",
    "impose_negative",
    "impose_positive",
    "parse_dimacs",
    "parse_row",
    "pending",
    "restrict",
    "satisfiable",
    "solve",
]
