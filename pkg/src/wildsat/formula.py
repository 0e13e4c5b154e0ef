"""CNF data model, DIMACS parsing and bitstring evaluation.

Variables are 1-based throughout. An assignment is a length-t tuple of
0/1 ints where entry i-1 holds the value of variable i.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DimacsError(ValueError):
    """Raised on malformed DIMACS input."""


class _Sentinel:
    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: normalize_clause outcome for a clause containing some x and not-x
TAUTOLOGY = _Sentinel("TAUTOLOGY")
#: normalize_clause outcome for a clause with no literals
EMPTY = _Sentinel("EMPTY")


@dataclass(frozen=True)
class Clause:
    """A disjunction, split into positive and negative variable index sets.

    Both tuples are sorted ascending, duplicate-free and disjoint; at least
    one of them is nonempty.
    """

    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        if not self.pos and not self.neg:
            raise ValueError("clause must have at least one literal")
        if set(self.pos) & set(self.neg):
            raise ValueError("clause variables repeated with both signs")
        for vs in (self.pos, self.neg):
            if list(vs) != sorted(set(vs)):
                raise ValueError("clause variable sets must be sorted and duplicate-free")
            if any(v < 1 for v in vs):
                raise ValueError("variable indices are 1-based")

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.pos + self.neg))

    def __len__(self) -> int:
        return len(self.pos) + len(self.neg)

    def literals(self) -> list[int]:
        """The clause as signed DIMACS literals."""
        return [v for v in self.pos] + [-v for v in self.neg]

    def satisfied_by(self, bits: tuple[int, ...]) -> bool:
        return any(bits[v - 1] == 1 for v in self.pos) or any(
            bits[v - 1] == 0 for v in self.neg
        )


@dataclass(frozen=True)
class Cnf:
    """A conjunction of clauses over variables 1..num_vars.

    Clause order is preserved from the input; it shapes the solver's output
    rows but not the model set. ``has_empty_clause`` marks a formula made
    unsatisfiable by an explicit empty clause in the input.
    """

    num_vars: int
    clauses: tuple[Clause, ...] = ()
    dropped_tautologies: int = 0
    has_empty_clause: bool = False

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        for c in self.clauses:
            if any(v > self.num_vars for v in c.variables):
                raise ValueError("clause variable exceeds num_vars")

    def evaluate(self, bits: tuple[int, ...]) -> bool:
        """True iff every clause is satisfied by the assignment."""
        if len(bits) != self.num_vars:
            raise ValueError(f"assignment length {len(bits)} != {self.num_vars} variables")
        if self.has_empty_clause:
            return False
        return all(c.satisfied_by(bits) for c in self.clauses)


def normalize_clause(literals: Iterable[int]):
    """Dedupe signed literals into a Clause, TAUTOLOGY or EMPTY."""
    pos: set[int] = set()
    neg: set[int] = set()
    for lit in literals:
        if lit == 0:
            raise ValueError("0 is not a literal")
        (pos if lit > 0 else neg).add(abs(lit))
    if pos & neg:
        return TAUTOLOGY
    if not pos and not neg:
        return EMPTY
    return Clause(tuple(sorted(pos)), tuple(sorted(neg)))


def parse_dimacs(text: str) -> Cnf:
    """Parse DIMACS CNF text into a normalized Cnf.

    Tautological clauses are dropped (counted in ``dropped_tautologies``),
    duplicate literals are deduplicated, and an explicit empty clause sets
    ``has_empty_clause`` instead of raising.
    """
    num_vars: int | None = None
    declared_clauses = 0
    clauses: list[Clause] = []
    dropped = 0
    has_empty = False
    current: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars = int(parts[2])
                declared_clauses = int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {tok!r}") from None
            if lit == 0:
                norm = normalize_clause(current)
                current = []
                if norm is TAUTOLOGY:
                    dropped += 1
                elif norm is EMPTY:
                    has_empty = True
                else:
                    clauses.append(norm)
            else:
                if abs(lit) > num_vars:
                    raise DimacsError(
                        f"line {lineno}: variable {abs(lit)} exceeds declared count {num_vars}"
                    )
                current.append(lit)

    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause not terminated by 0")
    return Cnf(
        num_vars=num_vars,
        clauses=tuple(clauses),
        dropped_tautologies=dropped,
        has_empty_clause=has_empty,
    )


def format_dimacs(cnf: Cnf) -> str:
    """Render a Cnf back to DIMACS text; the clause list round-trips exactly."""
    original = len(cnf.clauses) + cnf.dropped_tautologies + (1 if cnf.has_empty_clause else 0)
    lines = [
        f"c clauses={original} tautologies_dropped={cnf.dropped_tautologies}",
        f"p cnf {cnf.num_vars} {len(cnf.clauses) + (1 if cnf.has_empty_clause else 0)}",
    ]
    for c in cnf.clauses:
        lines.append(" ".join(str(l) for l in c.literals()) + " 0")
    if cnf.has_empty_clause:
        lines.append("0")
    return "\n".join(lines) + "\n"


def all_assignments(t: int) -> Iterator[tuple[int, ...]]:
    """Yield all length-t assignments, lexicographically."""
    for a in range(1 << t):
        yield tuple((a >> (t - 1 - i)) & 1 for i in range(t))
