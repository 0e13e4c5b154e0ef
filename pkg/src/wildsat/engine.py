"""Depth-first enumeration driver.

Keeps a LIFO stack of (row, next clause to scan) items. Popping an item, the
engine looks for the first clause the row does not yet fulfill; if there is
none the row is final and joins the answer, otherwise the clause is imposed
and the sons take the parent's place. Since sons are subsets of their parent
and every transformation keeps the fulfillment witnesses of earlier clauses
intact, the scan may resume where the parent left off.
"""
from __future__ import annotations

from dataclasses import dataclass

from .formula import Cnf
from .impose import impose_clause
from .rows import Row, full_row
from .satcheck import feasible


@dataclass(frozen=True)
class Options:
    prune: bool = True
    max_rows: int | None = None
    trace: bool = False


@dataclass
class Stats:
    """Counters of the run; rows_produced counts every son ever generated."""

    rows_produced: int = 0
    impositions: int = 0
    prune_calls: int = 0
    prune_hits: int = 0


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # PUSH | POP | IMPOSE | FINAL | PRUNE
    row: Row
    index: int | None = None
    sons: int | None = None
    count: int | None = None

    def render(self) -> str:
        if self.kind in ("PUSH", "POP"):
            return f"{self.kind} {self.row.text()} next={self.index}"
        if self.kind == "IMPOSE":
            return f"IMPOSE C{self.index} on {self.row.text()}: {self.sons} sons"
        if self.kind == "PRUNE":
            return f"PRUNE {self.row.text()} infeasible"
        if self.kind == "FINAL":
            return f"FINAL {self.row.text()} count={self.count}"
        raise ValueError(f"unknown event kind {self.kind!r}")


@dataclass(frozen=True)
class Solution:
    final_rows: tuple[Row, ...]
    model_count: int
    stats: Stats
    trace: tuple[TraceEvent, ...] = ()


class RowLimitExceeded(RuntimeError):
    """Raised when the configured cap on final rows is hit; carries progress."""

    def __init__(self, partial: Solution):
        super().__init__(f"row limit hit after {len(partial.final_rows)} rows")
        self.partial = partial


def pending(row: Row, cnf: Cnf, start: int = 1) -> int | None:
    """Smallest 1-based clause index >= start the row does not fulfill."""
    for i in range(start, len(cnf.clauses) + 1):
        if not row.fulfills(cnf.clauses[i - 1]):
            return i
    return None


def solve(cnf: Cnf, opts: Options | None = None) -> Solution:
    """Enumerate Mod(cnf) as an ordered list of pairwise disjoint rows."""
    opts = opts or Options()
    stats = Stats()
    events: list[TraceEvent] = []
    note = events.append if opts.trace else (lambda event: None)

    if cnf.has_empty_clause:
        return Solution((), 0, stats, tuple(events))

    finals: list[Row] = []
    model_count = 0
    stack: list[tuple[Row, int]] = [(full_row(cnf.num_vars), 1)]
    note(TraceEvent("PUSH", stack[0][0], index=1))

    while stack:
        row, nxt = stack.pop()
        note(TraceEvent("POP", row, index=nxt))
        i = pending(row, cnf, nxt)
        if i is None:
            if opts.max_rows is not None and len(finals) >= opts.max_rows:
                raise RowLimitExceeded(
                    Solution(tuple(finals), model_count, stats, tuple(events))
                )
            n = row.cardinality()
            note(TraceEvent("FINAL", row, count=n))
            finals.append(row)
            model_count += n
            continue

        sons = impose_clause(row, cnf.clauses[i - 1])
        stats.impositions += 1
        stats.rows_produced += len(sons)
        note(TraceEvent("IMPOSE", row, index=i, sons=len(sons)))

        if opts.prune and sons:
            remaining = cnf.clauses[i:]
            kept = []
            for son in sons:
                stats.prune_calls += 1
                if feasible(son, remaining):
                    kept.append(son)
                else:
                    stats.prune_hits += 1
                    note(TraceEvent("PRUNE", son))
            sons = kept

        for son in reversed(sons):
            stack.append((son, i + 1))
            note(TraceEvent("PUSH", son, index=i + 1))

    return Solution(tuple(finals), model_count, stats, tuple(events))


def emit_trace(events) -> str:
    """Render trace events, one line each."""
    return "\n".join(event.render() for event in events)
