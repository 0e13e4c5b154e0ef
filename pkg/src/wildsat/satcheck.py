"""Plain DPLL satisfiability check used to prune dead search branches.

This is deliberately a small, dependency-free decision procedure: the engine
only asks yes/no questions about residual formulas, so unit propagation plus
branching is enough. No clause learning, no watched literals.
"""
from __future__ import annotations

from .formula import Clause, Cnf
from .rows import Row


def satisfiable(cnf: Cnf, pure_literals: bool = False) -> bool:
    """Decide whether the formula has at least one model.

    Unit propagation runs to fixpoint at every node; branching picks the
    lowest-index unassigned variable of the open clauses and tries true
    first. Pure-literal elimination is available but off by default so runs
    are easy to reason about.
    """
    if cnf.has_empty_clause:
        return False
    clauses = [(set(c.pos), set(c.neg)) for c in cnf.clauses]
    return _dpll(clauses, {}, pure_literals)


def _dpll(
    clauses: list[tuple[set[int], set[int]]],
    assign: dict[int, int],
    pure: bool = False,
) -> bool:
    # unit propagation to fixpoint
    assign = dict(assign)
    while True:
        unit = None
        for pos, neg in clauses:
            state = _clause_state(pos, neg, assign)
            if state == "sat":
                continue
            if state == "conflict":
                return False
            if state == "unit":
                unit = _sole_literal(pos, neg, assign)
                break
        if unit is None:
            break
        var, val = unit
        assign[var] = val

    open_clauses = [
        (pos, neg)
        for pos, neg in clauses
        if _clause_state(pos, neg, assign) == "open"
    ]
    if not open_clauses:
        return True

    if pure:
        polarity: dict[int, int] = {}
        for pos, neg in open_clauses:
            for v in pos - assign.keys():
                polarity[v] = polarity.get(v, 0) | 1
            for v in neg - assign.keys():
                polarity[v] = polarity.get(v, 0) | 2
        pures = {v: 1 if p == 1 else 0 for v, p in polarity.items() if p != 3}
        if pures:
            assign.update(pures)
            return _dpll(open_clauses, assign, pure)

    var = min(min((pos | neg) - assign.keys()) for pos, neg in open_clauses)
    for val in (1, 0):
        trial = dict(assign)
        trial[var] = val
        if _dpll(open_clauses, trial, pure):
            return True
    return False


def _clause_state(pos: set[int], neg: set[int], assign: dict[int, int]) -> str:
    unassigned = 0
    for v in pos:
        a = assign.get(v)
        if a == 1:
            return "sat"
        if a is None:
            unassigned += 1
    for v in neg:
        a = assign.get(v)
        if a == 0:
            return "sat"
        if a is None:
            unassigned += 1
    if unassigned == 0:
        return "conflict"
    return "unit" if unassigned == 1 else "open"


def _sole_literal(pos: set[int], neg: set[int], assign: dict[int, int]) -> tuple[int, int]:
    for v in pos:
        if v not in assign:
            return v, 1
    for v in neg:
        if v not in assign:
            return v, 0
    raise AssertionError("clause has no unassigned literal")


def feasible(row: Row, remaining: list[Clause] | tuple[Clause, ...]) -> bool:
    """True when some member of the row satisfies all remaining clauses.

    The row's own membership constraints are expressible as clauses, so this
    reduces to one satisfiability call on their conjunction.
    """
    clauses = tuple(row.to_cnf().clauses) + tuple(remaining)
    return _dpll([(set(c.pos), set(c.neg)) for c in clauses], {})
