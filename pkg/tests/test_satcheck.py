"""DPLL satisfiability test and row feasibility pruning."""
from __future__ import annotations

import random

from wildsat import Clause, feasible, full_row, parse_dimacs, parse_row, satisfiable
from wildsat.oracle import brute_models

from helpers import CNF_A, CNF_D, mu, random_cnf


def test_trivial_cases():
    assert satisfiable(parse_dimacs("p cnf 1 0\n"))
    assert satisfiable(parse_dimacs("p cnf 1 1\n1 0\n"))
    assert not satisfiable(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n"))
    assert not satisfiable(parse_dimacs("p cnf 2 1\n0\n"))  # the empty clause


def test_unit_propagation_chain():
    text = "p cnf 4 4\n1 0\n-1 2 0\n-2 3 0\n-3 -4 0\n"
    assert satisfiable(parse_dimacs(text))
    text = "p cnf 3 4\n1 0\n-1 2 0\n-2 3 0\n-3 -1 0\n"
    assert not satisfiable(parse_dimacs(text))


def test_known_formulas():
    assert satisfiable(parse_dimacs(mu(2)))
    assert satisfiable(parse_dimacs(mu(12)))
    assert satisfiable(parse_dimacs(CNF_A))
    assert satisfiable(parse_dimacs(CNF_D))


def test_agrees_with_brute_force():
    rng = random.Random(31)
    for _ in range(250):
        cnf = random_cnf(rng, rng.randint(1, 7))
        want = bool(brute_models(cnf))
        assert satisfiable(cnf) == want
        assert satisfiable(cnf, pure_literals=True) == want


def test_feasible():
    assert feasible(full_row(3), [])
    assert not feasible(parse_row("1 1 2"), [Clause((), (1, 2))])
    assert not feasible(parse_row("e1 0 e1 1 e1"), [Clause((), (4,))])
    assert feasible(parse_row("e1 0 e1 1 e1"), [Clause((), (2,))])
    # group constraints participate: an m group cannot be all ones
    assert not feasible(parse_row("m1 m1"), [Clause((1,), ()), Clause((2,), ())])


def test_feasible_agrees_with_members():
    rng = random.Random(77)
    from helpers import random_row

    for _ in range(150):
        t = rng.randint(1, 7)
        row = random_row(rng, t)
        cnf = random_cnf(rng, t)
        want = any(cnf.evaluate(bits) for bits in row.members())
        assert feasible(row, list(cnf.clauses)) == want
