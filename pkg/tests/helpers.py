"""Shared fixtures: benchmark formulas and seeded random generators."""
from __future__ import annotations

import random
from collections import Counter

from wildsat import Clause, Cnf, Row

# t=10, five mixed clauses; 705 models, compressed into 10 rows.
CNF_A = """p cnf 10 5
-1 -2 -3 0
4 5 6 7 0
-8 -9 -10 0
6 7 8 9 -2 -3 -4 -5 0
1 -3 -4 -6 -7 0
"""

# t=10, four clauses of which the last is tautological (x9 and -x9); 928 models.
CNF_B = """p cnf 10 4
5 7 10 -2 -4 0
1 2 9 -7 -5 0
2 3 7 -4 -9 0
8 9 10 -4 -9 0
"""

# CNF_B plus one more mixed clause; 898 models.
CNF_C = CNF_B.replace("p cnf 10 4", "p cnf 10 5") + "5 6 8 -3 -9 0\n"

# t=18, five long one-sided clauses of alternating sign; 260928 models.
CNF_D = """p cnf 18 5
3 4 6 7 9 14 15 16 17 18 0
-3 -5 -8 -9 -11 -12 -13 -14 -15 -17 0
1 4 5 6 9 12 14 15 17 18 0
-1 -2 -3 -8 -11 -13 -14 -16 -17 -18 0
2 3 7 8 11 13 14 16 17 18 0
"""


def mu(t: int) -> str:
    """The not-all-equal formula: at least one 1 and at least one 0."""
    pos = " ".join(str(v) for v in range(1, t + 1))
    neg = " ".join(str(-v) for v in range(1, t + 1))
    return f"p cnf {t} 2\n{pos} 0\n{neg} 0\n"


def random_clause(rng: random.Random, t: int, max_len: int = 6) -> Clause | None:
    k = rng.randint(1, min(t, max_len))
    vs = rng.sample(range(1, t + 1), k)
    pos = tuple(sorted(v for v in vs if rng.random() < 0.5))
    neg = tuple(sorted(v for v in vs if v not in pos))
    if not pos and not neg:
        return None
    return Clause(pos, neg)


def random_cnf(rng: random.Random, t: int, max_clauses: int = 12) -> Cnf:
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        c = random_clause(rng, t)
        if c is not None:
            clauses.append(c)
    return Cnf(t, tuple(clauses))


def random_row(rng: random.Random, t: int) -> Row:
    """A random row; group letters/tags drawn freely, singletons demoted to 2."""
    while True:
        cells: list = []
        for _ in range(t):
            if rng.random() < 0.45:
                cells.append(rng.choice(["0", "1", "2"]))
            else:
                cells.append((rng.choice("enm"), rng.randint(0, 2)))
        sizes = Counter(c for c in cells if isinstance(c, tuple))
        cells = ["2" if isinstance(c, tuple) and sizes[c] < 2 else c for c in cells]
        try:
            return Row.from_cells(cells)
        except ValueError:
            continue
