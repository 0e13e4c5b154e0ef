"""Wildcard-compressed sets of bitstrings.

A Row assigns every position (1..t) one of six symbols. ``0``, ``1`` fix the
bit, ``2`` leaves it free, and the wildcard letters constrain a whole group
of positions at once:

* ``e`` group: at least one 1 among the group's positions,
* ``n`` group: at least one 0,
* ``m`` group: at least one 1 and at least one 0.

Groups of the same letter are told apart by a numeric id (``e1``, ``e2``, ...),
numbered densely per letter in order of first occurrence; a group spans at
least two positions and need not be contiguous. A row denotes the set of all
length-t bitstrings that match the fixed symbols and satisfy every group
constraint.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import prod
from typing import Hashable, Iterator, Sequence

from .formula import Clause, Cnf

WILDCARDS = ("e", "n", "m")

_TOKEN_RE = re.compile(r"^([012]|[enm][1-9][0-9]*)$")


@dataclass(frozen=True)
class Row:
    """Immutable compressed set of length-t bitstrings.

    ``sym[i]`` is the symbol letter at position i+1; ``gid[i]`` is the
    per-letter group id there (0 for fixed symbols). Construct through
    ``from_cells`` / ``full_row`` / ``parse_row``, which canonicalize ids.
    """

    sym: tuple[str, ...]
    gid: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.sym)

    @classmethod
    def from_cells(cls, cells: Sequence) -> "Row":
        """Build a row from per-position cells, canonicalizing group ids.

        Each cell is '0', '1' or '2', or a (letter, tag) pair where letter is
        one of 'e'/'n'/'m' and equal pairs belong to the same group. Group ids
        are renumbered densely per letter in first-occurrence order. Raises
        ValueError for unknown symbols or groups of fewer than two positions.
        """
        sym: list[str] = []
        gid: list[int] = []
        ids: dict[tuple[str, Hashable], int] = {}
        next_id = {"e": 0, "n": 0, "m": 0}
        sizes: dict[tuple[str, int], int] = {}
        for cell in cells:
            if cell in ("0", "1", "2"):
                sym.append(cell)
                gid.append(0)
                continue
            if not (isinstance(cell, tuple) and len(cell) == 2):
                raise ValueError(f"bad cell {cell!r}")
            kind, tag = cell
            if kind not in WILDCARDS:
                raise ValueError(f"bad wildcard letter {kind!r}")
            key = (kind, tag)
            if key not in ids:
                next_id[kind] += 1
                ids[key] = next_id[kind]
            sym.append(kind)
            gid.append(ids[key])
            sizes[(kind, ids[key])] = sizes.get((kind, ids[key]), 0) + 1
        if not sym:
            raise ValueError("row must have at least one position")
        for (kind, k), size in sizes.items():
            if size < 2:
                raise ValueError(f"group {kind}{k} has a single position")
        return cls(tuple(sym), tuple(gid))

    def groups(self) -> dict[tuple[str, int], tuple[int, ...]]:
        """Mapping (letter, id) -> ascending 1-based positions of the group."""
        cached = self.__dict__.get("_groups")
        if cached is None:
            acc: dict[tuple[str, int], list[int]] = {}
            for i, (s, g) in enumerate(zip(self.sym, self.gid)):
                if g:
                    acc.setdefault((s, g), []).append(i + 1)
            cached = {k: tuple(v) for k, v in acc.items()}
            object.__setattr__(self, "_groups", cached)
        return cached

    @property
    def is_plain(self) -> bool:
        """True when the row uses only 0/1/2 (a plain orthogonal-DNF product)."""
        return not any(self.gid)

    def cardinality(self) -> int:
        """Exact number of bitstrings in the row (arbitrary precision)."""
        n = prod(2 for s in self.sym if s == "2")
        for (kind, _), positions in self.groups().items():
            k = len(positions)
            n *= (1 << k) - (2 if kind == "m" else 1)
        return n

    def contains(self, bits: Sequence[int]) -> bool:
        """Membership test for one assignment."""
        if len(bits) != self.t:
            raise ValueError(f"assignment length {len(bits)} != row length {self.t}")
        for i, s in enumerate(self.sym):
            if s == "0" and bits[i] != 0:
                return False
            if s == "1" and bits[i] != 1:
                return False
        for (kind, _), positions in self.groups().items():
            ones = any(bits[p - 1] == 1 for p in positions)
            zeros = any(bits[p - 1] == 0 for p in positions)
            if kind in ("e", "m") and not ones:
                return False
            if kind in ("n", "m") and not zeros:
                return False
        return True

    def fulfills(self, clause: Clause) -> bool:
        """True iff every member of the row satisfies the clause.

        Decided syntactically: a 1 at a positive position, a 0 at a negative
        position, an e/m group lying entirely inside the positive positions,
        or an n/m group entirely inside the negative ones. A group merely
        inside the union of both sides proves nothing.
        """
        if any(self.sym[v - 1] == "1" for v in clause.pos):
            return True
        if any(self.sym[v - 1] == "0" for v in clause.neg):
            return True
        pos = set(clause.pos)
        neg = set(clause.neg)
        for (kind, _), positions in self.groups().items():
            if kind in ("e", "m") and all(p in pos for p in positions):
                return True
            if kind in ("n", "m") and all(p in neg for p in positions):
                return True
        return False

    def to_cnf(self) -> Cnf:
        """The CNF whose model set is exactly this row's member set.

        One unit clause per fixed 0/1, a positive clause per e group, a
        negative clause per n group, and both for an m group; clauses are
        emitted in order of first position.
        """
        clauses: list[Clause] = []
        seen: set[tuple[str, int]] = set()
        for i, (s, g) in enumerate(zip(self.sym, self.gid)):
            v = i + 1
            if s == "0":
                clauses.append(Clause((), (v,)))
            elif s == "1":
                clauses.append(Clause((v,), ()))
            elif g and (s, g) not in seen:
                seen.add((s, g))
                positions = self.groups()[(s, g)]
                if s in ("e", "m"):
                    clauses.append(Clause(positions, ()))
                if s in ("n", "m"):
                    clauses.append(Clause((), positions))
        return Cnf(num_vars=self.t, clauses=tuple(clauses))

    def members(self) -> Iterator[tuple[int, ...]]:
        """Yield every member exactly once, in lexicographic order."""
        group_of: dict[int, tuple[str, int]] = {}
        remaining: dict[tuple[str, int], int] = {}
        for key, positions in self.groups().items():
            remaining[key] = len(positions)
            for p in positions:
                group_of[p] = key
        seen1 = {key: False for key in remaining}
        seen0 = {key: False for key in remaining}
        bits = [0] * self.t

        def emit(i: int) -> Iterator[tuple[int, ...]]:
            if i == self.t:
                yield tuple(bits)
                return
            s = self.sym[i]
            if s in ("0", "1"):
                bits[i] = int(s)
                yield from emit(i + 1)
                return
            if s == "2":
                for v in (0, 1):
                    bits[i] = v
                    yield from emit(i + 1)
                return
            key = group_of[i + 1]
            need1 = s in ("e", "m")
            need0 = s in ("n", "m")
            last = remaining[key] == 1
            remaining[key] -= 1
            for v in (0, 1):
                if v == 0 and need1 and not seen1[key] and last:
                    continue
                if v == 1 and need0 and not seen0[key] and last:
                    continue
                bits[i] = v
                old1, old0 = seen1[key], seen0[key]
                if v == 1:
                    seen1[key] = True
                else:
                    seen0[key] = True
                yield from emit(i + 1)
                seen1[key], seen0[key] = old1, old0
            remaining[key] += 1

        yield from emit(0)

    def expand_012(self) -> list["Row"]:
        """Decompose into pairwise disjoint plain 0/1/2 rows.

        Groups are rewritten left to right by first position. An e group over
        p1<..<pk yields k rows (zeros before a diagonal 1, then free suffix
        positions), an n group the complemented ladder, and an m group splits
        into p1=1 with an n constraint on the rest plus p1=0 with an e
        constraint on the rest, recursively.
        """
        out: list[Row] = []

        def step(cells: list) -> None:
            first: dict[tuple[str, Hashable], int] = {}
            positions: dict[tuple[str, Hashable], list[int]] = {}
            for i, cell in enumerate(cells):
                if isinstance(cell, tuple):
                    positions.setdefault(cell, []).append(i)
                    first.setdefault(cell, i)
            if not positions:
                out.append(Row.from_cells(cells))
                return
            key = min(first, key=first.get)
            kind = key[0]
            ps = positions[key]
            if kind in ("e", "n"):
                diag, off = ("1", "0") if kind == "e" else ("0", "1")
                for d in range(len(ps)):
                    nxt = list(cells)
                    for j, p in enumerate(ps):
                        nxt[p] = off if j < d else (diag if j == d else "2")
                    step(nxt)
            else:
                rest = ps[1:]
                for head, tail_kind in (("1", "n"), ("0", "e")):
                    nxt = list(cells)
                    nxt[ps[0]] = head
                    if len(rest) == 1:
                        nxt[rest[0]] = "0" if tail_kind == "n" else "1"
                    else:
                        for p in rest:
                            nxt[p] = (tail_kind, ("sub", key, head))
                    step(nxt)

        step(self.cells())
        return out

    def cells(self) -> list:
        """Per-position cells in the form accepted by from_cells."""
        return [
            s if g == 0 else (s, g) for s, g in zip(self.sym, self.gid)
        ]

    def complement(self) -> "Row":
        """Bitwise complement of the member set: swaps 0/1 and e/n; m stays."""
        swap = {"0": "1", "1": "0", "2": "2", "e": "n", "n": "e", "m": "m"}
        return Row(tuple(swap[s] for s in self.sym), self.gid)

    def text(self) -> str:
        """Canonical text form: space-separated tokens like ``2 m1 e1 1 n2``."""
        return " ".join(
            s if g == 0 else f"{s}{g}" for s, g in zip(self.sym, self.gid)
        )

    def to_json_dict(self) -> dict:
        return {
            "symbols": [s if g == 0 else f"{s}{g}" for s, g in zip(self.sym, self.gid)],
            "count": str(self.cardinality()),
        }

    def __str__(self) -> str:
        return self.text()


def full_row(t: int) -> Row:
    """The row covering all of {0,1}^t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return Row(("2",) * t, (0,) * t)


def parse_row(text: str) -> Row:
    """Parse the canonical text form back into a Row."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty row text")
    cells: list = []
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise ValueError(f"bad row token {tok!r}")
        if tok in ("0", "1", "2"):
            cells.append(tok)
        else:
            cells.append((tok[0], int(tok[1:])))
    return Row.from_cells(cells)
