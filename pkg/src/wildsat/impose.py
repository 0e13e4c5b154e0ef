"""Imposing a clause on a row: replace it by disjoint sons.

The sons of a row r under clause c are pairwise disjoint rows whose union is
exactly the members of r that satisfy c. A purely positive (or negative)
clause is imposed through a staircase of blocks, one block per chunk of the
clause's surviving positions: son i forces chunks before i into their "all
failed" state, puts chunk i into its "hit here" state and leaves later chunks
untouched, so the sons are disjoint by the position of the first hit. Mixed
clauses are split on their negative part first and the two branches glued
back to back.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable

from .formula import Clause
from .rows import Row

FREE = "free"


@dataclass(frozen=True)
class Chunk:
    """The trace of a clause's position set on one source of a row.

    ``kind`` is 'free' for the merged don't-care positions or the wildcard
    letter of the intersected group; ``remainder`` holds the group positions
    outside the trace (always empty for the free chunk).
    """

    kind: str
    trace: tuple[int, ...]
    remainder: tuple[int, ...]


def restrict(row: Row, clause: Clause):
    """Drop clause positions the row already decides.

    Returns None when the row fulfills the clause outright; otherwise the
    pair (pos', neg') of surviving positive and negative positions. Fixed 0s
    cannot help a positive literal and fixed 1s cannot help a negative one,
    so they are removed; the opposite fixations would have meant fulfillment.
    """
    if row.fulfills(clause):
        return None
    pos = tuple(v for v in clause.pos if row.sym[v - 1] != "0")
    neg = tuple(v for v in clause.neg if row.sym[v - 1] != "1")
    return pos, neg


def chunks(row: Row, positions: Iterable[int]) -> list[Chunk]:
    """Split a position set into its free chunk and per-group chunks.

    Precondition: every position holds '2' or a wildcard. All don't-care
    positions merge into a single free chunk; each group intersecting the set
    contributes one chunk with the group's leftover positions as remainder.
    Chunks are ordered by ascending trace size, ties by smallest trace
    position; small chunks first keeps the surviving big chunks intact
    longest, which in practice yields noticeably fewer rows downstream.
    """
    wanted = set(positions)
    free: list[int] = []
    traced: dict[tuple[str, int], list[int]] = {}
    for v in sorted(wanted):
        s = row.sym[v - 1]
        if s == "2":
            free.append(v)
        elif s in ("e", "n", "m"):
            traced.setdefault((s, row.gid[v - 1]), []).append(v)
        else:
            raise ValueError(f"position {v} holds fixed symbol {s!r}")
    out: list[Chunk] = []
    if free:
        out.append(Chunk(FREE, tuple(free), ()))
    for (kind, gid), trace in traced.items():
        rest = tuple(p for p in row.groups()[(kind, gid)] if p not in wanted)
        out.append(Chunk(kind, tuple(trace), rest))
    out.sort(key=lambda ch: (len(ch.trace), ch.trace[0]))
    return out


def _write(cells: list, positions: Iterable[int], symbol: str) -> None:
    for v in positions:
        cells[v - 1] = symbol


def _write_group(cells: list, kind: str, positions: tuple[int, ...], fresh) -> None:
    # a single-position e/n group degenerates to its forced literal
    if len(positions) == 1:
        assert kind != "m"
        cells[positions[0] - 1] = "1" if kind == "e" else "0"
        return
    tag = ("+", next(fresh))  # keep clear of the untouched groups' integer tags
    for v in positions:
        cells[v - 1] = (kind, tag)


def _staircase(row: Row, chs: list[Chunk], value: int, fresh) -> list[Row]:
    """Sons of a one-sided imposition: require some position to take value.

    For each chunk, in order, emit its hit states with all earlier chunks in
    their failed state; later chunks keep the row's original cells. The hit
    and failed states per chunk kind are chosen so that, combined with the
    chunk's original group constraint, each son is again a plain row.
    """
    base = row.cells()
    sons: list[Row] = []
    failed: list[tuple[tuple[int, ...], ...]] = []  # writer args per passed chunk

    hit_sym = "1" if value == 1 else "0"
    miss_sym = "0" if value == 1 else "1"
    # group letter that demands the wanted value / the opposite value
    want_kind = "e" if value == 1 else "n"
    avoid_kind = "n" if value == 1 else "e"

    def new_son() -> list:
        cells = list(base)
        for writer in failed:
            writer(cells)
        return cells

    for ch in chs:
        T, R = ch.trace, ch.remainder
        if ch.kind == FREE:
            cells = new_son()
            _write_group(cells, want_kind, T, fresh)
            sons.append(Row.from_cells(cells))
            failed.append(lambda cells, T=T: _write(cells, T, miss_sym))
        elif ch.kind == want_kind:
            if not ch.remainder:
                raise ValueError("row fulfills already: group inside imposed set")
            # the group's own demand is implied by a hit on the trace
            cells = new_son()
            _write_group(cells, want_kind, T, fresh)
            _write(cells, R, "2")
            sons.append(Row.from_cells(cells))

            def fail(cells, T=T, R=R):
                _write(cells, T, miss_sym)
                _write_group(cells, want_kind, R, fresh)

            failed.append(fail)
        elif ch.kind == avoid_kind:
            # hit plus the group's opposite demand: mixed inside the trace,
            # or trace saturated with the wanted value and the opposite
            # value pushed into the remainder
            if len(T) >= 2:
                cells = new_son()
                _write_group(cells, "m", T, fresh)
                _write(cells, R, "2")
                sons.append(Row.from_cells(cells))
            if R:
                cells = new_son()
                _write(cells, T, hit_sym)
                _write_group(cells, avoid_kind, R, fresh)
                sons.append(Row.from_cells(cells))

            def fail(cells, T=T, R=R):
                _write(cells, T, miss_sym)
                _write(cells, R, "2")

            failed.append(fail)
        else:  # m chunk
            if not R:
                raise ValueError("row fulfills already: group inside imposed set")
            if len(T) >= 2:
                cells = new_son()
                _write_group(cells, "m", T, fresh)
                _write(cells, R, "2")
                sons.append(Row.from_cells(cells))
            # remainder nonempty, else the clause was fulfilled via this group
            cells = new_son()
            _write(cells, T, hit_sym)
            _write_group(cells, avoid_kind, R, fresh)
            sons.append(Row.from_cells(cells))

            def fail(cells, T=T, R=R):
                _write(cells, T, miss_sym)
                _write_group(cells, want_kind, R, fresh)

            failed.append(fail)
    return sons


def impose_positive(row: Row, pos: Iterable[int]) -> list[Row]:
    """Sons covering exactly the members with a 1 somewhere in ``pos``."""
    pos = tuple(pos)
    if not pos:
        raise ValueError("empty position set")
    return _staircase(row, chunks(row, pos), 1, count())


def impose_negative(row: Row, neg: Iterable[int]) -> list[Row]:
    """Sons covering exactly the members with a 0 somewhere in ``neg``."""
    neg = tuple(neg)
    if not neg:
        raise ValueError("empty position set")
    return _staircase(row, chunks(row, neg), 0, count())


def force_ones(row: Row, positions: Iterable[int]) -> Row | None:
    """Restrict to members that are 1 at every given position.

    Returns None when no member qualifies. Forced group positions are set to
    1 and the group constraint is re-expressed on the leftover positions: an
    e demand is already met, an n or m demand moves onto the remainder (and
    kills the row if nothing remains).
    """
    wanted = set(positions)
    cells = row.cells()
    fresh = count()
    for v in wanted:
        s = row.sym[v - 1]
        if s == "0":
            return None
        if s == "2":
            cells[v - 1] = "1"
    for (kind, gid), group in row.groups().items():
        forced = tuple(p for p in group if p in wanted)
        if not forced:
            continue
        rest = tuple(p for p in group if p not in wanted)
        _write(cells, forced, "1")
        if kind == "e":
            _write(cells, rest, "2")
        else:  # n or m: a 0 must still appear, necessarily outside the forced part
            if not rest:
                return None
            _write_group(cells, "n", rest, fresh)
    return Row.from_cells(cells)


def impose_clause(row: Row, clause: Clause) -> list[Row]:
    """Disjoint sons covering exactly the members of ``row`` satisfying ``clause``.

    Precondition: the row does not fulfill the clause. One-sided clauses go
    straight to the staircase; a mixed clause first takes the branch with a 0
    among the surviving negative positions, then the branch with all of them
    forced to 1, which must earn a 1 among the surviving positive positions.
    The branches are disjoint by construction. Son count never exceeds the
    clause's literal count.
    """
    restricted = restrict(row, clause)
    if restricted is None:
        raise ValueError("row already fulfills the clause")
    pos, neg = restricted
    if not pos and not neg:
        sons: list[Row] = []
    elif not neg:
        sons = impose_positive(row, pos)
    elif not pos:
        sons = impose_negative(row, neg)
    else:
        sons = impose_negative(row, neg)
        forced = force_ones(row, neg)
        if forced is not None:
            pos2 = tuple(v for v in pos if forced.sym[v - 1] != "0")
            if any(forced.sym[v - 1] == "1" for v in pos2):
                sons.append(forced)
            elif pos2:
                sons.extend(impose_positive(forced, pos2))
    assert len(sons) <= len(clause)
    return sons
