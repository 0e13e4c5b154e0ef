"""Clause imposition: restriction, chunking, staircase sons, forced ones."""
from __future__ import annotations

import random

import pytest

from wildsat import Clause, force_ones, full_row, impose_clause, impose_negative, impose_positive, parse_row
from wildsat.impose import FREE, Chunk, chunks, restrict

from helpers import random_clause, random_row


def test_restrict():
    # fixed 1s at negative positions just shrink the relevant set
    r = parse_row("2 2 1 1 " + " ".join(["2"] * 10))
    c = Clause((), (3, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14))
    assert restrict(r, c) == ((), (6, 7, 8, 9, 10, 11, 12, 13, 14))

    assert restrict(full_row(3), Clause((1, 2), ())) == ((1, 2), ())
    # a 0 under a positive literal removes it; nothing left -> row melts
    assert restrict(parse_row("0 2"), Clause((1,), ())) == ((), ())
    # fulfilled rows restrict to None
    assert restrict(parse_row("1 2"), Clause((1,), ())) is None
    assert restrict(parse_row("e1 e1"), Clause((1, 2), ())) is None


def test_chunks():
    r1 = parse_row("e1 e1 e1 e1 e2 e2 e2 e2")
    assert chunks(r1, (3, 4, 5, 6)) == [
        Chunk("e", (3, 4), (1, 2)),
        Chunk("e", (5, 6), (7, 8)),
    ]
    assert chunks(full_row(5), (1, 2, 3, 4, 5)) == [
        Chunk(FREE, (1, 2, 3, 4, 5), ())
    ]
    r7 = parse_row("0 1 1 1 1 2 2 n1 n1 n1")
    assert chunks(r7, (6, 7, 8, 9)) == [
        Chunk(FREE, (6, 7), ()),
        Chunk("n", (8, 9), (10,)),
    ]
    with pytest.raises(ValueError):
        chunks(parse_row("1 2"), (1, 2))  # fixed symbol inside the set


def test_chunks_order_smaller_trace_first():
    r = parse_row("e1 e1 e1 n1 n1")
    got = chunks(r, (3, 4, 5))
    assert [c.trace for c in got] == [(3,), (4, 5)]


def test_impose_positive_single_free_chunk():
    sons = impose_positive(full_row(5), (1, 2, 3, 4, 5))
    assert [s.text() for s in sons] == ["e1 e1 e1 e1 e1"]
    sons = impose_positive(full_row(3), (2,))
    assert [s.text() for s in sons] == ["2 1 2"]


def test_impose_positive_two_e_chunks():
    r1 = parse_row("e1 e1 e1 e1 e2 e2 e2 e2")
    sons = impose_positive(r1, (3, 4, 5, 6))
    assert [s.text() for s in sons] == [
        "2 2 e1 e1 e2 e2 e2 e2",
        "e1 e1 0 0 e2 e2 2 2",
    ]
    assert [s.cardinality() for s in sons] == [180, 36]
    # 225 members of r1, 9 of which have no 1 among positions 3..6
    assert sum(s.cardinality() for s in sons) == 225 - 9


def test_impose_positive_singleton_traces():
    r1 = parse_row("e1 e1 e1 e1 e2 e2 e2 e2")
    sons = impose_positive(r1, (4, 5))
    assert [s.text() for s in sons] == [
        "2 2 2 1 e1 e1 e1 e1",
        "e1 e1 e1 0 1 2 2 2",
    ]


def test_impose_negative_n_and_e_chunks():
    r = parse_row("n1 n1 n1 n1 e1 e1 e1 e1")
    sons = impose_negative(r, (3, 4, 5, 6))
    assert [s.text() for s in sons] == [
        "2 2 n1 n1 e1 e1 e1 e1",
        "n1 n1 1 1 m1 m1 2 2",
        "n1 n1 1 1 0 0 e1 e1",
    ]


def test_impose_negative_two_n_chunks():
    r = parse_row("n1 n1 n1 n1 n2 n2 n2 n2")
    sons = impose_negative(r, (3, 4, 5, 6))
    assert [s.text() for s in sons] == [
        "2 2 n1 n1 n2 n2 n2 n2",
        "n1 n1 1 1 n2 n2 2 2",
    ]


def test_impose_negative_whole_e_group_gives_m():
    sons = impose_negative(parse_row("e1 e1 e1 e1 e1"), (1, 2, 3, 4, 5))
    assert [s.text() for s in sons] == ["m1 m1 m1 m1 m1"]


def test_force_ones():
    r = parse_row("n1 n1 n1 e1 e1 e1 e1 n2 n2 n2")
    forced = force_ones(r, (2, 3, 4, 5))
    assert forced is not None
    assert forced.text() == "0 1 1 1 1 2 2 n1 n1 n1"

    assert force_ones(parse_row("0 2"), (1,)) is None
    assert force_ones(parse_row("m1 m1 2"), (1, 2)) is None
    assert force_ones(parse_row("n1 n1 2"), (1, 2)) is None
    # e group: forced part 1s, rest freed
    forced = force_ones(parse_row("e1 e1 e1"), (2,))
    assert forced is not None and forced.text() == "2 1 2"
    # n group shrinking to one position leaves a forced 0
    forced = force_ones(parse_row("n1 n1 1"), (1,))
    assert forced is not None and forced.text() == "1 0 1"


def test_force_ones_matches_brute_force():
    rng = random.Random(99)
    for _ in range(300):
        t = rng.randint(1, 8)
        r = random_row(rng, t)
        f = tuple(sorted(rng.sample(range(1, t + 1), rng.randint(1, t))))
        forced = force_ones(r, f)
        want = {bits for bits in r.members() if all(bits[p - 1] == 1 for p in f)}
        if forced is None:
            assert not want
        else:
            assert set(forced.members()) == want


def test_impose_clause_mixed_six_sons():
    r = parse_row("n1 n1 n1 e1 e1 e1 e1 n2 n2 n2")
    c = Clause((6, 7, 8, 9), (2, 3, 4, 5))
    sons = impose_clause(r, c)
    assert [s.text() for s in sons] == [
        "2 n1 n1 e1 e1 e1 e1 n2 n2 n2",
        "0 1 1 m1 m1 2 2 n1 n1 n1",
        "0 1 1 0 0 e1 e1 n1 n1 n1",
        "0 1 1 1 1 e1 e1 n1 n1 n1",
        "0 1 1 1 1 0 0 m1 m1 2",
        "0 1 1 1 1 0 0 1 1 0",
    ]
    assert len(sons) <= len(c)
    # sons partition the satisfying members of r
    want = {bits for bits in r.members() if c.satisfied_by(bits)}
    got: set[tuple[int, ...]] = set()
    for son in sons:
        for bits in son.members():
            assert bits not in got
            got.add(bits)
    assert got == want


def test_impose_clause_edge_cases():
    # purely positive clause on the free row: one son, one group
    sons = impose_clause(full_row(4), Clause((1, 2, 3), ()))
    assert [s.text() for s in sons] == ["e1 e1 e1 2"]
    # no position left on either side: the row melts away
    assert impose_clause(parse_row("0 2"), Clause((1,), ())) == []
    assert impose_clause(parse_row("0 1 2"), Clause((1,), (2,))) == []
    # imposing on a fulfilled row is a caller bug
    with pytest.raises(ValueError, match="fulfills"):
        impose_clause(parse_row("1 2"), Clause((1,), ()))


def test_impose_preconditions():
    with pytest.raises(ValueError):
        impose_positive(parse_row("e1 e1"), (1, 2))  # group inside the set
    with pytest.raises(ValueError):
        impose_negative(parse_row("n1 n1 2"), (1, 2))
    with pytest.raises(ValueError):
        impose_positive(full_row(3), ())
    with pytest.raises(ValueError):
        impose_negative(full_row(3), ())


def test_impose_random_partitions():
    rng = random.Random(4242)
    checked = 0
    while checked < 250:
        t = rng.randint(2, 8)
        r = random_row(rng, t)
        c = random_clause(rng, t)
        if r.fulfills(c):
            continue
        checked += 1
        sons = impose_clause(r, c)
        assert len(sons) <= len(c)
        want = {bits for bits in r.members() if c.satisfied_by(bits)}
        got: set[tuple[int, ...]] = set()
        for son in sons:
            assert son.fulfills(c)
            for bits in son.members():
                assert bits not in got
                got.add(bits)
        assert got == want


def test_positive_negative_duality():
    rng = random.Random(11)
    checked = 0
    while checked < 200:
        t = rng.randint(2, 7)
        r = random_row(rng, t)
        s = tuple(sorted(rng.sample(range(1, t + 1), rng.randint(1, t))))
        if any(r.sym[p - 1] in ("0", "1") for p in s):
            continue
        pos_clause = Clause(s, ())
        if r.fulfills(pos_clause) or r.complement().fulfills(Clause((), s)):
            continue
        checked += 1
        direct = [son.complement() for son in impose_positive(r, s)]
        dual = impose_negative(r.complement(), s)
        assert direct == dual
