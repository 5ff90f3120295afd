"""Edge-addition mode: tail-slot placement, stale-slot defense after
restore, randomized trials mixing deletions, additions, and undo."""

import random

import pytest

from hybridgraph.addition import AdditionGraph

from helpers import G8_AL, G8_DEG, G8_EDGES, G8_N, gnm
from mirrors import EdgeSetMirror


def check_against(g, mirror):
    assert set(g.active_vertices()) == mirror.active
    act = sorted(mirror.active)
    for i, u in enumerate(act):
        assert g.degree(u) == mirror.degree(u)
        assert set(g.neighbors(u)) == mirror.neighbors(u)
        for v in act[i + 1 :]:
            expected = mirror.is_adjacent(u, v)
            assert g.is_adjacent(u, v) == expected
            assert g.is_adjacent(v, u) == expected
    assert g.active_edge_count() == len(mirror.edges)


def test_rows_padded_and_base_tables_intact():
    g = AdditionGraph(G8_N, G8_EDGES)
    for v in range(8):
        assert len(g.al[v]) == 8
        assert g.al[v][: G8_DEG[v]] == G8_AL[v]
    assert g.frame.ndeg == [0] * 8


def test_added_edge_lands_in_tail_slots():
    g = AdditionGraph(G8_N, G8_EDGES)
    g.add_edge(2, 6)
    assert g.al[2][7] == 6 and g.al[6][7] == 2
    assert g.im[6][2] == 7 and g.im[2][6] == 7
    assert g.frame.ndeg[2] == 1 and g.frame.ndeg[6] == 1
    assert g.is_adjacent(2, 6) and g.is_adjacent(6, 2)
    assert g.degree(2) == 5
    assert set(g.neighbors(2)) == {0, 1, 3, 5, 6}
    g.add_edge(2, 4)
    assert g.al[2][6] == 4  # second addition, one slot inward
    assert g.degree(2) == 6


def test_add_requires_nonadjacent_pair():
    g = AdditionGraph(G8_N, G8_EDGES)
    with pytest.raises(AssertionError):
        g.add_edge(0, 1)
    g.add_edge(0, 7)
    with pytest.raises(AssertionError):
        g.add_edge(0, 7)


def test_stale_tail_slot_does_not_fake_adjacency():
    g = AdditionGraph(G8_N, G8_EDGES)
    snap = g.snapshot()
    g.add_edge(0, 7)
    g.restore(snap)
    assert not g.is_adjacent(0, 7)
    assert not g.is_adjacent(7, 0)
    # reuse the same tail slot for a different partner
    g.add_edge(0, 4)
    assert g.al[0][7] == 4
    assert g.is_adjacent(0, 4)
    # the stale index entry for 7 now points at a slot holding 4
    assert g.im[7][0] == 7
    assert not g.is_adjacent(7, 0)
    assert not g.is_adjacent(0, 7)


def test_restore_rolls_back_additions_and_deletions_together():
    g = AdditionGraph(G8_N, G8_EDGES)
    snap = g.snapshot()
    g.delete_edge(0, 1)
    g.add_edge(0, 7)
    g.add_edge(4, 2)
    g.delete_edge(4, 5)  # base edge removal after additions
    g.restore(snap)
    for v in range(8):
        assert set(g.neighbors(v)) == set(G8_AL[v])
        assert g.degree(v) == G8_DEG[v]
    assert g.active_edge_count() == len(G8_EDGES)


def test_tail_overflow_backstop_fires():
    # editing the same pair twice on one path eventually overruns the
    # padded area; the structural assert catches it
    g = AdditionGraph(3, [(0, 1), (0, 2)])
    g.delete_edge(0, 1)
    g.delete_edge(0, 2)
    g.add_edge(0, 1)  # one padded slot at vertex 0, now used up
    with pytest.raises(AssertionError):
        g.add_edge(0, 2)


def test_max_degree_counts_added_edges():
    g = AdditionGraph(5, [(0, 1), (2, 3)])
    assert g.max_degree_vertex() == 0
    g.add_edge(2, 4)
    assert g.max_degree_vertex() == 2


def test_randomized_against_mirror():
    # each unordered pair is edited at most once per path: `edited` is
    # path-local state saved and restored alongside the mirror
    rng = random.Random(31337)
    for trial in range(50):
        n = rng.randrange(2, 22)
        max_m = n * (n - 1) // 2
        m = rng.randrange(0, max_m + 1)
        _, edges = gnm(n, m, rng.randrange(1 << 30))
        g = AdditionGraph(n, edges)
        mirror = EdgeSetMirror(n, edges)
        edited = set()
        stack = []
        for _ in range(rng.randrange(10, 50)):
            ops = ["save"]
            if stack:
                ops.append("restore")
            live = [
                (u, v)
                for e in mirror.edges
                for (u, v) in [tuple(sorted(e))]
                if (u, v) not in edited
            ]
            if live:
                ops += ["del"] * 3
            non = [
                (u, v)
                for i, u in enumerate(sorted(mirror.active))
                for v in sorted(mirror.active)[i + 1 :]
                if frozenset((u, v)) not in mirror.edges
                if (u, v) not in edited
            ]
            if non:
                ops += ["add"] * 2
            op = rng.choice(ops)
            if op == "save":
                stack.append((g.snapshot(), mirror.copy(), set(edited)))
            elif op == "restore":
                snap, saved, edited = stack.pop()
                g.restore(snap)
                mirror = saved
                check_against(g, mirror)
            elif op == "del":
                u, v = rng.choice(sorted(live))
                g.delete_edge(u, v)
                mirror.delete_edge(u, v)
                edited.add((u, v))
            else:
                u, v = rng.choice(non)
                g.add_edge(u, v)
                mirror.add_edge(u, v)
                edited.add((u, v))
        check_against(g, mirror)
        while stack:
            snap, saved, edited = stack.pop()
            g.restore(snap)
            mirror = saved
        check_against(g, mirror)
