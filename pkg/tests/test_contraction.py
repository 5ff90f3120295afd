"""Contraction mode: worked merge sequence, simple-quotient invariant,
randomized trials against an independent quotient-graph mirror."""

import random

import pytest

from hybridgraph.contraction import ContractionGraph

from helpers import G8_EDGES, G8_N, gnm
from mirrors import QuotientMirror


def check_quotient(g, mirror):
    assert set(g.active_colors()) == set(mirror.members)
    for c in mirror.members:
        assert set(g.color_members(c)) == mirror.members[c]
        assert g.color_size(c) == len(mirror.members[c])
        assert g.color_degree(c) == mirror.degree(c)
        assert set(g.color_neighbors(c)) == mirror.neighbor_colors(c)
        for x in mirror.members[c]:
            assert g.color_of(x) == c
    cols = sorted(mirror.members)
    for i, a in enumerate(cols):
        for b in cols[i + 1 :]:
            expected = mirror.adjacent(a, b)
            assert g.colors_adjacent(a, b) == expected
            assert g.colors_adjacent(b, a) == expected
    # live member edges: at most one between any two colors, none inside
    seen = set()
    for c in mirror.members:
        for x in g.color_members(c):
            for y in g.neighbors(x):
                cx, cy = g.color_of(x), g.color_of(y)
                assert cx != cy
                if x < y:
                    key = frozenset((cx, cy))
                    assert key not in seen
                    seen.add(key)
    assert seen == mirror.qedges
    assert g.active_edge_count() == len(mirror.qedges)


def test_initial_state_is_discrete_partition():
    g = ContractionGraph(G8_N, G8_EDGES)
    assert sorted(g.active_colors()) == list(range(8))
    for v in range(8):
        assert g.color_members(v) == [v]
        assert g.color_degree(v) == g.degree(v)
        assert g.color_of(v) == v


def test_worked_contraction_sequence():
    g = ContractionGraph(G8_N, G8_EDGES)
    deleted = g.contract(3, 6)
    assert deleted == 1  # just the connector, no common neighbors
    assert g.color_of(6) == 3
    assert g.color_size(3) == 2
    assert g.color_degree(3) == 4
    assert set(g.color_members(3)) == {3, 6}
    assert set(g.color_neighbors(3)) == {0, 2, 5, 7}

    deleted = g.contract(5, 7)
    assert deleted == 3  # connector + one duplicate per common color (4, 3)
    assert set(g.color_neighbors(3)) == {0, 2, 5}
    assert g.color_degree(3) == 3
    assert set(g.color_neighbors(5)) == {2, 3, 4}

    deleted = g.contract(2, 5)
    assert deleted == 2  # connector plus the duplicate toward color 3
    assert g.color_of(5) == 2 and g.color_of(7) == 2
    assert g.color_size(2) == 3
    assert set(g.color_neighbors(2)) == {0, 1, 3, 4}
    assert g.color_degree(2) == 4


def test_contract_requires_adjacent_distinct_colors():
    g = ContractionGraph(G8_N, G8_EDGES)
    with pytest.raises(AssertionError):
        g.contract(0, 7)
    g.contract(0, 1)
    with pytest.raises(AssertionError):
        g.contract(0, 1)


def test_delete_color_removes_all_member_edges():
    g = ContractionGraph(G8_N, G8_EDGES)
    g.contract(2, 5)
    before = g.active_edge_count()
    d = g.color_degree(2)
    g.delete_color(2)
    assert 2 not in g.active_colors()
    assert g.active_edge_count() == before - d
    for c in g.active_colors():
        assert 2 not in g.color_neighbors(c)


def test_two_vertex_collapse():
    g = ContractionGraph(2, [(0, 1)])
    assert g.contract(0, 1) == 1
    assert g.active_colors() == [0]
    assert g.color_degree(0) == 0
    assert g.active_edge_count() == 0


def test_snapshot_restores_colors_and_degrees():
    g = ContractionGraph(G8_N, G8_EDGES)
    g.contract(3, 6)
    snap = g.snapshot()
    g.contract(5, 7)
    g.delete_color(2)
    g.restore(snap)
    assert set(g.active_colors()) == {0, 1, 2, 3, 4, 5, 7}
    assert set(g.color_neighbors(3)) == {0, 2, 5, 7}
    assert g.color_degree(3) == 4
    assert g.color_of(7) == 7
    # member lists grow monotonically; stale tail entries are masked by cc
    assert g.csl[3][:2] == [3, 6]


def test_randomized_against_quotient_mirror():
    rng = random.Random(4096)
    for trial in range(40):
        n = rng.randrange(2, 20)
        max_m = n * (n - 1) // 2
        m = rng.randrange(min(1, max_m), max_m + 1)
        _, edges = gnm(n, m, rng.randrange(1 << 30))
        g = ContractionGraph(n, edges)
        mirror = QuotientMirror(n, edges)
        stack = []
        for _ in range(rng.randrange(8, 40)):
            ops = ["save"]
            if stack:
                ops.append("restore")
            if mirror.qedges:
                ops += ["contract"] * 3 + ["delete_color", "delete_edge"]
            elif len(mirror.members) > 0:
                ops += ["delete_color"]
            op = rng.choice(ops)
            if op == "save":
                stack.append((g.snapshot(), mirror.copy()))
            elif op == "restore":
                snap, saved = stack.pop()
                g.restore(snap)
                mirror = saved
                check_quotient(g, mirror)
            elif op == "contract":
                a, b = rng.choice(sorted(tuple(sorted(e)) for e in mirror.qedges))
                # pick live member endpoints of the connecting edge
                u = next(x for x in g.color_members(a)
                         if any(g.color_of(y) == b for y in g.neighbors(x)))
                v = next(y for y in g.neighbors(u) if g.color_of(y) == b)
                g.contract(u, v)
                mirror.contract(a, b)
            elif op == "delete_color":
                c = rng.choice(sorted(mirror.members))
                g.delete_color(c)
                mirror.delete_color(c)
            else:
                a, b = rng.choice(sorted(tuple(sorted(e)) for e in mirror.qedges))
                u = next(x for x in g.color_members(a)
                         if any(g.color_of(y) == b for y in g.neighbors(x)))
                v = next(y for y in g.neighbors(u) if g.color_of(y) == b)
                g.delete_edge(u, v)
                mirror.delete_edge(a, b)
        check_quotient(g, mirror)
        while stack:
            snap, saved = stack.pop()
            g.restore(snap)
            mirror = saved
        check_quotient(g, mirror)
