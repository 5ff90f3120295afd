"""Shared fixtures for the test suite: small named graphs and a local
G(n,m) sampler that does not depend on the package's generators."""

import random
from itertools import combinations

# 8-vertex, 13-edge worked example used throughout the representation
# tests.  Edges are listed in sorted order; with append-in-input-order
# construction the expected neighbor tables below follow by hand.
G8_N = 8
G8_EDGES = [
    (0, 1), (0, 2), (0, 3),
    (1, 2), (1, 4),
    (2, 3), (2, 5),
    (3, 6),
    (4, 5), (4, 7),
    (5, 6), (5, 7),
    (6, 7),
]

G8_AL = [
    [1, 2, 3],
    [0, 2, 4],
    [0, 1, 3, 5],
    [0, 2, 6],
    [1, 5, 7],
    [2, 4, 6, 7],
    [3, 5, 7],
    [4, 5, 6],
]

G8_DEG = [3, 3, 4, 3, 3, 4, 3, 3]


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return 10, outer + spokes + inner


def cycle(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def path(n):
    return n, [(i, i + 1) for i in range(n - 1)]


def clique(n):
    return n, list(combinations(range(n), 2))


def star(leaves):
    return leaves + 1, [(0, i) for i in range(1, leaves + 1)]


def gnm(n, m, seed):
    """Seeded uniform G(n,m) for tests; independent of the package."""
    pairs = list(combinations(range(n), 2))
    rng = random.Random(seed)
    return n, rng.sample(pairs, m)
