"""Shared test fixtures and independent oracles.

The oracles deliberately avoid the library's own code paths: ranks use a
plain fraction Gaussian elimination, cliques come from brute-force subset
enumeration, and polynomial expectations are computed with raw divmod
arithmetic in the tests themselves.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from artinkernels import Character, SimplicialGraph


# -- the worked example graphs ---------------------------------------------


def make_tree():
    g = SimplicialGraph(["v0", "v1", "v2", "v3"], [("v0", "v1"), ("v0", "v2"), ("v2", "v3")])
    chi = Character({"v0": 18, "v1": 4, "v2": 12, "v3": 9})
    return g, chi


def make_tree_resonant():
    g = SimplicialGraph(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4")])
    chi = Character({"v1": 1, "v2": 0, "v3": 2, "v4": 2})
    return g, chi


def make_kite():
    g = SimplicialGraph(
        ["v0", "v1", "v2", "v3", "v4", "v5"],
        [("v0", "v1"), ("v0", "v2"), ("v1", "v2"), ("v0", "v3"), ("v1", "v4"), ("v2", "v5")],
    )
    chi = Character({"v0": 2, "v1": 2, "v2": 2, "v3": 1, "v4": 1, "v5": 1})
    return g, chi


def make_triforce():
    g = SimplicialGraph(
        ["v0", "v1", "v2", "v3", "v4", "v5"],
        [
            ("v0", "v4"), ("v4", "v1"), ("v1", "v3"), ("v3", "v2"), ("v2", "v5"),
            ("v5", "v0"), ("v4", "v3"), ("v3", "v5"), ("v5", "v4"),
        ],
    )
    chi = Character({"v0": 1, "v1": 1, "v2": 1, "v3": 2, "v4": 2, "v5": 2})
    return g, chi


def make_square_frame():
    g = SimplicialGraph(
        ["v0", "v1", "v2", "v3", "v4", "v5", "v6"],
        [
            ("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v0"),
            ("v4", "v5"), ("v5", "v6"), ("v6", "v4"),
            ("v0", "v4"), ("v4", "v1"), ("v1", "v6"), ("v6", "v2"),
            ("v2", "v5"), ("v5", "v3"), ("v3", "v4"),
        ],
    )
    chi = Character({"v0": 1, "v1": 1, "v2": 1, "v3": 1, "v4": 2, "v5": 2, "v6": 2})
    return g, chi


@pytest.fixture
def tree():
    return make_tree()


@pytest.fixture
def tree_resonant():
    return make_tree_resonant()


@pytest.fixture
def kite():
    return make_kite()


@pytest.fixture
def triforce():
    return make_triforce()


@pytest.fixture
def square_frame():
    return make_square_frame()


# -- independent oracles -----------------------------------------------------


def oracle_rank(rows):
    """Plain fraction Gaussian elimination, independent of the library."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def brute_force_cliques(g: SimplicialGraph):
    """Every clique of g by subset enumeration, grouped by size."""
    n = g.n_vertices
    by_size = {}
    for size in range(1, n + 1):
        found = []
        for combo in combinations(range(n), size):
            if all(g.adjacent(a, b) for a, b in combinations(combo, 2)):
                found.append(combo)
        if found:
            by_size[size] = found
    return by_size


def oracle_divisors(n: int):
    return [d for d in range(1, abs(n) + 1) if n % d == 0]
