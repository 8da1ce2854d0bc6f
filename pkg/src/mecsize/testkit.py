"""Brute-force oracle, random chordal generator, and published fixtures.

The oracle never touches the counting engines: it enumerates every vertex
permutation, orients each edge from the earlier to the later vertex (every
acyclic orientation of any graph arises this way), deduplicates the resulting
bit-encoded orientations, and keeps those without v-structures. Two DAGs are
equivalent iff they share skeleton and v-structures, so for a connected
chordal graph the survivor count is the equivalence class size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .formula import SizePolynomial
from .graphs import (
    InvalidGraphError,
    UndirectedGraph,
    add_dominating_vertices,
    connected_components,
    induced_subgraph,
    is_chordal,
    is_connected,
)

ORACLE_MAX_VERTICES = 9


@dataclass(frozen=True)
class Fixture:
    """Named graph with a published expectation to test against."""

    name: str
    graph: UndirectedGraph
    expected_polynomial: SizePolynomial | None = None
    expected_size: int | None = None

    def __post_init__(self):
        if self.expected_polynomial is None and self.expected_size is None:
            raise ValueError(f"fixture {self.name} carries no expectation")


@lru_cache(maxsize=None)
def _positions(p):
    """positions[k][v] = position of vertex v in the k-th permutation of 0..p-1."""
    perms = np.array(list(permutations(range(p))), dtype=np.int8)
    if p == 0:
        perms = perms.reshape(1, 0)
    return np.argsort(perms, axis=1)


def acyclic_orientation_masks(u):
    """Distinct acyclic orientations of u as bitmasks over its sorted edges.

    Bit i is 1 iff edge (a, b) = edges[i] (a < b) is oriented a -> b.
    Returns (masks, edges).
    """
    if u.p > ORACLE_MAX_VERTICES:
        raise ValueError(f"orientation sweep refused for p={u.p} > {ORACLE_MAX_VERTICES}")
    edges = u.edges
    pos = _positions(u.p)
    masks = np.zeros(len(pos), dtype=np.int64)
    for i, (a, b) in enumerate(edges):
        masks |= (pos[:, a] < pos[:, b]).astype(np.int64) << i
    return np.unique(masks), edges


def _toward(edge_index, x, y):
    """(bit, value) such that bit of a mask equals value iff x -> y."""
    if x < y:
        return edge_index[(x, y)], 1
    return edge_index[(y, x)], 0


def oracle_count(u):
    """Size of the equivalence class of a UCCG by exhaustive enumeration."""
    if u.p > ORACLE_MAX_VERTICES:
        raise ValueError(f"oracle refused for p={u.p} > {ORACLE_MAX_VERTICES}")
    if not is_connected(u):
        raise InvalidGraphError("oracle requires a connected graph")
    if not is_chordal(u):
        raise InvalidGraphError("oracle requires a chordal graph")
    masks, edges = acyclic_orientation_masks(u)
    edge_index = {e: i for i, e in enumerate(edges)}
    ok = np.ones(masks.shape, dtype=bool)
    for b in range(u.p):
        for a, c in combinations(u.neighbors(b), 2):
            if u.has_edge(a, c):
                continue
            bit_a, val_a = _toward(edge_index, a, b)
            bit_c, val_c = _toward(edge_index, c, b)
            collider = ((masks >> bit_a & 1) == val_a) & ((masks >> bit_c & 1) == val_c)
            ok &= ~collider
    return int(ok.sum())


def oracle_extension_count(k, m):
    """Size of the class of k extended by m dominating vertices, by oracle.

    The extension is built explicitly; at m=0 a disconnected k is handled by
    multiplying per-component oracle counts.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k.p + m > ORACLE_MAX_VERTICES:
        raise ValueError(
            f"oracle refused for p+m={k.p + m} > {ORACLE_MAX_VERTICES}"
        )
    if not is_chordal(k):
        raise InvalidGraphError("oracle requires a chordal graph")
    ext = add_dominating_vertices(k, m)
    total = 1
    for comp in connected_components(ext):
        sub, _ = induced_subgraph(ext, comp)
        total *= oracle_count(sub)
    return total


def random_chordal(p, n, seed):
    """Random connected chordal graph with p vertices and n edges.

    Grows a random tree by joining a uniformly random already-connected
    vertex to a uniformly random isolated one, then repeatedly draws a
    uniformly random absent edge and keeps it iff the graph stays chordal.
    Deterministic for a given seed (Mersenne Twister); no uniformity over
    chordal graphs is claimed.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if not p - 1 <= n <= p * (p - 1) // 2:
        raise ValueError(f"no connected graph with p={p}, n={n}")
    rng = random.Random(seed)
    edges = set()
    connected = [0]
    isolated = list(range(1, p))
    while isolated:
        c = connected[rng.randrange(len(connected))]
        i = isolated.pop(rng.randrange(len(isolated)))
        edges.add((min(c, i), max(c, i)))
        connected.append(i)
    while len(edges) < n:
        a = rng.randrange(p)
        b = rng.randrange(p)
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        if e in edges:
            continue
        candidate = UndirectedGraph(p, [*edges, e])
        if is_chordal(candidate):
            edges.add(e)
    return UndirectedGraph(p, sorted(edges))


# The sixteen core graphs with at most five missing edges, with their
# published expanded polynomials P (f(K,m) = P(m) * m!), coefficients
# ascending. Factored originals are stored expanded.
_FORMULA_TABLE = (
    ("01-two-isolated-vertices", 2, (), (1, 2)),
    ("02-edge-plus-vertex", 3, ((0, 1),), (2, 5, 1)),
    ("03-three-isolated-vertices", 3, (), (1, 3)),
    ("04-path-on-four", 4, ((0, 1), (1, 2), (2, 3)), (4, 7, 3)),
    ("05-triangle-plus-vertex", 4, ((0, 1), (0, 2), (1, 2)), (6, 17, 6, 1)),
    ("06-two-disjoint-edges", 4, ((0, 1), (2, 3)), (4, 12, 4)),
    ("07-path-on-three-plus-vertex", 4, ((0, 1), (1, 2)), (3, 8, 2)),
    (
        "08-diamond-with-pendant",
        5,
        ((0, 3), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)),
        (12, 23, 13, 2),
    ),
    (
        "09-complete-four-plus-vertex",
        5,
        ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
        (24, 74, 35, 10, 1),
    ),
    ("10-edge-plus-two-vertices", 4, ((0, 1),), (2, 7, 1)),
    (
        "11-diamond-plus-vertex",
        5,
        ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4)),
        (10, 29, 11, 2),
    ),
    (
        "12-triangle-two-pendants",
        5,
        ((0, 1), (1, 2), (1, 4), (2, 4), (3, 4)),
        (10, 19, 10, 1),
    ),
    (
        "13-triangle-with-tail",
        5,
        ((0, 3), (1, 2), (1, 4), (2, 4), (3, 4)),
        (10, 19, 10, 1),
    ),
    (
        "14-complete-four-two-ears",
        6,
        (
            (0, 1), (0, 2), (1, 2), (1, 3), (1, 4),
            (2, 3), (2, 4), (3, 4), (3, 5), (4, 5),
        ),
        (40, 82, 55, 14, 1),
    ),
    (
        "15-two-complete-fours-pendant",
        6,
        (
            (0, 1), (1, 2), (1, 3), (1, 4), (2, 3),
            (2, 4), (2, 5), (3, 4), (3, 5), (4, 5),
        ),
        (48, 101, 70, 19, 2),
    ),
    (
        "16-complete-five-plus-vertex",
        6,
        (
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2),
            (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ),
        (120, 394, 225, 85, 15, 1),
    ),
)


def formula_fixtures():
    """All sixteen cores with at most five missing edges, with polynomials."""
    return [
        Fixture(name, UndirectedGraph(p, edges), SizePolynomial(coeffs))
        for name, p, edges, coeffs in _FORMULA_TABLE
    ]


def core_fixtures():
    """The six core graphs with at most three missing edges (null included)."""
    rows = (
        ("null", 0, (), (1,)),
        ("two-isolated-vertices", 2, (), (1, 2)),
        ("edge-plus-vertex", 3, ((0, 1),), (2, 5, 1)),
        ("three-isolated-vertices", 3, (), (1, 3)),
        ("path-on-four", 4, ((0, 1), (1, 2), (2, 3)), (4, 7, 3)),
        ("triangle-plus-vertex", 4, ((0, 1), (0, 2), (1, 2)), (6, 17, 6, 1)),
    )
    return [
        Fixture(name, UndirectedGraph(p, edges), SizePolynomial(coeffs))
        for name, p, edges, coeffs in rows
    ]
