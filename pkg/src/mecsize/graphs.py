"""Undirected graphs on labels 0..p-1 with bitmask adjacency.

Each vertex stores its neighborhood as one Python int used as a bitset, so
subgraph and neighborhood operations (which dominate the counting recursions)
are single mask operations regardless of p.
"""

from __future__ import annotations

from dataclasses import dataclass

NULL = "null"
TREE = "tree"
TREE_PLUS = "tree-plus"
ISOLATED_EDGES = "isolated-edges"
GENERAL = "general"


class InvalidGraphError(ValueError):
    """Raised when a graph violates a structural precondition."""


def iter_bits(mask):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class UndirectedGraph:
    """Immutable simple undirected graph.

    Vertices are exactly 0..p-1; isolated vertices are permitted. Edges are
    unordered distinct pairs. Equality and hashing are label-sensitive.
    """

    __slots__ = ("p", "adj")

    def __init__(self, p, edges=()):
        if p < 0:
            raise InvalidGraphError("vertex count must be nonnegative")
        adj = [0] * p
        for edge in edges:
            u, v = edge
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise InvalidGraphError(f"edge {u}-{v} out of range for p={p}")
            if adj[u] >> v & 1:
                raise InvalidGraphError(f"duplicate edge {u}-{v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.p = p
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj):
        g = cls.__new__(cls)
        g.p = len(adj)
        g.adj = tuple(adj)
        return g

    @property
    def edges(self):
        """Sorted list of (u, v) pairs with u < v."""
        out = []
        for u in range(self.p):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v):
        return list(iter_bits(self.adj[v]))

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.p == other.p
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.p, self.adj))

    def __repr__(self):
        return f"UndirectedGraph({self.p}, {self.edges})"


@dataclass(frozen=True)
class CoreDecomposition:
    """A graph split into its dominating vertices and the compacted rest."""

    core: UndirectedGraph
    dominating_count: int
    dominating_vertices: tuple


@dataclass(frozen=True)
class CoreValidationReport:
    """Pass/fail results of the four core-graph checks."""

    is_chordal: bool
    no_dominating_vertex: bool
    complement_connected: bool
    complement_edges_linked: bool

    @property
    def is_core_graph(self):
        return self.is_chordal and self.no_dominating_vertex

    @property
    def all_pass(self):
        return (
            self.is_chordal
            and self.no_dominating_vertex
            and self.complement_connected
            and self.complement_edges_linked
        )


def is_chordal(g):
    """Test chordality via maximum-cardinality search.

    MCS visits vertices by descending count of already-visited neighbors
    (smallest label breaks ties). The reverse visit order is a perfect
    elimination ordering iff the graph is chordal, which holds iff every
    vertex's already-visited neighbors form a clique.
    """
    p = g.p
    if p == 0:
        return True
    weight = [0] * p
    visited = 0
    for _ in range(p):
        best = -1
        best_w = -1
        for v in range(p):
            if not (visited >> v & 1) and weight[v] > best_w:
                best, best_w = v, weight[v]
        earlier = g.adj[best] & visited
        for u in iter_bits(earlier):
            # earlier neighbors must be mutually adjacent
            if earlier & ~g.adj[u] & ~(1 << u):
                return False
        visited |= 1 << best
        for u in iter_bits(g.adj[best] & ~visited):
            weight[u] += 1
    return True


def connected_components(g):
    """Partition vertices into maximal connected sets.

    Each set is sorted; the list is sorted by minimum element.
    """
    seen = 0
    out = []
    for v in range(g.p):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= g.adj[u]
            frontier = grow & ~comp
            comp |= grow
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g):
    return len(connected_components(g)) <= 1


def dominating_vertices(g):
    """Vertices adjacent to all others (degree p-1); sorted list."""
    full = (1 << g.p) - 1
    return [v for v in range(g.p) if g.adj[v] == full ^ (1 << v)]


def core_decomposition(g):
    """Strip the dominating set in one pass and compact the rest.

    Removing a dominating vertex cannot make another vertex dominating, so
    a single pass reaches the fixpoint.
    """
    dom = dominating_vertices(g)
    keep = [v for v in range(g.p) if v not in dom]
    core, _ = induced_subgraph(g, keep)
    return CoreDecomposition(core, len(dom), tuple(dom))


def complement(g):
    full = (1 << g.p) - 1
    adj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.p)]
    return UndirectedGraph.from_adjacency(adj)


def induced_subgraph(g, s):
    """Induced subgraph on s, compactly relabeled in sorted order of s.

    Returns (subgraph, labels) where labels[i] is the original label of the
    new vertex i.
    """
    labels = sorted(set(s))
    if labels and not (0 <= labels[0] and labels[-1] < g.p):
        raise InvalidGraphError(f"vertex set {s} out of range for p={g.p}")
    index = {old: new for new, old in enumerate(labels)}
    adj = [0] * len(labels)
    for new, old in enumerate(labels):
        for w in iter_bits(g.adj[old]):
            if w in index:
                adj[new] |= 1 << index[w]
    return UndirectedGraph.from_adjacency(adj), tuple(labels)


def add_dominating_vertices(g, k):
    """Extend g with k new vertices adjacent to everything (old and new)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = g.p + k
    full = (1 << p) - 1
    adj = [g.adj[v] | (((1 << k) - 1) << g.p) for v in range(g.p)]
    adj += [full ^ (1 << v) for v in range(g.p, p)]
    return UndirectedGraph.from_adjacency(adj)


def classify(g):
    """Dispatch class of a chordal graph; first matching rule wins.

    null: p=0. tree: connected with n=p-1. tree-plus: connected with n=p
    (chordality forces the unique cycle to be a triangle). isolated-edges:
    perfect matching, every degree exactly 1. Anything else is general.
    """
    p = g.p
    if p == 0:
        return NULL
    n = g.edge_count
    connected = is_connected(g)
    if connected and n == p - 1:
        return TREE
    if connected and n == p:
        return TREE_PLUS
    if p % 2 == 0 and all(g.degree(v) == 1 for v in range(p)):
        return ISOLATED_EDGES
    return GENERAL


def validate_core_graph(g):
    """Run the four core-graph checks and report each.

    (a) chordal; (b) no dominating vertex; (c) complement connected;
    (d) every pair of complement edges shares a vertex or is joined by a
    complement edge. (a) and (b) together define a core graph; (c) and (d)
    then hold for it.
    """
    chordal = is_chordal(g)
    no_dom = not dominating_vertices(g)
    comp = complement(g)
    connected = is_connected(comp)
    linked = True
    cedges = comp.edges
    for i, (a, b) in enumerate(cedges):
        reach = comp.adj[a] | comp.adj[b] | (1 << a) | (1 << b)
        for c, d in cedges[i + 1 :]:
            if not (reach >> c & 1) and not (reach >> d & 1):
                linked = False
                break
        if not linked:
            break
    return CoreValidationReport(chordal, no_dom, connected, linked)


def canonical_key(g):
    """Deterministic labeled encoding of (p, sorted edges); memoization key."""
    return b"%d:%s" % (g.p, ";".join(f"{u},{v}" for u, v in g.edges).encode())
