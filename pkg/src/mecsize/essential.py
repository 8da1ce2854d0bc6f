"""Chain graphs, chain components, and rooted essential graphs.

A chain graph mixes undirected and directed edges without partially directed
cycles. Removing its directed edges leaves the chain components. chain_com
builds the rooted essential graph of a connected chordal undirected graph: the
layered orientation sweep that fixes every edge forced by choosing one vertex
as the unique source.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import (
    InvalidGraphError,
    UndirectedGraph,
    connected_components,
    induced_subgraph,
    is_chordal,
    is_connected,
    iter_bits,
)


class ChainGraph:
    """Immutable graph with disjoint undirected and directed edge sets."""

    __slots__ = ("p", "undirected", "directed")

    def __init__(self, p, undirected=(), directed=()):
        if p < 0:
            raise InvalidGraphError("vertex count must be nonnegative")
        und = set()
        for u, v in undirected:
            self._check_pair(u, v, p)
            und.add((min(u, v), max(u, v)))
        dir_ = set()
        pairs = set(und)
        for a, b in directed:
            self._check_pair(a, b, p)
            key = (min(a, b), max(a, b))
            if key in pairs:
                raise InvalidGraphError(f"duplicate pair {a},{b} across edge kinds")
            pairs.add(key)
            dir_.add((a, b))
        self.p = p
        self.undirected = frozenset(und)
        self.directed = frozenset(dir_)

    @staticmethod
    def _check_pair(u, v, p):
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}")
        if not (0 <= u < p and 0 <= v < p):
            raise InvalidGraphError(f"edge {u},{v} out of range for p={p}")

    @classmethod
    def from_undirected(cls, g):
        return cls(g.p, g.edges)

    def skeleton(self):
        """All edges as an UndirectedGraph, orientation forgotten."""
        pairs = [tuple(sorted(e)) for e in self.directed]
        return UndirectedGraph(self.p, sorted(self.undirected | set(pairs)))

    def __eq__(self, other):
        return (
            isinstance(other, ChainGraph)
            and self.p == other.p
            and self.undirected == other.undirected
            and self.directed == other.directed
        )

    def __hash__(self):
        return hash((self.p, self.undirected, self.directed))

    def __repr__(self):
        return (
            f"ChainGraph({self.p}, {sorted(self.undirected)}, "
            f"{sorted(self.directed)})"
        )


@dataclass(frozen=True)
class RootedDecomposition:
    """Rooted essential graph plus its chain components."""

    rooted_graph: ChainGraph
    components: tuple


def is_chain_graph(cg):
    """True iff cg has no partially directed cycle.

    Equivalent test: no directed edge joins two vertices of the same
    undirected component, and the directed edges between undirected
    components form an acyclic quotient.
    """
    und = UndirectedGraph(cg.p, cg.undirected)
    comp_of = {}
    for i, comp in enumerate(connected_components(und)):
        for v in comp:
            comp_of[v] = i
    quotient = set()
    for a, b in cg.directed:
        if comp_of[a] == comp_of[b]:
            return False
        quotient.add((comp_of[a], comp_of[b]))
    return is_acyclic(quotient)


def chain_components(cg):
    """Undirected-skeleton components holding at least one edge, compacted.

    Isolated vertices and vertices touched only by directed edges are
    omitted; each contributes a trivial factor to the class size.
    """
    und = UndirectedGraph(cg.p, cg.undirected)
    out = []
    for comp in connected_components(und):
        sub, _ = induced_subgraph(und, comp)
        if sub.edge_count > 0:
            out.append(sub)
    return out


def chain_com(u, v):
    """Rooted essential graph of a UCCG with source v, plus chain components.

    Layered sweep: A starts as {v}; each round takes T, the unprocessed
    vertices adjacent to A, orients every A-T edge away from A, then applies
    the rule "x -> y - z with x,z nonadjacent orients y -> z" inside T until
    a full pass changes nothing. Undirected remnants of each layer are
    collected as chain components.
    """
    p = u.p
    if not 0 <= v < p:
        raise InvalidGraphError(f"root {v} out of range for p={p}")
    if not is_connected(u):
        raise InvalidGraphError("rooted decomposition requires a connected graph")
    if not is_chordal(u):
        raise InvalidGraphError("rooted decomposition requires a chordal graph")

    skel = u.adj
    und = list(u.adj)
    parents = [0] * p
    directed = []
    components = []
    a_mask = 1 << v
    b_mask = ((1 << p) - 1) ^ a_mask

    while b_mask:
        t_mask = 0
        for w in iter_bits(b_mask):
            if skel[w] & a_mask:
                t_mask |= 1 << w
        for a in iter_bits(a_mask):
            for t in iter_bits(und[a] & t_mask):
                und[a] &= ~(1 << t)
                und[t] &= ~(1 << a)
                parents[t] |= 1 << a
                directed.append((a, t))
        changed = True
        while changed:
            changed = False
            for y in iter_bits(t_mask):
                for z in iter_bits(und[y] & t_mask):
                    # some parent of y nonadjacent to z forces y -> z
                    if parents[y] & ~skel[z] & ~(1 << z):
                        und[y] &= ~(1 << z)
                        und[z] &= ~(1 << y)
                        parents[z] |= 1 << y
                        directed.append((y, z))
                        changed = True
        seen = 0
        for w in iter_bits(t_mask):
            if seen >> w & 1 or not und[w] & t_mask:
                continue
            comp = 1 << w
            frontier = comp
            while frontier:
                grow = 0
                for x in iter_bits(frontier):
                    grow |= und[x] & t_mask
                frontier = grow & ~comp
                comp |= grow
            seen |= comp
            verts = list(iter_bits(comp))
            index = {old: new for new, old in enumerate(verts)}
            adj = [0] * len(verts)
            for new, old in enumerate(verts):
                for w2 in iter_bits(und[old] & comp):
                    adj[new] |= 1 << index[w2]
            components.append(UndirectedGraph.from_adjacency(adj))
        a_mask = t_mask
        b_mask &= ~t_mask

    undirected_pairs = []
    for a in range(p):
        for b in iter_bits(und[a] >> (a + 1)):
            undirected_pairs.append((a, a + 1 + b))
    rooted = ChainGraph(p, undirected_pairs, directed)
    return RootedDecomposition(rooted, tuple(components))


def count_v_structures(dag):
    """Number of triples a -> b <- c with a, c nonadjacent (a < c)."""
    if dag.undirected:
        raise InvalidGraphError("v-structure count requires a fully directed graph")
    if not is_acyclic(dag.directed):
        raise InvalidGraphError("directed edges contain a cycle")
    parents = [0] * dag.p
    skel = [0] * dag.p
    for a, b in dag.directed:
        parents[b] |= 1 << a
        skel[a] |= 1 << b
        skel[b] |= 1 << a
    count = 0
    for b in range(dag.p):
        group = list(iter_bits(parents[b]))
        for i, a in enumerate(group):
            for c in group[i + 1 :]:
                if not skel[a] >> c & 1:
                    count += 1
    return count


def is_acyclic(edges):
    """True iff the directed edge set has no cycle (Kahn peel)."""
    edges = list(edges)
    verts = {x for e in edges for x in e}
    indeg = {x: 0 for x in verts}
    outs = {x: [] for x in verts}
    for a, b in edges:
        outs[a].append(b)
        indeg[b] += 1
    queue = deque(x for x in verts if indeg[x] == 0)
    seen = 0
    while queue:
        x = queue.popleft()
        seen += 1
        for y in outs[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen == len(verts)
