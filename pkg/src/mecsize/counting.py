"""Benchmark equivalence-class counter via recursive rooted partition.

The size of the class represented by a chain graph is the product of the
sizes of its chain components. Each component's size is the sum over roots v
of the size of the v-rooted sub-class, which factors over the chain
components of the rooted essential graph. Five closed forms truncate the
recursion: trees, trees plus one edge, graphs missing at most two edges, and
complete graphs. This engine is the comparison baseline for the polynomial
engine, and is its independent cross-check.
"""

from __future__ import annotations

from math import factorial

from .essential import ChainGraph, chain_com, chain_components
from .graphs import (
    InvalidGraphError,
    UndirectedGraph,
    canonical_key,
    is_chordal,
    is_connected,
)


def size_benchmark(cg):
    """Class size for a chain graph: product over chain components.

    Accepts an UndirectedGraph as the all-undirected chain graph. The
    directed part only separates components; an empty product is 1.
    """
    if isinstance(cg, UndirectedGraph):
        cg = ChainGraph.from_undirected(cg)
    total = 1
    for comp in chain_components(cg):
        total *= size_uccg_benchmark(comp)
    return total


def size_uccg_benchmark(u, use_closed_forms=True):
    """Class size of a connected chordal graph by rooted-partition recursion.

    use_closed_forms=False forces the bare recursion everywhere; results are
    identical, only slower (the flag exists so tests can confirm that).
    """
    if not is_connected(u):
        raise InvalidGraphError("benchmark counter requires a connected graph")
    if not is_chordal(u):
        raise InvalidGraphError("benchmark counter requires a chordal graph")
    return _size_uccg(u, {}, use_closed_forms)


def _closed_form(p, n):
    if n == p - 1:
        return p
    if n == p:
        return 2 * p
    pairs = p * (p - 1) // 2
    if n == pairs:
        return factorial(p)
    if n == pairs - 1:
        return 2 * factorial(p - 1) - factorial(p - 2)
    if n == pairs - 2:
        return (p * p - p - 4) * factorial(p - 3)
    return None


def _size_uccg(u, memo, use_closed_forms):
    key = canonical_key(u)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if u.p == 1:
        return 1
    total = _closed_form(u.p, u.edge_count) if use_closed_forms else None
    if total is None:
        total = 0
        for v in range(u.p):
            rooted = 1
            for comp in chain_com(u, v).components:
                rooted *= _size_uccg(comp, memo, use_closed_forms)
            total += rooted
    memo[key] = total
    return total
