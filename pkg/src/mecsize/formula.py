"""Size polynomials: f(K,m) = P(m) * m! for chordal graphs K.

Size(K^{m+}), the class size of K extended by m dominating vertices, is a
polynomial multiple of m!. The recurrence

    f(K,m) = m * f(K,m-1) + g(K,m) * m!

where g collects neighborhood subpolynomials weighted by rooted-class sizes,
pins P down: writing g(m) = sum_i gamma_i m^(i-1), the coefficients beta of P
solve an upper-triangular system with a_ij = (-1)^(j-i) * C(j, i-1) and
beta_0 = Size(K). The derivation dispatches through closed forms (null, tree,
tree plus an edge, isolated edges), strips dominating vertices (argument
shift), peels isolated vertices, and only then assembles g per component.

All coefficient arithmetic is exact rational; every polynomial leaving
size_f is asserted integral, so a wrong derivation fails loudly instead of
rounding quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .essential import ChainGraph, chain_com, chain_components
from .graphs import (
    GENERAL,
    ISOLATED_EDGES,
    NULL,
    TREE,
    TREE_PLUS,
    InvalidGraphError,
    UndirectedGraph,
    canonical_key,
    classify,
    connected_components,
    core_decomposition,
    dominating_vertices,
    induced_subgraph,
    is_chordal,
)


class InternalInvariantError(RuntimeError):
    """A value the theory guarantees failed to hold; the engine has a bug."""


class SizePolynomial:
    """Dense exact-rational polynomial P with semantics f(K,m) = P(m) * m!.

    coefficients[i] is the coefficient of m^i; trailing zeros are trimmed.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        self.coefficients = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, m):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * m + c
        return acc

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def __add__(self, other):
        if not isinstance(other, SizePolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return SizePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, SizePolynomial):
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return SizePolynomial(out)
        scalar = Fraction(other)
        return SizePolynomial([scalar * c for c in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, SizePolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"SizePolynomial({self.coefficients})"


@dataclass
class CoefficientSystem:
    """Right-hand side gamma of the triangular system; beta filled on solve.

    gamma[i-1] holds gamma_i, the coefficient of m^(i-1) in g(K,m). The
    matrix entries a_ij = (-1)^(j-i) * C(j, i-1) are computed on demand; the
    diagonal a_ii = i never vanishes.
    """

    gamma: tuple
    beta: tuple | None = None

    @staticmethod
    def a(i, j):
        return (-1) ** (j - i) * comb(j, i - 1)


_POLY_TAG = b"polynomial:"
_COUNT_TAG = b"count:"


def closed_form(kind, p):
    """Published polynomial for the four special classes."""
    if kind == NULL:
        if p != 0:
            raise ValueError(f"null class requires p=0, got {p}")
        return SizePolynomial((1,))
    if kind == TREE:
        if p < 1:
            raise ValueError(f"tree requires p>=1, got {p}")
        return SizePolynomial((p, 2 * p - 1, p - 1))
    if kind == TREE_PLUS:
        if p < 3:
            raise ValueError(f"tree plus an edge requires p>=3, got {p}")
        return SizePolynomial((2 * p, 4 * p - 1, 2 * p, 1))
    if kind == ISOLATED_EDGES:
        if p < 2 or p % 2:
            raise ValueError(f"isolated edges require even p>=2, got {p}")
        c = Fraction(2) ** (p // 2 - 1)
        return SizePolynomial((2 * c, c * Fraction(3 * p, 2), c * Fraction(p, 2)))
    raise ValueError(f"no closed form for class {kind!r}")


def shift(poly, k):
    """Polynomial of the k-fold dominating extension: Q(m)*m! = P(m+k)*(m+k)!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = SizePolynomial((k, 1))
    out = SizePolynomial((0,))
    for c in reversed(poly.coefficients):
        out = out * base + SizePolynomial((c,))
    for i in range(1, k + 1):
        out = out * SizePolynomial((i, 1))
    return out


def evaluate(poly, m):
    """Exact f value P(m) * m!; the theory makes it a positive integer."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    value = poly(m)
    if value.denominator != 1 or value <= 0:
        raise InternalInvariantError(
            f"P({m}) = {value} is not a positive integer for {poly!r}"
        )
    return int(value) * factorial(m)


def size_f(k):
    """Size polynomial of a chordal graph (any connectivity, possibly empty)."""
    return _size_f(k, {})


def _size_f(k, memo):
    key = _POLY_TAG + canonical_key(k)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not is_chordal(k):
        raise InvalidGraphError("size polynomial requires a chordal graph")
    kind = classify(k)
    if kind != GENERAL:
        poly = closed_form(kind, k.p)
    else:
        dom = dominating_vertices(k)
        if dom:
            rest, _ = induced_subgraph(
                k, [v for v in range(k.p) if v not in dom]
            )
            poly = shift(_size_f(rest, memo), len(dom))
        else:
            rest_verts = [v for v in range(k.p) if k.degree(v) > 0]
            isolated = k.p - len(rest_verts)
            if isolated:
                rest, _ = induced_subgraph(k, rest_verts)
                base = _size_f(rest, memo)
                # f(K,m) = f(K',m) + j*Size(K')*m*m!, and Size(K') = P'(0)
                poly = base + SizePolynomial((0, isolated * base.coefficients[0]))
            else:
                poly = _size_gf(k, memo)
    if not poly.is_integral():
        raise InternalInvariantError(
            f"non-integral coefficients {poly!r} derived for {k!r}"
        )
    memo[key] = poly
    return poly


def _size_uccg_count(u, memo):
    """Size of a connected chordal graph: evaluate its core's polynomial."""
    key = _COUNT_TAG + canonical_key(u)
    hit = memo.get(key)
    if hit is not None:
        return hit
    dec = core_decomposition(u)
    val = evaluate(_size_f(dec.core, memo), dec.dominating_count)
    memo[key] = val
    return val


def _rooted_sizes(sub, memo):
    """Size of the v-rooted sub-class for every root v of a UCCG."""
    out = []
    for v in range(sub.p):
        size_v = 1
        for comp in chain_com(sub, v).components:
            size_v *= _size_uccg_count(comp, memo)
        out.append(size_v)
    return out


def _g_system(k, memo):
    """Gamma coefficients of g(K,m) plus Size(K), per-component assembly."""
    per_comp = []
    for verts in connected_components(k):
        sub, _ = induced_subgraph(k, verts)
        rooted = _rooted_sizes(sub, memo)
        per_comp.append((sub, rooted, sum(rooted)))
    s_k = 1
    for _, _, s_j in per_comp:
        s_k *= s_j
    g = SizePolynomial((0,))
    for sub, rooted, s_j in per_comp:
        outer = Fraction(s_k, s_j)
        for v in range(sub.p):
            neighborhood, _ = induced_subgraph(sub, sub.neighbors(v))
            p_nv = _size_f(neighborhood, memo)
            size_nv = p_nv.coefficients[0]
            g = g + (outer * rooted[v] / size_nv) * p_nv
    return CoefficientSystem(g.coefficients), s_k


def g_polynomial(k):
    """Gamma vector of g(K,m) assembled per component (fresh derivation)."""
    if not is_chordal(k):
        raise InvalidGraphError("g polynomial requires a chordal graph")
    system, _ = _g_system(k, {})
    return system


def solve_beta(system, size0):
    """Back-substitute the triangular system; beta_0 is the known Size(K)."""
    gamma = system.gamma
    d = len(gamma) - 1
    betas = [Fraction(size0)] + [Fraction(0)] * (d + 1)
    if gamma:
        betas[d + 1] = Fraction(gamma[d], CoefficientSystem.a(d + 1, d + 1))
        for i in range(d, 0, -1):
            tail = sum(
                CoefficientSystem.a(i, j) * betas[j] for j in range(i + 1, d + 2)
            )
            betas[i] = (gamma[i - 1] - tail) / CoefficientSystem.a(i, i)
    system.beta = tuple(betas)
    return SizePolynomial(betas)


def size_gf(k):
    """General-case derivation: assemble g, then solve for the betas."""
    if not is_chordal(k):
        raise InvalidGraphError("size polynomial requires a chordal graph")
    return _size_gf(k, {})


def _size_gf(k, memo):
    system, s_k = _g_system(k, memo)
    return solve_beta(system, s_k)


def size_formula_based(cg):
    """Class size of a chain graph by polynomial evaluation per component.

    Accepts an UndirectedGraph as the all-undirected chain graph.
    """
    if isinstance(cg, UndirectedGraph):
        cg = ChainGraph.from_undirected(cg)
    memo = {}
    total = 1
    for comp in chain_components(cg):
        if not is_chordal(comp):
            raise InvalidGraphError(
                f"chain component {comp.edges} is not chordal"
            )
        total *= _size_uccg_count(comp, memo)
    return total


def recurrence_check(k, poly, m_max):
    """Verify f(K,m) = m*f(K,m-1) + sum_v f(K_{N_v},m)*Size(K^(v))/Size(K_{N_v}).

    The right-hand side is assembled independently of poly (neighborhood
    polynomials and rooted sizes are re-derived); exact equality is required
    for every m in 1..m_max.
    """
    if not is_chordal(k):
        raise InvalidGraphError("recurrence check requires a chordal graph")
    memo = {}
    comps = []
    for verts in connected_components(k):
        sub, labels = induced_subgraph(k, verts)
        rooted = _rooted_sizes(sub, memo)
        size_j = sum(rooted) if sub.p else 1
        comps.append((labels, rooted, size_j))
    size_k = 1
    for _, _, size_j in comps:
        size_k *= size_j
    # Size(K^(v)): rooting only reshapes v's own component
    rooted_in_k = {}
    for labels, rooted, size_j in comps:
        for i, v in enumerate(labels):
            rooted_in_k[v] = rooted[i] * (size_k // size_j)
    for m in range(1, m_max + 1):
        rhs = Fraction(m * evaluate(poly, m - 1))
        for v in range(k.p):
            neighborhood, _ = induced_subgraph(k, k.neighbors(v))
            p_nv = _size_f(neighborhood, memo)
            size_nv = p_nv.coefficients[0]
            rhs += Fraction(evaluate(p_nv, m)) * rooted_in_k[v] / size_nv
        if rhs.denominator != 1 or evaluate(poly, m) != int(rhs):
            return False
    return True


def format_polynomial(poly):
    """Canonical expanded display "(c_d*m^d + ... + c_0) * m!"."""
    if not poly.is_integral():
        raise InternalInvariantError(f"non-integral coefficients in {poly!r}")
    coeffs = [int(c) for c in poly.coefficients]
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        elif power == 1:
            body = "m" if mag == 1 else f"{mag}*m"
        else:
            body = f"m^{power}" if mag == 1 else f"{mag}*m^{power}"
        terms.append((c < 0, body))
    if not terms:
        return "(0) * m!"
    first_neg, first = terms[0]
    text = ("-" if first_neg else "") + first
    for neg, body in terms[1:]:
        text += (" - " if neg else " + ") + body
    return f"({text}) * m!"
