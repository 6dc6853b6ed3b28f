"""Disjoint-union product, coproduct, the H-boundary, bracket and cobracket.

Works on plain-oriented graphs (commutative or ribbon).  Degrees are vertex
counts.  Tensors are dicts {(left, right): Fraction} with gc.EMPTY as the unit.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import graphcore as gc
from . import signs
from .complexes import add_oriented, add_term, dE_generator, linear
from .graphcore import EMPTY, HalfEdgeGraph, Orientation

ONE = Fraction(1)


def deg(g: HalfEdgeGraph) -> int:
    return g.num_vertices


# ---------------------------------------------------------------- product / coproduct

@lru_cache(maxsize=100_000)
def product_generators(a: HalfEdgeGraph, b: HalfEdgeGraph) -> dict:
    g, o = gc.disjoint_union(a, gc.standard_orientation(a), b, gc.standard_orientation(b))
    out = {}
    add_oriented(out, g, o, ONE)
    return out


def product(x: dict, y: dict) -> dict:
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for g, c in product_generators(a, b).items():
                add_term(out, g, ca * cb * c)
    return out


def _split(g: HalfEdgeGraph, o: Orientation, part: set):
    """(sign, left chain term, right chain term) for the vertex subset part."""
    s = signs.shuffle_sign(o.vertex_order, lambda v: v in part)
    rest = set(range(g.num_vertices)) - part
    a, oa = gc.subgraph(g, o, part)
    b, ob = gc.subgraph(g, o, rest)
    ta = gc.canonical_term(a, oa)
    tb = gc.canonical_term(b, ob)
    if ta is None or tb is None:
        return None
    return s * ta[1] * tb[1], ta[0], tb[0]


def _oriented_coproduct(g: HalfEdgeGraph, o: Orientation) -> dict:
    comps = g.components()
    out = {}
    for mask in range(1 << len(comps)):
        part = set()
        for i, c in enumerate(comps):
            if mask >> i & 1:
                part.update(c)
        res = _split(g, o, part)
        if res is not None:
            s, a, b = res
            add_term(out, (a, b), s)
    return out


@lru_cache(maxsize=100_000)
def coproduct_generator(g: HalfEdgeGraph) -> dict:
    """Connected graphs are primitive; extended multiplicatively with shuffle signs."""
    return _oriented_coproduct(g, gc.standard_orientation(g))


def coproduct(x: dict) -> dict:
    out = {}
    for g, c in x.items():
        for k, v in coproduct_generator(g).items():
            add_term(out, k, c * v)
    return out


def tensor_product(x: dict, y: dict) -> dict:
    """(a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd."""
    out = {}
    for (a, b), c1 in x.items():
        for (c, d), c2 in y.items():
            s = signs.koszul_sign(deg(b), deg(c))
            for g1, e1 in product_generators(a, c).items():
                for g2, e2 in product_generators(b, d).items():
                    add_term(out, (g1, g2), s * c1 * c2 * e1 * e2)
    return out


def tensor(x: dict, y: dict) -> dict:
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            add_term(out, (a, b), ca * cb)
    return out


def on_tensor(fn, t: dict) -> dict:
    """Extend a degree -1 generator map to tensors as a graded derivation."""
    out = {}
    for (a, b), c in t.items():
        for g, v in fn(a).items():
            add_term(out, (g, b), c * v)
        s = -1 if deg(a) % 2 else 1
        for g, v in fn(b).items():
            add_term(out, (a, g), s * c * v)
    return out


def dE_tensor(t: dict) -> dict:
    return on_tensor(dE_generator, t)


# ---------------------------------------------------------------- H-boundary

def _rewire_collapse(g: HalfEdgeGraph, o: Orientation, x: int, y: int):
    """(X^{pi_xy})_{x∪y} as (graph, orientation, sign), or None if x∪y is a loop."""
    pairing = gc.pair_swap(g, x, y)
    ng, no, s, _ = gc.reglue(g, o, pairing)
    res = gc.collapse_edge(ng, no, x)
    if res is None:
        return None
    cg, co, s2 = res
    return cg, co, s * s2


def h_pairs(g: HalfEdgeGraph):
    """Unordered pairs {x, y} of distinct half-edges with y != x̄."""
    n = g.num_half_edges
    for x in range(n):
        for y in range(x + 1, n):
            if y != g.partner[x]:
                yield x, y


@lru_cache(maxsize=200_000)
def dH_generator(g: HalfEdgeGraph) -> dict:
    o = gc.standard_orientation(g)
    out = {}
    for x, y in h_pairs(g):
        res = _rewire_collapse(g, o, x, y)
        if res is not None:
            add_oriented(out, res[0], res[1], res[2])
    return out


dH = linear(dH_generator)


def dH_tensor(t: dict) -> dict:
    return on_tensor(dH_generator, t)


# ---------------------------------------------------------------- bracket

@lru_cache(maxsize=100_000)
def bracket_generators(a: HalfEdgeGraph, b: HalfEdgeGraph) -> dict:
    """Sum over x in a, y in b of ((a·b)^{pi_xy})_{x∪y}."""
    g, o = gc.disjoint_union(a, gc.standard_orientation(a), b, gc.standard_orientation(b))
    n1 = a.num_half_edges
    out = {}
    for x in range(n1):
        for y in range(n1, g.num_half_edges):
            res = _rewire_collapse(g, o, x, y)
            if res is not None:
                add_oriented(out, res[0], res[1], res[2])
    return out


def bracket(x: dict, y: dict) -> dict:
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for g, c in bracket_generators(a, b).items():
                add_term(out, g, ca * cb * c)
    return out


def bracket_by_deviation(x: dict, y: dict) -> dict:
    """dH(xy) - dH(x)y - (-1)^{|x|} x dH(y), for x homogeneous."""
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            ga, gb = {a: ONE}, {b: ONE}
            s = -1 if deg(a) % 2 else 1
            term = {}
            for c, ch in ((1, dH(product(ga, gb))), (-1, product(dH(ga), gb)), (-s, product(ga, dH(gb)))):
                for g, v in ch.items():
                    add_term(term, g, c * v)
            for g, v in term.items():
                add_term(out, g, ca * cb * v)
    return out


# ---------------------------------------------------------------- cobracket and homotopy

def _components_split(g: HalfEdgeGraph, o: Orientation, first_vertex: int):
    """For a two-component graph: (sign, A, B) with (g, o) = sign * A·B, A containing first_vertex."""
    comps = g.components()
    if len(comps) != 2:
        return None
    part = set(next(c for c in comps if first_vertex in c))
    return _split(g, o, part)


def separating_pairs(g: HalfEdgeGraph):
    """Unordered pairs {x, y} for which X^{pi_xy} has two components."""
    if not g.is_connected():
        raise ValueError("separating pairs are defined for connected graphs")
    for x, y in h_pairs(g):
        ng = HalfEdgeGraph(gc.pair_swap(g, x, y), g.vertex_of, g.num_vertices, g.rotation)
        if len(ng.components()) == 2:
            yield x, y


def _separated(g: HalfEdgeGraph, x: int, y: int):
    """X^{pi_xy} = s * A·B with x, y in A; returns (s, A graph+orientation, B graph+orientation)."""
    o = gc.standard_orientation(g)
    pairing = gc.pair_swap(g, x, y)
    ng, no, s, _ = gc.reglue(g, o, pairing)
    comps = ng.components()
    vx = ng.vertex_of[x]
    part = set(next(c for c in comps if vx in c))
    s *= signs.shuffle_sign(no.vertex_order, lambda v: v in part)
    a, oa = gc.subgraph(ng, no, part)
    b, ob = gc.subgraph(ng, no, set(range(ng.num_vertices)) - part)
    keep_a = [h for h in range(ng.num_half_edges) if ng.vertex_of[h] in part]
    xa = keep_a.index(x)
    return s, (a, oa, xa), (b, ob)


def _require_connected(g):
    if not g.is_connected():
        raise ValueError("cobracket and homotopy are only defined on connected graphs")


@lru_cache(maxsize=100_000)
def theta_generator(g: HalfEdgeGraph) -> dict:
    """Separating-pair formula: s(A_xy ⊗ B + (-1)^{|A_xy||B|} B ⊗ A_xy)."""
    _require_connected(g)
    out = {}
    for x, y in separating_pairs(g):
        s, (a, oa, xa), (b, ob) = _separated(g, x, y)
        res = gc.collapse_edge(a, oa, xa)
        if res is None:
            continue
        ca, co, s2 = res
        ta = gc.canonical_term(ca, co)
        tb = gc.canonical_term(b, ob)
        if ta is None or tb is None:
            continue
        c = s * s2 * ta[1] * tb[1]
        add_term(out, (ta[0], tb[0]), c)
        add_term(out, (tb[0], ta[0]), c * signs.koszul_sign(deg(ta[0]), deg(tb[0])))
    return out


def theta(x: dict) -> dict:
    out = {}
    for g, c in x.items():
        for k, v in theta_generator(g).items():
            add_term(out, k, c * v)
    return out


def theta_by_deviation(x: dict) -> dict:
    """Delta dH - dH Delta."""
    out = {}
    for k, v in coproduct(dH(x)).items():
        add_term(out, k, v)
    for k, v in dH_tensor(coproduct(x)).items():
        add_term(out, k, -v)
    return out


@lru_cache(maxsize=100_000)
def homotopy_generator(g: HalfEdgeGraph) -> dict:
    """T(X) = sum over separating pairs of s A ⊗ B."""
    _require_connected(g)
    out = {}
    for x, y in separating_pairs(g):
        s, (a, oa, _), (b, ob) = _separated(g, x, y)
        ta = gc.canonical_term(a, oa)
        tb = gc.canonical_term(b, ob)
        if ta is None or tb is None:
            continue
        add_term(out, (ta[0], tb[0]), s * ta[1] * tb[1])
    return out


def homotopy(x: dict) -> dict:
    out = {}
    for g, c in x.items():
        for k, v in homotopy_generator(g).items():
            add_term(out, k, c * v)
    return out


def theta_homotopy_defect(g: HalfEdgeGraph) -> dict:
    """theta - (dE T - T dE) on one generator; empty when the identity holds."""
    x = {g: ONE}
    out = dict(theta(x))
    for k, v in dE_tensor(homotopy(x)).items():
        add_term(out, k, -v)
    for k, v in homotopy(linear(dE_generator)(x)).items():
        add_term(out, k, v)
    return out


# ---------------------------------------------------------------- identity checks

def jacobiator(x: HalfEdgeGraph, y: HalfEdgeGraph, z: HalfEdgeGraph) -> dict:
    """Sum over cyclic permutations of (-1)^{|a|(|c|-1)} [a, [b, c]]."""
    out = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        s = signs.koszul_sign(deg(a), deg(c) - 1)
        for g, v in bracket({a: ONE}, bracket_generators(b, c)).items():
            add_term(out, g, s * v)
    return out


def cojacobiator(g: HalfEdgeGraph) -> dict:
    """(1 + tau + tau^2)(theta ⊗ 1)theta on triple tensors, with shifted Koszul signs.

    tau cycles (a, b, c) -> (c, a, b).
    """
    t = theta_generator(g)
    triple = {}
    for (a, b), c in t.items():
        for (a1, a2), c1 in theta_generator(a).items() if a.is_connected() and a.num_vertices else ():
            add_term(triple, (a1, a2, b), c * c1)
    out = {}
    for (a, b, c), v in triple.items():
        da, db, dc = deg(a) - 1, deg(b) - 1, deg(c) - 1
        add_term(out, (a, b, c), v)
        # (a,b,c) -> (c,a,b): move c past a and b
        add_term(out, (c, a, b), v * signs.koszul_sign(dc, da + db))
        # (a,b,c) -> (b,c,a): move a past b and c
        add_term(out, (b, c, a), v * signs.koszul_sign(da, db + dc))
    return out


def ad_tensor(x: HalfEdgeGraph, t: dict) -> dict:
    """x acting on a ⊗ b: [x, a] ⊗ b + (-1)^{(|x|-1)|a|} a ⊗ [x, b]."""
    out = {}
    for (a, b), c in t.items():
        for g, v in bracket({x: ONE}, {a: ONE}).items():
            add_term(out, (g, b), c * v)
        s = signs.koszul_sign(deg(x) - 1, deg(a))
        for g, v in bracket({x: ONE}, {b: ONE}).items():
            add_term(out, (a, g), s * c * v)
    return out


def bialgebra_defect(x: HalfEdgeGraph, y: HalfEdgeGraph) -> dict:
    """theta[x, y] - (-1)^{|x|-1} ad_x theta(y) + (-1)^{|y|(|x|-1)} ad_y theta(x)."""
    out = dict(theta(bracket_generators(x, y)))
    s = -1 if (deg(x) - 1) % 2 else 1
    for k, v in ad_tensor(x, theta_generator(y)).items():
        add_term(out, k, -s * v)
    s = signs.koszul_sign(deg(y), deg(x) - 1)
    for k, v in ad_tensor(y, theta_generator(x)).items():
        add_term(out, k, s * v)
    return out


_WITNESS_MATRICES: dict = {}


def boundary_witness(z: dict, variant: str, max_half_edges: int = 24):
    """A chain w with dE(w) = z, or None when z is not a boundary.

    z is split by (rank, degree) and each part is solved over the reduced
    basis one degree up (the disconnected basis when the part needs it).
    """
    from .complexes import basis, matrix_of
    from .exactla import image_membership
    parts = {}
    for g, c in z.items():
        parts.setdefault((g.rank, deg(g)), {})[g] = c
    out = {}
    for (r, k), part in sorted(parts.items()):
        conn = all(g.is_connected() for g in part)
        src = basis(variant, r, k + 1, reduced=True, connected=conn,
                    max_half_edges=max_half_edges, max_rank=r)
        tgt = basis(variant, r, k, reduced=True, connected=conn,
                    max_half_edges=max_half_edges, max_rank=r)
        index = {g: i for i, g in enumerate(tgt)}
        if any(g not in index for g in part):
            raise ValueError("chain is outside the reduced basis")
        key = (variant, r, k, conn, max_half_edges)
        if key not in _WITNESS_MATRICES:
            _WITNESS_MATRICES[key] = matrix_of(dE_generator, src, tgt)
        w = image_membership(_WITNESS_MATRICES[key],
                             {index[g]: c for g, c in part.items()})
        if w is None:
            return None
        for j, c in w.items():
            add_term(out, src[j], c)
    return out


def enumerate_generators(max_half_edges: int, min_valence: int = 3, connected: bool = False,
                         variant: str = "commutative") -> list:
    """All nonzero generators with at most max_half_edges half-edges."""
    out = []
    for m in range(2, max_half_edges + 1, 2):
        e = m // 2
        for k in range(1, m // min_valence + 1):
            for g in gc.enumerate_multigraphs(k, e, min_valence, None, connected):
                if variant == "associative":
                    cands = gc.ribbon_structures(g)
                else:
                    cands = [g]
                out += [c for c in cands if not gc.is_zero_by_symmetry(c)]
    return out
