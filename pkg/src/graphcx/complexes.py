"""Chain groups and edge-collapse boundaries for the graph complexes.

Variants:
  commutative  plain graphs, orientation = vertex order + edge directions
  associative  ribbon graphs, same orientation data, rotation is the color
  forested     trivalent graphs with a spanning forest, orientation = forest order
  polygon      k-gons with bivalent unit-colored vertices

A chain is a dict {canonical graph: Fraction}; each key stands for the
graph with its standard orientation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import graphcore as gc
from .exactla import ChainError, SparseMatrix, rank, rref
from .graphcore import HalfEdgeGraph, Orientation

VARIANTS = ("commutative", "associative", "forested", "polygon")
KIND = {"commutative": "plain", "associative": "plain", "polygon": "plain", "forested": "forest"}

DEFAULT_MAX_HALF_EDGES = 16
DEFAULT_MAX_RANK = 3
POLYGON_MAX_K = 11


class CapError(ValueError):
    pass


# ---------------------------------------------------------------- chains

def add_term(chain: dict, key, coeff) -> None:
    if not coeff:
        return
    v = chain.get(key, 0) + coeff
    if v:
        chain[key] = v
    else:
        chain.pop(key, None)


def add_oriented(chain: dict, g: HalfEdgeGraph, o: Orientation, coeff, kind: str = "plain") -> None:
    """Add coeff * (g, o) after canonicalizing; symmetric-zero graphs vanish."""
    if not coeff:
        return
    t = gc.canonical_term(g, o, kind)
    if t is not None:
        add_term(chain, t[0], coeff * t[1])


def combine(*pairs) -> dict:
    """combine((c1, chain1), (c2, chain2), ...) = sum of c_i * chain_i."""
    out = {}
    for c, ch in pairs:
        for k, v in ch.items():
            add_term(out, k, c * v)
    return out


def linear(fn):
    """Extend a generator-level map (graph -> chain) to chains."""
    def apply(chain: dict, *args, **kw) -> dict:
        out = {}
        for g, c in chain.items():
            for k, v in fn(g, *args, **kw).items():
                add_term(out, k, c * v)
        return out
    apply.__name__ = fn.__name__ + "_chain"
    apply.__doc__ = fn.__doc__
    return apply


def generator(g: HalfEdgeGraph, kind: str = "plain") -> dict:
    """The chain consisting of g with its standard orientation (canonicalized)."""
    out = {}
    add_oriented(out, g, gc.standard_orientation(g), Fraction(1), kind)
    return out


def degree(g: HalfEdgeGraph, variant: str = "commutative") -> int:
    if variant == "forested":
        return forest_tree_count(g)
    return g.num_vertices


# ---------------------------------------------------------------- edge collapse boundary

@lru_cache(maxsize=200_000)
def dE_generator(g: HalfEdgeGraph) -> dict:
    """Sum of single-edge collapses of g with its standard orientation (plain kinds)."""
    o = gc.standard_orientation(g)
    out = {}
    for h, _ in g.edges():
        res = gc.collapse_edge(g, o, h)
        if res is None:
            continue
        ng, no, s = res
        add_oriented(out, ng, no, s, "plain")
    return out


dE = linear(dE_generator)


def forest_trees(g: HalfEdgeGraph) -> list:
    """Tree index of each vertex."""
    parent = list(range(g.num_vertices))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for h in g.forest_edges():
        a, b = find(g.vertex_of[h]), find(g.vertex_of[g.partner[h]])
        if a != b:
            parent[a] = b
    return [find(v) for v in range(g.num_vertices)]


def forest_tree_count(g: HalfEdgeGraph) -> int:
    return len(set(forest_trees(g)))


@lru_cache(maxsize=200_000)
def dE_forested_generator(g: HalfEdgeGraph) -> dict:
    """Sum of (G, Phi + e) over non-forest edges joining distinct trees; e is numbered last."""
    o = gc.standard_orientation(g)
    tree = forest_trees(g)
    forest = g.forest or frozenset()
    out = {}
    for h, hb in g.edges():
        if h in forest or tree[g.vertex_of[h]] == tree[g.vertex_of[hb]]:
            continue
        ng = HalfEdgeGraph(g.partner, g.vertex_of, g.num_vertices, g.rotation, forest | {h, hb}, g.colors)
        no = Orientation(o.vertex_order, o.initial, o.forest_order + (h,))
        add_oriented(out, ng, no, Fraction(1), "forest")
    return out


dE_forested = linear(dE_forested_generator)


def boundary_of(variant: str):
    return dE_forested if variant == "forested" else dE


# ---------------------------------------------------------------- bases

def polygon(k: int) -> HalfEdgeGraph:
    return gc.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def _check_caps(num_half_edges: int, r: int, max_half_edges: int, max_rank: int):
    if num_half_edges > max_half_edges:
        raise CapError(f"{num_half_edges} half-edges exceeds the cap {max_half_edges}")
    if r > max_rank:
        raise CapError(f"rank {r} exceeds the cap {max_rank}")


@lru_cache(maxsize=None)
def _plain_candidates(k: int, r: int, min_valence: int, connected: bool) -> tuple:
    return tuple(gc.enumerate_graphs(k, r, min_valence=min_valence, connected=connected))


@lru_cache(maxsize=None)
def _forested_candidates(r: int, k: int) -> tuple:
    nv = 2 * r - 2
    out = {}
    for g in gc.enumerate_graphs(nv, r, min_valence=3, max_valence=3, connected=True):
        for f in gc.spanning_forests(g, k):
            fg = gc.with_forest(g, f)
            out[gc.canonicalize(fg).graph] = True
    return tuple(sorted(out, key=gc.sort_key))


@lru_cache(maxsize=None)
def _ribbon_candidates(k: int, r: int, min_valence: int, connected: bool) -> tuple:
    out = {}
    for g in _plain_candidates(k, r, min_valence, connected):
        for rg in gc.ribbon_structures(g):
            out[rg] = True
    return tuple(sorted(out, key=gc.sort_key))


def basis(variant: str, r: int, k: int, reduced: bool = True, connected: bool = True,
          opi: bool = False, max_half_edges: int = DEFAULT_MAX_HALF_EDGES,
          max_rank: int = DEFAULT_MAX_RANK) -> list:
    """Ordered basis of nonzero generators in degree k.

    For the forested variant this is the basis of V_k (before the IHX quotient).
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k < 1:
        return []
    if variant == "polygon":
        if r != 1:
            return []
        if k > POLYGON_MAX_K:
            raise CapError(f"polygon degree {k} exceeds {POLYGON_MAX_K}")
        g = polygon(k)
        return [] if gc.is_zero_by_symmetry(g) else [gc.canonicalize(g).graph]
    if variant == "forested":
        nv = 2 * r - 2
        if r < 2 or k > nv:
            return []
        _check_caps(2 * (3 * r - 3), r, max_half_edges, max_rank)
        cands = _forested_candidates(r, k)
        out = [g for g in cands if not gc.is_zero_by_symmetry(g, "forest")]
        if opi:
            out = [g for g in out if gc.is_one_particle_irreducible(g)]
        return out
    min_valence = 3 if reduced else 2
    _check_caps(2 * (k + r - 1), r, max_half_edges, max_rank)
    if variant == "commutative":
        cands = _plain_candidates(k, r, min_valence, connected)
    else:
        cands = _ribbon_candidates(k, r, min_valence, connected)
    out = [g for g in cands if not gc.is_zero_by_symmetry(g)]
    if opi:
        out = [g for g in out if g.is_connected() and gc.is_one_particle_irreducible(g)]
    return out


def matrix_of(fn, source: list, target: list) -> SparseMatrix:
    """Matrix of a linear map given on generators, columns indexed by source."""
    index = {g: i for i, g in enumerate(target)}
    entries = {}
    for j, g in enumerate(source):
        for h, c in fn(g).items():
            if h not in index:
                raise ChainError(f"image term outside the target basis: {h}")
            entries[(index[h], j)] = c
    return SparseMatrix(len(target), len(source), entries)


# ---------------------------------------------------------------- IHX relators

def _blow_up(g: HalfEdgeGraph, o: Orientation, v: int, group: tuple):
    """Split vertex v, moving the half-edges in group to a new vertex joined by a new forest edge."""
    n = g.num_half_edges
    nv = g.num_vertices
    vertex_of = [nv if h in group else u for h, u in enumerate(g.vertex_of)] + [v, nv]
    partner = list(g.partner) + [n + 1, n]
    forest = (g.forest or frozenset()) | {n, n + 1}
    ng = HalfEdgeGraph(tuple(partner), tuple(vertex_of), nv + 1, None, frozenset(forest))
    no = Orientation(tuple(range(nv + 1)), frozenset(), tuple(o.forest_order) + (n,))
    return ng, no


def ihx_relator(g: HalfEdgeGraph, e: int) -> dict:
    """Basic IHX relator of (G, Phi, e): the three blow-ups of (G_e, Phi_e), coefficients +1.

    Each blow-up orders the forest as Phi_e followed by the new edge.
    """
    o = gc.standard_orientation(g)
    res = gc.collapse_edge(g, o, e)
    if res is None:
        raise ValueError("forest edges are never loops")
    ge, oe, _ = res
    halves = ge.halves_at(0)
    if len(halves) != 4:
        raise ValueError("collapsed vertex is not 4-valent")
    a = halves[0]
    out = {}
    for b in halves[1:]:
        group = tuple(x for x in halves if x not in (a, b))
        ng, no = _blow_up(ge, oe, 0, group)
        add_oriented(out, ng, no, Fraction(1), "forest")
    return out


def ihx_relators(r: int, k: int, **caps) -> list:
    """Distinct nonzero basic IHX relators in degree k, as chains over V_k."""
    seen = {}
    for g in basis("forested", r, k, **caps):
        for h in g.forest_edges():
            rel = ihx_relator(g, h)
            if not rel:
                continue
            key = _projective_key(rel)
            seen.setdefault(key, rel)
    return [seen[k2] for k2 in sorted(seen, key=lambda t: [(gc.sort_key(g), c) for g, c in t])]


def _projective_key(chain: dict):
    items = sorted(chain.items(), key=lambda kv: gc.sort_key(kv[0]))
    lead = items[0][1]
    return tuple((g, c / lead) for g, c in items)


# ---------------------------------------------------------------- complexes

@dataclass
class GraphComplex:
    """One (variant, rank) complex with bases, boundaries and homology."""
    variant: str
    r: int
    reduced: bool = True
    connected: bool = True
    opi: bool = False
    max_half_edges: int = DEFAULT_MAX_HALF_EDGES
    max_rank: int = DEFAULT_MAX_RANK
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.r > self.max_rank:
            raise CapError(f"rank {self.r} exceeds the cap {self.max_rank}")
        if self.variant == "forested" and not self.connected:
            raise ValueError("forested graphs are connected by definition")

    @property
    def kind(self) -> str:
        return KIND[self.variant]

    def degrees(self) -> list:
        if self.variant == "polygon":
            return list(range(1, POLYGON_MAX_K + 1)) if self.r == 1 else []
        if self.variant == "forested":
            return list(range(1, 2 * self.r - 1)) if self.r >= 2 else []
        if self.reduced:
            top = 2 * self.r - 2 if self.connected else 2 * self.r
            if self.connected and self.r < 2:
                return []
        else:
            top = self.max_half_edges // 2 - self.r + 1
        return list(range(1, top + 1))

    def raw_basis(self, k: int) -> list:
        key = ("raw", k)
        if key not in self._cache:
            if k not in self.degrees():
                self._cache[key] = []
            else:
                self._cache[key] = basis(self.variant, self.r, k, self.reduced, self.connected,
                                         self.opi, self.max_half_edges, self.max_rank)
        return self._cache[key]

    def raw_boundary(self, k: int) -> SparseMatrix:
        key = ("rawd", k)
        if key not in self._cache:
            fn = dE_forested_generator if self.variant == "forested" else dE_generator
            src, tgt = self.raw_basis(k), self.raw_basis(k - 1)
            self._cache[key] = matrix_of(fn, src, tgt)
        return self._cache[key]

    # IHX quotient (forested) -- the identity quotient elsewhere
    def relators(self, k: int) -> list:
        if self.variant != "forested":
            return []
        key = ("rel", k)
        if key not in self._cache:
            idx = {g: i for i, g in enumerate(self.raw_basis(k))}
            rels = []
            for rel in ihx_relators(self.r, k, max_half_edges=self.max_half_edges, max_rank=self.max_rank):
                vec = {idx[g]: c for g, c in rel.items() if g in idx}
                if self.opi and len(vec) != len(rel):
                    continue
                if vec:
                    rels.append(vec)
            self._cache[key] = rels
        return self._cache[key]

    def _quotient(self, k: int):
        key = ("quot", k)
        if key not in self._cache:
            n = len(self.raw_basis(k))
            rels = self.relators(k)
            rows, pivots = rref(SparseMatrix(len(rels), n, {(i, j): c for i, v in enumerate(rels) for j, c in v.items()}))
            free = [j for j in range(n) if j not in set(pivots)]
            self._cache[key] = (rows, pivots, free)
        return self._cache[key]

    def project(self, k: int, vec: dict) -> dict:
        """Coordinates of a V_k vector in the quotient basis."""
        rows, pivots, free = self._quotient(k)
        v = dict(vec)
        for row, p in zip(rows, pivots):
            a = v.get(p)
            if a:
                for j, x in row.items():
                    y = v.get(j, 0) - a * x
                    if y:
                        v[j] = y
                    else:
                        v.pop(j, None)
        pos = {j: i for i, j in enumerate(free)}
        return {pos[j]: x for j, x in v.items()}

    def basis(self, k: int) -> list:
        _, _, free = self._quotient(k)
        raw = self.raw_basis(k)
        return [raw[j] for j in free]

    def boundary(self, k: int) -> SparseMatrix:
        """Matrix of the boundary from degree k to degree k-1 (quotient bases)."""
        key = ("d", k)
        if key in self._cache:
            return self._cache[key]
        raw = self.raw_boundary(k)
        if self.variant != "forested":
            self._cache[key] = raw
            return raw
        # relation space must be preserved
        for rel in self.relators(k):
            if self.project(k - 1, raw.apply(rel)):
                raise ChainError(f"boundary does not preserve the IHX span in degree {k}")
        _, _, free = self._quotient(k)
        cols = [self.project(k - 1, raw.column(j)) for j in free]
        m = SparseMatrix.from_columns(len(self.basis(k - 1)), cols)
        self._cache[key] = m
        return m

    def dimensions(self) -> dict:
        return {k: len(self.basis(k)) for k in self.degrees()}

    def homology(self) -> dict:
        from .exactla import betti
        out = {}
        for k in self.degrees():
            dk = self.boundary(k) if k - 1 >= 1 else SparseMatrix(0, len(self.basis(k)))
            dk1 = self.boundary(k + 1) if k + 1 in self.degrees() else SparseMatrix(len(self.basis(k)), 0)
            out[k] = betti(dk, dk1)
        return out

    def check_d_squared(self) -> bool:
        for k in self.degrees():
            if k - 1 in self.degrees() and k - 2 >= 1:
                if not (self.boundary(k - 1) @ self.boundary(k)).is_zero():
                    return False
        return True

    def euler_characteristic(self) -> tuple:
        """(sum of (-1)^k dim C_k, sum of (-1)^k b_k)."""
        dims = self.dimensions()
        h = self.homology()
        return (sum((-1) ** k * d for k, d in dims.items()), sum((-1) ** k * b for k, b in h.items()))



# ---------------------------------------------------------------- forested -> Lie-spider O-graphs
#
# Conventions (fixed so that relators vanish and the square with dE commutes):
#  * G gets the standard plain orientation (vertex order 0..n-1, min half-edge
#    initial) and the cyclic order "sorted half-edges" at every vertex.
#  * s_A is the sign of the reordering of all half-edges from edge blocks
#    (initial, terminal) to vertex blocks (the cyclic triples, by vertex).
#  * forest edges are collapsed in forest order, each with collapse_sign.

@dataclass(frozen=True)
class LieOGraph:
    """Uncanonicalized O-graph with Lie spider colors, half-edges keep the names of G.

    vertex_of maps each half-edge to a vertex index, initial lists initial
    half-edges, tensor maps (word at vertex 0, word at vertex 1, ...) to a
    coefficient in the left-comb basis.
    """
    partner: dict
    vertex_of: dict
    num_vertices: int
    initial: frozenset
    tensor: dict


def _ab_sign(g: HalfEdgeGraph) -> int:
    from . import signs
    by_edges = [x for h, hb in g.edges() for x in (h, hb)]
    by_vertices = [x for v in range(g.num_vertices) for x in sorted(g.halves_at(v))]
    return signs.reorder_sign(by_edges, by_vertices)


def _tensor_of(spiders: list) -> dict:
    import itertools
    out = {}
    for combo in itertools.product(*[s.coeffs for s in spiders]):
        c = Fraction(1)
        for _, x in combo:
            c *= x
        add_term(out, tuple(w for w, _ in combo), c)
    return out


def forested_to_ograph(g: HalfEdgeGraph, o: Orientation | None = None) -> tuple:
    """(sign, LieOGraph) for the forested graph g with orientation o.

    Every tree of the forest collapses to one vertex colored by the Lie
    spider its internal vertices spell out.
    """
    from . import signs
    from .operadspiders import LieTree, lie_normal_form
    o = o or gc.standard_orientation(g)
    pg = gc.standard_orientation(g)
    sign = _ab_sign(g)
    rep = list(range(g.num_vertices))

    def find(a):
        while rep[a] != a:
            a = rep[a]
        return a

    order = list(pg.vertex_order)
    for h in o.forest_order:
        hb = g.partner[h]
        v, w = find(g.vertex_of[h]), find(g.vertex_of[hb])
        if v == w:
            raise gc.StructuralError("forest contains a cycle")
        sign *= signs.collapse_sign(order, v, w, h in pg.initial)
        order = [v] + [u for u in order if u not in (v, w)]
        rep[w] = v
    forest = g.forest or frozenset()
    if len(o.forest_order) * 2 != len(forest):
        raise gc.StructuralError("forest order does not list every forest edge")
    index = {u: i for i, u in enumerate(order)}
    legs = [h for h in range(g.num_half_edges) if h not in forest]
    vertex_of = {h: index[find(g.vertex_of[h])] for h in legs}
    spiders = []
    for i, top in enumerate(order):
        nodes = [u for u in range(g.num_vertices) if find(u) == top]
        leaves = [h for h in legs if vertex_of[h] == i]
        node_id = {u: j for j, u in enumerate(nodes)}
        leaf_id = {h: len(nodes) + j for j, h in enumerate(leaves)}
        adj = []
        for u in nodes:
            nb = []
            for h in sorted(g.halves_at(u)):
                nb.append(node_id[g.vertex_of[g.partner[h]]] if h in forest else leaf_id[h])
            adj.append(tuple(nb))
        for h in leaves:
            adj.append((node_id[g.vertex_of[h]],))
        label = (None,) * len(nodes) + tuple(leaves)
        spiders.append(lie_normal_form(LieTree(tuple(adj), label)))
    og = LieOGraph({h: g.partner[h] for h in legs}, vertex_of, len(order),
                   frozenset(h for h in pg.initial if h not in forest), _tensor_of(spiders))
    return sign, og


def lie_ograph_boundary(og: LieOGraph) -> list:
    """Collapse each non-loop edge of og, mating the spiders at its ends.

    Returns a list of (edge half-edge, sign, LieOGraph), keeping half-edge names.
    """
    from . import signs
    from .operadspiders import LieSpider, lie_combination
    out = []
    for h in sorted(og.partner):
        hb = og.partner[h]
        if h > hb:
            continue
        v, w = og.vertex_of[h], og.vertex_of[hb]
        if v == w:
            continue
        order = list(range(og.num_vertices))
        s = signs.collapse_sign(order, v, w, h in og.initial)
        rest = [u for u in order if u not in (v, w)]
        newidx = {v: 0, w: 0}
        newidx.update({u: i + 1 for i, u in enumerate(rest)})
        legs_at = {}
        for x, u in og.vertex_of.items():
            legs_at.setdefault(u, set()).add(x)
        tensor = {}
        for words, c in og.tensor.items():
            sv = LieSpider(frozenset(legs_at[v]), ((words[v], Fraction(1)),))
            sw = LieSpider(frozenset(legs_at[w]), ((words[w], Fraction(1)),))
            m = sv.mate(h, hb, sw)
            for word, x in m.coeffs:
                add_term(tensor, (word,) + tuple(words[u] for u in rest), c * x)
        partner = {x: y for x, y in og.partner.items() if x not in (h, hb)}
        vertex_of = {x: newidx[u] for x, u in og.vertex_of.items() if x not in (h, hb)}
        out.append((h, s, LieOGraph(partner, vertex_of, og.num_vertices - 1,
                                    og.initial - {h, hb}, tensor)))
    return out


def lie_ograph_normal_form(og: LieOGraph, coeff=Fraction(1)) -> dict:
    """Coordinates {(canonical graph, words per vertex): coeff} in the coinvariants.

    The graph is canonicalized and the spider tensor is averaged over its
    automorphism group with orientation signs.
    """
    from .operadspiders import LieSpider, lie_combination
    keep = sorted(og.partner)
    newh = {x: i for i, x in enumerate(keep)}
    g = HalfEdgeGraph(tuple(newh[og.partner[x]] for x in keep),
                      tuple(og.vertex_of[x] for x in keep), og.num_vertices)
    o = Orientation(tuple(range(g.num_vertices)), frozenset(newh[x] for x in og.initial))
    cf = gc.canonicalize(g)
    c = cf.graph
    sign = gc.orientation_sign(cf.labeling, g, c, o, gc.standard_orientation(c))
    lab = {x: cf.labeling[newh[x]] for x in keep}
    cvert = {og.vertex_of[x]: c.vertex_of[lab[x]] for x in keep}
    legs_at = [frozenset(h for h in range(c.num_half_edges) if c.vertex_of[h] == v)
               for v in range(c.num_vertices)]

    def move(tensor, perm, vmap):
        out = {}
        for words, x in tensor.items():
            spiders = [None] * c.num_vertices
            for v, w in enumerate(words):
                nv = vmap[v]
                mapping = {h: perm(h) for h in set(w) | legs_old[v]}
                spiders[nv] = LieSpider(legs_old[v], ((w, Fraction(1)),)).relabel(mapping)
            for k, y in _tensor_of(spiders).items():
                add_term(out, k, x * y)
        return out

    legs_old = {}
    for x in keep:
        legs_old.setdefault(og.vertex_of[x], set()).add(x)
    legs_old = {v: frozenset(s) for v, s in legs_old.items()}
    base = move(og.tensor, lambda h: lab[h], cvert)
    legs_old = {v: legs_at[v] for v in range(c.num_vertices)}
    std = gc.standard_orientation(c)
    group = gc.group_elements(cf.generators, c.num_half_edges)
    out = {}
    for a in group:
        s = gc.orientation_sign(a, c, c, std, std)
        vmap = {v: c.vertex_of[a[legs_at[v] and min(legs_at[v])]] for v in range(c.num_vertices)}
        for words, x in move(base, lambda h: a[h], vmap).items():
            add_term(out, (c, words), coeff * sign * s * x / len(group))
    return out


def _coordinates(chains: list) -> SparseMatrix:
    keys = sorted({k for ch in chains for k in ch}, key=lambda t: (gc.sort_key(t[0]), t[1]))
    index = {k: i for i, k in enumerate(keys)}
    entries = {}
    for j, ch in enumerate(chains):
        for k, v in ch.items():
            entries[(index[k], j)] = v
    return SparseMatrix(len(keys), len(chains), entries)


def translated_rank(r: int, k: int) -> int:
    """Rank of the translation on the forested basis of degree k."""
    chains = []
    for g in basis("forested", r, k):
        s, og = forested_to_ograph(g)
        chains.append(lie_ograph_normal_form(og, Fraction(s)))
    return rank(_coordinates(chains))


def lie_ograph_dimension(r: int, k: int) -> int:
    """Dimension of connected rank-r Lie-spider O-graphs with k vertices (all valences >= 3)."""
    import itertools
    from .operadspiders import lie_basis_words
    total = 0
    for x in gc.enumerate_graphs(k, r, min_valence=3, connected=True):
        legs = [tuple(x.halves_at(v)) for v in range(x.num_vertices)]
        o = gc.standard_orientation(x)
        chains = []
        for words in itertools.product(*[lie_basis_words(l) for l in legs]):
            og = LieOGraph({h: x.partner[h] for h in range(x.num_half_edges)},
                           {h: x.vertex_of[h] for h in range(x.num_half_edges)},
                           x.num_vertices, o.initial, {words: Fraction(1)})
            chains.append(lie_ograph_normal_form(og))
        if chains:
            total += rank(_coordinates(chains))
    return total
