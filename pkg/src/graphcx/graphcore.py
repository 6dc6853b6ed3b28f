"""Half-edge multigraphs, canonical labeling, orientations and collapse.

A graph lives on half-edges 0..n-1.  ``partner`` is the fixed-point-free
involution x -> x̄ and ``vertex_of`` the incidence map.  Optional
decorations: a rotation system (successor permutation whose cycles are the
vertices), a forest (set of half-edges on forest edges) and per-vertex colors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from . import signs


class StructuralError(ValueError):
    pass


@dataclass(frozen=True)
class HalfEdgeGraph:
    partner: tuple
    vertex_of: tuple
    num_vertices: int
    rotation: tuple | None = None
    forest: frozenset | None = None
    colors: tuple | None = None

    def __post_init__(self):
        n = len(self.partner)
        if len(self.vertex_of) != n:
            raise StructuralError("partner and vertex_of differ in length")
        for h, p in enumerate(self.partner):
            if not 0 <= p < n or p == h or self.partner[p] != h:
                raise StructuralError(f"involution broken at half-edge {h}")
        counts = [0] * self.num_vertices
        for v in self.vertex_of:
            if not 0 <= v < self.num_vertices:
                raise StructuralError(f"vertex id {v} out of range")
            counts[v] += 1
        if any(c == 0 for c in counts):
            raise StructuralError("vertex without half-edges")
        if self.rotation is not None:
            if sorted(self.rotation) != list(range(n)):
                raise StructuralError("rotation is not a permutation")
            seen = set()
            for h in range(n):
                if h in seen:
                    continue
                cyc = _cycle(self.rotation, h)
                if {self.vertex_of[x] for x in cyc} != {self.vertex_of[h]} or len(cyc) != counts[self.vertex_of[h]]:
                    raise StructuralError("rotation cycles must be the vertices")
                seen.update(cyc)
        if self.forest is not None:
            for h in self.forest:
                if self.partner[h] not in self.forest:
                    raise StructuralError("forest must contain both halves of its edges")
        if self.colors is not None and len(self.colors) != self.num_vertices:
            raise StructuralError("one color per vertex")

    # basic counts
    @property
    def num_half_edges(self) -> int:
        return len(self.partner)

    @property
    def num_edges(self) -> int:
        return len(self.partner) // 2

    def edges(self) -> list:
        """Edges as (h, h̄) with h < h̄, ordered by h."""
        return [(h, p) for h, p in enumerate(self.partner) if h < p]

    def halves_at(self, v: int) -> list:
        return [h for h, u in enumerate(self.vertex_of) if u == v]

    def valences(self) -> list:
        val = [0] * self.num_vertices
        for v in self.vertex_of:
            val[v] += 1
        return val

    def is_loop(self, h: int) -> bool:
        return self.vertex_of[h] == self.vertex_of[self.partner[h]]

    def components(self) -> list:
        """Vertex sets of connected components, ordered by smallest vertex."""
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for h, p in self.edges():
            a, b = find(self.vertex_of[h]), find(self.vertex_of[p])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups = {}
        for v in range(self.num_vertices):
            groups.setdefault(find(v), []).append(v)
        return [groups[k] for k in sorted(groups)]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    @property
    def rank(self) -> int:
        return self.num_edges - self.num_vertices + len(self.components())

    def forest_edges(self) -> list:
        """Forest edges named by their smaller half-edge."""
        if not self.forest:
            return []
        return sorted(h for h in self.forest if h < self.partner[h])

    def cyclic_order_at(self, v: int) -> tuple:
        hs = self.halves_at(v)
        if self.rotation is None:
            raise StructuralError("graph has no rotation system")
        return tuple(_cycle(self.rotation, min(hs)))


def _cycle(perm, start):
    out = [start]
    x = perm[start]
    while x != start:
        out.append(x)
        x = perm[x]
    return out


def edge_name(g: HalfEdgeGraph, h: int) -> int:
    return min(h, g.partner[h])


@dataclass(frozen=True)
class Orientation:
    """Vertex order plus one initial half-edge per edge, and/or a forest edge order.

    Forest edges are named by any of their half-edges; comparisons normalise.
    """
    vertex_order: tuple = ()
    initial: frozenset = frozenset()
    forest_order: tuple = ()


def standard_orientation(g: HalfEdgeGraph) -> Orientation:
    return Orientation(
        vertex_order=tuple(range(g.num_vertices)),
        initial=frozenset(h for h, _ in g.edges()),
        forest_order=tuple(g.forest_edges()),
    )


def relative_sign(g: HalfEdgeGraph, a: Orientation, b: Orientation, kind: str = "plain") -> int:
    """+1 if a and b are the same orientation of g, -1 if opposite."""
    if kind == "forest":
        ea = [edge_name(g, h) for h in a.forest_order]
        eb = [edge_name(g, h) for h in b.forest_order]
        if sorted(ea) != sorted(eb) or len(set(ea)) != len(ea):
            raise StructuralError("forest orders name different edges")
        return signs.reorder_sign(ea, eb)
    sign = signs.reorder_sign(a.vertex_order, b.vertex_order)
    for h in a.initial:
        if h not in b.initial:
            sign = -sign
    return sign


def transport(iso: Sequence[int], src: HalfEdgeGraph, dst: HalfEdgeGraph, o: Orientation) -> Orientation:
    """Push an orientation of src along a half-edge bijection src -> dst."""
    vmap = {}
    for h, t in enumerate(iso):
        vmap[src.vertex_of[h]] = dst.vertex_of[t]
    return Orientation(
        vertex_order=tuple(vmap[v] for v in o.vertex_order),
        initial=frozenset(iso[h] for h in o.initial),
        forest_order=tuple(iso[h] for h in o.forest_order),
    )


def is_isomorphism(iso: Sequence[int], src: HalfEdgeGraph, dst: HalfEdgeGraph) -> bool:
    if len(iso) != src.num_half_edges or sorted(iso) != list(range(dst.num_half_edges)):
        return False
    vmap = {}
    for h, t in enumerate(iso):
        if dst.partner[t] != iso[src.partner[h]]:
            return False
        v = src.vertex_of[h]
        if vmap.setdefault(v, dst.vertex_of[t]) != dst.vertex_of[t]:
            return False
    if len(set(vmap.values())) != src.num_vertices or src.num_vertices != dst.num_vertices:
        return False
    if (src.rotation is None) != (dst.rotation is None):
        return False
    if src.rotation is not None:
        if any(dst.rotation[iso[h]] != iso[src.rotation[h]] for h in range(len(iso))):
            return False
    sf = src.forest or frozenset()
    df = dst.forest or frozenset()
    if {iso[h] for h in sf} != set(df):
        return False
    if src.colors is not None or dst.colors is not None:
        if src.colors is None or dst.colors is None:
            return False
        if any(src.colors[v] != dst.colors[vmap[v]] for v in vmap):
            return False
    return True


def orientation_sign(iso: Sequence[int], src: HalfEdgeGraph, dst: HalfEdgeGraph,
                     o: Orientation, target: Orientation | None = None, kind: str = "plain") -> int:
    """Sign relating the transported orientation to target (default: o itself
    for automorphisms, the standard orientation otherwise)."""
    if target is None:
        target = o if src == dst else standard_orientation(dst)
    return relative_sign(dst, transport(iso, src, dst, o), target, kind)


def compose(a: Sequence[int], b: Sequence[int]) -> tuple:
    """a after b."""
    return tuple(a[x] for x in b)


def invert(a: Sequence[int]) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


# ---------------------------------------------------------------- canonical form

@dataclass(frozen=True)
class CanonicalForm:
    graph: HalfEdgeGraph
    labeling: tuple          # input half-edge -> canonical half-edge
    generators: tuple        # automorphism generators of the canonical graph
    order: int


def orbit(x: int, gens) -> set:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for a in gens:
            z = a[y]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def group_elements(gens, n: int) -> list:
    """All elements of the group generated by gens (small groups only)."""
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for s in gens:
                y = compose(s, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return sorted(seen)


def _rank(keys):
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _initial_colors(g: HalfEdgeGraph):
    val = g.valences()
    forest = g.forest or frozenset()
    keys = []
    for h in range(g.num_half_edges):
        v = g.vertex_of[h]
        keys.append((val[v], g.is_loop(h), h in forest,
                     g.colors[v] if g.colors is not None else 0))
    return _rank(keys)


def _refine(g: HalfEdgeGraph, halves, col):
    n = len(col)
    count = len(set(col))
    while True:
        vsig = [tuple(sorted(col[x] for x in hs)) for hs in halves]
        keys = []
        for h in range(n):
            key = (col[h], col[g.partner[h]], vsig[g.vertex_of[h]])
            if g.rotation is not None:
                seq = [col[h]]
                x = g.rotation[h]
                while x != h:
                    seq.append(col[x])
                    x = g.rotation[x]
                key += (tuple(seq),)
            keys.append(key)
        col = _rank(keys)
        new_count = len(set(col))
        if new_count == count:
            return col
        count = new_count


def _certificate(g: HalfEdgeGraph, pos):
    n = len(pos)
    inv = [0] * n
    for h, p in enumerate(pos):
        inv[p] = h
    vid = {}
    for p in range(n):
        v = g.vertex_of[inv[p]]
        if v not in vid:
            vid[v] = len(vid)
    forest = g.forest or frozenset()
    return (
        tuple(pos[g.partner[inv[p]]] for p in range(n)),
        tuple(vid[g.vertex_of[inv[p]]] for p in range(n)),
        tuple(pos[g.rotation[inv[p]]] for p in range(n)) if g.rotation is not None else (),
        tuple(inv[p] in forest for p in range(n)) if g.forest is not None else (),
        tuple(g.colors[v] for v in sorted(vid, key=vid.get)) if g.colors is not None else (),
    )


@lru_cache(maxsize=400_000)
def canonicalize(g: HalfEdgeGraph) -> CanonicalForm:
    """Canonical representative, labeling and automorphism group.

    Individualization-refinement on half-edges.  Leaves are compared by their
    certificate; equal certificates give automorphisms, which prune children
    lying in an already explored orbit of the current pointwise stabilizer.
    """
    n = g.num_half_edges
    if n == 0:
        return CanonicalForm(g, (), (), 1)
    halves = [[] for _ in range(g.num_vertices)]
    for h, v in enumerate(g.vertex_of):
        halves[v].append(h)
    st = {"first": None, "first_lab": None, "best": None, "best_lab": None, "path": None}
    gens = []

    def record(lab_a, lab_b):
        inv_b = invert(lab_b)
        a = tuple(inv_b[lab_a[h]] for h in range(n))
        if a != tuple(range(n)) and a not in gens:
            gens.append(a)

    def search(col, prefix):
        col = _refine(g, halves, col)
        if len(set(col)) == n:
            cert = _certificate(g, col)
            lab = tuple(col)
            if st["first"] is None:
                st.update(first=cert, first_lab=lab, best=cert, best_lab=lab, path=list(prefix))
            elif cert == st["first"]:
                record(lab, st["first_lab"])
            elif cert < st["best"]:
                st.update(best=cert, best_lab=lab)
            elif cert == st["best"]:
                record(lab, st["best_lab"])
            return
        sizes = {}
        for c in col:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        explored = []
        for h in range(n):
            if col[h] != target:
                continue
            stab = [a for a in gens if all(a[p] == p for p in prefix)]
            if any(h in orbit(e, stab) for e in explored):
                continue
            explored.append(h)
            search(_rank([(c, 0 if (c != target or x == h) else 1) for x, c in enumerate(col)]),
                   prefix + (h,))

    search(_initial_colors(g), ())
    cert = st["best"]
    canon = HalfEdgeGraph(
        partner=cert[0],
        vertex_of=cert[1],
        num_vertices=g.num_vertices,
        rotation=cert[2] if g.rotation is not None else None,
        forest=frozenset(p for p, f in enumerate(cert[3]) if f) if g.forest is not None else None,
        colors=cert[4] if g.colors is not None else None,
    )
    lab = tuple(range(n)) if canon == g else st["best_lab"]
    order = 1
    path = st["path"]
    for d, v in enumerate(path):
        stab = [a for a in gens if all(a[p] == p for p in path[:d])]
        order *= len(orbit(v, stab))
    inv = invert(lab)
    cgens = tuple(sorted(compose(lab, compose(a, inv)) for a in gens))
    return CanonicalForm(canon, lab, cgens, order)


def automorphisms(g: HalfEdgeGraph) -> tuple:
    """(generators, order) of the decoration-preserving automorphism group of g."""
    cf = canonicalize(g)
    lab = cf.labeling
    inv = invert(lab)
    return [compose(inv, compose(a, lab)) for a in cf.generators], cf.order


def automorphism_group(g: HalfEdgeGraph) -> list:
    gens, _ = automorphisms(g)
    return group_elements(gens, g.num_half_edges)


@lru_cache(maxsize=200_000)
def _zero_canonical(canon: HalfEdgeGraph, kind: str) -> bool:
    cf = canonicalize(canon)
    std = standard_orientation(canon)
    return any(orientation_sign(a, canon, canon, std, std, kind) < 0 for a in cf.generators)


def is_zero_by_symmetry(g: HalfEdgeGraph, kind: str = "plain") -> bool:
    return _zero_canonical(canonicalize(g).graph, kind)


def canonical_term(g: HalfEdgeGraph, o: Orientation, kind: str = "plain"):
    """(canonical graph, sign) with g,o = sign * (canonical, standard), or None if zero."""
    cf = canonicalize(g)
    if _zero_canonical(cf.graph, kind):
        return None
    return cf.graph, orientation_sign(cf.labeling, g, cf.graph, o, standard_orientation(cf.graph), kind)


def sort_key(g: HalfEdgeGraph):
    return (g.num_vertices, g.num_edges, _certificate(g, list(range(g.num_half_edges))))


# ---------------------------------------------------------------- operations

def relabel(g: HalfEdgeGraph, keep: Sequence[int], vmap: dict, nv: int, partner=None,
            rotation=None, forest=None):
    """Restrict to the half-edges in keep (renumbered in that order)."""
    newh = {x: i for i, x in enumerate(keep)}
    part = partner if partner is not None else g.partner
    rot = None
    if rotation is not None:
        rot = tuple(newh[rotation[x]] for x in keep)
    fr = None
    if forest is not None:
        fr = frozenset(newh[x] for x in forest if x in newh)
    cols = None
    if g.colors is not None:
        cols = [None] * nv
        for v, nvid in vmap.items():
            cols[nvid] = g.colors[v]
        cols = tuple(cols)
    return HalfEdgeGraph(
        partner=tuple(newh[part[x]] for x in keep),
        vertex_of=tuple(vmap[g.vertex_of[x]] for x in keep),
        num_vertices=nv, rotation=rot, forest=fr, colors=cols,
    ), newh


def collapse_edge(g: HalfEdgeGraph, o: Orientation, h: int):
    """Collapse the edge containing half-edge h.

    Returns (graph, orientation, sign) or None when the edge is a loop.  The
    merged vertex comes first, other vertices keep their relative order and
    the spliced rotation is (a_1..a_p, b_1..b_q) for cyclic orders
    (h a_1..a_p) and (h̄ b_1..b_q).
    """
    hb = g.partner[h]
    v, w = g.vertex_of[h], g.vertex_of[hb]
    if v == w:
        return None
    sign = signs.collapse_sign(o.vertex_order, v, w, h in o.initial)
    rest = [u for u in o.vertex_order if u != v and u != w]
    vmap = {v: 0, w: 0}
    for i, u in enumerate(rest):
        vmap[u] = i + 1
    keep = [x for x in range(g.num_half_edges) if x != h and x != hb]
    rot = None
    if g.rotation is not None:
        r = g.rotation
        rot = {}
        for x in keep:
            s = r[x]
            guard = 0
            while s == h or s == hb:
                s = r[hb] if s == h else r[h]
                guard += 1
                if guard > 4:
                    raise StructuralError("cannot splice a bare edge")
            rot[x] = s
    forest = None
    if g.forest is not None:
        forest = g.forest - {h, hb}
    ng, newh = relabel(g, keep, vmap, g.num_vertices - 1, rotation=rot, forest=forest)
    no = Orientation(
        vertex_order=tuple(range(g.num_vertices - 1)),
        initial=frozenset(newh[x] for x in o.initial if x in newh),
        forest_order=tuple(newh[x] for x in o.forest_order if x in newh),
    )
    return ng, no, sign


def reglue(g: HalfEdgeGraph, o: Orientation, pairing: Sequence[int]):
    """Regluing g along a new involution; orientation by the chord rule.

    Returns (graph, orientation, sign, circle count)."""
    sign, init, circles = signs.chord_orientation(g.partner, o.initial, pairing)
    ng = HalfEdgeGraph(tuple(pairing), g.vertex_of, g.num_vertices, g.rotation, g.forest, g.colors)
    return ng, Orientation(o.vertex_order, init, o.forest_order), sign, circles


def pair_swap(g: HalfEdgeGraph, x: int, y: int) -> tuple:
    """The involution pi_xy pairing {x,y} and {x̄,ȳ}."""
    p = list(g.partner)
    xb, yb = p[x], p[y]
    p[x], p[y], p[xb], p[yb] = y, x, yb, xb
    return tuple(p)


def disjoint_union(g1: HalfEdgeGraph, o1: Orientation, g2: HalfEdgeGraph, o2: Orientation):
    n1, v1 = g1.num_half_edges, g1.num_vertices
    rot = None
    if g1.rotation is not None or g2.rotation is not None:
        if g1.rotation is None or g2.rotation is None:
            if g1.num_half_edges and g2.num_half_edges:
                raise StructuralError("cannot mix ribbon and plain graphs")
        r1 = g1.rotation or ()
        r2 = g2.rotation or ()
        rot = tuple(r1) + tuple(x + n1 for x in r2)
    forest = None
    if g1.forest is not None or g2.forest is not None:
        forest = frozenset(g1.forest or ()) | frozenset(x + n1 for x in (g2.forest or ()))
    colors = None
    if g1.colors is not None or g2.colors is not None:
        colors = tuple(g1.colors or ()) + tuple(g2.colors or ())
    g = HalfEdgeGraph(
        tuple(g1.partner) + tuple(x + n1 for x in g2.partner),
        tuple(g1.vertex_of) + tuple(v + v1 for v in g2.vertex_of),
        v1 + g2.num_vertices, rot, forest, colors,
    )
    o = Orientation(
        tuple(o1.vertex_order) + tuple(v + v1 for v in o2.vertex_order),
        frozenset(o1.initial) | frozenset(x + n1 for x in o2.initial),
        tuple(o1.forest_order) + tuple(x + n1 for x in o2.forest_order),
    )
    return g, o


def subgraph(g: HalfEdgeGraph, o: Orientation, vertices) -> tuple:
    """Union of whole components; vertex order inherited from o."""
    vs = set(vertices)
    order = [v for v in o.vertex_order if v in vs]
    vmap = {v: i for i, v in enumerate(order)}
    keep = [h for h in range(g.num_half_edges) if g.vertex_of[h] in vs]
    if any(g.vertex_of[g.partner[h]] not in vs for h in keep):
        raise StructuralError("vertex set is not a union of components")
    sg, newh = relabel(g, keep, vmap, len(order), rotation=g.rotation, forest=g.forest)
    so = Orientation(
        tuple(range(len(order))),
        frozenset(newh[h] for h in o.initial if h in newh),
        tuple(newh[h] for h in o.forest_order if h in newh),
    )
    return sg, so


EMPTY = HalfEdgeGraph((), (), 0)


def from_edge_list(num_vertices: int, edges, rotation_by_vertex=None, forest_edges=()) -> HalfEdgeGraph:
    """Build a graph from (u, v) pairs; edge i gets half-edges 2i (at u), 2i+1 (at v).

    rotation_by_vertex, if given, lists half-edges in cyclic order per vertex.
    forest_edges lists edge indices.
    """
    partner, vertex_of = [], []
    for i, (u, v) in enumerate(edges):
        partner += [2 * i + 1, 2 * i]
        vertex_of += [u, v]
    rot = None
    if rotation_by_vertex is not None:
        rot = [None] * len(partner)
        for cyc in rotation_by_vertex:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                rot[a] = b
        rot = tuple(rot)
    forest = None
    if forest_edges is not None and (forest_edges or forest_edges == ()):
        forest = frozenset(x for i in forest_edges for x in (2 * i, 2 * i + 1)) if forest_edges else None
    return HalfEdgeGraph(tuple(partner), tuple(vertex_of), num_vertices, rot, forest)


# ---------------------------------------------------------------- enumeration

def _multigraph_matrices(k: int, num_edges: int, min_valence: int, max_valence: int | None):
    """Loop counts and edge multiplicities with the right degree bounds."""
    slots = [(u, v) for u in range(k) for v in range(u, k)]
    deg = [0] * k
    mult = {}

    def rec(i, left):
        if i == len(slots):
            if left == 0 and all(d >= min_valence for d in deg):
                yield dict(mult)
            return
        u, v = slots[i]
        for m in range(left + 1):
            add_u = 2 * m if u == v else m
            add_v = 0 if u == v else m
            if max_valence is not None and (deg[u] + add_u > max_valence or deg[v] + add_v > max_valence):
                break
            deg[u] += add_u
            deg[v] += add_v
            mult[(u, v)] = m
            # vertex u receives nothing after its last slot
            ok = True
            if v == k - 1 and deg[u] < min_valence:
                ok = False
            if ok:
                yield from rec(i + 1, left - m)
            deg[u] -= add_u
            deg[v] -= add_v
        mult.pop((u, v), None)

    yield from rec(0, num_edges)


def graph_from_multiplicities(k: int, mult: dict) -> HalfEdgeGraph:
    edges = []
    for (u, v), m in sorted(mult.items()):
        edges += [(u, v)] * m
    return from_edge_list(k, edges)


def enumerate_multigraphs(k: int, num_edges: int, min_valence: int = 3,
                          max_valence: int | None = None, connected: bool = True) -> list:
    """Canonical plain graphs with k vertices and the given edge count."""
    if k < 1:
        return []
    found = {}
    for mult in _multigraph_matrices(k, num_edges, min_valence, max_valence):
        g = graph_from_multiplicities(k, mult)
        if connected and not g.is_connected():
            continue
        c = canonicalize(g).graph
        found[c] = True
    return sorted(found, key=sort_key)


def enumerate_graphs(k: int, r: int, min_valence: int = 3, connected: bool = True,
                     max_valence: int | None = None) -> list:
    """One canonical representative per isomorphism class of graphs with k
    vertices and first Betti number r."""
    if connected:
        return enumerate_multigraphs(k, k + r - 1, min_valence, max_valence, True)
    out = []
    for c in range(1, k + 1):
        e = r + k - c
        if e < 0:
            continue
        out += [g for g in enumerate_multigraphs(k, e, min_valence, max_valence, False)
                if len(g.components()) == c]
    return sorted(set(out), key=sort_key)


def ribbon_structures(g: HalfEdgeGraph) -> list:
    """All rotation systems on g, up to decorated isomorphism."""
    per_vertex = []
    for v in range(g.num_vertices):
        hs = g.halves_at(v)
        first, rest = hs[0], hs[1:]
        per_vertex.append([(first,) + p for p in itertools.permutations(rest)])
    found = {}
    for choice in itertools.product(*per_vertex):
        rot = [0] * g.num_half_edges
        for cyc in choice:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                rot[a] = b
        rg = HalfEdgeGraph(g.partner, g.vertex_of, g.num_vertices, tuple(rot), g.forest, g.colors)
        found[canonicalize(rg).graph] = True
    return sorted(found, key=sort_key)


def is_one_particle_irreducible(g: HalfEdgeGraph) -> bool:
    base = len(g.components())
    for h, p in g.edges():
        if g.is_loop(h):
            continue
        keep = [x for x in range(g.num_half_edges) if x != h and x != p]
        vmap = {v: v for v in range(g.num_vertices)}
        try:
            sub, _ = relabel(g, keep, vmap, g.num_vertices)
        except StructuralError:
            return False  # an endpoint became isolated, so e was a bridge
        if len(sub.components()) != base:
            return False
    return True


def spanning_forests(g: HalfEdgeGraph, k: int) -> list:
    """Acyclic edge sets (named by smaller half-edge) leaving exactly k trees."""
    size = g.num_vertices - k
    if size < 0:
        return []
    candidates = [h for h, _ in g.edges() if not g.is_loop(h)]
    out = []
    for subset in itertools.combinations(candidates, size):
        parent = list(range(g.num_vertices))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        ok = True
        for h in subset:
            a, b = find(g.vertex_of[h]), find(g.vertex_of[g.partner[h]])
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            out.append(frozenset(subset))
    return out


def with_forest(g: HalfEdgeGraph, forest_edges) -> HalfEdgeGraph:
    halves = frozenset(x for h in forest_edges for x in (h, g.partner[h]))
    return HalfEdgeGraph(g.partner, g.vertex_of, g.num_vertices, g.rotation, halves, g.colors)


# ---------------------------------------------------------------- exchange records

def to_record(g: HalfEdgeGraph, o: Orientation | None = None) -> dict:
    rec = {
        "half_edges": list(range(g.num_half_edges)),
        "involution": [list(e) for e in g.edges()],
        "vertex_of": {str(h): v for h, v in enumerate(g.vertex_of)},
        "decoration": {},
    }
    if g.rotation is not None:
        rec["decoration"]["cyclic_orders"] = [list(g.cyclic_order_at(v)) for v in range(g.num_vertices)]
    if g.forest is not None:
        rec["decoration"]["forest"] = g.forest_edges()
    if g.colors is not None:
        rec["decoration"]["colors"] = list(g.colors)
    o = o or standard_orientation(g)
    if g.forest is not None:
        rec["orientation"] = {"forest_order": list(o.forest_order)}
    else:
        rec["orientation"] = {
            "vertex_order": list(o.vertex_order),
            "edge_directions": sorted(o.initial),
        }
    return rec


def from_record(rec: dict) -> tuple:
    hs = list(rec["half_edges"])
    index = {h: i for i, h in enumerate(hs)}
    n = len(hs)
    partner = [None] * n
    for a, b in rec["involution"]:
        partner[index[a]] = index[b]
        partner[index[b]] = index[a]
    if any(p is None for p in partner):
        raise StructuralError("involution does not cover every half-edge")
    raw_v = rec["vertex_of"]
    vids = sorted({raw_v[str(h)] for h in hs})
    vmap = {v: i for i, v in enumerate(vids)}
    vertex_of = tuple(vmap[raw_v[str(h)]] for h in hs)
    deco = rec.get("decoration", {})
    rot = None
    if "cyclic_orders" in deco:
        rot = [None] * n
        for cyc in deco["cyclic_orders"]:
            cyc = [index[h] for h in cyc]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                rot[a] = b
        rot = tuple(rot)
    forest = None
    if "forest" in deco:
        forest = frozenset(x for h in deco["forest"] for x in (index[h], partner[index[h]]))
    colors = tuple(deco["colors"]) if "colors" in deco else None
    g = HalfEdgeGraph(tuple(partner), vertex_of, len(vids), rot, forest, colors)
    od = rec.get("orientation", {})
    o = Orientation(
        tuple(vmap[v] for v in od.get("vertex_order", vids)),
        frozenset(index[h] for h in od.get("edge_directions", [])),
        tuple(index[h] for h in od.get("forest_order", [])),
    )
    if not od.get("edge_directions") and forest is None:
        o = Orientation(o.vertex_order, standard_orientation(g).initial, o.forest_order)
    return g, o
