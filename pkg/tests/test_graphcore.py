import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graphcx import graphcore as gc
from graphcx import signs


def theta():
    return gc.from_edge_list(2, [(0, 1)] * 3)


def k4():
    return gc.from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def brute_automorphisms(g):
    """Every half-edge permutation preserving the whole structure."""
    n = g.num_half_edges
    return [p for p in itertools.permutations(range(n)) if gc.is_isomorphism(p, g, g)]


def edge_list_key(k, edges):
    # isomorphism class of a multigraph by brute force over vertex relabelings
    best = None
    for perm in itertools.permutations(range(k)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def brute_count(k, r, min_valence):
    """Connected multigraphs (loops allowed) with k vertices and first Betti number r."""
    e = k + r - 1
    pairs = [(u, v) for u in range(k) for v in range(u, k)]
    seen = set()
    for combo in itertools.combinations_with_replacement(pairs, e):
        val = [0] * k
        for u, v in combo:
            val[u] += 1
            val[v] += 1
        if min(val) < min_valence:
            continue
        g = gc.from_edge_list(k, combo)
        if not g.is_connected():
            continue
        seen.add(edge_list_key(k, combo))
    return len(seen)


def test_involution_checked():
    with pytest.raises(gc.StructuralError):
        gc.HalfEdgeGraph((0, 1), (0, 0), 1)
    with pytest.raises(gc.StructuralError):
        gc.HalfEdgeGraph((1, 0), (0, 2), 2)


def test_rank_and_counts():
    g = theta()
    assert (g.num_vertices, g.num_edges, g.rank) == (2, 3, 2)
    assert k4().rank == 3
    two = gc.from_edge_list(2, [(0, 0), (1, 1)])
    assert len(two.components()) == 2 and two.rank == 2


@pytest.mark.parametrize("g,order", [(theta(), 12), (k4(), 24),
                                     (gc.from_edge_list(1, [(0, 0), (0, 0)]), 8),
                                     (gc.from_edge_list(3, [(0, 1), (1, 2), (2, 0)]), 6)])
def test_automorphism_group_matches_brute_force(g, order):
    brute = brute_automorphisms(g) if g.num_half_edges <= 8 else None
    group = gc.automorphism_group(g)
    assert len(group) == order
    assert gc.automorphisms(g)[1] == order
    if brute is not None:
        assert sorted(group) == sorted(brute)
    assert all(gc.is_isomorphism(a, g, g) for a in group)


def test_canonical_form_is_idempotent():
    for g in gc.enumerate_graphs(4, 3) + gc.enumerate_graphs(2, 3):
        cf = gc.canonicalize(g)
        assert cf.graph == g
        assert cf.labeling == tuple(range(g.num_half_edges))


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(12))), st.permutations(list(range(4))))
def test_isomorphic_inputs_share_canonical_form(hperm, vperm):
    g = k4()
    # relabel half-edges by hperm and vertices by vperm
    inv = gc.invert(hperm)
    partner = tuple(hperm[g.partner[inv[h]]] for h in range(12))
    vertex_of = tuple(vperm[g.vertex_of[inv[h]]] for h in range(12))
    h = gc.HalfEdgeGraph(partner, vertex_of, 4)
    cf = gc.canonicalize(h)
    assert cf.graph == gc.canonicalize(g).graph
    assert gc.is_isomorphism(cf.labeling, h, cf.graph)


@pytest.mark.parametrize("k,r", [(1, 2), (2, 2), (2, 3), (3, 3), (4, 3), (3, 2)])
def test_enumeration_matches_brute_force(k, r):
    assert len(gc.enumerate_graphs(k, r, min_valence=3)) == brute_count(k, r, 3)


def test_enumeration_unreduced_matches_brute_force():
    for k, r in [(2, 2), (3, 2), (4, 2)]:
        assert len(gc.enumerate_graphs(k, r, min_valence=2)) == brute_count(k, r, 2)


def test_zero_by_symmetry():
    # a single loop can be flipped: odd automorphism
    assert gc.is_zero_by_symmetry(gc.from_edge_list(1, [(0, 0), (0, 0)]))
    assert not gc.is_zero_by_symmetry(theta())
    # K4 is nonzero in the commutative complex
    assert not gc.is_zero_by_symmetry(k4())


def test_orientation_sign_of_edge_flip():
    g = theta()
    o = gc.standard_orientation(g)
    flipped = gc.Orientation(o.vertex_order, frozenset({1}) | (o.initial - {0}))
    assert gc.relative_sign(g, o, flipped) == -1
    swapped = gc.Orientation((1, 0), o.initial)
    assert gc.relative_sign(g, o, swapped) == -1
    assert gc.relative_sign(g, flipped, gc.Orientation((1, 0), flipped.initial)) == -1


def test_canonical_term_respects_orientation():
    g = k4()
    o = gc.standard_orientation(g)
    canon, s = gc.canonical_term(g, o)
    rev = gc.Orientation(tuple(reversed(o.vertex_order)), o.initial)
    canon2, s2 = gc.canonical_term(g, rev)
    assert canon == canon2
    assert s2 == s * signs.reorder_sign(rev.vertex_order, o.vertex_order)


def test_collapse_edge_of_theta_gives_rose():
    g = theta()
    o = gc.standard_orientation(g)
    res = gc.collapse_edge(g, o, 0)
    assert res is not None
    rose = res[0]
    assert rose.num_vertices == 1 and rose.num_edges == 2


def test_one_particle_irreducible():
    assert gc.is_one_particle_irreducible(theta())
    dumbbell = gc.from_edge_list(2, [(0, 0), (0, 1), (1, 1)])
    assert not gc.is_one_particle_irreducible(dumbbell)


def test_record_round_trip():
    g = gc.with_forest(k4(), [0, 2])
    rec = gc.to_record(g)
    back, _ = gc.from_record(rec)
    assert back == g
    rg = gc.ribbon_structures(theta())[0]
    back, _ = gc.from_record(gc.to_record(rg))
    assert back == rg


def test_ribbon_structures_of_theta():
    # two cyclic orders at each trivalent vertex, up to isomorphism: planar and genus one
    assert len(gc.ribbon_structures(theta())) == 2


def test_spanning_forests():
    # k counts trees: K4 has 16 spanning trees and 6 single-edge forests
    assert len(gc.spanning_forests(k4(), 1)) == 16
    assert len(gc.spanning_forests(k4(), 3)) == 6
