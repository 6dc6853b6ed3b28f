import pytest

from graphcx import complexes as cx
from graphcx import graphcore as gc
from graphcx import surfaces as sf


def ribbon(nv, edges, rotation):
    return gc.from_edge_list(nv, edges, rotation_by_vertex=rotation)


def test_planar_theta():
    # half-edges 0,2,4 at vertex 0 and 1,3,5 at vertex 1; opposite orders embed in the plane
    g = ribbon(2, [(0, 1)] * 3, [[0, 2, 4], [1, 5, 3]])
    assert len(sf.boundary_cycles(g)) == 3
    assert sf.classify(g) == sf.SurfaceInvariant(0, 3)


def test_torus_theta():
    g = ribbon(2, [(0, 1)] * 3, [[0, 2, 4], [1, 3, 5]])
    assert len(sf.boundary_cycles(g)) == 1
    assert sf.classify(g) == sf.SurfaceInvariant(1, 1)


def test_one_vertex_two_loops():
    # a b a' b' interleaved: one boundary circuit, genus one
    g = ribbon(1, [(0, 0), (0, 0)], [[0, 2, 1, 3]])
    assert sf.classify(g) == sf.SurfaceInvariant(1, 1)
    # a a' b b' nested: a pair of pants
    h = ribbon(1, [(0, 0), (0, 0)], [[0, 1, 2, 3]])
    assert sf.classify(h) == sf.SurfaceInvariant(0, 3)


def test_boundary_cycles_partition_half_edges():
    for k in (1, 2, 3, 4):
        for g in cx.basis("associative", 3, k):
            cyc = sf.boundary_cycles(g)
            assert sorted(h for c in cyc for h in c) == list(range(g.num_half_edges))


def test_needs_ribbon_structure():
    with pytest.raises(gc.StructuralError):
        sf.boundary_cycles(gc.from_edge_list(2, [(0, 1)] * 3))
    two = ribbon(2, [(0, 0), (1, 1)], [[0, 1], [2, 3]])
    with pytest.raises(gc.StructuralError):
        sf.classify(two)


def test_rank_two_split():
    split = sf.SurfaceSplit(2)
    assert split.surfaces() == [sf.SurfaceInvariant(0, 3), sf.SurfaceInvariant(1, 1)]
    assert split.off_diagonal_entries() == 0
    whole = split.complex.homology()
    per = [split.homology(s) for s in split.surfaces()]
    assert per == [{1: 0, 2: 1}, {1: 0, 2: 1}]
    assert {k: sum(h[k] for h in per) for k in whole} == whole


def test_rank_three_split():
    split = sf.SurfaceSplit(3)
    assert split.off_diagonal_entries() == 0
    genus_sum = set(2 * s.g + s.b for s in split.surfaces())
    # 2g + b - 1 is the rank of every ribbon graph here
    assert genus_sum == {4}
    tot = [0, 0]
    for s in split.surfaces():
        e = split.euler(s)
        tot = [tot[0] + e[0], tot[1] + e[1]]
    assert tuple(tot) == split.complex.euler_characteristic()


def test_collapse_keeps_surface():
    for k in (2, 3, 4):
        for g in cx.basis("associative", 3, k):
            assert sf.collapse_preserves_surface(g)
