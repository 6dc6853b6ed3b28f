from fractions import Fraction

import pytest

from graphcx import calculus as cl
from graphcx import complexes as cx
from graphcx import graphcore as gc
from graphcx import verify as vf

ONE = Fraction(1)


def canon(nv, edges):
    return gc.canonicalize(gc.from_edge_list(nv, edges)).graph


THETA = canon(2, [(0, 1)] * 3)
K4 = canon(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.mark.parametrize("variant,r", [("commutative", 2), ("commutative", 3), ("associative", 2),
                                       ("associative", 3), ("forested", 2), ("forested", 3),
                                       ("polygon", 1)])
def test_d_squared(variant, r):
    c = cx.GraphComplex(variant, r)
    assert c.check_d_squared()
    chi_dims, chi_betti = c.euler_characteristic()
    assert chi_dims == chi_betti


def test_commutative_rank_two():
    c = cx.GraphComplex("commutative", 2)
    assert c.homology() == {1: 0, 2: 1}
    assert c.basis(2) == [THETA]


def test_commutative_has_no_loops():
    for k in (1, 2, 3, 4):
        for g in cx.basis("commutative", 3, k):
            assert not any(g.is_loop(h) for h in range(g.num_half_edges))


def test_polygon_period_four():
    h = cx.GraphComplex("polygon", 1).homology()
    assert [k for k, b in h.items() if b] == [3, 7, 11]
    assert all(b <= 1 for b in h.values())


def test_forested_rank_two_relator_by_hand():
    c = cx.GraphComplex("forested", 2)
    raw = c.raw_basis(1)
    # theta with one forest edge, and the dumbbell with its bridge in the forest
    theta_f = gc.canonicalize(gc.with_forest(gc.from_edge_list(2, [(0, 1)] * 3), [0])).graph
    dumbbell_f = gc.canonicalize(gc.with_forest(gc.from_edge_list(2, [(0, 0), (0, 1), (1, 1)]), [2])).graph
    assert sorted(raw, key=gc.sort_key) == sorted([theta_f, dumbbell_f], key=gc.sort_key)
    # collapsing the forest edge gives the rose; its three blow-ups are D, T, T
    # both theta blow-ups carry the same one-edge forest order, so they add up
    assert cx.ihx_relators(2, 1) == [{dumbbell_f: 1, theta_f: 2}]


def test_forested_homology():
    assert cx.GraphComplex("forested", 2).homology() == {1: 0, 2: 1}
    assert cx.GraphComplex("forested", 3).homology() == {1: 0, 2: 0, 3: 0, 4: 1}


def test_ihx_quotient_matches_lie_spiders():
    for r in (2, 3):
        c = cx.GraphComplex("forested", r)
        for k in c.degrees():
            assert len(c.basis(k)) == cx.translated_rank(r, k) == cx.lie_ograph_dimension(r, k)


def test_relators_translate_to_zero():
    for k in (1, 2, 3):
        for g in cx.basis("forested", 3, k):
            for e in g.forest_edges():
                assert vf.raw_relator_image(g, e) == {}


def test_translation_commutes_with_boundary():
    for k in cx.GraphComplex("forested", 3).degrees():
        for g in cx.basis("forested", 3, k):
            assert vf.translation_square_defect(g) == {}


def test_caps():
    with pytest.raises(cx.CapError):
        cx.basis("commutative", 4, 6)
    with pytest.raises(cx.CapError):
        cx.basis("commutative", 3, 4, max_half_edges=10)
    with pytest.raises(ValueError):
        cx.basis("nope", 2, 2)


def test_zero_generators_never_in_bases():
    for variant in ("commutative", "associative"):
        for k in (1, 2, 3, 4):
            for g in cx.basis(variant, 3, k):
                assert not gc.is_zero_by_symmetry(g)


# boundary calculus

def gens(variant, m, reduced=True):
    return vf.plain_generators(variant, m, reduced)


@pytest.mark.parametrize("variant,m,reduced", [("commutative", 10, True), ("commutative", 8, False),
                                               ("associative", 8, True)])
def test_dh_squared_and_anticommutation(variant, m, reduced):
    for g in gens(variant, m, reduced):
        assert cl.dH(cl.dH_generator(g)) == {}
        assert cx.combine((1, cl.dH(cx.dE_generator(g))), (1, cx.dE(cl.dH_generator(g)))) == {}


def test_bracket_of_theta_with_itself():
    got = cl.bracket({THETA: ONE}, {THETA: ONE})
    k4_e = canon(3, [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)])
    assert got == {k4_e: Fraction(-36)}


def test_bracket_direct_equals_deviation():
    small = [g for g in gens("commutative", 8, False) if g.is_connected()]
    for a in small:
        for b in small:
            x, y = {a: ONE}, {b: ONE}
            assert cl.bracket(x, y) == cl.bracket_by_deviation(x, y)


def test_bracket_of_theta_cycles_is_a_boundary():
    z = cl.bracket({THETA: ONE}, {THETA: ONE})
    w = cl.boundary_witness(z, "commutative")
    assert w is not None
    assert cx.combine((1, cx.dE(w)), (-1, z)) == {}


def test_theta_vanishes_on_small_graphs():
    assert cl.theta({THETA: ONE}) == {}
    assert cl.theta({K4: ONE}) == {}


def test_theta_of_a_two_edge_join():
    pieces = [g for g in gens("commutative", 12) if g.is_connected() and gc.is_one_particle_irreducible(g)]
    joins = vf.two_edge_joins(pieces, 18)
    assert joins
    g = joins[0]
    t = cl.theta({g: ONE})
    assert t
    assert t == cl.theta_by_deviation({g: ONE})
    assert cl.theta_homotopy_defect(g) == {}
    # cutting a two-edge cut loses one loop, closing each side adds one back
    for (a, b) in t:
        assert a.is_connected() and b.is_connected()
        assert a.rank + b.rank == g.rank + 1
