import random
from fractions import Fraction

import pytest

from graphcx import complexes as cx
from graphcx import exactla as la
from graphcx import graphcore as gc
from graphcx import statesum as ss
from graphcx import verify as vf

ONE = Fraction(1)
THETA = gc.canonicalize(gc.from_edge_list(2, [(0, 1)] * 3)).graph
p1, q1, p2, q2 = ss.p(1), ss.q(1), ss.p(2), ss.q(2)


def test_symplectic_form():
    assert ss.omega(p1, q1) == 1
    assert ss.omega(q1, p1) == -1
    assert ss.omega(p1, q2) == 0
    assert ss.omega(p1, p1) == 0


def test_wedge_is_alternating():
    a = ss.spider("c", [p1, q1, p2])
    b = ss.spider("c", [q2, q2, p1])
    assert ss.wedge_of(a, a) == {}
    ab, ba = ss.wedge_of(a, b), ss.wedge_of(b, a)
    key = next(iter(ab))
    assert ab[key] == -ba[key]


def test_assoc_spider_is_cyclic():
    assert ss.spider("a", [p1, q1, p2]) == ss.spider("a", [q1, p2, p1])
    assert ss.spider("a", [p1, q1, p2]) != ss.spider("a", [q1, p1, p2])


def test_theta_state_count():
    # one state per edge label and direction: (2n)^3 signed states, summed by wedge
    w = ss.phi_generator(THETA, 1)
    assert sum(abs(c) for c in w.values()) <= 8
    assert sum(abs(c) for c in ss.phi_generator(THETA, 2).values()) <= 64
    assert w


def test_psi_of_p_only_labels_vanishes():
    w = ss.wedge_of(ss.spider("c", [p1, p1, p2]), ss.spider("c", [p1, p2, p2]))
    assert ss.psi(w) == {}


def test_psi_single_pairing_sign():
    a, b = ss.spider("c", [p1, p1, p1]), ss.spider("c", [q1, q1, q1])
    # 3! chord matchings, each omega(p, q) = 1 and each the theta graph
    assert ss.psi_wedge((a, b)) == {THETA: 6}
    # from the q side every chord has omega(q, p) = -1; reorienting back costs
    # one vertex swap and three edge flips, so the total sign is -1
    assert ss.psi_wedge((b, a)) == {THETA: -6}
    assert ss.psi(ss.wedge_of(b, a)) == {THETA: -6}


def test_m_of_theta_is_polynomial_in_n():
    vals = [ss.M_generator(THETA, n)[THETA] for n in range(1, 6)]
    assert vals[0] == 24
    # at most three circles, so degree <= 3 in n
    d = vals
    for _ in range(4):
        d = [b - a for a, b in zip(d, d[1:])]
    assert d == [0]


@pytest.mark.parametrize("variant", ["commutative", "associative"])
@pytest.mark.parametrize("n", [1, 2])
def test_psi_phi_equals_m(variant, n):
    for g in ss.generators_up_to(6, variant):
        assert ss.check_psi_phi(g, n) == {}


@pytest.mark.parametrize("variant", ["commutative", "associative"])
def test_phi_intertwines(variant):
    for g in ss.generators_up_to(6, variant):
        assert ss.check_phi_intertwines(g, 1) == {}


def test_psi_chain_map_and_d_squared():
    rng = random.Random(3)
    pool = sorted({w for g in ss.generators_up_to(6, "commutative") for w in ss.phi_generator(g, 2)})
    assert pool
    for w in rng.sample(pool, min(25, len(pool))):
        assert ss.check_psi_chain_map({w: ONE}, 2) == {}
        assert ss.lie_boundary(ss.lie_boundary({w: ONE})) == {}


def test_stability():
    for g in ss.generators_up_to(6, "associative"):
        assert vf._stability_defect(g, 1) == {}


def test_sp_table():
    assert vf.sp_defects(1) == []
    assert vf.sp_defects(2) == []


def test_m_blocks_invertible_at_four():
    for (variant, k, m), gens in vf.M_blocks(4, 1).items():
        assert la.determinant(ss.M_block_matrix(gens, 4)) != 0


def test_caps():
    big = gc.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    with pytest.raises(cx.CapError):
        ss.phi_generator(THETA, 4)
    with pytest.raises(cx.CapError):
        ss.phi_generator(gc.from_edge_list(2, [(0, 1)] * 6), 1)
    assert ss.M_generator(THETA, 7)
    assert big.num_half_edges == 12
    with pytest.raises(cx.CapError):
        ss.M_generator(big, 1)
