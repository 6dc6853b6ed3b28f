import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphcx import exactla as la
from graphcx import operadspiders as op


def nf(expr, root=0):
    return op.lie_normal_form(op.tree_from_bracket(expr, root))


def vector(s, words):
    d = s.as_dict()
    return {i: d[w] for i, w in enumerate(words) if w in d}


def test_comm_mating_multiplies_weights():
    s = op.CommSpider(frozenset("abc"), Fraction(2))
    t = op.CommSpider(frozenset("xy"), Fraction(3))
    u = s.mate("a", "x", t)
    assert u.legs == frozenset("bcy") and u.weight == 6
    with pytest.raises(op.SpiderError):
        s.mate("z", "x", t)
    with pytest.raises(op.SpiderError):
        s.mate("a", "x", op.AssocSpider.of(("x", "y")))


def test_assoc_mating_concatenates():
    s = op.AssocSpider.of(("l", "a", "b"))
    t = op.AssocSpider.of(("m", "c", "d"))
    assert s.mate("l", "m", t) == op.AssocSpider.of(("a", "b", "c", "d"))
    assert len(op.assoc_basis("abcd")) == 6


def test_assoc_unit():
    s = op.AssocSpider.of((1, 2, 3, 4))
    assert s.mate(2, 8, op.assoc_unit(8, 9)) == op.AssocSpider.of((1, 9, 3, 4))


def test_lie_antisymmetry():
    a = nf((1, 2))
    b = nf((2, 1))
    assert (a + b).is_zero()
    assert not a.is_zero()


def test_lie_jacobi():
    terms = [((1, 2), 3), ((2, 3), 1), ((3, 1), 2)]
    total = op.lie_combination([(1, nf(t)) for t in terms])
    assert total.is_zero()


@pytest.mark.parametrize("legs", [(1, 2, 3, 4), (4, 1, 3, 2), (2, 3, 1, 4)])
def test_ihx_on_unrooted_trees(legs):
    a, b, c, root = legs
    terms = op.ihx_relator_trees(a, b, c, root)
    assert op.lie_combination([(k, nf(e, root)) for k, e in terms]).is_zero()
    # each term alone is nonzero
    assert all(not nf(e, root).is_zero() for _, e in terms)


def test_flip_changes_sign():
    t = op.tree_from_bracket(((1, 2), 3), 0)
    for v, lbl in enumerate(t.label):
        if lbl is None:
            assert (op.lie_normal_form(t) + op.lie_normal_form(t.flip(v))).is_zero()


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_spider_space_dimension(m):
    """All rooted trees on m-1 leaves plus a root span (m-2)! dimensions."""
    leaves = list(range(1, m))
    words = op.lie_basis_words(range(m))
    assert len(words) == op.lie_dimension(m - 1)
    trees = op.rooted_binary_trees(leaves)
    vecs = [vector(nf(t, 0), words) for t in trees]
    assert la.span_rank(vecs, len(words)) == len(words)


def test_fifteen_trees_on_four_leaves():
    trees = op.rooted_binary_trees([1, 2, 3, 4])
    assert len(trees) == 15
    words = op.lie_basis_words(range(5))
    assert la.span_rank([vector(nf(t), words) for t in trees], len(words)) == 6


def test_unit_mating_is_identity():
    s = nf(((1, 2), (3, 4)), 0)
    u = op.lie_unit(8, 7)
    for leg in sorted(s.legs):
        got = s.mate(leg, 8, u)
        assert got == s.relabel({**{k: k for k in s.legs}, leg: 7})


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3, 4]))
def test_relabel_is_natural(perm):
    mapping = dict(zip([0, 1, 2, 3, 4], [0] + list(perm)))
    expr = ((1, 2), (3, 4))
    direct = nf(tuple(tuple(mapping[x] for x in pair) for pair in expr), 0)
    assert nf(expr, 0).relabel(mapping) == direct


def test_mating_is_symmetric():
    s = nf(((1, 2), 3), 0)
    t = nf((5, 6), 4)
    left = s.mate(3, 4, t)
    right = t.mate(4, 3, s)
    assert left == right


def test_mating_agrees_with_substitution():
    # gluing [[1,2],8] at 8 with the root of [5,6] gives [[1,2],[5,6]]
    s = nf(((1, 2), 8), 0)
    t = nf((5, 6), 9)
    assert s.mate(8, 9, t) == nf(((1, 2), (5, 6)), 0)


def test_leg_collisions_rejected():
    s = op.tree_from_bracket((1, 2), 0)
    with pytest.raises(op.SpiderError):
        op.glue(s, 1, s, 2)
