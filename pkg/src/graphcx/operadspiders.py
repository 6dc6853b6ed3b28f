"""Spiders for the commutative, associative and Lie cyclic operads.

Commutative spider: (legs, weight).  Associative: a dict over cyclic orders
(stored as minimal rotations).  Lie: unrooted vertex-oriented binary trees,
reduced to a normal form by rooting at the smallest leg and reading off the
coefficients of the words that start with the next smallest leg.  Those
coefficients are the coordinates in the left-comb basis.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Hashable, Iterable


class SpiderError(ValueError):
    pass


def _add(d: dict, k, v) -> None:
    if not v:
        return
    x = d.get(k, 0) + v
    if x:
        d[k] = x
    else:
        d.pop(k, None)


# ---------------------------------------------------------------- commutative

@dataclass(frozen=True)
class CommSpider:
    legs: frozenset
    weight: Fraction = Fraction(1)

    def mate(self, lam, mu, other: "CommSpider") -> "CommSpider":
        if not isinstance(other, CommSpider):
            raise SpiderError("operad mismatch")
        if lam not in self.legs or mu not in other.legs:
            raise SpiderError("leg not found")
        legs = (self.legs - {lam}) | (other.legs - {mu})
        if len(legs) != len(self.legs) + len(other.legs) - 2:
            raise SpiderError("leg names collide")
        return CommSpider(frozenset(legs), self.weight * other.weight)

    def relabel(self, mapping: dict) -> "CommSpider":
        return CommSpider(frozenset(mapping[x] for x in self.legs), self.weight)


def comm_unit(a, b) -> CommSpider:
    return CommSpider(frozenset((a, b)))


# ---------------------------------------------------------------- associative

def min_rotation(seq) -> tuple:
    seq = tuple(seq)
    return min((seq[i:] + seq[:i] for i in range(len(seq))), default=())


def cyclic_order_of(word) -> tuple:
    """Canonical representative of a cyclic order."""
    return min_rotation(word)


@dataclass(frozen=True)
class AssocSpider:
    """Formal combination of cyclic orders of one leg set."""
    terms: tuple  # sorted ((cyclic order, coeff), ...)

    @classmethod
    def of(cls, *orders, coeffs=None) -> "AssocSpider":
        d = {}
        for i, o in enumerate(orders):
            _add(d, min_rotation(o), Fraction(coeffs[i]) if coeffs else Fraction(1))
        return cls(tuple(sorted(d.items())))

    @property
    def legs(self) -> frozenset:
        return frozenset(self.terms[0][0]) if self.terms else frozenset()

    def as_dict(self) -> dict:
        return dict(self.terms)

    def mate(self, lam, mu, other: "AssocSpider") -> "AssocSpider":
        """(lam a_1..a_p) with (mu b_1..b_q) gives (a_1..a_p b_1..b_q)."""
        if not isinstance(other, AssocSpider):
            raise SpiderError("operad mismatch")
        if lam not in self.legs or mu not in other.legs:
            raise SpiderError("leg not found")
        d = {}
        for o1, c1 in self.terms:
            i = o1.index(lam)
            a = o1[i + 1:] + o1[:i]
            for o2, c2 in other.terms:
                j = o2.index(mu)
                b = o2[j + 1:] + o2[:j]
                _add(d, min_rotation(a + b), c1 * c2)
        return AssocSpider(tuple(sorted(d.items())))

    def relabel(self, mapping: dict) -> "AssocSpider":
        d = {}
        for o, c in self.terms:
            _add(d, min_rotation(tuple(mapping[x] for x in o)), c)
        return AssocSpider(tuple(sorted(d.items())))


def assoc_unit(a, b) -> AssocSpider:
    return AssocSpider.of((a, b))


def assoc_basis(legs) -> list:
    """All cyclic orders of the legs: (m-1)! of them."""
    legs = sorted(legs)
    if not legs:
        return []
    first, rest = legs[0], legs[1:]
    return [(first,) + p for p in itertools.permutations(rest)]


# ---------------------------------------------------------------- Lie trees

@dataclass(frozen=True)
class LieTree:
    """Unrooted binary tree.  adj[node] lists neighbours; for an internal
    node the tuple is its cyclic order.  label[node] names the leg at a leaf
    and is None at internal nodes."""
    adj: tuple
    label: tuple

    def __post_init__(self):
        for v, nb in enumerate(self.adj):
            if self.label[v] is None and len(nb) != 3:
                raise SpiderError("internal nodes must be trivalent")
            if self.label[v] is not None and len(nb) != 1:
                raise SpiderError("leaves have one neighbour")
            for w in nb:
                if v not in self.adj[w]:
                    raise SpiderError("adjacency is not symmetric")

    @property
    def legs(self) -> frozenset:
        return frozenset(x for x in self.label if x is not None)

    def leaf(self, name) -> int:
        for v, x in enumerate(self.label):
            if x == name:
                return v
        raise SpiderError(f"leg {name!r} not found")

    def flip(self, node: int) -> "LieTree":
        """Reverse the cyclic order at one internal node."""
        adj = list(self.adj)
        a, b, c = adj[node]
        adj[node] = (a, c, b)
        return LieTree(tuple(adj), self.label)

    def relabel(self, mapping: dict) -> "LieTree":
        return LieTree(self.adj, tuple(None if x is None else mapping[x] for x in self.label))


def tree_from_bracket(expr, root) -> LieTree:
    """Tree for a nested bracket over leg names, with an extra root leg.

    An internal node for (A, B) has cyclic order (parent, A, B).
    """
    adj, label = [], []

    def new(lbl):
        adj.append([])
        label.append(lbl)
        return len(adj) - 1

    def build(e, parent):
        if isinstance(e, tuple):
            v = new(None)
            adj[v].append(parent)
            a = build(e[0], v)
            b = build(e[1], v)
            adj[v] += [a, b]
            return v
        v = new(e)
        adj[v].append(parent)
        return v

    r = new(root)
    top = build(expr, r)
    adj[r].append(top)
    return LieTree(tuple(tuple(x) for x in adj), tuple(label))


def glue(s: LieTree, lam, t: LieTree, mu) -> LieTree:
    """Join leg lam of s to leg mu of t and erase the resulting bivalent point."""
    a, b = s.leaf(lam), t.leaf(mu)
    if (s.legs - {lam}) & (t.legs - {mu}):
        raise SpiderError("leg names collide")
    off = len(s.adj)
    adj = [list(x) for x in s.adj] + [[y + off for y in x] for x in t.adj]
    label = list(s.label) + list(t.label)
    a2, b2 = adj[a][0], adj[b + off][0]
    adj[a2] = [b2 if y == a else y for y in adj[a2]]
    adj[b2] = [a2 if y == b + off else y for y in adj[b2]]
    keep = [v for v in range(len(adj)) if v not in (a, b + off)]
    pos = {v: i for i, v in enumerate(keep)}
    return LieTree(tuple(tuple(pos[y] for y in adj[v]) for v in keep), tuple(label[v] for v in keep))


def lie_polynomial(t: LieTree, root) -> dict:
    """Expand the tree rooted at leg root into an associative polynomial {word: coeff}."""
    r = t.leaf(root)

    def expand(v, parent):
        if t.label[v] is not None:
            return {(t.label[v],): 1}
        nb = t.adj[v]
        i = nb.index(parent)
        x, y = nb[(i + 1) % 3], nb[(i + 2) % 3]
        px, py = expand(x, v), expand(y, v)
        out = {}
        for wx, cx in px.items():
            for wy, cy in py.items():
                _add(out, wx + wy, cx * cy)
                _add(out, wy + wx, -cx * cy)
        return out

    return expand(t.adj[r][0], r)


@dataclass(frozen=True)
class LieSpider:
    """Normal form: root = smallest leg, coefficients of words starting with the next leg."""
    legs: frozenset
    coeffs: tuple  # sorted ((word, Fraction), ...)

    @property
    def root(self):
        return min(self.legs)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LieSpider") -> "LieSpider":
        return lie_combination([(1, self), (1, other)])

    def scale(self, c) -> "LieSpider":
        return LieSpider(self.legs, tuple((w, c * x) for w, x in self.coeffs if c * x))

    def basis_trees(self) -> list:
        """(coeff, left-comb tree) pairs representing this element."""
        out = []
        for word, c in self.coeffs:
            expr = word[0]
            for x in word[1:]:
                expr = (expr, x)
            out.append((c, tree_from_bracket(expr, self.root)))
        return out

    def mate(self, lam, mu, other: "LieSpider") -> "LieSpider":
        if not isinstance(other, LieSpider):
            raise SpiderError("operad mismatch")
        if lam not in self.legs or mu not in other.legs:
            raise SpiderError("leg not found")
        parts = []
        for c1, t1 in self.basis_trees():
            for c2, t2 in other.basis_trees():
                parts.append((c1 * c2, lie_normal_form(glue(t1, lam, t2, mu))))
        legs = (self.legs - {lam}) | (other.legs - {mu})
        return lie_combination(parts, legs)

    def relabel(self, mapping: dict) -> "LieSpider":
        parts = [(c, lie_normal_form(t.relabel(mapping))) for c, t in self.basis_trees()]
        return lie_combination(parts, frozenset(mapping[x] for x in self.legs))


def lie_normal_form(tree, coeff=1) -> LieSpider:
    """Normal form of a tree, or of a list of (coeff, tree) on a common leg set."""
    if isinstance(tree, LieTree):
        items = [(coeff, tree)]
    else:
        items = list(tree)
    if not items:
        raise SpiderError("empty combination has no leg set")
    legs = items[0][1].legs
    root = min(legs)
    rest = sorted(legs - {root})
    lead = rest[0]
    out = {}
    for c, t in items:
        if t.legs != legs:
            raise SpiderError("trees have different leg sets")
        for w, x in lie_polynomial(t, root).items():
            if w[0] == lead:
                _add(out, w, Fraction(c) * x)
    return LieSpider(legs, tuple(sorted(out.items())))


def lie_combination(parts, legs=None) -> LieSpider:
    out = {}
    for c, s in parts:
        if legs is None:
            legs = s.legs
        elif s.legs != legs:
            raise SpiderError("different leg sets")
        for w, x in s.coeffs:
            _add(out, w, Fraction(c) * x)
    return LieSpider(frozenset(legs), tuple(sorted(out.items())))


def lie_unit(a, b) -> LieSpider:
    return lie_normal_form(LieTree(((1,), (0,)), (a, b)))


def lie_basis_words(legs) -> list:
    """Left-comb basis of the spider space on legs: (m-2)! words."""
    legs = sorted(legs)
    lead, rest = legs[1], legs[2:]
    return [(lead,) + p for p in itertools.permutations(rest)]


def lie_basis(legs) -> list:
    legs = frozenset(legs)
    return [LieSpider(legs, ((w, Fraction(1)),)) for w in lie_basis_words(legs)]


def rooted_binary_trees(leaves) -> list:
    """All planar-free rooted binary trees on the given leaves as nested pairs (A, B) with A's min < B's min."""
    leaves = tuple(sorted(leaves))
    if len(leaves) == 1:
        return [leaves[0]]
    out = []
    first, rest = leaves[0], leaves[1:]
    for k in range(0, len(rest)):
        for extra in itertools.combinations(rest, k):
            left = (first,) + extra
            right = tuple(x for x in rest if x not in extra)
            if not right:
                continue
            for a in rooted_binary_trees(left):
                for b in rooted_binary_trees(right):
                    out.append((a, b))
    return out


def ihx_relator_trees(a, b, c, root) -> list:
    """(coeff, nested bracket) terms of the I - H - X relator on legs a, b, c around root."""
    return [(1, ((a, b), c)), (-1, ((a, c), b)), (-1, (a, (b, c)))]


def lie_dimension(m: int) -> int:
    """Dimension of the m-ary Lie operad component, (m-1)!."""
    return factorial(m - 1)
