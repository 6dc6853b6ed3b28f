"""Finite-n symplectic state sums: phi_n, psi_n, M_n and the Lie boundary.

Basis vectors of V_n are pairs (0, i) = p_i and (1, i) = q_i with i >= 1.
A labeled spider is ('c', sorted labels) for the commutative operad or
('a', minimal rotation of the cyclic label word) for the associative one.
Wedges are dicts {tuple of spiders: Fraction}, factors in sorted order.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import graphcore as gc
from . import signs
from .complexes import add_oriented, add_term, CapError
from .graphcore import HalfEdgeGraph, Orientation

MAX_HALF_EDGES = 10
MAX_N = 3


def p(i: int):
    return (0, i)


def q(i: int):
    return (1, i)


def omega(a, b) -> int:
    if a[1] != b[1] or a[0] == b[0]:
        return 0
    return 1 if a[0] == 0 else -1


def label_name(a) -> str:
    return ("p" if a[0] == 0 else "q") + str(a[1])


def min_rotation(word) -> tuple:
    word = tuple(word)
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def spider(kind: str, labels) -> tuple:
    if kind == "c":
        return ("c", tuple(sorted(labels)))
    return ("a", min_rotation(labels))


def legs(s) -> tuple:
    return s[1]


# ---------------------------------------------------------------- wedges

def normalize(factors) -> tuple:
    """(sign, sorted factors), sign 0 when a factor repeats."""
    factors = tuple(factors)
    if len(set(factors)) != len(factors):
        return 0, None
    return signs.sort_sign(factors), tuple(sorted(factors))


def add_wedge(w: dict, factors, coeff) -> None:
    s, key = normalize(factors)
    if s:
        add_term(w, key, s * coeff)


def wedge_of(*factors) -> dict:
    out = {}
    add_wedge(out, factors, Fraction(1))
    return out


def mate(s, lam: int, t, mu: int):
    """Mate spider s at leg lam with spider t at leg mu (labels dropped)."""
    a, b = s[1], t[1]
    if s[0] == "c":
        return spider("c", a[:lam] + a[lam + 1:] + b[:mu] + b[mu + 1:])
    ra = a[lam + 1:] + a[:lam]
    rb = b[mu + 1:] + b[:mu]
    return spider("a", ra + rb)


def spider_bracket(s, t) -> dict:
    """[s, t] = sum over legs of omega(v_lam, w_mu) * mate."""
    out = {}
    for i, v in enumerate(s[1]):
        for j, w in enumerate(t[1]):
            c = omega(v, w)
            if c:
                add_term(out, mate(s, i, t, j), c)
    return out


def lie_boundary(w: dict) -> dict:
    """Chevalley-Eilenberg boundary: sum_{i<j} (-1)^{i+j+1} [S_i, S_j] ∧ rest (1-based i, j)."""
    out = {}
    for factors, c in w.items():
        k = len(factors)
        for i in range(k):
            for j in range(i + 1, k):
                s = -1 if ((i + 1) + (j + 1) + 1) % 2 else 1
                rest = factors[:i] + factors[i + 1:j] + factors[j + 1:]
                for b, v in spider_bracket(factors[i], factors[j]).items():
                    add_wedge(out, (b,) + rest, s * c * v)
    return out


# ---------------------------------------------------------------- phi_n

def _check(g: HalfEdgeGraph, n: int | None):
    if g.num_half_edges > MAX_HALF_EDGES:
        raise CapError(f"{g.num_half_edges} half-edges exceeds the state-sum cap {MAX_HALF_EDGES}")
    if n is not None and n > MAX_N:
        raise CapError(f"n = {n} exceeds the state-sum cap {MAX_N}")


def _vertex_spider(g: HalfEdgeGraph, v: int, label) -> tuple:
    if g.rotation is None:
        return spider("c", [label[h] for h in g.halves_at(v)])
    return spider("a", [label[h] for h in g.cyclic_order_at(v)])


@lru_cache(maxsize=20_000)
def phi_generator(g: HalfEdgeGraph, n: int) -> dict:
    """Sum over signed states of the cut-apart wedge, for g with its standard orientation."""
    _check(g, n)
    edges = g.edges()
    out = {}
    choices = [(i, flip) for i in range(1, n + 1) for flip in (False, True)]
    for state in itertools.product(choices, repeat=len(edges)):
        label = [None] * g.num_half_edges
        sign = 1
        for (h, hb), (i, flip) in zip(edges, state):
            # h is the initial half-edge of the standard orientation
            if flip:
                label[h], label[hb] = q(i), p(i)
                sign = -sign
            else:
                label[h], label[hb] = p(i), q(i)
        add_wedge(out, [_vertex_spider(g, v, label) for v in range(g.num_vertices)], sign)
    return out


def phi(chain: dict, n: int) -> dict:
    out = {}
    for g, c in chain.items():
        for k, v in phi_generator(g, n).items():
            add_term(out, k, c * v)
    return out


# ---------------------------------------------------------------- psi_n

def _complementary_matchings(labels: list):
    """Perfect matchings of positions where each pair has nonzero omega, as (a, b, omega(a,b))."""
    idx = list(range(len(labels)))

    def rec(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for j in range(1, len(rest)):
            b = rest[j]
            w = omega(labels[a], labels[b])
            if w:
                for tail in rec(rest[1:j] + rest[j + 1:]):
                    yield [(a, b, w)] + tail
    if len(idx) % 2:
        return
    yield from rec(idx)


def _assemble(factors):
    """Leg positions, vertex map and rotation for a sequence of spiders."""
    labels, vertex_of, rotation = [], [], []
    for v, s in enumerate(factors):
        base = len(labels)
        m = len(s[1])
        labels += list(s[1])
        vertex_of += [v] * m
        rotation += [base + (j + 1) % m for j in range(m)]
    assoc = bool(factors) and factors[0][0] == "a"
    return labels, vertex_of, (tuple(rotation) if assoc else None)


def psi_wedge(factors, n: int | None = None) -> dict:
    """psi_n of a single wedge of spiders (n only matters through the labels)."""
    labels, vertex_of, rotation = _assemble(factors)
    out = {}
    for matching in _complementary_matchings(labels):
        partner = [0] * len(labels)
        initial = set()
        w = 1
        for a, b, c in matching:
            partner[a], partner[b] = b, a
            initial.add(a)
            w *= c
        g = HalfEdgeGraph(tuple(partner), tuple(vertex_of), len(factors), rotation)
        o = Orientation(tuple(range(len(factors))), frozenset(initial))
        add_oriented(out, g, o, w)
    return out


def psi(w: dict, n: int | None = None) -> dict:
    out = {}
    for factors, c in w.items():
        for g, v in psi_wedge(factors, n).items():
            add_term(out, g, c * v)
    return out


# ---------------------------------------------------------------- M_n

def perfect_matchings(items):
    items = list(items)
    if not items:
        yield []
        return
    a = items[0]
    for j in range(1, len(items)):
        for tail in perfect_matchings(items[1:j] + items[j + 1:]):
            yield [(a, items[j])] + tail


@lru_cache(maxsize=20_000)
def M_generator(g: HalfEdgeGraph, n: int) -> dict:
    """sum over all pairings pi of (2n)^{c(pi)} X^pi, orientation by the chord rule.

    n only enters as a weight, so only the half-edge cap applies.
    """
    _check(g, None)
    o = gc.standard_orientation(g)
    out = {}
    for matching in perfect_matchings(range(g.num_half_edges)):
        pairing = [0] * g.num_half_edges
        for a, b in matching:
            pairing[a], pairing[b] = b, a
        ng, no, s, circles = gc.reglue(g, o, pairing)
        add_oriented(out, ng, no, s * (2 * n) ** circles)
    return out


def M(chain: dict, n: int) -> dict:
    out = {}
    for g, c in chain.items():
        for k, v in M_generator(g, n).items():
            add_term(out, k, c * v)
    return out


def M_block_matrix(gens: list, n: int):
    """Matrix of M_n on the span of gens (which must be M_n-invariant)."""
    from .complexes import matrix_of
    return matrix_of(lambda g: M_generator(g, n), gens, gens)


# ---------------------------------------------------------------- sp(2n)

def quadratic_spider(a, b) -> tuple:
    """The two-legged unit-colored symplecto-spider [S_0 ⊗ a ⊗ b]."""
    return spider("c", [a, b])


def sp_matrix(a, b, n: int):
    """Image of the quadratic monomial ab in sp(2n) (2n x 2n integer matrix)."""
    m = [[0] * (2 * n) for _ in range(2 * n)]

    def E(i, j, sign, roff, coff):
        m[roff + i - 1][coff + j - 1] += sign

    (ka, i), (kb, j) = sorted([a, b])
    if ka == 0 and kb == 1:      # p_i q_j
        E(j, i, -1, 0, 0)
        E(i, j, 1, n, n)
    elif ka == 0 and kb == 0:    # p_i p_j
        E(i, j, 1, n, 0)
        E(j, i, 1, n, 0)
    else:                        # q_i q_j
        E(i, j, -1, 0, n)
        E(j, i, -1, 0, n)
    return m


# ---------------------------------------------------------------- identity checks

def generators_up_to(max_half_edges: int, variant: str = "commutative", min_valence: int = 2) -> list:
    """All nonzero generators (any connectivity, valence >= min_valence)."""
    out = []
    for m in range(2, max_half_edges + 1, 2):
        for k in range(1, m // min_valence + 1):
            for g in gc.enumerate_multigraphs(k, m // 2, min_valence, None, False):
                cands = gc.ribbon_structures(g) if variant == "associative" else [g]
                out += [c for c in cands if not gc.is_zero_by_symmetry(c)]
    return out


def _diff(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        add_term(out, k, -v)
    return out


def check_psi_phi(g: HalfEdgeGraph, n: int) -> dict:
    """psi_n(phi_n(g)) - M_n(g)."""
    return _diff(psi(phi_generator(g, n), n), M_generator(g, n))


def check_phi_intertwines(g: HalfEdgeGraph, n: int) -> dict:
    """phi_n((2n dE + dH) g) - d_n phi_n(g)."""
    from .calculus import dH_generator
    from .complexes import dE_generator
    src = {}
    for k, v in dE_generator(g).items():
        add_term(src, k, 2 * n * v)
    for k, v in dH_generator(g).items():
        add_term(src, k, v)
    return _diff(phi(src, n), lie_boundary(phi_generator(g, n)))


def check_psi_chain_map(w: dict, n: int) -> dict:
    """psi_n(d_n w) - dE(psi_n w)."""
    from .complexes import dE
    return _diff(psi(lie_boundary(w), n), dE(psi(w, n)))
