"""Property suites shared by the command line and the test-suite.

Every check returns a Check record; a suite is a list of them.  Populations
are chosen to stay within a few minutes in total.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import calculus as cl
from . import complexes as cx
from . import graphcore as gc
from . import statesum as ss
from . import surfaces as sf
from .exactla import determinant, kernel_basis, SparseMatrix

ONE = Fraction(1)


@dataclass
class Check:
    name: str
    block: dict
    size: int
    passed: bool
    counterexample: object = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.counterexample is not None:
            d["counterexample"] = _describe(self.counterexample)
        return d


def _describe(x):
    if isinstance(x, gc.HalfEdgeGraph):
        return gc.to_record(x)
    if isinstance(x, (list, tuple)):
        return [_describe(y) for y in x]
    return repr(x)


def _run(name: str, block: dict, population, fn) -> Check:
    """fn(item) returns a falsy value on success."""
    n = 0
    for item in population:
        n += 1
        bad = fn(item)
        if bad:
            return Check(name, block, n, False, item, {"defect_terms": len(bad) if hasattr(bad, "__len__") else 1})
    return Check(name, block, n, True)


# ---------------------------------------------------------------- populations

def plain_generators(variant: str, max_half_edges: int, reduced: bool = True, connected: bool = False) -> list:
    return cl.enumerate_generators(max_half_edges, 3 if reduced else 2, connected, variant)


def cycles(variant: str, ranks) -> list:
    out = []
    for r in ranks:
        c = cx.GraphComplex(variant, r)
        for k in c.degrees():
            b = c.basis(k)
            if not b:
                continue
            ker = [{i: ONE} for i in range(len(b))] if k == 1 else kernel_basis(c.boundary(k))
            out += [{b[i]: v for i, v in vec.items()} for vec in ker]
    return out


def two_edge_joins(pieces: list, max_half_edges: int) -> list:
    """1PI graphs with nonzero cobracket, built by cutting one edge in each of
    two pieces and joining the loose ends by two new edges."""
    out = set()
    for p, q in itertools.combinations_with_replacement(pieces, 2):
        if p.num_half_edges + q.num_half_edges > max_half_edges:
            continue
        ep = [(p.vertex_of[h], p.vertex_of[k]) for h, k in p.edges()]
        eq = [(q.vertex_of[h], q.vertex_of[k]) for h, k in q.edges()]
        for i in range(len(ep)):
            for j in range(len(eq)):
                e1, e2 = list(ep), list(eq)
                a, b = e1.pop(i)
                c, d = e2.pop(j)
                n = p.num_vertices
                edges = e1 + [(u + n, v + n) for u, v in e2] + [(a, c + n), (b, d + n)]
                g = gc.canonicalize(gc.from_edge_list(n + q.num_vertices, edges)).graph
                if gc.is_zero_by_symmetry(g) or not gc.is_one_particle_irreducible(g):
                    continue
                if cl.theta_generator(g):
                    out.add(g)
    return sorted(out, key=gc.sort_key)


# ---------------------------------------------------------------- suites

def suite_boundary(ranks=(1, 2, 3)) -> list:
    out = []
    for variant in cx.VARIANTS:
        for r in ranks:
            if variant == "polygon" and r != 1:
                continue
            if variant != "polygon" and r < 2:
                continue
            c = cx.GraphComplex(variant, r)
            ok = c.check_d_squared()
            out.append(Check("dE^2 = 0", {"variant": variant, "r": r}, len(c.degrees()), ok))
            e = c.euler_characteristic()
            out.append(Check("euler(dims) = euler(betti)", {"variant": variant, "r": r}, 1, e[0] == e[1],
                             None if e[0] == e[1] else e))
    return out


def suite_homology() -> list:
    out = []
    c = cx.GraphComplex("commutative", 2)
    h = c.homology()
    theta = gc.canonicalize(gc.from_edge_list(2, [(0, 1)] * 3)).graph
    ok = h == {1: 0, 2: 1} and c.basis(2) == [theta]
    out.append(Check("commutative r=2 betti", {"r": 2}, 1, ok, None if ok else h, {"betti": h}))
    hp = cx.GraphComplex("polygon", 1).homology()
    want = {k: (1 if k % 4 == 3 else 0) for k in hp}
    out.append(Check("polygon betti", {"max_k": max(hp)}, len(hp), hp == want, None if hp == want else hp,
                     {"betti": hp}))
    hf = cx.GraphComplex("forested", 2).homology()
    ok = hf.get(2) == 1 and hf.get(1) == 0
    out.append(Check("forested r=2 betti", {"r": 2}, 1, ok, None if ok else hf, {"betti": hf}))
    return out


def suite_calculus(comm_reduced=12, comm_unreduced=10, assoc=8) -> list:
    out = []
    pops = [("commutative", True, comm_reduced), ("commutative", False, comm_unreduced),
            ("associative", True, assoc), ("associative", False, assoc)]
    for variant, reduced, m in pops:
        gens = plain_generators(variant, m, reduced)
        blk = {"variant": variant, "reduced": reduced, "max_half_edges": m}
        out.append(_run("dH^2 = 0", blk, gens, lambda g: cl.dH(cl.dH_generator(g))))
        out.append(_run("dH dE + dE dH = 0", blk, gens,
                        lambda g: cx.combine((1, cl.dH(cx.dE_generator(g))), (1, cx.dE(cl.dH_generator(g))))))
    return out


# (generator cap, cap for pair checks, cap on the total of a Jacobi triple)
BRACKET_POPULATIONS = {"commutative": (12, 10, 26), "associative": (8, 6, 20)}


def suite_bracket(seed: int = 0, triples: int = 80, populations=None) -> list:
    rng = random.Random(seed)
    out = []
    for variant, (max_half_edges, pair_half_edges, triple_half_edges) in (populations or BRACKET_POPULATIONS).items():
        gens = [g for g in plain_generators(variant, max_half_edges, reduced=False) if g.is_connected()]
        small = [g for g in gens if g.num_half_edges <= pair_half_edges]
        blk = {"variant": variant, "max_half_edges": pair_half_edges}
        pairs = list(itertools.product(small, repeat=2))
        tblk = {"variant": variant, "max_half_edges": max_half_edges, "triple_half_edges": triple_half_edges}
        out.append(_run("bracket: direct = deviation", blk, pairs,
                        lambda p: cx.combine((1, cl.bracket({p[0]: ONE}, {p[1]: ONE})),
                                             (-1, cl.bracket_by_deviation({p[0]: ONE}, {p[1]: ONE})))))
        out.append(_run("bracket graded symmetry", blk, pairs,
                        lambda p: cx.combine((1, cl.bracket({p[0]: ONE}, {p[1]: ONE})),
                                             (-(-1) ** (cl.deg(p[0]) * cl.deg(p[1])),
                                              cl.bracket({p[1]: ONE}, {p[0]: ONE})))))
        trip = [t for t in itertools.product(gens, repeat=3)
                if sum(g.num_half_edges for g in t) <= triple_half_edges]
        rng.shuffle(trip)
        out.append(_run("Jacobi", tblk, trip[:triples], lambda t: cl.jacobiator(*t)))
    for variant, ranks in (("commutative", (2, 3)), ("associative", (2, 3))):
        cyc = cycles(variant, ranks)
        pairs = []
        for i, x in enumerate(cyc):
            for y in cyc[i:]:
                z = cl.bracket(x, y)
                if z and all(g.is_connected() for g in z) and next(iter(z)).rank <= 4:
                    pairs.append(z)
        out.append(_run("bracket of cycles is a boundary", {"variant": variant, "ranks": list(ranks)}, pairs,
                        lambda z: _witness_defect(z, variant)))
    return out


def _witness_defect(z, variant):
    w = cl.boundary_witness(z, variant)
    if w is None:
        return ["no witness"]
    return cx.combine((1, cx.dE(w)), (-1, z))


def suite_cobracket(max_half_edges: int = 12, join_half_edges: int = 18) -> list:
    out = []
    for variant in ("commutative", "associative"):
        m = max_half_edges if variant == "commutative" else 8
        gens = [g for g in plain_generators(variant, m, reduced=True) if g.is_connected()]
        blk = {"variant": variant, "max_half_edges": m}
        out.append(_run("theta: formula = deviation", blk, gens,
                        lambda g: cx.combine((1, cl.theta({g: ONE})), (-1, cl.theta_by_deviation({g: ONE})))))
        out.append(_run("theta = dE T - T dE", blk, gens, cl.theta_homotopy_defect))
        out.append(_run("co-Jacobi", blk, gens, cl.cojacobiator))
    opi = [g for g in plain_generators("commutative", 12, reduced=True, connected=True)
           if gc.is_one_particle_irreducible(g)]
    joins = two_edge_joins(opi, join_half_edges)
    blk = {"variant": "commutative", "joined_max_half_edges": join_half_edges}
    out.append(Check("nonzero cobracket population", blk, len(joins), bool(joins)))
    out.append(_run("theta = dE T - T dE (nonzero theta)", blk, joins, cl.theta_homotopy_defect))
    out.append(_run("theta: formula = deviation (nonzero theta)", blk, joins,
                    lambda g: cx.combine((1, cl.theta({g: ONE})), (-1, cl.theta_by_deviation({g: ONE})))))
    pairs = [(x, y) for x in opi for y in opi] + [(x, y) for x in opi for y in joins[:2]] + \
            [(y, x) for x in opi for y in joins[:2]]
    out.append(_run("bialgebra compatibility", {"variant": "commutative", "opi": True}, pairs,
                    lambda p: cl.bialgebra_defect(*p)))
    return out


def suite_statesum(seed: int = 0, max_half_edges: int = 8, ns=(1, 2), wedges: int = 60) -> list:
    rng = random.Random(seed)
    out = []
    for variant in ("commutative", "associative"):
        gens = ss.generators_up_to(max_half_edges, variant)
        for n in ns:
            blk = {"variant": variant, "n": n, "max_half_edges": max_half_edges}
            out.append(_run("psi phi = M", blk, gens, lambda g: ss.check_psi_phi(g, n)))
            out.append(_run("phi (2n dE + dH) = d phi", blk, gens, lambda g: ss.check_phi_intertwines(g, n)))
            pool = sorted({w for g in gens if g.num_half_edges <= (8 if n == 1 else 6)
                           for w in ss.phi_generator(g, n)})
            sample = rng.sample(pool, min(wedges, len(pool)))
            out.append(_run("psi d = dE psi", blk, sample, lambda w: ss.check_psi_chain_map({w: ONE}, n)))
            out.append(_run("d_n^2 = 0", blk, sample, lambda w: ss.lie_boundary(ss.lie_boundary({w: ONE}))))
            small = [g for g in gens if g.num_half_edges <= 6]
            out.append(_run("stability n -> n+1", blk, small, lambda g: _stability_defect(g, n)))
    return out


def _stability_defect(g, n):
    """phi_{n+1}(g) restricted to wedges labeled from V_n must be phi_n(g)."""
    big = {w: c for w, c in ss.phi_generator(g, n + 1).items()
           if all(lab[1] <= n for sp in w for lab in sp[1])}
    return ss._diff(big, ss.phi_generator(g, n))


def sp_defects(n: int) -> list:
    """Pairs of quadratic spiders whose bracket disagrees with minus the matrix commutator."""
    labs = [ss.p(i) for i in range(1, n + 1)] + [ss.q(i) for i in range(1, n + 1)]
    quads = sorted({tuple(sorted(x)) for x in itertools.combinations_with_replacement(labs, 2)})

    def mat(s):
        return ss.sp_matrix(s[0], s[1], n)

    def mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(2 * n)) for j in range(2 * n)] for i in range(2 * n)]

    bad = []
    for a, b in itertools.product(quads, repeat=2):
        lhs = [[0] * (2 * n) for _ in range(2 * n)]
        for sp, c in ss.spider_bracket(ss.quadratic_spider(*a), ss.quadratic_spider(*b)).items():
            m = ss.sp_matrix(sp[1][0], sp[1][1], n)
            lhs = [[x + c * y for x, y in zip(r, s)] for r, s in zip(lhs, m)]
        A, B = mat(a), mat(b)
        ab, ba = mul(A, B), mul(B, A)
        com = [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]
        if lhs != [[-x for x in r] for r in com]:
            bad.append((a, b))
    return bad


def suite_sp(ns=(1, 2)) -> list:
    return [Check("quadratic spiders reproduce sp(2n)", {"n": n}, 1, not sp_defects(n)) for n in ns]


def M_blocks(max_half_edges: int = 6, min_valence: int = 2) -> dict:
    out = {}
    for variant in ("commutative", "associative"):
        for g in ss.generators_up_to(max_half_edges, variant, min_valence=min_valence):
            out.setdefault((variant, g.num_vertices, g.num_half_edges), []).append(g)
    return dict(sorted(out.items()))


def suite_invertibility(n: int = 4, max_half_edges: int = 6) -> list:
    out = []
    for (variant, k, m), gens in M_blocks(max_half_edges, 1).items():
        d = determinant(ss.M_block_matrix(gens, n))
        out.append(Check("det M_n != 0", {"variant": variant, "k": k, "m": m, "n": n}, len(gens), d != 0,
                         None, {"det": str(d)}))
    return out


def suite_ihx(ranks=(2, 3)) -> list:
    out = []
    for r in ranks:
        c = cx.GraphComplex("forested", r)
        try:
            for k in c.degrees():
                c.boundary(k)
            ok = True
        except cx.ChainError:
            ok = False
        out.append(Check("dE preserves the IHX span", {"r": r}, len(c.degrees()), ok))
        rels = []
        for k in c.degrees():
            for g in cx.basis("forested", r, k):
                rels += [(g, e) for e in g.forest_edges()]
        out.append(_run("IHX relator translates to zero", {"r": r}, rels, lambda p: raw_relator_image(*p)))
        gens = [g for k in c.degrees() for g in cx.basis("forested", r, k)]
        out.append(_run("translation commutes with dE", {"r": r}, gens, translation_square_defect))
        for k in c.degrees():
            q = len(c.basis(k))
            t = cx.translated_rank(r, k)
            dim = cx.lie_ograph_dimension(r, k)
            out.append(Check("IHX quotient dim = Lie-spider dims", {"r": r, "k": k}, 1, q == t == dim,
                             None if q == t == dim else (q, t, dim), {"quotient": q, "image": t, "spider": dim}))
    return out


def _translate(g, o=None) -> dict:
    s, og = cx.forested_to_ograph(g, o)
    return cx.lie_ograph_normal_form(og, Fraction(s))


def raw_relator_image(g, e) -> dict:
    """Translation of the three raw blow-ups of (G_e, Phi_e), summed."""
    o = gc.standard_orientation(g)
    ge, oe, _ = gc.collapse_edge(g, o, e)
    halves = ge.halves_at(0)
    a = halves[0]
    acc = {}
    for b in halves[1:]:
        group = tuple(x for x in halves if x not in (a, b))
        ng, no = cx._blow_up(ge, oe, 0, group)
        for key, v in _translate(ng, no).items():
            cx.add_term(acc, key, v)
    return acc


def translation_square_defect(g) -> dict:
    s, og = cx.forested_to_ograph(g)
    lhs = {}
    for _, s2, og2 in cx.lie_ograph_boundary(og):
        for key, v in cx.lie_ograph_normal_form(og2, Fraction(s * s2)).items():
            cx.add_term(lhs, key, v)
    rhs = {}
    for g2, c in cx.dE_forested_generator(g).items():
        for key, v in _translate(g2).items():
            cx.add_term(rhs, key, c * v)
    return cx.combine((1, lhs), (-1, rhs))


def suite_surfaces(ranks=(2, 3)) -> list:
    out = []
    for r in ranks:
        split = sf.SurfaceSplit(r)
        blk = {"r": r}
        out.append(Check("dE block-diagonal over surfaces", blk, 1, split.off_diagonal_entries() == 0))
        tot = [0, 0]
        for s in split.surfaces():
            e = split.euler(s)
            tot[0] += e[0]
            tot[1] += e[1]
        whole = split.complex.euler_characteristic()
        out.append(Check("per-surface euler sums to whole", blk, len(split.surfaces()), tuple(tot) == whole,
                         None, {"classes": tot, "whole": list(whole)}))
        gens = [g for k in split.degrees for g in split.complex.basis(k)]
        out.append(_run("collapse preserves the surface", blk, gens,
                        lambda g: not sf.collapse_preserves_surface(g)))
    return out


SUITES = {
    "boundary": suite_boundary,
    "homology": suite_homology,
    "calculus": suite_calculus,
    "bracket": suite_bracket,
    "cobracket": suite_cobracket,
    "statesum": suite_statesum,
    "sp": suite_sp,
    "invertibility": suite_invertibility,
    "ihx": suite_ihx,
    "surfaces": suite_surfaces,
}


def run_suite(name: str, seed: int = 0) -> list:
    if name == "all":
        out = []
        for key in SUITES:
            out += run_suite(key, seed)
        return out
    fn = SUITES[name]
    if name in ("bracket", "statesum"):
        return fn(seed=seed)
    return fn()
