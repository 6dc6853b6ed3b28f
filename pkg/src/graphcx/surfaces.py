"""Thickened surfaces of ribbon graphs and the per-surface split of the associative complex."""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import GraphComplex, dE_generator, matrix_of
from .exactla import SparseMatrix, betti
from .graphcore import HalfEdgeGraph, StructuralError


@dataclass(frozen=True, order=True)
class SurfaceInvariant:
    g: int
    b: int

    def to_dict(self) -> dict:
        return {"g": self.g, "b": self.b}


def boundary_cycles(rg: HalfEdgeGraph) -> list:
    """Boundary circuits, tracing next(h) = successor of the partner of h at its vertex."""
    if rg.rotation is None:
        raise StructuralError("ribbon structure required")
    seen = set()
    out = []
    for start in range(rg.num_half_edges):
        if start in seen:
            continue
        cyc = []
        h = start
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = rg.rotation[rg.partner[h]]
        out.append(tuple(cyc))
    return out


def classify(rg: HalfEdgeGraph) -> SurfaceInvariant:
    if not rg.is_connected():
        raise StructuralError("surface classification needs a connected graph")
    b = len(boundary_cycles(rg))
    chi = rg.num_vertices - rg.num_edges + b
    if chi % 2 or chi > 2:
        raise StructuralError(f"inconsistent Euler characteristic {chi}")
    return SurfaceInvariant((2 - chi) // 2, b)


def partition_basis_by_surface(basis: list) -> dict:
    out = {}
    for g in basis:
        out.setdefault(classify(g), []).append(g)
    return dict(sorted(out.items()))


def _block(full: SparseMatrix, rows: list, cols: list) -> SparseMatrix:
    ri = {r: i for i, r in enumerate(rows)}
    ci = {c: j for j, c in enumerate(cols)}
    return SparseMatrix(len(rows), len(cols),
                        {(ri[i], ci[j]): v for (i, j), v in full.entries.items() if i in ri and j in ci})


@dataclass
class SurfaceSplit:
    """The connected reduced associative complex of one rank, split by surface."""
    r: int
    max_half_edges: int = 16

    def __post_init__(self):
        self.complex = GraphComplex("associative", self.r, max_half_edges=self.max_half_edges)
        self.degrees = self.complex.degrees()
        self.classes = {k: partition_basis_by_surface(self.complex.basis(k)) for k in self.degrees}

    def surfaces(self) -> list:
        return sorted({s for parts in self.classes.values() for s in parts})

    def _index(self, k: int, s: SurfaceInvariant) -> list:
        full = self.complex.basis(k) if k in self.degrees else []
        pos = {g: i for i, g in enumerate(full)}
        return [pos[g] for g in self.classes.get(k, {}).get(s, [])]

    def off_diagonal_entries(self) -> int:
        """Number of boundary entries linking different surface classes."""
        bad = 0
        for k in self.degrees:
            if k - 1 not in self.degrees:
                continue
            src = self.complex.basis(k)
            tgt = self.complex.basis(k - 1)
            ts = [classify(g) for g in tgt]
            ss = [classify(g) for g in src]
            for (i, j) in self.complex.boundary(k).entries:
                bad += ts[i] != ss[j]
        return bad

    def block_boundary(self, k: int, s: SurfaceInvariant) -> SparseMatrix:
        cols = self._index(k, s)
        rows = self._index(k - 1, s)
        if k - 1 not in self.degrees:
            return SparseMatrix(0, len(cols), {})
        return _block(self.complex.boundary(k), rows, cols)

    def dimensions(self, s: SurfaceInvariant) -> dict:
        return {k: len(self.classes[k].get(s, [])) for k in self.degrees}

    def homology(self, s: SurfaceInvariant) -> dict:
        out = {}
        for k in self.degrees:
            dk = self.block_boundary(k, s)
            if k + 1 in self.degrees:
                dk1 = self.block_boundary(k + 1, s)
            else:
                dk1 = SparseMatrix(dk.ncols, 0, {})
            out[k] = betti(dk, dk1)
        return out

    def euler(self, s: SurfaceInvariant) -> tuple:
        dims = self.dimensions(s)
        h = self.homology(s)
        return (sum((-1) ** k * d for k, d in dims.items()),
                sum((-1) ** k * b for k, b in h.items()))


def collapse_preserves_surface(rg: HalfEdgeGraph) -> bool:
    """Every nonzero edge-collapse term keeps the surface of rg."""
    s = classify(rg)
    return all(classify(h) == s for h in dE_generator(rg))
