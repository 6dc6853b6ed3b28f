"""Exact sparse linear algebra over Q.

Matrices are stored as coordinate dictionaries of Fractions.  Rank uses
fraction-free integer elimination; kernels and solves use a rational RREF.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class ChainError(ArithmeticError):
    """d_k d_{k+1} != 0, or a relation space that is not preserved."""


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionError(f"entry ({i},{j}) outside {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict]) -> "SparseMatrix":
        return cls(nrows, len(columns), {(i, j): v for j, col in enumerate(columns) for i, v in col.items()})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def row_dicts(self) -> list:
        rows = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        by_row = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return SparseMatrix(self.nrows, other.ncols, acc)

    def apply(self, vec: dict) -> dict:
        """Matrix times a sparse column vector {index: value}."""
        out = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x:
                out[i] = out.get(i, 0) + v * x
        return {i: v for i, v in out.items() if v}

    def __eq__(self, other):
        return isinstance(other, SparseMatrix) and self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    # coordinate text format
    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols} {len(self.entries)}"]
        for (i, j) in sorted(self.entries):
            v = self.entries[(i, j)]
            lines.append(f"{i} {j} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SparseMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        nrows, ncols, nnz = map(int, lines[0].split())
        entries = {}
        for ln in lines[1:]:
            i, j, v = ln.split()
            entries[(int(i), int(j))] = Fraction(v)
        if len(entries) != nnz:
            raise DimensionError("entry count does not match header")
        return cls(nrows, ncols, entries)


def _integer_rows(m: SparseMatrix) -> list:
    rows = []
    for r in m.row_dicts():
        if not r:
            continue
        den = 1
        for v in r.values():
            den = den * v.denominator // gcd(den, v.denominator)
        rows.append({j: int(v * den) for j, v in r.items()})
    return rows


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {j: v // g for j, v in row.items()} if g > 1 else row


def elimination_trace(m: SparseMatrix) -> list:
    """Pivot positions chosen by fraction-free elimination.

    Markowitz cost (r-1)(c-1) picks the pivot, ties broken by (row, col).
    Each update is row <- p*row - a*pivot_row followed by content removal.
    """
    rows = dict(enumerate(_integer_rows(m)))
    pivots = []
    while rows:
        colcount = {}
        for r in rows.values():
            for j in r:
                colcount[j] = colcount.get(j, 0) + 1
        best = None
        for i in sorted(rows):
            r = rows[i]
            rc = len(r) - 1
            for j in sorted(r):
                key = (rc * (colcount[j] - 1), i, j)
                if best is None or key < best:
                    best = key
        _, pi, pj = best
        prow = rows.pop(pi)
        p = prow[pj]
        pivots.append((pi, pj))
        for i in list(rows):
            r = rows[i]
            a = r.get(pj)
            if not a:
                continue
            new = {j: p * v for j, v in r.items()}
            for j, v in prow.items():
                x = new.get(j, 0) - a * v
                if x:
                    new[j] = x
                else:
                    new.pop(j, None)
            if new:
                rows[i] = _primitive(new)
            else:
                del rows[i]
    return pivots


def rank(m: SparseMatrix) -> int:
    return len(elimination_trace(m))


def rank_dense(m: SparseMatrix) -> int:
    """Plain Gaussian elimination on a dense Fraction copy (independent check)."""
    a = m.to_dense()
    r = 0
    for c in range(m.ncols):
        piv = next((i for i in range(r, m.nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m.nrows):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def rref(m: SparseMatrix):
    """Reduced row echelon form over Q: (list of row dicts, pivot columns)."""
    rows = [dict(r) for r in m.row_dicts() if r]
    out, pivcols = [], []
    for c in range(m.ncols):
        idx = next((k for k, r in enumerate(rows) if c in r), None)
        if idx is None:
            continue
        prow = rows.pop(idx)
        inv = 1 / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        for lst in (rows, out):
            for k, r in enumerate(lst):
                a = r.get(c)
                if a:
                    for j, v in prow.items():
                        x = r.get(j, 0) - a * v
                        if x:
                            r[j] = x
                        else:
                            r.pop(j, None)
        out.append(prow)
        pivcols.append(c)
    return out, pivcols


def kernel_basis(m: SparseMatrix) -> list:
    """Basis of {x : Mx = 0} as sparse dicts, one per free column."""
    rows, pivcols = rref(m)
    pivset = set(pivcols)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        vec = {f: Fraction(1)}
        for r, c in zip(rows, pivcols):
            a = r.get(f)
            if a:
                vec[c] = -a
        basis.append(vec)
    return basis


def image_membership(m: SparseMatrix, v: dict):
    """A witness w with Mw = v, or None when v is not in the image."""
    if any(not 0 <= i < m.nrows for i in v):
        raise DimensionError("vector length does not match row count")
    aug = SparseMatrix(m.nrows, m.ncols + 1, dict(m.entries))
    for i, x in v.items():
        if x:
            aug.entries[(i, m.ncols)] = Fraction(x)
    rows, pivcols = rref(aug)
    if m.ncols in pivcols:
        return None
    w = {}
    for r, c in zip(rows, pivcols):
        x = r.get(m.ncols)
        if x:
            w[c] = x
    return w


def betti(d_k: SparseMatrix, d_k1: SparseMatrix) -> int:
    """dim ker d_k - rank d_{k+1}, where d_{k+1}: C_{k+1} -> C_k and d_k: C_k -> C_{k-1}."""
    if d_k.ncols != d_k1.nrows:
        raise DimensionError("boundary maps are not composable")
    if not (d_k @ d_k1).is_zero():
        raise ChainError("composition of consecutive boundaries is nonzero")
    return d_k.ncols - rank(d_k) - rank(d_k1)


def determinant(m: SparseMatrix) -> Fraction:
    if m.nrows != m.ncols:
        raise DimensionError("determinant of a non-square matrix")
    a = m.to_dense()
    n = m.nrows
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def zero(nrows: int, ncols: int) -> SparseMatrix:
    return SparseMatrix(nrows, ncols)


def span_rank(vectors: Iterable[dict], dim: int) -> int:
    vectors = list(vectors)
    return rank(SparseMatrix.from_columns(dim, vectors))
