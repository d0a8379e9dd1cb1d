"""Exact linear algebra over Q and Q(i).

Two flavours: a sparse incremental echelon form used by every closure
computation, and small dense helpers (RREF, nullspace, determinant, inertia)
for matrices of modest size.  Entries are ``int``/``Fraction``/``GaussQ``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

SparseVec = Dict[Hashable, object]


def _inv(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


class Echelon:
    """Incrementally maintained semi-echelon basis of sparse vectors.

    Each stored row is normalised to 1 at its pivot, the pivot being the
    smallest key of the row.  Keys only need to be mutually orderable.
    """

    def __init__(self):
        self.rows: Dict[Hashable, SparseVec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        v = {k: c for k, c in vec.items() if c}
        rows = self.rows
        while True:
            hits = [k for k in v if k in rows]
            if not hits:
                return v
            k = min(hits)
            c = v[k]
            for kk, rc in rows[k].items():
                nv = v.get(kk, 0) - c * rc
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)

    def add(self, vec: SparseVec) -> Optional[SparseVec]:
        """Insert ``vec``; return the new normalised row or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        s = _inv(v[p])
        row = {k: c * s for k, c in v.items()}
        row[p] = 1
        self.rows[p] = row
        return row

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[SparseVec]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def rref(matrix: Sequence[Sequence]) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form of a dense matrix; returns (rows, pivot columns)."""
    m = [list(r) for r in matrix]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = _inv(m[r][c])
        m[r] = [x * s for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(matrix: Sequence[Sequence], ncols: Optional[int] = None) -> List[List]:
    """Basis of the right kernel ``{x : M x = 0}``."""
    if not matrix:
        n = ncols or 0
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    red, pivots = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def leading_minors(matrix: Sequence[Sequence]) -> List[Fraction]:
    return [det([row[:k] for row in matrix[:k]]) for k in range(1, len(matrix) + 1)]


def is_positive_definite(matrix: Sequence[Sequence]) -> bool:
    """Sylvester's criterion on a symmetric rational matrix."""
    return all(d > 0 for d in leading_minors(matrix))


def inertia(matrix: Sequence[Sequence]) -> Tuple[int, int, int]:
    """(n_positive, n_zero, n_negative) of a symmetric rational matrix.

    Congruence diagonalisation with symmetric pivoting; exact.
    """
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            # zero diagonal: look for an off-diagonal entry and rotate it in
            pair = next(((i, j) for i in active for j in active
                         if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j  makes m[i][i] = 2 m[i][j] != 0
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            continue
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            if m[i][piv]:
                f = m[i][piv] / d
                for k in active:
                    m[i][k] -= f * m[piv][k]
        for i in active:
            m[piv][i] = m[i][piv] = Fraction(0)
    return pos, n - pos - neg, neg
