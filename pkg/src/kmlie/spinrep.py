"""Spin-1/2 type matrices for Berman generators, built from Pauli strings.

Node ``i`` gets ``P_i = X_i * prod(Z_j for neighbours j < i)``.  Two such
strings anticommute exactly when the nodes are adjacent, and each squares to
the identity.  White nodes use ``(i/2) P_i`` (square ``-1/4``), black nodes
``(1/2) P_i`` (square ``+1/4``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .berman import RelationReport, verify_relations
from .cartan import WHITE, Coloring, Gcm, NotSimplyLaced, validate_gcm
from .chevalley import commutator, mat_equal, matmul
from .loopalg import adjoint
from .scalars import I, format_matrix_entry

DEFAULT_MAX_NODES = 12

_PHASES = (1, I, -1, -I)


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class PauliString:
    """``i^phase * prod_q X_q^{x_q} Z_q^{z_q}`` with X applied after Z on each qubit.

    Masks are ints; bit ``q`` refers to qubit ``q``.
    """

    n: int
    x_mask: int
    z_mask: int
    phase: int = 0

    def commutes(self, other: "PauliString") -> bool:
        pairing = bin(self.x_mask & other.z_mask).count("1") + bin(self.z_mask & other.x_mask).count("1")
        return pairing % 2 == 0

    def __mul__(self, other: "PauliString") -> "PauliString":
        # (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a+c} Z^{b+d} per qubit
        sign = bin(self.z_mask & other.x_mask).count("1") % 2
        return PauliString(self.n, self.x_mask ^ other.x_mask, self.z_mask ^ other.z_mask,
                           (self.phase + other.phase + 2 * sign) % 4)

    def matrix(self) -> np.ndarray:
        """Dense ``2^n x 2^n`` matrix; qubit 0 is the least significant bit."""
        dim = 1 << self.n
        out = np.array([[0] * dim for _ in range(dim)], dtype=object)
        ph = _PHASES[self.phase]
        for col in range(dim):
            # Z acts first: sign from the z bits of the input basis state
            sign = -1 if bin(col & self.z_mask).count("1") % 2 else 1
            out[col ^ self.x_mask, col] = ph * sign
        return out

    def label(self) -> str:
        chars = []
        for q in range(self.n):
            x, z = (self.x_mask >> q) & 1, (self.z_mask >> q) & 1
            chars.append("IXZY"[x + 2 * z])  # Y here means XZ, phase dropped
        return "".join(chars)


def node_strings(gcm: Gcm) -> List[PauliString]:
    n = gcm.size
    out = []
    for i in range(n):
        z = 0
        for j in gcm.neighbors(i):
            if j < i:
                z |= 1 << j
        out.append(PauliString(n, 1 << i, z))
    return out


@dataclass
class SpinRep:
    gcm: Gcm
    coloring: Coloring
    strings: List[PauliString]
    matrices: List[np.ndarray]

    @property
    def dimension(self) -> int:
        return 1 << self.gcm.size

    def to_json(self) -> dict:
        return {"gcm": self.gcm.to_json(), "coloring": self.coloring.to_json(),
                "dimension": self.dimension,
                "strings": [s.label() for s in self.strings],
                "matrices": [[[format_matrix_entry(x) for x in row] for row in m.tolist()]
                             for m in self.matrices]}


def build_spin_rep(gcm: Gcm, coloring: Coloring | Sequence, max_nodes: int = DEFAULT_MAX_NODES) -> SpinRep:
    if not validate_gcm(gcm).simply_laced:
        raise NotSimplyLaced(f"{gcm.name or 'matrix'} is not simply laced")
    if not isinstance(coloring, Coloring):
        coloring = Coloring.parse(coloring)
    coloring.check(gcm)
    if gcm.size > max_nodes:
        raise TooLarge(f"{gcm.size} nodes exceeds the dense limit {max_nodes}; raise max_nodes")
    strings = node_strings(gcm)
    half = Fraction(1, 2)
    mats = []
    for s, rho in zip(strings, coloring.signs):
        scale = I * half if rho == WHITE else half
        mats.append(s.matrix() * scale)
    return SpinRep(gcm, coloring, strings, mats)


def identity(dim: int) -> np.ndarray:
    out = np.array([[0] * dim for _ in range(dim)], dtype=object)
    for k in range(dim):
        out[k, k] = 1
    return out


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return matmul(a, b) + matmul(b, a)


def _is_zero(m) -> bool:
    return all(x == 0 for x in m.flat)


@dataclass
class SpinReport:
    squares: List[bool]
    pair_checks: List[Tuple[int, int, str, bool, bool]]  # i, j, kind, matrix ok, GF(2) agrees
    adjointness: List[bool]
    traceless: List[bool]
    relations: RelationReport

    @property
    def passed(self) -> bool:
        return (all(self.squares) and all(ok and agree for *_, ok, agree in self.pair_checks)
                and all(self.adjointness) and all(self.traceless) and self.relations.passed)

    def to_json(self) -> dict:
        return {"pass": self.passed, "squares": self.squares,
                "pairs": [{"nodes": [i, j], "kind": k, "pass": ok, "symplectic_agrees": ag}
                          for i, j, k, ok, ag in self.pair_checks],
                "adjointness": self.adjointness, "traceless": self.traceless,
                "relations": self.relations.to_json()}


def verify_spin_properties(rep: SpinRep, gcm: Gcm | None = None, coloring: Coloring | None = None) -> SpinReport:
    gcm = gcm or rep.gcm
    coloring = coloring or rep.coloring
    n = gcm.size
    ident = identity(rep.dimension)
    mats = rep.matrices
    squares = [mat_equal(matmul(m, m), ident * Fraction(rho, 4)) for m, rho in zip(mats, coloring.signs)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            a = gcm.entries[i][j]
            comm = _is_zero(commutator(mats[i], mats[j]))
            anti = _is_zero(anticommutator(mats[i], mats[j]))
            predicted = rep.strings[i].commutes(rep.strings[j])
            if a == 0:
                pairs.append((i, j, "commute", comm, predicted == comm))
            else:
                pairs.append((i, j, "anticommute", anti, (not predicted) == anti))
    adj = []
    for m, rho in zip(mats, coloring.signs):
        target = -m if rho == WHITE else m
        adj.append(mat_equal(adjoint(m), target))
    traceless = [sum(m[k, k] for k in range(rep.dimension)) == 0 for m in mats]
    rel = verify_relations(gcm, coloring.signs, mats, commutator, equal=mat_equal,
                           zero=ident * 0)
    return SpinReport(squares, pairs, adj, traceless, rel)
