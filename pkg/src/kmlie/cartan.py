"""Generalized Cartan matrices: validation, classification, catalog, colorings.

Node indices are 0-based internally.  Every :class:`Gcm` carries printable
labels: finite and hyperbolic catalog types are labelled ``1..n`` and affine
types put the extending node first with label ``0``.

Catalog numbering (all chains run left to right):

* ``A_n``     chain 1-2-...-n
* ``D_n``     chain 1-...-(n-1), node n attached to node n-2
* ``E_n``     chain 1-...-(n-1), node n attached to node n-3 (n = 6, 7, 8, 10);
  for ``E10`` this is the A9 chain with node 10 hanging off node 7
* ``X_n~``    :func:`affine_extension` of ``X_n``; ``E9`` is ``E8~``
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import det, is_positive_definite


class GcmError(ValueError):
    pass


class NotGcm(GcmError):
    def __init__(self, i: int, j: int, reason: str):
        self.i, self.j, self.reason = i, j, reason
        super().__init__(f"not a GCM at ({i}, {j}): {reason}")


class NonSquare(GcmError):
    pass


class UnknownName(GcmError):
    pass


class NotFiniteType(GcmError):
    pass


class NotAffineType(GcmError):
    pass


class NotSimplyLaced(GcmError):
    pass


class LengthMismatch(GcmError):
    pass


class Kind(enum.Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class Gcm:
    entries: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = ()
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in r) for r in self.entries))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i + 1) for i in range(len(self.entries))))
        _check_axioms(self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def neighbors(self, i: int) -> List[int]:
        return [j for j in range(self.size) if j != i and self.entries[i][j] != 0]

    def label_index(self, label: str) -> int:
        return self.labels.index(str(label))

    def to_json(self) -> dict:
        out = {"matrix": [list(r) for r in self.entries], "labels": list(self.labels)}
        if self.name:
            out["name"] = self.name
        return out


@dataclass(frozen=True)
class GcmInfo:
    simply_laced: bool
    symmetrizable: bool
    kind: Kind
    rank: int
    components: Tuple[Tuple[int, ...], ...]
    component_kinds: Tuple[Kind, ...] = field(default=())
    symmetrizer: Tuple[Fraction, ...] = field(default=())


def _check_axioms(entries) -> None:
    n = len(entries)
    for r in entries:
        if len(r) != n:
            raise NonSquare(f"expected {n} columns, got {len(r)}")
    for i in range(n):
        if entries[i][i] != 2:
            raise NotGcm(i, i, "diagonal entry must be 2")
        for j in range(n):
            if i == j:
                continue
            if entries[i][j] > 0:
                raise NotGcm(i, j, "off-diagonal entry must be <= 0")
            if (entries[i][j] == 0) != (entries[j][i] == 0):
                raise NotGcm(i, j, "asymmetric zero pattern")


def components(gcm: Gcm) -> List[Tuple[int, ...]]:
    seen, out = set(), []
    for start in range(gcm.size):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in gcm.neighbors(i):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def symmetrizer(gcm: Gcm) -> Optional[Tuple[Fraction, ...]]:
    """Positive ``eps`` with ``eps_i a_ij = eps_j a_ji``, or None.

    Normalised so the smallest entry of each component is 1; for simply-laced
    matrices this is the all-ones vector.
    """
    a = gcm.entries
    eps: Dict[int, Fraction] = {}
    for comp in components(gcm):
        root = comp[0]
        eps[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in gcm.neighbors(i):
                val = eps[i] * a[i][j] / a[j][i]
                if j in eps:
                    if eps[j] != val:
                        return None
                else:
                    eps[j] = val
                    stack.append(j)
        m = min(eps[i] for i in comp)
        for i in comp:
            eps[i] /= m
    return tuple(eps[i] for i in range(gcm.size))


def symmetrized(gcm: Gcm) -> List[List[Fraction]]:
    """The symmetric matrix ``(alpha_i | alpha_j) = eps_i a_ij``."""
    eps = symmetrizer(gcm)
    if eps is None:
        raise GcmError("GCM is not symmetrizable")
    return [[eps[i] * gcm.entries[i][j] for j in range(gcm.size)] for i in range(gcm.size)]


def _classify_block(s: List[List[Fraction]]) -> Kind:
    n = len(s)
    if is_positive_definite(s):
        return Kind.FINITE
    if det(s) != 0:
        return Kind.INDEFINITE
    # corank 1 and PSD iff every maximal proper principal submatrix is positive definite
    for k in range(n):
        idx = [i for i in range(n) if i != k]
        if not is_positive_definite([[s[i][j] for j in idx] for i in idx]):
            return Kind.INDEFINITE
    return Kind.AFFINE


def _matrix_rank(m: List[List[Fraction]]) -> int:
    from .linalg import rref
    return len(rref(m)[1])


def validate_gcm(matrix) -> GcmInfo:
    """Check the GCM axioms and classify the matrix.

    ``kind`` is Finite (resp. Affine) when every connected component is of
    that type; any other mixture is reported as Indefinite, with the
    per-component verdicts in ``component_kinds``.
    """
    gcm = matrix if isinstance(matrix, Gcm) else Gcm(tuple(map(tuple, matrix)))
    a = gcm.entries
    n = gcm.size
    simply_laced = all(a[i][j] in (0, -1) for i in range(n) for j in range(n) if i != j)
    eps = symmetrizer(gcm)
    comps = components(gcm)
    rank = _matrix_rank([[Fraction(x) for x in r] for r in a])
    if eps is None:
        # non-symmetrizable: no invariant form, so the sign test does not apply
        kinds = tuple(Kind.INDEFINITE for _ in comps)
        return GcmInfo(simply_laced, False, Kind.INDEFINITE, rank, tuple(comps), kinds)
    s = symmetrized(gcm)
    kinds = tuple(_classify_block([[s[i][j] for j in c] for i in c]) for c in comps)
    if all(k is Kind.FINITE for k in kinds):
        kind = Kind.FINITE
    elif all(k is Kind.AFFINE for k in kinds):
        kind = Kind.AFFINE
    else:
        kind = Kind.INDEFINITE
    return GcmInfo(simply_laced, True, kind, rank, tuple(comps), kinds, eps)


def _from_edges(n: int, edges: Sequence[Tuple[int, int]]) -> List[List[int]]:
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return m


def _finite(series: str, n: int) -> Gcm:
    if series == "A":
        if n < 1:
            raise UnknownName(f"A{n}")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif series == "D":
        if n < 4:
            raise UnknownName(f"D{n}")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif series == "E":
        if n not in (6, 7, 8, 10):
            raise UnknownName(f"E{n}")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 4, n - 1)]
    else:
        raise UnknownName(series)
    return Gcm(tuple(map(tuple, _from_edges(n, edges))), name=f"{series}{n}")


_NAME_RE = re.compile(r"^([ADE])(\d+)(~?)$")


def named_gcm(name: str) -> Gcm:
    """Catalog lookup: ``A3``, ``A3~``, ``D4``, ``D5~``, ``E6``..``E8``, ``E9``, ``E10``."""
    key = name.strip().upper()
    if key == "E9":
        g = affine_extension(named_gcm("E8"))
        return Gcm(g.entries, g.labels, "E9")
    m = _NAME_RE.match(key)
    if not m:
        raise UnknownName(name)
    series, n, tilde = m.group(1), int(m.group(2)), m.group(3)
    base = _finite(series, n)
    if not tilde:
        return base
    if series == "E" and n == 10:
        raise UnknownName(name)
    return affine_extension(base)


def affine_extension(gcm: Gcm) -> Gcm:
    """Untwisted affine extension with the extending node first (label 0).

    The new row is ``a_0j = -(theta | alpha_j)`` with ``theta`` the highest root.
    ``A1`` becomes ``[[2, -2], [-2, 2]]``.
    """
    from .rootsys import enumerate_finite

    info = validate_gcm(gcm)
    if info.kind is not Kind.FINITE:
        raise NotFiniteType(f"{gcm.name or 'matrix'} is not of finite type")
    if not info.simply_laced:
        raise NotSimplyLaced(f"{gcm.name or 'matrix'} is not simply laced")
    if len(info.components) != 1:
        raise GcmError("affine extension needs a connected diagram")
    theta = enumerate_finite(gcm).highest_root
    n = gcm.size
    row = [-sum(theta[k] * gcm.entries[k][j] for k in range(n)) for j in range(n)]
    m = [[2] + row] + [[row[i]] + list(gcm.entries[i]) for i in range(n)]
    labels = ("0",) + tuple(gcm.labels)
    name = f"{gcm.name}~" if gcm.name else None
    return Gcm(tuple(map(tuple, m)), labels, name)


def gcm_from_json(obj: dict) -> Gcm:
    if "name" in obj and "matrix" not in obj:
        return named_gcm(obj["name"])
    return Gcm(tuple(map(tuple, obj["matrix"])), tuple(obj.get("labels", ())), obj.get("name"))


# ---------------------------------------------------------------------------
# colorings

WHITE, BLACK = -1, 1


@dataclass(frozen=True)
class Coloring:
    """Sign per node: -1 (white, X-generator) or +1 (black, Y-generator)."""

    signs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        for s in self.signs:
            if s not in (-1, 1):
                raise ValueError(f"coloring entries must be +1 or -1, got {s}")

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, i):
        return self.signs[i]

    def check(self, gcm: Gcm) -> None:
        if len(self.signs) != gcm.size:
            raise LengthMismatch(f"coloring has {len(self.signs)} entries, GCM has {gcm.size} nodes")

    @classmethod
    def parse(cls, items: Sequence) -> "Coloring":
        table = {"+1": 1, "1": 1, "black": 1, "b": 1, "y": 1,
                 "-1": -1, "white": -1, "w": -1, "x": -1}
        out = []
        for it in items:
            if isinstance(it, int):
                out.append(it)
            else:
                key = str(it).strip().lower()
                if key not in table:
                    raise ValueError(f"unknown color {it!r}")
                out.append(table[key])
        return cls(tuple(out))

    def to_json(self) -> List[str]:
        return ["+1" if s > 0 else "-1" for s in self.signs]
