"""Finite-type simply-laced Lie algebras in a Chevalley basis, exactly.

Structure constants come from the bimultiplicative sign function ``eps`` on
the root lattice with ``eps(a_i, a_i) = -1`` and ``eps(a_i, a_j) = -1`` iff
``a_ij = -1`` and ``i < j``:

* ``[e_a, e_b] = eps(a, b) e_{a+b}``      if ``a + b`` is a root
* ``[e_a, e_-a] = eps(a, -a) h_a``        with ``h_a = sum k_i h_i``
* ``[h_i, e_a] = a(h_i) e_a``

The generators are ``e_i = e_{a_i}`` and ``f_i = f_sign * e_{-a_i}``, the sign
chosen so that ``[e_i, f_i] = h_i`` holds verbatim.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cartan import Gcm, Kind, NotFiniteType, NotSimplyLaced, GcmError, validate_gcm
from .rootsys import Root, add, enumerate_finite, height, neg, simple_root
from .scalars import Field, coerce
from .linalg import Echelon
from . import kernels


class BasisMismatch(ValueError):
    pass


class AlgebraElement:
    """Sparse exact linear combination of basis vectors of one algebra."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg, coeffs=None):
        self.alg = alg
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.alg is not self.alg:
            raise BasisMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return AlgebraElement(self.alg, out)

    def __sub__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) - c
        return AlgebraElement(self.alg, out)

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, s):
        return AlgebraElement(self.alg, {k: s * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, AlgebraElement) or other.alg is not self.alg:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{c}*{self.alg.basis_label(k)}" for k, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    def as_vector(self) -> Dict[int, object]:
        return dict(self.coeffs)


@dataclass
class Closure:
    """Result of :func:`bracket_closure`.

    ``basis[k]`` is a genuine left-normed bracket of generators:
    ``trace[k] = (g, j)`` means ``basis[k] = [gens[g], basis[j]]`` and
    ``j = -1`` marks a generator itself.  :func:`replay_closure` recomputes it.
    """

    dimension: int
    basis: list
    trace: List[Tuple[int, int]] = field(default_factory=list)
    passes: List[int] = field(default_factory=list)


def bracket_closure(gens: Sequence, bracket: Callable, vec: Callable,
                    admit: Optional[Callable] = None) -> Closure:
    """Span closed under ``ad(g)`` for every generator ``g``.

    This is the Lie subalgebra generated by ``gens`` (it is spanned by the
    left-normed brackets of generators).  ``admit`` optionally rejects
    brackets, which is how degree-truncated closures are expressed.
    """
    ech = Echelon()
    basis, trace = [], []
    for g_idx, g in enumerate(gens):
        if ech.add(vec(g)) is not None:
            basis.append(g)
            trace.append((g_idx, -1))
    passes = [len(basis)]
    start = 0
    while start < len(basis):
        stop = len(basis)
        for j in range(start, stop):
            for g_idx, g in enumerate(gens):
                y = bracket(g, basis[j])
                if not y or (admit is not None and not admit(y)):
                    continue
                if ech.add(vec(y)) is not None:
                    basis.append(y)
                    trace.append((g_idx, j))
        start = stop
        passes.append(len(basis))
    return Closure(len(basis), basis, trace, passes)


def replay_closure(gens: Sequence, bracket: Callable, vec: Callable,
                   trace: Sequence[Tuple[int, int]]) -> int:
    """Rebuild the traced brackets and return the rank of their span."""
    ech = Echelon()
    built = []
    for g, j in trace:
        y = gens[g] if j < 0 else bracket(gens[g], built[j])
        built.append(y)
        ech.add(vec(y))
    return len(ech)


class ChevalleyAlgebra:
    """``g(A)`` for a connected finite simply-laced GCM, over Q or Q(i)."""

    def __init__(self, gcm: Gcm, field: Field | str = Field.RATIONAL):
        info = validate_gcm(gcm)
        if info.kind is not Kind.FINITE:
            raise NotFiniteType(f"{gcm.name or 'matrix'} is not of finite type")
        if not info.simply_laced:
            raise NotSimplyLaced(f"{gcm.name or 'matrix'} is not simply laced")
        if len(info.components) != 1:
            raise GcmError("Chevalley algebras are built for connected diagrams")
        self.gcm = gcm
        self.field = Field.parse(field)
        self.root_system = enumerate_finite(gcm)
        self.rank = n = gcm.size
        self.roots: Tuple[Root, ...] = self.root_system.roots
        self.root_index: Dict[Root, int] = {r: k for k, r in enumerate(self.roots)}
        self.dim = len(self.roots) + n
        self._mask = [[1 if (i == j or (gcm.entries[i][j] == -1 and i < j)) else 0
                       for j in range(n)] for i in range(n)]
        self._table = self._build_table()
        a1 = simple_root(n, 0)
        self.f_sign = self.eps(a1, neg(a1))
        self._check_generator_relations()

    # -- structure ---------------------------------------------------------

    def eps(self, a: Sequence[int], b: Sequence[int]) -> int:
        m = self._mask
        s = 0
        for i, ai in enumerate(a):
            if ai:
                row = m[i]
                for j, bj in enumerate(b):
                    if bj and row[j]:
                        s += ai * bj
        return -1 if s % 2 else 1

    def h_index(self, i: int) -> int:
        return len(self.roots) + i

    def _build_table(self):
        n, dim = self.rank, self.dim
        roots, index = self.roots, self.root_index
        a = self.gcm.entries
        table: List[List[Tuple[Tuple[int, int], ...]]] = [[()] * dim for _ in range(dim)]
        for x, ra in enumerate(roots):
            for y, rb in enumerate(roots):
                s = add(ra, rb)
                if s in index:
                    table[x][y] = ((index[s], self.eps(ra, rb)),)
                elif not any(s):
                    c = self.eps(ra, rb)
                    table[x][y] = tuple((self.h_index(k), c * ra[k]) for k in range(n) if ra[k])
        for i in range(n):
            hi = self.h_index(i)
            for x, ra in enumerate(roots):
                val = sum(ra[j] * a[i][j] for j in range(n))
                if val:
                    table[hi][x] = ((x, val),)
                    table[x][hi] = ((x, -val),)
        return table

    def _check_generator_relations(self) -> None:
        n = self.rank
        a = self.gcm.entries
        for i in range(n):
            for j in range(n):
                ei, fi, hi = self.e(i), self.f(i), self.h(i)
                ej, fj = self.e(j), self.f(j)
                assert self.bracket(hi, ej) == a[i][j] * ej
                assert self.bracket(hi, fj) == -a[i][j] * fj
                assert self.bracket(ei, fj) == (hi if i == j else self.zero())
                if i != j:
                    k = 1 - a[i][j]
                    x, y = ej, fj
                    for _ in range(k):
                        x, y = self.bracket(ei, x), self.bracket(fi, y)
                    assert not x and not y, "Serre relation failed"

    def basis_label(self, k: int) -> str:
        if k < len(self.roots):
            return "e" + "".join(str(x) if x >= 0 else f"({x})" for x in self.roots[k]).join("[]")
        return f"h{self.gcm.labels[k - len(self.roots)]}"

    # -- elements ----------------------------------------------------------

    def element(self, coeffs: Dict[int, object]) -> AlgebraElement:
        return AlgebraElement(self, {k: coerce(c, self.field) for k, c in coeffs.items()})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self)

    def basis_vector(self, k: int) -> AlgebraElement:
        return AlgebraElement(self, {k: 1})

    def root_vector(self, root: Sequence[int]) -> AlgebraElement:
        return self.basis_vector(self.root_index[tuple(root)])

    def e(self, i: int) -> AlgebraElement:
        return self.root_vector(simple_root(self.rank, i))

    def f(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {self.root_index[neg(simple_root(self.rank, i))]: self.f_sign})

    def h(self, i: int) -> AlgebraElement:
        return self.basis_vector(self.h_index(i))

    def basis(self) -> List[AlgebraElement]:
        return [self.basis_vector(k) for k in range(self.dim)]

    def bracket_basis(self, x: int, y: int):
        return self._table[x][y]

    def bracket(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.alg is not self or y.alg is not self:
            raise BasisMismatch("bracket of elements from another algebra")
        out: Dict[int, object] = {}
        table = self._table
        for a, ca in x.coeffs.items():
            row = table[a]
            for b, cb in y.coeffs.items():
                for c, k in row[b]:
                    out[c] = out.get(c, 0) + k * ca * cb
        return AlgebraElement(self, out)

    def ad(self, x: AlgebraElement, y: AlgebraElement, power: int = 1) -> AlgebraElement:
        for _ in range(power):
            y = self.bracket(x, y)
        return y

    def degree(self, k: int) -> Root:
        """Root-lattice degree of basis vector ``k`` (zero for the Cartan part)."""
        if k < len(self.roots):
            return self.roots[k]
        return (0,) * self.rank

    # -- derived objects ---------------------------------------------------

    def generator_path(self, root: Sequence[int]) -> List[int]:
        """Simple-root indices ``i1, ..., ik`` with ``e_root`` proportional to
        ``[e_i1, [e_i2, ... e_ik]]`` (negative roots: the same with ``f``).

        At each step the smallest ``i`` with ``root - a_i`` a root is peeled off.
        """
        r = tuple(root)
        sgn = 1 if height(r) > 0 else -1
        r = r if sgn > 0 else neg(r)
        path = []
        while height(r) > 1:
            i = next(i for i in range(self.rank)
                     if r[i] > 0 and add(r, simple_root(self.rank, i), -1) in self.root_index)
            path.append(i)
            r = add(r, simple_root(self.rank, i), -1)
        path.append(r.index(1))
        return path

    def nested_bracket(self, gens: Sequence[AlgebraElement]) -> AlgebraElement:
        """``[g1, [g2, ... [g_{k-1}, g_k]]]``."""
        out = gens[-1]
        for g in reversed(gens[:-1]):
            out = self.bracket(g, out)
        return out

    def highest_root_vector(self) -> AlgebraElement:
        """``e_theta`` as the nested bracket of ``e``'s along :meth:`generator_path`."""
        theta = self.root_system.highest_root
        return self.nested_bracket([self.e(i) for i in self.generator_path(theta)])

    def structure_csr(self):
        ptr, idx, val = [0], [], []
        for x in range(self.dim):
            for y in range(self.dim):
                for c, k in self._table[x][y]:
                    idx.append(c)
                    val.append(k)
                ptr.append(len(idx))
        return ptr, idx, val

    def structure_constants(self) -> List[Tuple[int, int, int, int]]:
        return [(x, y, c, k) for x in range(self.dim) for y in range(self.dim)
                for c, k in self._table[x][y]]

    def to_json(self) -> dict:
        return {"gcm": self.gcm.to_json(), "dimension": self.dim,
                "basis": [self.basis_label(k) for k in range(self.dim)],
                "f_sign": self.f_sign,
                "structure_constants": [[x, y, c, str(k)] for x, y, c, k in self.structure_constants()]}

    def berman_involution(self, signs: Sequence[int]) -> "Automorphism":
        return berman_involution(self, signs)


def build_algebra(gcm: Gcm, field: Field | str = Field.RATIONAL) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(gcm, field)


def bracket(alg: ChevalleyAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return alg.bracket(x, y)


# ---------------------------------------------------------------------------
# automorphisms


class Automorphism:
    """Linear map given by images of basis vectors."""

    def __init__(self, alg: ChevalleyAlgebra, images: Dict[int, AlgebraElement], name: str = ""):
        self.alg = alg
        self.images = images
        self.name = name

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        if x.alg is not self.alg:
            raise BasisMismatch("automorphism applied to a foreign element")
        out: Dict[int, object] = {}
        for k, c in x.coeffs.items():
            for kk, cc in self.images[k].coeffs.items():
                out[kk] = out.get(kk, 0) + c * cc
        return AlgebraElement(self.alg, out)

    def matrix(self) -> List[List]:
        d = self.alg.dim
        return [[self.images[col].coeffs.get(row, 0) for col in range(d)] for row in range(d)]


def berman_involution(alg: ChevalleyAlgebra, signs: Sequence[int]) -> Automorphism:
    """The automorphism ``e_i -> rho_i f_i, f_i -> rho_i e_i, h_i -> -h_i``.

    Images of the remaining root vectors follow by bracketing along
    :meth:`ChevalleyAlgebra.generator_path`; all signs ``-1`` gives the
    Chevalley involution.
    """
    n = alg.rank
    signs = tuple(int(s) for s in signs)
    if len(signs) != n:
        raise ValueError(f"need {n} signs, got {len(signs)}")
    images: Dict[int, AlgebraElement] = {}
    for i in range(n):
        images[alg.h_index(i)] = -alg.h(i)
    gen_img_e = [signs[i] * alg.f(i) for i in range(n)]
    gen_img_f = [signs[i] * alg.e(i) for i in range(n)]
    for r in sorted(alg.roots, key=lambda r: abs(height(r))):
        path = alg.generator_path(r)
        pos = height(r) > 0
        gens = [alg.e(i) if pos else alg.f(i) for i in path]
        imgs = [gen_img_e[i] if pos else gen_img_f[i] for i in path]
        (coef,) = alg.nested_bracket(gens).coeffs.values()  # always +-1
        images[alg.root_index[r]] = alg.nested_bracket(imgs) * coef
    return Automorphism(alg, images, name=f"sigma{signs}")


def chevalley_involution(alg: ChevalleyAlgebra, x: Optional[AlgebraElement] = None):
    """``omega(e_i) = -f_i``, ``omega(f_i) = -e_i``, ``omega(h_i) = -h_i``."""
    om = getattr(alg, "_omega", None)
    if om is None:
        om = berman_involution(alg, [-1] * alg.rank)
        om.name = "omega"
        alg._omega = om
    return om if x is None else om(x)


def generated_subalgebra(alg: ChevalleyAlgebra, gens: Sequence[AlgebraElement]) -> Closure:
    if not gens:
        return Closure(0, [], [], [0])
    return bracket_closure(gens, alg.bracket, lambda x: x.coeffs)


def jacobi_failures(alg: ChevalleyAlgebra, triples: Iterable[Tuple[int, int, int]]) -> Tuple[int, int]:
    """Jacobi check over basis triples via the integer kernel."""
    flat = [v for t in triples for v in t]
    ptr, idx, val = alg.structure_csr()
    return kernels.jacobi_failures(ptr, idx, val, alg.dim, flat)


def all_triples(dim: int):
    return product(range(dim), repeat=3)


# ---------------------------------------------------------------------------
# representations as exact matrices


def mat(rows) -> np.ndarray:
    return np.array(rows, dtype=object)


def zeros(n: int) -> np.ndarray:
    return np.array([[0] * n for _ in range(n)], dtype=object)


def unit(n: int, i: int, j: int) -> np.ndarray:
    m = zeros(n)
    m[i, j] = 1
    return m


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product that skips zero entries; object-dtype ``dot`` does not."""
    rows_b = [[(k, y) for k, y in enumerate(row) if y] for row in b.tolist()]
    out = np.array([[0] * b.shape[1] for _ in range(a.shape[0])], dtype=object)
    for i, row in enumerate(a.tolist()):
        acc = {}
        for j, x in enumerate(row):
            if x:
                for k, y in rows_b[j]:
                    acc[k] = acc.get(k, 0) + x * y
        for k, v in acc.items():
            out[i, k] = v
    return out


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return matmul(a, b) - matmul(b, a)


def is_zero(m: np.ndarray) -> bool:
    return all(x == 0 for x in m.flat)


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


class MatrixOracleAn:
    """``sl(n)`` as traceless matrices, independent of the Chevalley table.

    ``e_i = E_{i,i+1}``, ``f_i = E_{i+1,i}``, ``h_i = E_ii - E_{i+1,i+1}``.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n >= 2 required")
        self.n = n

    def e(self, i: int) -> np.ndarray:
        return unit(self.n, i, i + 1)

    def f(self, i: int) -> np.ndarray:
        return unit(self.n, i + 1, i)

    def h(self, i: int) -> np.ndarray:
        return unit(self.n, i, i) - unit(self.n, i + 1, i + 1)

    bracket = staticmethod(commutator)


def matrix_oracle_An(n: int) -> MatrixOracleAn:
    return MatrixOracleAn(n)


def defining_rep(alg: ChevalleyAlgebra) -> Dict[int, np.ndarray]:
    """Images of every basis vector of ``g(A_{n-1})`` in ``sl(n)``.

    Built from the oracle's generator matrices by the same nested brackets that
    define each root vector; raises if ``alg`` is not of type A in chain order.
    """
    n = alg.rank + 1
    a = alg.gcm.entries
    for i in range(alg.rank):
        for j in range(alg.rank):
            expect = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if a[i][j] != expect:
                raise ValueError("defining_rep needs type A with chain numbering")
    orc = MatrixOracleAn(n)
    rep: Dict[int, np.ndarray] = {}
    for i in range(alg.rank):
        rep[alg.h_index(i)] = orc.h(i)
    for r in alg.roots:
        path = alg.generator_path(r)
        pos = height(r) > 0
        mats = [orc.e(i) if pos else orc.f(i) for i in path]
        m = mats[-1]
        for g in reversed(mats[:-1]):
            m = commutator(g, m)
        value = alg.nested_bracket([alg.e(i) if pos else alg.f(i) for i in path])
        (coef,) = value.coeffs.values()  # value = coef * e_r with coef = +-1
        rep[alg.root_index[r]] = m * coef
    return rep


def adjoint_rep(alg: ChevalleyAlgebra) -> Dict[int, np.ndarray]:
    rep = {}
    for x in range(alg.dim):
        m = zeros(alg.dim)
        for y in range(alg.dim):
            for c, k in alg.bracket_basis(x, y):
                m[c, y] += k
        rep[x] = m
    return rep


def rep_apply(rep: Dict[int, np.ndarray], x: AlgebraElement) -> np.ndarray:
    size = next(iter(rep.values())).shape[0]
    out = zeros(size)
    for k, c in x.coeffs.items():
        out = out + rep[k] * c
    return out


def check_homomorphism(alg: ChevalleyAlgebra, rep: Dict[int, np.ndarray],
                       pairs: Optional[Iterable[Tuple[int, int]]] = None) -> List[Tuple[int, int]]:
    """Basis pairs on which ``rep([x, y]) != [rep x, rep y]``."""
    bad = []
    pairs = pairs if pairs is not None else product(range(alg.dim), repeat=2)
    for x, y in pairs:
        lhs = rep_apply(rep, alg.bracket(alg.basis_vector(x), alg.basis_vector(y)))
        if not mat_equal(lhs, commutator(rep[x], rep[y])):
            bad.append((x, y))
    return bad
