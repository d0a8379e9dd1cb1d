"""Root systems of (mostly simply-laced) Kac-Moody algebras.

Roots are plain tuples of integers in simple-root coordinates.  Membership
works for any symmetrizable GCM: a positive vector is walked down by
height-lowering simple reflections.  It is real iff the walk ends at a simple
root; it is imaginary iff the walk ends in the fundamental chamber with
connected support (Kac's characterisation of positive imaginary roots as the
Weyl orbit of that set).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from . import kernels
from .cartan import (Gcm, GcmError, Kind, NotAffineType, NotFiniteType,
                     symmetrizer, validate_gcm)
from .linalg import nullspace

Root = Tuple[int, ...]


class RootError(ValueError):
    pass


class DimensionMismatch(RootError):
    pass


class MixedSignVector(RootError):
    pass


class AlphaNotReal(RootError):
    pass


class BetaNotRoot(RootError):
    pass


class OppositePair(RootError):
    pass


class SweepBoundExceeded(RootError):
    pass


class RootClass(enum.Enum):
    REAL = "Real"
    IMAGINARY = "Imaginary"
    NOT_ROOT = "NotRoot"


def height(v: Sequence[int]) -> int:
    return sum(v)


def simple_root(n: int, i: int) -> Root:
    return tuple(1 if j == i else 0 for j in range(n))


def add(a: Sequence[int], b: Sequence[int], k: int = 1) -> Root:
    return tuple(x + k * y for x, y in zip(a, b))


def scale(k: int, a: Sequence[int]) -> Root:
    return tuple(k * x for x in a)


def neg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def _check_dim(gcm: Gcm, *vs) -> None:
    for v in vs:
        if len(v) != gcm.size:
            raise DimensionMismatch(f"vector of length {len(v)} for a rank-{gcm.size} GCM")


@lru_cache(maxsize=None)
def _form(gcm: Gcm) -> Tuple[Tuple[Fraction, ...], ...]:
    eps = symmetrizer(gcm)
    if eps is None:
        raise GcmError("GCM is not symmetrizable")
    n = gcm.size
    return tuple(tuple(eps[i] * gcm.entries[i][j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def _flat(gcm: Gcm) -> Tuple[int, ...]:
    return tuple(x for row in gcm.entries for x in row)


def bilinear_form(gcm: Gcm, a: Sequence[int], b: Sequence[int]):
    """``(a|b)`` under the invariant form; simply-laced: ``a^T A b``."""
    _check_dim(gcm, a, b)
    s = _form(gcm)
    n = gcm.size
    out = sum(a[i] * s[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])
    out = Fraction(out)
    return out.numerator if out.denominator == 1 else out


def norm(gcm: Gcm, v: Sequence[int]):
    return bilinear_form(gcm, v, v)


def coroot_pairing(gcm: Gcm, v: Sequence[int], i: int) -> int:
    """``v(alpha_i^vee) = sum_j a_ij v_j``."""
    row = gcm.entries[i]
    return sum(row[j] * v[j] for j in range(gcm.size))


def pairing(gcm: Gcm, beta: Sequence[int], alpha: Sequence[int]) -> int:
    """``beta(alpha^vee) = 2 (beta|alpha) / (alpha|alpha)`` for a real ``alpha``."""
    val = Fraction(2 * bilinear_form(gcm, beta, alpha), bilinear_form(gcm, alpha, alpha))
    if val.denominator != 1:
        raise RootError(f"non-integral pairing {val}")
    return val.numerator


def reflect(gcm: Gcm, v: Sequence[int], i: int) -> Root:
    c = coroot_pairing(gcm, v, i)
    out = list(v)
    out[i] -= c
    return tuple(out)


def _sign(v: Sequence[int]) -> int:
    pos = any(x > 0 for x in v)
    negv = any(x < 0 for x in v)
    if pos and negv:
        return 0
    return 1 if pos else (-1 if negv else 0)


def _connected_support(gcm: Gcm, v: Sequence[int]) -> bool:
    supp = [i for i, x in enumerate(v) if x]
    if not supp:
        return False
    seen = {supp[0]}
    stack = [supp[0]]
    sset = set(supp)
    while stack:
        i = stack.pop()
        for j in gcm.neighbors(i):
            if j in sset and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(supp)


def classify(gcm: Gcm, v: Sequence[int]) -> RootClass:
    """Real / imaginary / not a root, for any symmetrizable GCM."""
    _check_dim(gcm, v)
    s = _sign(v)
    if s == 0:
        return RootClass.NOT_ROOT
    if s < 0:
        v = neg(v)
    eps = symmetrizer(gcm)
    nv = norm(gcm, v)
    if nv > 0 and all(nv != 2 * e for e in eps):
        return RootClass.NOT_ROOT
    status, _, w = kernels.descend(_flat(gcm), gcm.size, v)
    if status == kernels.REAL:
        return RootClass.REAL
    if status == kernels.CHAMBER and _connected_support(gcm, w):
        return RootClass.IMAGINARY
    return RootClass.NOT_ROOT


def is_root(gcm: Gcm, v: Sequence[int]) -> bool:
    return classify(gcm, v) is not RootClass.NOT_ROOT


def is_real_root(gcm: Gcm, v: Sequence[int]) -> bool:
    """True iff height descent by simple reflections reaches a simple root."""
    _check_dim(gcm, v)
    s = _sign(v)
    if s == 0:
        if any(v):
            raise MixedSignVector(f"{tuple(v)} has coefficients of both signs")
        return False
    if s < 0:
        v = neg(v)
    status, _, _ = kernels.descend(_flat(gcm), gcm.size, v)
    return status == kernels.REAL


def descent_word(gcm: Gcm, v: Sequence[int]) -> Tuple[List[int], Root]:
    """Reflection indices applied by the descent and the vector it ends on."""
    v = tuple(v)
    word = []
    while height(v) != 1:
        hit = next((i for i in range(gcm.size) if coroot_pairing(gcm, v, i) > 0), None)
        if hit is None:
            break
        v = reflect(gcm, v, hit)
        word.append(hit)
        if min(v) < 0:
            break
    return word, v


# ---------------------------------------------------------------------------
# finite type


@dataclass(frozen=True)
class FiniteRootSystem:
    gcm: Gcm
    roots: Tuple[Root, ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    root_set: FrozenSet[Root] = field(repr=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.gcm.size

    def __contains__(self, v) -> bool:
        return tuple(v) in self.root_set

    def simple_roots(self) -> List[Root]:
        return [simple_root(self.rank, i) for i in range(self.rank)]


@lru_cache(maxsize=None)
def enumerate_finite(gcm: Gcm) -> FiniteRootSystem:
    """All roots of a finite-type system by closure under simple reflections."""
    info = validate_gcm(gcm)
    if info.kind is not Kind.FINITE:
        raise NotFiniteType(f"{gcm.name or 'matrix'} is {info.kind.value}, not finite")
    n = gcm.size
    found = {simple_root(n, i) for i in range(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = reflect(gcm, v, i)
                if w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    pos = sorted((r for r in found if _sign(r) > 0), key=lambda r: (height(r), tuple(-x for x in r)))
    negs = [neg(r) for r in pos]
    roots = tuple(pos) + tuple(negs)
    top = max(height(r) for r in pos)
    tops = [r for r in pos if height(r) == top]
    if len(info.components) == 1 and len(tops) != 1:
        raise RootError("highest root not unique")
    theta = tops[0]
    return FiniteRootSystem(gcm, roots, tuple(pos), theta, frozenset(roots))


def highest_root(gcm: Gcm) -> Root:
    return enumerate_finite(gcm).highest_root


# ---------------------------------------------------------------------------
# affine type


@lru_cache(maxsize=None)
def null_root(gcm: Gcm) -> Root:
    """The primitive positive null vector ``delta`` of a connected affine GCM."""
    info = validate_gcm(gcm)
    if info.kind is not Kind.AFFINE or len(info.components) != 1:
        raise NotAffineType(f"{gcm.name or 'matrix'} is not connected affine")
    ker = nullspace([[Fraction(x) for x in r] for r in gcm.entries])
    (vec,) = ker
    from math import gcd, lcm
    den = lcm(*(Fraction(x).denominator for x in vec))
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def affine_node(gcm: Gcm) -> int:
    """Index of the extending node: label ``0`` if present, else the first node
    with ``delta_i = 1`` whose removal leaves a finite diagram."""
    delta = null_root(gcm)
    if "0" in gcm.labels and delta[gcm.label_index("0")] == 1:
        return gcm.label_index("0")
    for i, d in enumerate(delta):
        if d == 1 and validate_gcm(finite_part(gcm, i)).kind is Kind.FINITE:
            return i
    raise NotAffineType("no extending node found")


def finite_part(gcm: Gcm, node: int) -> Gcm:
    idx = [i for i in range(gcm.size) if i != node]
    return Gcm(tuple(tuple(gcm.entries[i][j] for j in idx) for i in idx),
               tuple(gcm.labels[i] for i in idx))


def affine_decompose(gcm: Gcm, v: Sequence[int]) -> Tuple[int, Root]:
    """Write ``v = n delta + alpha`` with ``alpha`` on the finite sub-diagram.

    Returns ``(n, alpha)`` where ``alpha`` is given in finite-part coordinates.
    """
    _check_dim(gcm, v)
    node = affine_node(gcm)
    delta = null_root(gcm)
    n = v[node]
    alpha = tuple(v[i] - n * delta[i] for i in range(gcm.size) if i != node)
    return n, alpha


def affine_compose(gcm: Gcm, n: int, alpha: Sequence[int]) -> Root:
    node = affine_node(gcm)
    delta = null_root(gcm)
    it = iter(alpha)
    return tuple(n * delta[i] + (0 if i == node else next(it)) for i in range(gcm.size))


def affine_classify(gcm: Gcm, v: Sequence[int]) -> RootClass:
    """Classification through ``Delta^re = {n delta + alpha}``, ``Delta^im = {n delta}``."""
    n, alpha = affine_decompose(gcm, v)
    if not any(alpha):
        return RootClass.IMAGINARY if n != 0 else RootClass.NOT_ROOT
    fin = enumerate_finite(finite_part(gcm, affine_node(gcm)))
    return RootClass.REAL if alpha in fin else RootClass.NOT_ROOT


# ---------------------------------------------------------------------------
# root strings and Serre-type checks

Membership = Callable[[Gcm, Sequence[int]], RootClass]


@dataclass(frozen=True)
class RootString:
    alpha: Root
    beta: Root
    p: int
    q: int
    members: Tuple[Root, ...]
    kinds: Tuple[RootClass, ...]
    r: int
    pairing: int

    @property
    def case_ok(self) -> bool:
        """Whether the string matches the case list for its value of ``r``."""
        real = [k is RootClass.REAL for k in self.kinds]
        n = len(real)
        if not (real[0] and real[-1]) or self.p - self.q != self.pairing:
            return False
        if self.r == 1:
            return n == 1
        if self.r == 2:
            return all(not x for x in real[1:-1])
        if self.r == 3:
            return n == 3 and all(real)
        if self.r == 4:
            return n >= 4 and real[1] and real[-2] and all(not x for x in real[2:-2])
        return False


def root_string(gcm: Gcm, alpha: Sequence[int], beta: Sequence[int],
                member: Optional[Membership] = None) -> RootString:
    """The alpha-string through beta by a bounded sweep ``|k| <= 4 + |beta(alpha^vee)|``."""
    member = member or classify
    alpha, beta = tuple(alpha), tuple(beta)
    _check_dim(gcm, alpha, beta)
    if member(gcm, alpha) is not RootClass.REAL:
        raise AlphaNotReal(f"{alpha} is not a real root")
    if member(gcm, beta) is RootClass.NOT_ROOT:
        raise BetaNotRoot(f"{beta} is not a root")
    if beta == alpha or beta == neg(alpha):
        raise OppositePair("beta must differ from +-alpha")
    c = pairing(gcm, beta, alpha)
    bound = 4 + abs(c)
    kinds = {k: member(gcm, add(beta, alpha, k)) for k in range(-bound - 1, bound + 2)}
    p = 0
    while kinds[-(p + 1)] is not RootClass.NOT_ROOT:
        p += 1
        if p > bound:
            raise SweepBoundExceeded(f"string below {beta} longer than {bound}")
    q = 0
    while kinds[q + 1] is not RootClass.NOT_ROOT:
        q += 1
        if q > bound:
            raise SweepBoundExceeded(f"string above {beta} longer than {bound}")
    stray = [k for k, cl in kinds.items() if cl is not RootClass.NOT_ROOT and not -p <= k <= q]
    if stray:
        raise RootError(f"broken root string: extra members at k={stray}")
    members = tuple(add(beta, alpha, k) for k in range(-p, q + 1))
    ks = tuple(kinds[k] for k in range(-p, q + 1))
    r = sum(1 for k in ks if k is RootClass.REAL)
    return RootString(alpha, beta, p, q, members, ks, r, c)


def serre_pair_check(gcm: Gcm, alpha: Sequence[int], beta: Sequence[int],
                     member: Optional[Callable[[Gcm, Sequence[int]], bool]] = None) -> bool:
    """True iff neither ``2 alpha + beta`` nor ``alpha + 2 beta`` is a root.

    This is the root-space reason for ``ad(e_alpha)^2 e_beta = 0`` and
    ``ad(e_beta)^2 e_alpha = 0``.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha == neg(beta):
        raise OppositePair("serre_pair_check is undefined for beta = -alpha")
    member = member or is_root
    return not member(gcm, add(scale(2, alpha), beta)) and not member(gcm, add(alpha, scale(2, beta)))


def inner_products(gcm: Gcm, beta: Sequence[int], others: Sequence[Sequence[int]]) -> List:
    return [bilinear_form(gcm, beta, g) for g in others]
