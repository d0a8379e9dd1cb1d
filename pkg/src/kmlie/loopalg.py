"""Loop algebras ``K[t, 1/t] (x) g`` over a finite simply-laced ``g``.

The affine Chevalley pair is ``e0 = t (x) e_-theta``, ``f0 = 1/t (x) e_theta``
with ``e_-theta = -omega(e_theta)``.  Involutions ``beta (x) sigma0`` combine a
ring involution (``t -> 1/t`` or ``t -> -1/t``) with a Berman-type involution
of ``g``.  The centre and derivation of the affine algebra are not modelled.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .cartan import Coloring, Gcm, affine_extension
from .chevalley import (AlgebraElement, Automorphism, ChevalleyAlgebra, adjoint_rep, berman_involution,
                        chevalley_involution, rep_apply, zeros)
from .linalg import Echelon, inertia, nullspace
from .scalars import Scalar, conj


_HALF = Fraction(1, 2)


class BaseMismatch(ValueError):
    pass


class ZeroEvaluationPoint(ValueError):
    pass


class NotInFixedSubalgebra(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({k: c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in _poly(other).coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        out: Dict[int, Scalar] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.coeffs == _poly(other).coeffs
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __call__(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroEvaluationPoint("Laurent polynomials cannot be evaluated at 0")
        return sum((c * a ** k for k, c in self.coeffs.items()), 0)

    def involute(self, ring_sign: int) -> "LaurentPoly":
        """``t^k -> ring_sign^k t^-k``."""
        return LaurentPoly({-k: c * (ring_sign ** (k % 2)) for k, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{k}" for k, c in sorted(self.coeffs.items()))


def _poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (AlgebraElement, LoopElement)):
        raise TypeError("not a scalar")
    return LaurentPoly({0: x})


Key = Tuple[int, int]  # (t-degree, basis index)


class LoopElement:
    """Sparse element of the loop algebra, stored as ``{(degree, basis index): coeff}``."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: ChevalleyAlgebra, coeffs: Optional[Dict[Key, Scalar]] = None):
        self.alg = alg
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def _same(self, other):
        if not isinstance(other, LoopElement) or other.alg is not self.alg:
            raise BaseMismatch("loop elements over different base algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LoopElement(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LoopElement(self.alg, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, s):
        return LoopElement(self.alg, {k: s * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, LoopElement) or other.alg is not self.alg:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def terms(self) -> Dict[int, AlgebraElement]:
        out: Dict[int, Dict[int, Scalar]] = {}
        for (d, k), c in self.coeffs.items():
            out.setdefault(d, {})[k] = c
        return {d: AlgebraElement(self.alg, v) for d, v in sorted(out.items())}

    def degrees(self) -> List[int]:
        return sorted({d for d, _ in self.coeffs})

    def max_abs_degree(self) -> int:
        return max((abs(d) for d, _ in self.coeffs), default=0)

    def to_json(self):
        from .scalars import format_scalar
        return [[d, {self.alg.basis_label(k): format_scalar(c) for k, c in sorted(x.coeffs.items())}]
                for d, x in self.terms.items()]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"t^{d}*({x!r})" for d, x in self.terms.items())


def tensor(p: Union[LaurentPoly, int], x: AlgebraElement) -> LoopElement:
    p = _poly(p) if not isinstance(p, LaurentPoly) else p
    return LoopElement(x.alg, {(d, k): c * cx for d, c in p.coeffs.items()
                               for k, cx in x.coeffs.items()})


def t_power(k: int, x: AlgebraElement) -> LoopElement:
    return tensor(LaurentPoly.monomial(k), x)


def loop_bracket(x: LoopElement, y: LoopElement) -> LoopElement:
    if x.alg is not y.alg:
        raise BaseMismatch("loop elements over different base algebras")
    table = x.alg.bracket_basis
    out: Dict[Key, Scalar] = {}
    for (d1, a), c1 in x.coeffs.items():
        for (d2, b), c2 in y.coeffs.items():
            d = d1 + d2
            for c, k in table(a, b):
                key = (d, c)
                out[key] = out.get(key, 0) + k * c1 * c2
    return LoopElement(x.alg, out)


@dataclass(frozen=True)
class AffinePair:
    e0: LoopElement
    f0: LoopElement
    e_theta: AlgebraElement
    e_minus_theta: AlgebraElement


def affine_chevalley_pair(alg: ChevalleyAlgebra) -> AffinePair:
    e_theta = alg.highest_root_vector()
    e_mtheta = -chevalley_involution(alg, e_theta)
    return AffinePair(t_power(1, e_mtheta), t_power(-1, e_theta), e_theta, e_mtheta)


class LoopAlgebra:
    """The loop realization of the derived affine algebra, modulo its centre.

    Node ``0`` is the affine node (``e0``, ``f0``); nodes ``1..n`` are the
    Chevalley generators of the finite part in degree zero.
    """

    def __init__(self, alg: ChevalleyAlgebra):
        self.base = alg
        self.pair = affine_chevalley_pair(alg)
        self.gcm: Gcm = affine_extension(alg.gcm)
        self.field = alg.field

    def e(self, i: int) -> LoopElement:
        return self.pair.e0 if i == 0 else t_power(0, self.base.e(i - 1))

    def f(self, i: int) -> LoopElement:
        return self.pair.f0 if i == 0 else t_power(0, self.base.f(i - 1))

    def h(self, i: int) -> LoopElement:
        return self.bracket(self.e(i), self.f(i))

    def zero(self) -> LoopElement:
        return LoopElement(self.base)

    def bracket(self, x: LoopElement, y: LoopElement) -> LoopElement:
        if x.alg is not self.base or y.alg is not self.base:
            raise BaseMismatch("element is not over this loop algebra")
        return loop_bracket(x, y)

    def involution(self, ring_sign: int, signs: Sequence[int]) -> "LoopInvolution":
        return LoopInvolution(self.base, ring_sign, signs)

    def involution_for(self, coloring: Union[Coloring, Sequence[int]]) -> "LoopInvolution":
        """The loop involution realizing a coloring of the affine diagram.

        ``signs[0]`` is the affine node; the ring involution is chosen so that
        the induced action on ``e0`` matches it.
        """
        signs = tuple(coloring.signs if isinstance(coloring, Coloring) else coloring)
        if len(signs) != self.gcm.size:
            raise ValueError(f"need {self.gcm.size} signs, got {len(signs)}")
        for ring_sign in (1, -1):
            inv = LoopInvolution(self.base, ring_sign, signs[1:])
            if inv.affine_sign == signs[0]:
                return inv
        raise AssertionError("unreachable: the two ring involutions give opposite signs")


class RingSign(enum.IntEnum):
    PLUS = 1
    MINUS = -1


class LoopInvolution:
    """``beta (x) sigma0`` with ``beta(t) = ring_sign / t``."""

    def __init__(self, alg: ChevalleyAlgebra, ring_sign: int, signs: Sequence[int]):
        self.alg = alg
        self.ring_sign = RingSign(int(ring_sign))
        self.signs = tuple(int(s) for s in signs)
        self.base: Automorphism = berman_involution(alg, self.signs)
        self.pair = affine_chevalley_pair(alg)

    def __call__(self, x: LoopElement) -> LoopElement:
        return apply_involution(self, x)

    def ring_part(self, x: LoopElement) -> LoopElement:
        """``(beta (x) id)(x)``."""
        s = int(self.ring_sign)
        return LoopElement(x.alg, {(-d, k): c * (s ** (d % 2)) for (d, k), c in x.coeffs.items()})

    def base_part(self, x: LoopElement) -> LoopElement:
        """``(id (x) sigma0)(x)``."""
        out: Dict[Key, Scalar] = {}
        for (d, k), c in x.coeffs.items():
            for kk, cc in self.base.images[k].coeffs.items():
                out[(d, kk)] = out.get((d, kk), 0) + c * cc
        return LoopElement(x.alg, out)

    @property
    def epsilon(self) -> int:
        """``sigma0(e_theta) = epsilon * e_-theta``."""
        img = self.base(self.pair.e_theta)
        if img == self.pair.e_minus_theta:
            return 1
        if img == -self.pair.e_minus_theta:
            return -1
        raise AssertionError("sigma0 does not map e_theta to the line of e_-theta")

    @property
    def affine_sign(self) -> int:
        """``rho_0`` read off from the action on the affine pair: ``sigma(e0) = rho_0 f0``."""
        img = self(self.pair.e0)
        if img == self.pair.f0:
            return 1
        if img == -self.pair.f0:
            return -1
        raise AssertionError("sigma(e0) is not proportional to f0")

    @property
    def full_signs(self) -> Tuple[int, ...]:
        return (self.affine_sign,) + self.signs


def apply_involution(inv: LoopInvolution, x: LoopElement) -> LoopElement:
    if x.alg is not inv.alg:
        raise BaseMismatch("involution defined over another base algebra")
    return inv.ring_part(inv.base_part(x))


def affine_node_sign(inv: LoopInvolution) -> int:
    return inv.affine_sign


def eigenspace(auto: Automorphism, sign: int) -> List[AlgebraElement]:
    """Basis of ``{x : auto(x) = sign * x}`` by exact row reduction."""
    m = auto.matrix()
    d = len(m)
    shifted = [[m[r][c] - (sign if r == c else 0) for c in range(d)] for r in range(d)]
    return [AlgebraElement(auto.alg, {k: v for k, v in enumerate(vec) if v})
            for vec in nullspace(shifted, d)]


@dataclass
class FixedSplit:
    inv: LoopInvolution
    cutoff: int
    s_plus: List[AlgebraElement]
    s_minus: List[AlgebraElement]
    l_plus: List[LaurentPoly]
    l_minus: List[LaurentPoly]
    plus_part: List[LoopElement]
    minus_part: List[LoopElement]

    def in_plus(self, x: LoopElement) -> bool:
        return self.inv.ring_part(x) == x and self.inv.base_part(x) == x

    def in_minus(self, x: LoopElement) -> bool:
        return self.inv.ring_part(x) == -x and self.inv.base_part(x) == -x

    def check_relations(self) -> Dict[str, Tuple[int, int]]:
        """Grading relations on basis pairs whose bracket stays within the cutoff.

        Returns ``{name: (checked, failures)}``.
        """
        def deg(x):
            return x.max_abs_degree()

        out = {}
        cases = (("[plus,plus]<=plus", self.plus_part, self.plus_part, self.in_plus),
                 ("[plus,minus]<=minus", self.plus_part, self.minus_part, self.in_minus),
                 ("[minus,minus]<=plus", self.minus_part, self.minus_part, self.in_plus))
        for name, left, right, member in cases:
            checked = bad = 0
            for a in left:
                for b in right:
                    if deg(a) + deg(b) > self.cutoff:
                        continue
                    checked += 1
                    if not member(loop_bracket(a, b)):
                        bad += 1
            out[name] = (checked, bad)
        return out

    def decompose(self, x: LoopElement) -> Tuple[LoopElement, LoopElement]:
        """``x = plus + minus`` along the split; raises unless ``x`` is fixed."""
        if apply_involution(self.inv, x) != x:
            raise NotInFixedSubalgebra("element is not fixed by the involution")
        b = self.inv.base_part(x)
        plus = (x + b) * _HALF
        return plus, x - plus




def fixed_split(inv: LoopInvolution, degree_cutoff: int) -> FixedSplit:
    if degree_cutoff < 0:
        raise ValueError("degree cutoff must be >= 0")
    s = int(inv.ring_sign)
    s_plus = eigenspace(inv.base, 1)
    s_minus = eigenspace(inv.base, -1)
    l_plus = [LaurentPoly({0: 1})]
    l_minus = []
    for k in range(1, degree_cutoff + 1):
        sk = s ** (k % 2)
        l_plus.append(LaurentPoly({k: 1, -k: sk}))
        l_minus.append(LaurentPoly({k: 1, -k: -sk}))
    plus = [tensor(p, x) for p in l_plus for x in s_plus]
    minus = [tensor(p, x) for p in l_minus for x in s_minus]
    return FixedSplit(inv, degree_cutoff, s_plus, s_minus, l_plus, l_minus, plus, minus)


def killing_inertia(alg: ChevalleyAlgebra, span: Sequence[AlgebraElement]) -> Tuple[int, int, int]:
    """Inertia ``(pos, zero, neg)`` of the Killing form restricted to ``span``."""
    ad = adjoint_rep(alg)
    mats = [rep_apply(ad, x) for x in span]
    # tr(ab) = sum_ij a_ij b_ji
    gram = [[sum((a * b.T).flat) for b in mats] for a in mats]
    return inertia(gram)


# ---------------------------------------------------------------------------
# evaluation representations

Rep = Dict[int, np.ndarray]


def eval_rep(rep: Rep, a: Scalar, x: LoopElement) -> np.ndarray:
    """``rho_a(P (x) y) = P(a) rho(y)``."""
    if not a:
        raise ZeroEvaluationPoint("evaluation point must be nonzero")
    size = next(iter(rep.values())).shape[0]
    out = zeros(size)
    powers: Dict[int, Scalar] = {}
    for (d, k), c in x.coeffs.items():
        if d not in powers:
            powers[d] = a ** d
        out = out + rep[k] * (c * powers[d])
    return out


def adjoint(m: np.ndarray) -> np.ndarray:
    return np.array([[conj(x) for x in row] for row in m.T], dtype=object)


def is_skew_adjoint(m: np.ndarray) -> bool:
    return all(x == -y for x, y in zip(adjoint(m).flat, m.flat))


def is_self_adjoint(m: np.ndarray) -> bool:
    return all(x == y for x, y in zip(adjoint(m).flat, m.flat))


def fix_split_rep(phi: Union[Rep, Callable[[AlgebraElement], np.ndarray]], a: Scalar,
                  x: LoopElement, split: FixedSplit) -> np.ndarray:
    """``phi~_a(p (x) x+ + q (x) x-) = ev_a(p) phi(x+)``; the minus part is dropped.

    ``phi`` is either a callable on ``s+`` or a matrix representation of the
    whole base algebra, restricted to ``s+`` here.  The result is a Lie
    homomorphism exactly when ``ev_a`` kills ``L-``.
    """
    if not a:
        raise ZeroEvaluationPoint("evaluation point must be nonzero")
    plus, _ = split.decompose(x)
    apply_phi = phi if callable(phi) else (lambda y: rep_apply(phi, y))
    out = apply_phi(split.inv.alg.zero())
    for d, y in plus.terms.items():
        out = out + apply_phi(y) * (a ** d)
    return out


def minus_kernel_points(ring_sign: int) -> Tuple[str, ...]:
    """Evaluation points where ``ev_a`` vanishes on ``L-``."""
    return ("1", "-1") if ring_sign == 1 else ("i", "-i")


@dataclass
class GradedClosure:
    cutoff: int
    piece_dim: int
    dims: Dict[int, int]
    basis: List[LoopElement]
    trace: List[Tuple[int, int]]

    @property
    def complete(self) -> bool:
        return all(v == self.piece_dim for v in self.dims.values())


def truncated_closure(loop: LoopAlgebra, gens: Sequence[LoopElement], cutoff: int) -> GradedClosure:
    """Bracket closure of homogeneous generators inside the window ``|degree| <= cutoff``.

    Brackets landing outside the window are dropped, and once a degree is
    spanned no further brackets into it are formed.  Every recorded vector is a
    genuine nested bracket, so the result is a lower bound for the generated
    subalgebra's graded pieces.
    """
    full = loop.base.dim
    degs = []
    for g in gens:
        ds = g.degrees()
        if len(ds) != 1:
            raise ValueError("truncated closure needs homogeneous generators")
        degs.append(ds[0])
    echs: Dict[int, Echelon] = {}
    basis: List[LoopElement] = []
    basis_deg: List[int] = []
    trace: List[Tuple[int, int]] = []

    def offer(y: LoopElement, d: int, entry: Tuple[int, int]) -> None:
        ech = echs.setdefault(d, Echelon())
        if len(ech) < full and ech.add(y.coeffs) is not None:
            basis.append(y)
            basis_deg.append(d)
            trace.append(entry)

    for g_idx, g in enumerate(gens):
        if abs(degs[g_idx]) <= cutoff:
            offer(g, degs[g_idx], (g_idx, -1))
    start = 0
    while start < len(basis):
        stop = len(basis)
        for j in range(start, stop):
            for g_idx, g in enumerate(gens):
                d = basis_deg[j] + degs[g_idx]
                if abs(d) > cutoff or len(echs.get(d, ())) >= full:
                    continue
                y = loop_bracket(g, basis[j])
                if y:
                    offer(y, d, (g_idx, j))
        start = stop
    dims = {d: len(echs.get(d, ())) for d in range(-cutoff, cutoff + 1)}
    return GradedClosure(cutoff, full, dims, basis, trace)
