"""QMSA presentations, morphism checks and surjectivity certificates.

A presentation has ``n`` generators split into a positive and a negative
block, and a spectrum ``mu``.  A candidate morphism sends ``x_j`` to ``y_j``
in a bracket-capable target; it is a homomorphism iff

    Delta(y_j) = sum_pos [y_i, [y_i, y_j]] - sum_neg [y_i, [y_i, y_j]] = mu_j y_j

for every ``j``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .berman import Signature, delta
from .cartan import Gcm, named_gcm
from .chevalley import ChevalleyAlgebra, bracket_closure, commutator, replay_closure
from .loopalg import LoopAlgebra, LoopElement, loop_bracket, t_power, truncated_closure
from .rootsys import (Root, RootClass, add, affine_classify, affine_compose, bilinear_form,
                      classify, enumerate_finite, height, is_real_root, neg, scale,
                      serre_pair_check, simple_root)
from .report import Claim
from .scalars import Field, is_real


class CountMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class ModeNotApplicable(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class QmsaPresentation:
    n: int
    negative: Tuple[int, ...] = ()
    spectrum: Tuple[Any, ...] = ()
    field: Field = Field.RATIONAL

    def __post_init__(self):
        object.__setattr__(self, "negative", tuple(sorted(set(self.negative))))
        spec = tuple(self.spectrum) if self.spectrum else (0,) * self.n
        object.__setattr__(self, "spectrum", spec)
        object.__setattr__(self, "field", Field.parse(self.field))
        if len(spec) != self.n:
            raise CountMismatch(f"spectrum has {len(spec)} entries for {self.n} generators")
        if any(not 0 <= i < self.n for i in self.negative):
            raise ValueError("negative block index out of range")
        if self.field is Field.RATIONAL and not all(is_real(m) for m in spec):
            raise FieldMismatch("non-real spectrum for a rational presentation")

    @classmethod
    def split(cls, p: int, m: int, spectrum: Sequence = (), field=Field.RATIONAL) -> "QmsaPresentation":
        """Signature ``(p, m)`` with the last ``m`` generators negative."""
        return cls(p + m, tuple(range(p, p + m)), tuple(spectrum), field)

    @property
    def signature(self) -> Tuple[int, int]:
        return self.n - len(self.negative), len(self.negative)

    def as_signature(self) -> Signature:
        return Signature.from_negative(self.n, self.negative)

    def label(self) -> str:
        p, m = self.signature
        mu = ",".join(str(x) for x in self.spectrum)
        return f"Q_{{{p},{m}}}({mu})"


class MatrixTarget:
    """Square matrices under the commutator, as a QMSA target."""

    def __init__(self, size: int, field: Field = Field.GAUSSIAN):
        self.size = size
        self.field = Field.parse(field)

    def bracket(self, a, b):
        return commutator(a, b)

    def zero(self):
        return np.array([[0] * self.size for _ in range(self.size)], dtype=object)


def _is_zero(x) -> bool:
    if isinstance(x, np.ndarray):
        return all(v == 0 for v in x.flat)
    return not x


@dataclass
class MorphismReport:
    presentation: QmsaPresentation
    residuals: List[Any]
    passed: bool
    surjectivity: Optional["SurjectivityCertificate"] = None

    def to_json(self) -> dict:
        out = {"presentation": self.presentation.label(), "pass": self.passed,
               "nonzero_residuals": [j for j, r in enumerate(self.residuals) if not _is_zero(r)]}
        if self.surjectivity is not None:
            out["surjectivity"] = self.surjectivity.to_json()
        return out


def verify_morphism(q: QmsaPresentation, images: Sequence, target) -> MorphismReport:
    if len(images) != q.n:
        raise CountMismatch(f"{len(images)} images for {q.n} generators")
    tfield = getattr(target, "field", None)
    if q.field is Field.GAUSSIAN and tfield is not None and Field.parse(tfield) is Field.RATIONAL:
        raise FieldMismatch("Gaussian presentation into a rational target")
    sig = q.as_signature()
    residuals = []
    for j, y in enumerate(images):
        residuals.append(delta(target, images, sig, y) - y * q.spectrum[j])
    return MorphismReport(q, residuals, all(_is_zero(r) for r in residuals))


# ---------------------------------------------------------------------------
# surjectivity


class Mode(enum.Enum):
    FINITE_DIM_CLOSURE = "FiniteDimClosure"
    REAL_ROOT_REACHABILITY = "RealRootReachability"
    TRUNCATED_GRADED_CLOSURE = "TruncatedGradedClosure"

    @classmethod
    def parse(cls, value) -> "Mode":
        if isinstance(value, cls):
            return value
        for m in cls:
            if str(value).lower() in (m.value.lower(), m.name.lower()):
                return m
        raise ValueError(f"unknown mode {value!r}")


@dataclass
class SurjectivityCertificate:
    mode: Mode
    passed: bool
    evidence: Dict[str, Any]
    trace: List[Any] = field(default_factory=list)
    _replay: Any = field(default=None, repr=False, compare=False)

    def replay(self) -> bool:
        """Re-run the recorded bracket sequence and compare with the evidence."""
        return bool(self._replay()) if self._replay is not None else False

    def to_json(self) -> dict:
        return {"mode": self.mode.value, "pass": self.passed, "evidence": self.evidence,
                "trace_length": len(self.trace)}


def _vec(x):
    return x.coeffs


def surjectivity_certificate(images: Sequence, target, mode, cutoff: Optional[int] = None
                             ) -> SurjectivityCertificate:
    """Certificate that ``images`` generate ``target``.

    * FiniteDimClosure: ``target`` a :class:`ChevalleyAlgebra`; images elements.
    * TruncatedGradedClosure: ``target`` a :class:`LoopAlgebra`; homogeneous
      images; every degree ``|k| <= cutoff`` must be spanned.
    * RealRootReachability: ``target`` a :class:`Gcm`; images are signed roots
      (``f_i`` as ``-alpha_i``, ``e_gamma`` as ``gamma``).
    """
    mode = Mode.parse(mode)
    if mode is Mode.FINITE_DIM_CLOSURE:
        if not isinstance(target, ChevalleyAlgebra):
            raise ModeNotApplicable("FiniteDimClosure needs a finite-type algebra")
        cl = bracket_closure(list(images), target.bracket, _vec)
        ok = cl.dimension == target.dim
        return SurjectivityCertificate(
            mode, ok, {"dimension": cl.dimension, "target_dimension": target.dim,
                       "passes": cl.passes}, cl.trace,
            lambda: replay_closure(list(images), target.bracket, _vec, cl.trace) == target.dim)
    if mode is Mode.TRUNCATED_GRADED_CLOSURE:
        if not isinstance(target, LoopAlgebra):
            raise ModeNotApplicable("TruncatedGradedClosure needs a loop realization")
        if cutoff is None:
            raise ModeNotApplicable("TruncatedGradedClosure needs a degree cutoff")
        gc = truncated_closure(target, list(images), cutoff)

        def replay():
            from .linalg import Echelon
            echs: Dict[int, Echelon] = {}
            built = []
            for g, j in gc.trace:
                y = images[g] if j < 0 else loop_bracket(images[g], built[j])
                built.append(y)
                (d,) = y.degrees()
                if abs(d) > cutoff or echs.setdefault(d, Echelon()).add(y.coeffs) is None:
                    return False
            return all(len(echs.get(d, ())) == gc.piece_dim for d in range(-cutoff, cutoff + 1))

        return SurjectivityCertificate(
            mode, gc.complete, {"cutoff": cutoff, "piece_dimension": gc.piece_dim,
                                "dims": {str(k): v for k, v in sorted(gc.dims.items())}},
            gc.trace, replay)
    if mode is Mode.REAL_ROOT_REACHABILITY:
        if not isinstance(target, Gcm):
            raise ModeNotApplicable("RealRootReachability works on a GCM's root lattice")
        return real_root_reachability(target, [tuple(r) for r in images])
    raise ModeNotApplicable(str(mode))


def real_root_reachability(gcm: Gcm, seeds: Sequence[Root]) -> SurjectivityCertificate:
    """Close the seed roots under ``a, b -> a + b`` for real ``a + b``.

    Heights are capped at the largest seed height in absolute value, which
    keeps the search finite.  Each step corresponds to a nonzero bracket: for
    real ``a``, ``b``, ``a + b`` in a simply-laced system ``(a|b) = -1`` and
    ``b`` is the bottom of its ``a``-string.
    """
    n = gcm.size
    for s in seeds:
        if not is_real_root(gcm, s):
            raise ValueError(f"seed {s} is not a real root")
    bound = max(abs(height(s)) for s in seeds)
    reached: List[Root] = []
    seen = set()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            reached.append(s)
    steps: List[Tuple[Root, Root, Root]] = []
    k = 0
    while k < len(reached):
        b = reached[k]
        for a in reached[:k + 1]:
            if a == neg(b):
                continue
            s = add(a, b)
            if s in seen or abs(height(s)) > bound or any(x > 0 for x in s) and any(x < 0 for x in s):
                continue
            if is_real_root(gcm, s):
                seen.add(s)
                reached.append(s)
                steps.append((a, b, s))
        k += 1
    signed = [simple_root(n, i) for i in range(n)] + [neg(simple_root(n, i)) for i in range(n)]
    got = [r for r in signed if r in seen]
    cartan = [(i, simple_root(n, i), neg(simple_root(n, i))) for i in range(n)
              if simple_root(n, i) in seen and neg(simple_root(n, i)) in seen]
    ok = len(got) == 2 * n and len(cartan) == n

    def replay():
        have = set(seeds)
        for a, b, s in steps:
            if a not in have or b not in have or a == neg(b) or add(a, b) != s:
                return False
            if classify(gcm, s) is not RootClass.REAL:
                return False
            have.add(s)
        return all(r in have for r in signed)

    ev = {"seeds": len(set(seeds)), "height_bound": bound, "reached": len(reached),
          "signed_simple_roots_reached": len(got), "cartan_steps": len(cartan)}
    return SurjectivityCertificate(Mode.REAL_ROOT_REACHABILITY, ok, ev,
                                   [list(map(list, st)) for st in steps], replay)


# ---------------------------------------------------------------------------
# E8 / E9 / E10


def _e8():
    return named_gcm("E8")


def _e9():
    return named_gcm("E9")


def e8_classical_images(alg: ChevalleyAlgebra, extra_roots: Sequence[Root] = ()) -> List:
    """``f_1..f_n, e_theta`` and optionally ``e_beta`` for each extra root."""
    theta = alg.root_system.highest_root
    bad = {neg(theta)} | {simple_root(alg.rank, i) for i in range(alg.rank)}
    roots = [tuple(b) for b in extra_roots]
    for b in roots:
        if b not in alg.root_index or b in bad:
            raise HypothesisViolated(f"{b} must be a root other than -theta and the simple roots")
    for x in range(len(roots)):
        for y in range(x + 1, len(roots)):
            if roots[x] == neg(roots[y]):
                raise HypothesisViolated(f"{roots[x]} and {roots[y]} are opposite")
    return ([alg.f(i) for i in range(alg.rank)] + [alg.root_vector(theta)]
            + [alg.root_vector(b) for b in roots])


def scenario_e9_membership_checks(beta: Sequence[int], n: int) -> List[Claim]:
    """Non-membership claims for ``gamma = n delta + beta`` in the affine ``E8`` root system."""
    e8, e9 = _e8(), _e9()
    fin = enumerate_finite(e8)
    beta = tuple(beta)
    theta = fin.highest_root
    if beta not in fin:
        raise HypothesisViolated(f"{beta} is not an E8 root")
    if beta == neg(theta) or beta in fin.simple_roots():
        raise HypothesisViolated(f"{beta} is excluded (-theta or simple)")
    gamma = affine_compose(e9, n, beta)
    claims = []

    def notin(vec, label):
        cls = affine_classify(e9, vec)
        claims.append(Claim(f"{label} = {list(vec)} is not a root", "E9 proposition proof",
                            cls is RootClass.NOT_ROOT, cls.value))

    for i in range(1, 9):
        ai = simple_root(9, i)
        notin(add(scale(2, gamma), ai, -1), f"2gamma - alpha_{i}")
        notin(add(gamma, ai, -2), f"gamma - 2alpha_{i}")
    a0 = simple_root(9, 0)
    v1 = add(scale(2, gamma), a0, -1)
    v2 = add(gamma, a0, -2)
    f1 = affine_compose(e9, 2 * n - 1, add(scale(2, beta), theta))
    f2 = affine_compose(e9, n - 2, add(beta, scale(2, theta)))
    claims.append(Claim("2gamma - alpha_0 = (2n-1)delta + 2beta + theta", "E9 proposition proof",
                        v1 == f1, list(v1)))
    claims.append(Claim("gamma - 2alpha_0 = (n-2)delta + beta + 2theta", "E9 proposition proof",
                        v2 == f2, list(v2)))
    notin(v1, "2gamma - alpha_0")
    notin(v2, "gamma - 2alpha_0")
    claims.append(Claim("gamma is a real root", "E9 proposition hypothesis",
                        affine_classify(e9, gamma) is RootClass.REAL, list(gamma)))
    return claims


def e9_loop_images(loop: LoopAlgebra, beta: Sequence[int], n: int) -> List[LoopElement]:
    """``f_0, ..., f_8`` and ``e_gamma = t^n (x) e_beta`` in the loop realization."""
    return [loop.f(i) for i in range(loop.gcm.size)] + [t_power(n, loop.base.root_vector(beta))]


def e9_descent_path(loop: LoopAlgebra, beta: Sequence[int], n: int) -> Dict[str, Any]:
    """Bracket path from ``e_gamma`` down to ``e_theta`` in degree 0.

    Subtract simple roots (``ad f_i``) from ``beta`` until ``-theta``, giving the
    root ``n delta - theta``; then apply ``ad f_0`` ``n`` times.  After ``k`` of
    those the root is ``(n-k) delta + (k-1) theta``, so the path ends on
    ``theta`` only for ``n = 2``.  Each step is checked to be nonzero.
    """
    if n != 2:
        raise ValueError("the descent path ends on theta only for n = 2")
    alg = loop.base
    fin = alg.root_system
    theta = fin.highest_root
    cur = tuple(beta)
    x = t_power(n, alg.root_vector(cur))
    steps = []
    zero = (0,) * alg.rank
    last = None
    while cur != neg(theta):
        if cur == zero:
            i = last  # [f_i, h_i] = 2 f_i, back into the root spaces
        else:
            i = next(i for i in range(alg.rank)
                     if add(cur, simple_root(alg.rank, i), -1) in alg.root_index
                     or add(cur, simple_root(alg.rank, i), -1) == zero)
        x = loop_bracket(loop.f(i + 1), x)
        cur = add(cur, simple_root(alg.rank, i), -1)
        last = i
        steps.append(("f", i + 1, list(cur), n))
        if not x:
            return {"ok": False, "steps": steps}
    deg = n
    for _ in range(n):
        x = loop_bracket(loop.f(0), x)
        deg -= 1
        steps.append(("f", 0, None, deg))
        if not x:
            return {"ok": False, "steps": steps}
    target = alg.root_vector(theta)
    terms = x.terms
    ok = list(terms) == [0] and len(terms[0].coeffs) == 1 and set(terms[0].coeffs) == set(target.coeffs)
    return {"ok": ok, "steps": steps, "final": x.to_json()}


# E10: nodes 1..9 form the A9 chain, node 10 hangs off node 7 (0-based: 9 off 6)

E10_DISPLAYED_PRODUCTS = (((7,), 1), ((6, 7), 0), ((7, 8), 0), ((6, 7, 8), -1), ((6,), -1), ((8,), -1))


def e10_beta() -> Root:
    v = [0] * 10
    v[6] = v[9] = 1
    return tuple(v)


def e10_gamma_set() -> List[Root]:
    out = []
    for i in range(8):
        v = [0] * 10
        v[i] = v[i + 1] = 1
        out.append(tuple(v))
    for i in range(7):
        v = [0] * 10
        v[i] = v[i + 1] = v[i + 2] = 1
        out.append(tuple(v))
    return out


def e10_chi_roots() -> List[Root]:
    """``f_1..f_10`` as negative simple roots, then ``beta``, then ``Gamma``."""
    return [neg(simple_root(10, i)) for i in range(10)] + [e10_beta()] + e10_gamma_set()


def a9_positive_roots() -> List[Root]:
    out = []
    for i in range(9):
        for j in range(i, 9):
            v = [0] * 10
            for k in range(i, j + 1):
                v[k] = 1
            out.append(tuple(v))
    return out


def scenario_e10_chi() -> List[Claim]:
    gcm = named_gcm("E10")
    beta = e10_beta()
    gammas = e10_gamma_set()
    chi = e10_chi_roots()
    anchor = "E10 example"
    claims = [Claim("|Gamma| = 15", anchor, len(set(gammas)) == 15, len(set(gammas))),
              Claim("|chi| = 26", anchor, len(set(chi)) == 26, len(set(chi))),
              Claim("beta is a real root", anchor, is_real_root(gcm, beta), list(beta))]
    for g in gammas:
        if not is_real_root(gcm, g):
            claims.append(Claim(f"{list(g)} is a real root", anchor, False, list(g)))
    for support, val in E10_DISPLAYED_PRODUCTS:
        g = tuple(1 if i + 1 in support else 0 for i in range(10))
        got = bilinear_form(gcm, beta, g)
        name = "+".join(f"alpha_{i}" for i in support)
        claims.append(Claim(f"(beta|{name}) = {val}", anchor, got == val, str(got)))
    a7 = simple_root(10, 6)
    bad = []
    for g in a9_positive_roots():
        if g == a7:
            continue
        d = add(beta, g, -1)
        if classify(gcm, d) is not RootClass.NOT_ROOT:
            bad.append(list(g))
    claims.append(Claim("beta - gamma is not a root for positive A9 roots gamma != alpha_7", anchor,
                        not bad, {"checked": len(a9_positive_roots()) - 1, "violations": bad}))
    fails, pairs = [], 0
    for x in range(len(chi)):
        for y in range(x + 1, len(chi)):
            pairs += 1
            if chi[x] == neg(chi[y]) or not serre_pair_check(gcm, chi[x], chi[y]):
                fails.append([list(chi[x]), list(chi[y])])
    claims.append(Claim("ad(x)^2(y) = 0 for all x != y in chi (root level)", anchor,
                        not fails and pairs == 325, {"pairs": pairs, "failures": fails}))
    cert = real_root_reachability(gcm, chi)
    claims.append(Claim("chi reaches all signed simple roots", anchor,
                        cert.passed and cert.replay(), cert.evidence))
    return claims


def max_support_candidates(gcm: Gcm, max_height: int) -> List[Root]:
    """Real positive roots with full support and ``beta - 2 alpha_i`` never a root.

    Search utility for the open E10 question; nothing is claimed about it.
    """
    n = gcm.size
    out = []
    for h in range(n, max_height + 1):
        for v in _compositions(h, n):
            if is_real_root(gcm, v) and all(
                    classify(gcm, add(v, simple_root(n, i), -2)) is RootClass.NOT_ROOT for i in range(n)):
                out.append(v)
    return out


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
