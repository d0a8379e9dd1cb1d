"""Free Lie algebras in the Lyndon basis and graded quotients by double-bracket relators.

Elements are embedded in the tensor algebra (noncommutative polynomials,
``{word tuple: coeff}``).  The standard bracketing ``P_w`` of a Lyndon word
``w`` expands to ``w`` plus lexicographically larger words of the same
length, so a Lie polynomial is decomposed by repeatedly peeling off its
smallest word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .linalg import Echelon
from .scalars import I, Scalar

Word = Tuple[int, ...]
Poly = Dict[Word, Scalar]


class DegreeOverflow(ValueError):
    pass


class InhomogeneousSpectrum(ValueError):
    pass


def lyndon_words(n: int, max_len: int) -> Iterator[Word]:
    """Lyndon words over ``0..n-1`` of length ``<= max_len`` in lexicographic order (Duval)."""
    if n < 1 or max_len < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()


def is_lyndon(w: Word) -> bool:
    return all(w < w[k:] + w[:k] for k in range(1, len(w))) and len(w) > 0


def standard_factorization(w: Word) -> Tuple[Word, Word]:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    for k in range(1, len(w)):
        if is_lyndon(w[k:]):
            return w[:k], w[k:]
    raise ValueError(f"{w} has no standard factorization")


def poly_add(p: Poly, q: Poly, s: Scalar = 1) -> Poly:
    out = dict(p)
    for w, c in q.items():
        v = out.get(w, 0) + s * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for a, ca in p.items():
        for b, cb in q.items():
            w = a + b
            out[w] = out.get(w, 0) + ca * cb
    return {w: c for w, c in out.items() if c}


def poly_commutator(p: Poly, q: Poly) -> Poly:
    return poly_add(poly_mul(p, q), poly_mul(q, p), -1)


def poly_scale(p: Poly, s: Scalar) -> Poly:
    return {w: s * c for w, c in p.items() if s * c}


@lru_cache(maxsize=None)
def _expand_word(w: Word) -> Tuple[Tuple[Word, int], ...]:
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    return tuple(poly_commutator(dict(_expand_word(u)), dict(_expand_word(v))).items())


def expand_lyndon(w: Word) -> Poly:
    """Tensor-algebra expansion of the standard bracketing of ``w``."""
    return dict(_expand_word(w))


def bracketing(w: Word, names: Optional[Sequence[str]] = None) -> str:
    if len(w) == 1:
        return names[w[0]] if names else f"x{w[0] + 1}"
    u, v = standard_factorization(w)
    return f"[{bracketing(u, names)},{bracketing(v, names)}]"


class LyndonBasis:
    def __init__(self, n: int, D: int):
        if n < 1 or D < 1:
            raise ValueError("need n >= 1 and D >= 1")
        self.n, self.D = n, D
        words = sorted(lyndon_words(n, D), key=lambda w: (len(w), w))
        self.words: List[Word] = words
        self.index: Dict[Word, int] = {w: k for k, w in enumerate(words)}

    def degree_words(self, d: int) -> List[Word]:
        return [w for w in self.words if len(w) == d]

    def dims(self) -> Tuple[int, ...]:
        counts = [0] * self.D
        for w in self.words:
            counts[len(w) - 1] += 1
        return tuple(counts)

    def generator(self, i: int) -> "FreeLieElement":
        return FreeLieElement(self, {self.index[(i,)]: 1})

    def element(self, coeffs: Dict[Word, Scalar]) -> "FreeLieElement":
        return FreeLieElement(self, {self.index[w]: c for w, c in coeffs.items()})

    def expand(self, x: "FreeLieElement") -> Poly:
        out: Poly = {}
        for k, c in x.coeffs.items():
            out = poly_add(out, expand_lyndon(self.words[k]), c)
        return out

    def decompose(self, p: Poly) -> "FreeLieElement":
        """Inverse of :meth:`expand`; raises if ``p`` is not a Lie polynomial."""
        p = dict(p)
        coeffs: Dict[int, Scalar] = {}
        while p:
            w = min(p, key=lambda u: (len(u), u))
            if len(w) > self.D:
                raise DegreeOverflow(f"degree {len(w)} exceeds cutoff {self.D}")
            if w not in self.index:
                raise ValueError(f"not a Lie polynomial (leading word {w} is not Lyndon)")
            c = p[w]
            coeffs[self.index[w]] = c
            p = poly_add(p, expand_lyndon(w), -c)
        return FreeLieElement(self, coeffs)


class FreeLieElement:
    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: LyndonBasis, coeffs: Optional[Dict[int, Scalar]] = None):
        self.basis = basis
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return FreeLieElement(self.basis, out)

    def __neg__(self):
        return FreeLieElement(self.basis, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return FreeLieElement(self.basis, {k: s * c for k, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, FreeLieElement):
            return NotImplemented
        return self.basis is other.basis and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def degrees(self) -> List[int]:
        return sorted({len(self.basis.words[k]) for k in self.coeffs})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{bracketing(self.basis.words[k])}" for k, c in sorted(self.coeffs.items()))


def free_bracket(x: FreeLieElement, y: FreeLieElement) -> FreeLieElement:
    basis = x.basis
    if y.basis is not basis:
        raise ValueError("elements of different free Lie algebras")
    p = poly_commutator(basis.expand(x), basis.expand(y))
    if any(len(w) > basis.D for w in p):
        raise DegreeOverflow(f"bracket exceeds degree cutoff {basis.D}")
    return basis.decompose(p)


def witt_dimension(n: int, d: int) -> int:
    """``(1/d) sum_{e | d} mu(d/e) n^e`` with a hand-rolled Moebius function."""
    def mobius(m: int) -> int:
        out, p = 1, 2
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                out = -out
            p += 1
        return -out if m > 1 else out

    return sum(mobius(d // e) * n ** e for e in range(1, d + 1) if d % e == 0) // d


# ---------------------------------------------------------------------------
# quotients by the homogeneous double-bracket relators


def _gen(i: int) -> Poly:
    return {(i,): 1}


def double_bracket_relators(n: int, signs: Sequence[int], gens: Optional[Sequence[Poly]] = None) -> List[Poly]:
    """``sum_i s_i [g_i, [g_i, g_j]]`` for each ``j`` as tensor polynomials."""
    gens = gens if gens is not None else [_gen(i) for i in range(n)]
    out = []
    for j in range(len(gens)):
        r: Poly = {}
        for i, s in enumerate(signs):
            r = poly_add(r, poly_commutator(gens[i], poly_commutator(gens[i], gens[j])), s)
        out.append(r)
    return out


@dataclass
class QuotientDims:
    n: int
    signature: Tuple[int, int]
    D: int
    free: Tuple[int, ...]
    ideal: Tuple[int, ...]

    @property
    def quotient(self) -> Tuple[int, ...]:
        return tuple(f - i for f, i in zip(self.free, self.ideal))

    def to_json(self) -> dict:
        return {"n": self.n, "signature": list(self.signature), "cutoff": self.D,
                "free": list(self.free), "ideal": list(self.ideal), "quotient": list(self.quotient)}


def qmsa_quotient_dims(n: int, signature: Tuple[int, int], D: int,
                       spectrum: Optional[Sequence[Scalar]] = None,
                       extra_relators: Sequence[Poly] = ()) -> QuotientDims:
    """Graded dimensions of the free Lie algebra modulo the ideal of the relators.

    The ideal in degree ``d`` is ``sum_i ad(x_i)(I_{d-1})``, seeded with the
    degree-3 relators (plus ``extra_relators``, which must be homogeneous).
    """
    p, m = signature
    if p + m != n:
        raise ValueError(f"signature {signature} does not sum to {n}")
    if spectrum is not None and any(spectrum):
        raise InhomogeneousSpectrum("only the zero spectrum gives a graded quotient")
    if D < 3:
        raise ValueError("cutoff must be at least 3")
    signs = [1] * p + [-1] * m
    seeds: Dict[int, List[Poly]] = {}
    for r in list(double_bracket_relators(n, signs)) + list(extra_relators):
        if not r:
            continue
        degs = {len(w) for w in r}
        if len(degs) != 1:
            raise InhomogeneousSpectrum("relators must be homogeneous")
        seeds.setdefault(degs.pop(), []).append(r)
    free = tuple(witt_dimension(n, d) for d in range(1, D + 1))
    ideal = []
    prev: List[Poly] = []
    for d in range(1, D + 1):
        ech = Echelon()
        rows: List[Poly] = []
        for r in seeds.get(d, []):
            row = ech.add(r)
            if row is not None:
                rows.append(row)
        for y in prev:
            for i in range(n):
                row = ech.add(poly_commutator(_gen(i), y))
                if row is not None:
                    rows.append(row)
        ideal.append(len(rows))
        prev = rows
    return QuotientDims(n, (p, m), D, free, tuple(ideal))


@dataclass
class HerscovichReport:
    n: int
    D: int
    mixed: Tuple[int, ...]
    residuals: List[Poly] = field(default_factory=list)
    checked_degrees: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return all(not r for r in self.residuals)

    def to_json(self) -> dict:
        return {"n": self.n, "cutoff": self.D, "mixed_pairs": list(self.mixed), "pass": self.passed,
                "nonzero_residuals": sum(1 for r in self.residuals if r),
                "checked_degrees": list(self.checked_degrees)}


def herscovich_images(n: int, mixed: Sequence[int] = ()) -> Tuple[List[Poly], List[int]]:
    """Images of ``2n`` generators in the free Lie algebra on ``n`` letters, plus signs.

    ``x_j -> y_j`` and ``x_{j+n} -> i y_j``; a pair ``j`` listed in ``mixed`` has
    ``x_{j+n}`` in the negative block and maps to ``y_j`` instead.
    """
    mixed = set(mixed)
    images = [_gen(j) for j in range(n)]
    signs = [1] * (2 * n)
    for j in range(n):
        if j in mixed:
            images.append(_gen(j))
            signs[j + n] = -1
        else:
            images.append({(j,): I})
    return images, signs


def herscovich_check(n: int, D: int, mixed: Sequence[int] = ()) -> HerscovichReport:
    """All double-bracket relators vanish on the images, at every degree up to ``D``.

    Degree 3 is the relator itself; higher degrees bracket it with the
    letters, which is a consistency check on the exact zero.
    """
    if D < 3:
        raise ValueError("cutoff must be at least 3")
    images, signs = herscovich_images(n, mixed)
    rel = double_bracket_relators(2 * n, signs, images)
    residuals = list(rel)
    layer = rel
    for _ in range(4, D + 1):
        layer = [poly_commutator(_gen(i), r) for r in layer for i in range(n)]
        residuals.extend(layer)
    return HerscovichReport(n, D, tuple(sorted(set(mixed))), residuals, tuple(range(3, D + 1)))
