"""Berman generators ``Z_i = e_i + rho_i f_i`` and their relations.

A coloring assigns ``rho_i = -1`` (white, ``Z_i = X_i = e_i - f_i``) or
``rho_i = +1`` (black, ``Z_i = Y_i = e_i + f_i``).  Targets are any object
with ``gcm``, ``e(i)``, ``f(i)``, ``bracket`` and ``zero()``: a
:class:`~kmlie.chevalley.ChevalleyAlgebra` or a
:class:`~kmlie.loopalg.LoopAlgebra` (node 0 affine).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .cartan import BLACK, WHITE, Coloring, Gcm, NotSimplyLaced, validate_gcm
from .chevalley import ChevalleyAlgebra, berman_involution
from .loopalg import LoopAlgebra


class BadSignature(ValueError):
    pass


@dataclass
class BermanGenerators:
    gcm: Gcm
    coloring: Coloring
    elements: list
    target: Any

    def names(self) -> List[str]:
        return [("X" if s == WHITE else "Y") + self.gcm.labels[i]
                for i, s in enumerate(self.coloring.signs)]

    def involution(self):
        """The involution ``eta tau`` realized on the target."""
        if isinstance(self.target, LoopAlgebra):
            return self.target.involution_for(self.coloring)
        return berman_involution(self.target, self.coloring.signs)

    def fixed(self) -> List[bool]:
        sigma = self.involution()
        return [sigma(z) == z for z in self.elements]


def berman_generators(target: Union[ChevalleyAlgebra, LoopAlgebra],
                      coloring: Union[Coloring, Sequence]) -> BermanGenerators:
    if not isinstance(coloring, Coloring):
        coloring = Coloring.parse(coloring)
    coloring.check(target.gcm)
    elems = [target.e(i) + target.f(i) * s for i, s in enumerate(coloring.signs)]
    return BermanGenerators(target.gcm, coloring, elems, target)


@dataclass(frozen=True)
class Signature:
    """Split of generator indices into a positive and a negative block."""

    positive: Tuple[int, ...]
    negative: Tuple[int, ...] = ()

    @classmethod
    def euclidean(cls, n: int) -> "Signature":
        return cls(tuple(range(n)))

    @classmethod
    def from_negative(cls, n: int, negative: Sequence[int]) -> "Signature":
        neg = tuple(sorted(set(negative)))
        return cls(tuple(i for i in range(n) if i not in neg), neg)

    @property
    def counts(self) -> Tuple[int, int]:
        return len(self.positive), len(self.negative)

    def check(self, n: int) -> None:
        both = list(self.positive) + list(self.negative)
        if sorted(both) != list(range(n)):
            raise BadSignature(f"signature blocks {self.positive}/{self.negative} "
                               f"do not partition 0..{n - 1}")

    def sign(self, i: int) -> int:
        return -1 if i in self.negative else 1


def double_ad(target, z, x):
    return target.bracket(z, target.bracket(z, x))


def delta(target, gens: Sequence, signature: Signature, x):
    """``sum_pos ad(z)^2 x - sum_neg ad(z)^2 x``."""
    signature.check(len(gens))
    out = target.zero()
    for i in signature.positive:
        out = out + double_ad(target, gens[i], x)
    for i in signature.negative:
        out = out - double_ad(target, gens[i], x)
    return out


def delta_apply(gens: BermanGenerators, signature: Signature, target_elem):
    return delta(gens.target, gens.elements, signature, target_elem)


def coloring_spectrum(gcm: Gcm, coloring: Union[Coloring, Sequence[int]]) -> Tuple[int, ...]:
    """``mu_i = #black neighbours - #white neighbours``."""
    if not validate_gcm(gcm).simply_laced:
        raise NotSimplyLaced(f"{gcm.name or 'matrix'} is not simply laced")
    signs = coloring.signs if isinstance(coloring, Coloring) else tuple(coloring)
    if isinstance(coloring, Coloring):
        coloring.check(gcm)
    return tuple(sum(signs[j] for j in gcm.neighbors(i)) for i in range(gcm.size))


@dataclass
class RelationCheck:
    name: str
    nodes: Tuple[int, ...]
    lhs: Any
    rhs: Any
    passed: bool
    residual: Any = None

    def to_json(self) -> dict:
        return {"name": self.name, "nodes": list(self.nodes), "pass": self.passed,
                "lhs": _repr(self.lhs), "rhs": _repr(self.rhs), "residual": _repr(self.residual)}


def _repr(x):
    if x is None:
        return None
    to_json = getattr(x, "to_json", None)
    if to_json is not None:
        return to_json()
    if hasattr(x, "coeffs"):
        from .scalars import format_scalar
        return {str(k): format_scalar(c) for k, c in sorted(x.coeffs.items())}
    return str(x)


@dataclass
class RelationReport:
    checks: List[RelationCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_name(self, name: str) -> List[RelationCheck]:
        return [c for c in self.checks if c.name == name]

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks],
                "notes": list(self.notes)}


def _check(report, name, nodes, lhs, rhs, equal, diff):
    ok = equal(lhs, rhs)
    report.checks.append(RelationCheck(name, nodes, lhs, rhs, ok, None if ok else diff(lhs, rhs)))


def verify_relations(gcm: Gcm, signs: Sequence[int], elements: Sequence, bracket, *,
                     equal=None, diff=None, zero=None, both: Optional[Dict[int, Tuple[Any, Any]]] = None
                     ) -> RelationReport:
    """Check the Berman relations on concrete images ``elements`` of ``Z_i``.

    * commuting:   ``[Z_i, Z_j] = 0`` when ``a_ij = 0``
    * white-adj:   ``[X_i, [X_i, Z_j]] = -Z_j`` when ``a_ij = -1``
    * black-adj:   ``[Y_i, [Y_i, Z_j]] = +Z_j`` when ``a_ij = -1``
    * same-node:   ``[X, [X, Y]] = -4Y`` and ``[Y, [Y, X]] = 4X``, only for nodes
      listed in ``both`` as ``{i: (X_i, Y_i)}``.

    ``bracket``, ``equal`` and ``diff`` abstract over algebra elements and
    matrices alike.
    """
    equal = equal or (lambda a, b: a == b)
    diff = diff or (lambda a, b: a - b)
    report = RelationReport()
    n = gcm.size
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a = gcm.entries[i][j]
            zi, zj = elements[i], elements[j]
            if a == 0 and i < j:
                lhs = bracket(zi, zj)
                _check(report, "commuting", (i, j), lhs, zero if zero is not None else lhs * 0,
                       equal, diff)
            elif a == -1:
                lhs = bracket(zi, bracket(zi, zj))
                name = "white-adjacent" if signs[i] == WHITE else "black-adjacent"
                _check(report, name, (i, j), lhs, zj * signs[i], equal, diff)
    if both:
        for i, (x, y) in sorted(both.items()):
            _check(report, "same-node-X", (i,), bracket(x, bracket(x, y)), y * -4, equal, diff)
            _check(report, "same-node-Y", (i,), bracket(y, bracket(y, x)), x * 4, equal, diff)
    else:
        report.notes.append("same-node relations not applicable: only one of X_i, Y_i per node")
    return report


def verify_berman_relations(gens: BermanGenerators, same_node: bool = True) -> RelationReport:
    """Relations checked by explicit brackets in the target algebra.

    With ``same_node`` the other generator type is materialized in the target
    too (``e_i - f_i`` next to ``e_i + f_i``), so the same-node relations are
    checked for every node.
    """
    t = gens.target
    both = None
    if same_node:
        both = {i: (t.e(i) - t.f(i), t.e(i) + t.f(i)) for i in range(gens.gcm.size)}
    return verify_relations(gens.gcm, gens.coloring.signs, gens.elements, t.bracket,
                            zero=t.zero(), both=both)


def delta_report(gens: BermanGenerators, signature: Signature,
                 spectrum: Optional[Sequence] = None) -> List[Tuple[int, Any, bool]]:
    """``(i, residual, ok)`` for ``Delta(Z_i) - mu_i Z_i`` over all generators."""
    if spectrum is None:
        spectrum = [0] * len(gens.elements)
    out = []
    for i, z in enumerate(gens.elements):
        res = delta_apply(gens, signature, z) - z * spectrum[i]
        out.append((i, res, not res))
    return out


def black_white_counts(gcm: Gcm, coloring: Coloring, i: int) -> Tuple[int, int]:
    nb = gcm.neighbors(i)
    return (sum(1 for j in nb if coloring.signs[j] == BLACK),
            sum(1 for j in nb if coloring.signs[j] == WHITE))
