"""Command-line entry point: ``kmlie <group> <command> [options]``.

Exit status is 0 when every check passes, 1 when any check fails and 2 for
usage errors (bad arguments, unknown names, malformed input).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, List, Optional, Sequence

from . import __version__
from .berman import Signature, berman_generators, coloring_spectrum, delta_report, verify_berman_relations
from .cartan import Coloring, Gcm, GcmError, Kind, gcm_from_json, named_gcm, validate_gcm
from .chevalley import build_algebra, defining_rep
from .freelie import herscovich_check, qmsa_quotient_dims, witt_dimension
from .loopalg import LoopAlgebra, eval_rep, fixed_split, is_self_adjoint, is_skew_adjoint, killing_inertia
from .qmsa import MatrixTarget, QmsaPresentation, verify_morphism
from .report import Claim, Report, dumps, emit_report, jsonable
from .rootsys import RootError, affine_classify, classify, enumerate_finite, root_string
from .scalars import Field, format_matrix_entry, parse_scalar
from .scenarios import DEFAULT_CUTOFF, UnknownScenario, run_scenario, scenario_names
from .spinrep import build_spin_rep, verify_spin_properties


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _ints(text: str) -> List[int]:
    text = text.strip().strip("()[]")
    return [int(x) for x in text.split(",") if x.strip()] if text else []


def _gcm(args) -> Gcm:
    if getattr(args, "matrix", None):
        try:
            obj = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--matrix is not JSON: {exc}") from None
        return gcm_from_json(obj if isinstance(obj, dict) else {"matrix": obj})
    if not getattr(args, "name", None):
        raise UsageError("give a diagram name or --matrix")
    return named_gcm(args.name)


def _coloring(args, gcm: Gcm) -> Coloring:
    if not args.coloring:
        raise UsageError("--coloring is required")
    col = Coloring.parse([c for c in args.coloring.split(",") if c.strip()])
    col.check(gcm)
    return col


def _target(gcm: Gcm, field: Field):
    """Chevalley algebra for finite diagrams, loop algebra for affine ``X~`` names."""
    info = validate_gcm(gcm)
    if info.kind is Kind.FINITE:
        return build_algebra(gcm, field)
    if info.kind is Kind.AFFINE and gcm.name and gcm.name.endswith("~"):
        return LoopAlgebra(build_algebra(named_gcm(gcm.name[:-1]), field))
    raise UsageError("realizations exist for finite diagrams and named affine diagrams (e.g. A3~)")


def _is_affine(gcm: Gcm) -> bool:
    return validate_gcm(gcm).kind is Kind.AFFINE


# ---------------------------------------------------------------------------
# commands; each returns a Report or a plain dict


def cmd_gcm_validate(args):
    gcm = _gcm(args)
    info = validate_gcm(gcm)
    return {"gcm": gcm.to_json(), "kind": info.kind.value, "simply_laced": info.simply_laced,
            "symmetrizable": info.symmetrizable, "rank": info.rank,
            "components": [list(c) for c in info.components],
            "component_kinds": [k.value for k in info.component_kinds],
            "symmetrizer": list(info.symmetrizer)}


def cmd_gcm_show(args):
    gcm = _gcm(args)
    return {"gcm": gcm.to_json(),
            "neighbors": {gcm.labels[i]: [gcm.labels[j] for j in gcm.neighbors(i)] for i in range(gcm.size)}}


def cmd_roots_enumerate(args):
    gcm = _gcm(args)
    rs = enumerate_finite(gcm)
    return {"count": len(rs.roots), "positive": len(rs.positive_roots),
            "highest_root": list(rs.highest_root),
            "roots": [list(r) for r in rs.positive_roots] if args.positive else [list(r) for r in rs.roots]}


def cmd_roots_member(args):
    gcm = _gcm(args)
    v = _ints(args.vector)
    kind = affine_classify(gcm, v) if _is_affine(gcm) else classify(gcm, v)
    return {"vector": v, "class": kind.value}


def cmd_roots_string(args):
    gcm = _gcm(args)
    member = affine_classify if _is_affine(gcm) else None
    s = root_string(gcm, _ints(args.alpha), _ints(args.beta), member)
    rep = Report("root-string", [Claim("p - q = beta(alpha^vee) and the case list holds", "root strings",
                                       s.case_ok, {"p": s.p, "q": s.q, "r": s.r, "pairing": s.pairing,
                                                   "members": [list(m) for m in s.members],
                                                   "kinds": [k.value for k in s.kinds]})])
    return rep


def cmd_berman_spectrum(args):
    gcm = _gcm(args)
    col = _coloring(args, gcm)
    return {"coloring": col.to_json(), "spectrum": list(coloring_spectrum(gcm, col))}


def cmd_berman_relations(args):
    gcm = _gcm(args)
    col = _coloring(args, gcm)
    gens = berman_generators(_target(gcm, args.field), col)
    rel = verify_berman_relations(gens)
    claims = [Claim(f"{c.name} {list(c.nodes)}", "Berman relations", c.passed, c.to_json()) for c in rel.checks]
    return Report("berman-relations", claims, list(rel.notes))


def cmd_qmsa_verify(args):
    gcm = _gcm(args)
    col = _coloring(args, gcm)
    target = _target(gcm, args.field)
    gens = berman_generators(target, col)
    negative = tuple(_ints(args.negative)) if args.negative else ()
    mu = tuple(parse_scalar(x) for x in args.spectrum.split(",")) if args.spectrum \
        else coloring_spectrum(gcm, col) if not negative else (0,) * gcm.size
    q = QmsaPresentation(gcm.size, negative, mu, args.field)
    rep = verify_morphism(q, gens.elements, target)
    claims = [Claim(f"{q.label()} -> fixed subalgebra is a homomorphism", "QMSA morphism", rep.passed, rep.to_json())]
    for i, res, ok in delta_report(gens, Signature.from_negative(gcm.size, negative), mu):
        claims.append(Claim(f"Delta(Z_{i}) = {mu[i]} Z_{i}", "QMSA morphism", ok, res))
    return Report("qmsa-verify", claims)


def cmd_qmsa_scenario(args):
    if args.list or not args.scenario:
        return {"scenarios": scenario_names()}
    return run_scenario(args.scenario, args.cutoff, args.jobs)


def cmd_spinrep_build(args):
    gcm = _gcm(args)
    return build_spin_rep(gcm, _coloring(args, gcm), args.max_nodes).to_json()


def cmd_spinrep_verify(args):
    gcm = _gcm(args)
    col = _coloring(args, gcm)
    rep = build_spin_rep(gcm, col, args.max_nodes)
    rpt = verify_spin_properties(rep)
    q = QmsaPresentation(gcm.size, (), coloring_spectrum(gcm, col))
    mrep = verify_morphism(q, rep.matrices, MatrixTarget(rep.dimension))
    anchor = "spin-1/2 representation"
    claims = [Claim("phi(Z_i)^2 = rho_i/4 Id", anchor, all(rpt.squares), rpt.squares),
              Claim("(anti)commutation per diagram", anchor, all(ok for *_, ok, _ in rpt.pair_checks),
                    len(rpt.pair_checks)),
              Claim("white anti-hermitian, black hermitian", anchor, all(rpt.adjointness), rpt.adjointness),
              Claim("traceless images", anchor, all(rpt.traceless), rpt.traceless),
              Claim("Berman relations as matrix identities", anchor, rpt.relations.passed,
                    len(rpt.relations.checks)),
              Claim(f"{q.label()} holds on the images", anchor, mrep.passed, mrep.to_json())]
    return Report("spinrep-verify", claims, list(rpt.relations.notes))


def cmd_freelie_dims(args):
    p, m = _ints(args.signature) if args.signature else (args.n, 0)
    n = p + m
    mu = [parse_scalar(x) for x in args.spectrum.split(",")] if args.spectrum else None
    dims = qmsa_quotient_dims(n, (p, m), args.cutoff, mu)
    out = dims.to_json()
    out["witt"] = [witt_dimension(n, d) for d in range(1, args.cutoff + 1)]
    return out


def cmd_freelie_herscovich(args):
    mixed = _ints(args.mixed) if args.mixed else []
    rep = herscovich_check(args.n, args.cutoff, mixed)
    return Report("herscovich", [Claim(f"relators vanish up to degree {args.cutoff}", "free Lie epimorphism",
                                       rep.passed, rep.to_json())])


def _loop_inv(args):
    gcm = _gcm(args)
    if not (_is_affine(gcm) and gcm.name and gcm.name.endswith("~")):
        raise UsageError("loop commands need a named affine diagram such as A3~")
    loop = _target(gcm, args.field)
    col = _coloring(args, gcm)
    return loop, col, loop.involution_for(col)


def cmd_loop_split(args):
    loop, col, inv = _loop_inv(args)
    split = fixed_split(inv, args.cutoff)
    checks = split.check_relations()
    return {"coloring": col.to_json(), "ring_sign": int(inv.ring_sign), "epsilon": inv.epsilon,
            "dim_s_plus": len(split.s_plus), "dim_s_minus": len(split.s_minus),
            "killing_inertia_s_plus": list(killing_inertia(loop.base, split.s_plus)),
            "L_plus": [str(p) for p in split.l_plus], "L_minus": [str(p) for p in split.l_minus],
            "relations": {k: {"checked": c, "failed": b} for k, (c, b) in checks.items()}}


def cmd_loop_eval(args):
    loop, col, inv = _loop_inv(args)
    a = parse_scalar(args.a)
    rep = defining_rep(loop.base)
    gens = berman_generators(loop, col)
    out = []
    for name, z in zip(gens.names(), gens.elements):
        m = eval_rep(rep, a, z)
        out.append({"generator": name, "skew_adjoint": is_skew_adjoint(m), "self_adjoint": is_self_adjoint(m),
                    "matrix": [[format_matrix_entry(x) for x in row] for row in m.tolist()]})
    return {"a": args.a, "coloring": col.to_json(), "images": out}


# ---------------------------------------------------------------------------
# parser


def _add_diagram(p, coloring=False):
    p.add_argument("name", nargs="?", help="catalog name, e.g. A3, D4, E8, A3~, E10")
    p.add_argument("--matrix", help="GCM as a JSON matrix or object")
    if coloring:
        p.add_argument("--coloring", help="comma list of +1/-1 or white/black, affine node first")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="degree cutoff (default 6)")
    common.add_argument("--field", type=Field.parse, default=Field.RATIONAL, choices=list(Field),
                        metavar="{rational,gaussian}")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scenarios")

    parser = argparse.ArgumentParser(prog="kmlie", description="Exact Kac-Moody and QMSA computations.")
    parser.add_argument("--version", action="version", version=f"kmlie {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = groups.add_parser(name, help=help_)
        return g.add_subparsers(dest="command", required=True)

    def command(sub, name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=fn)
        return p

    g = group("gcm", "generalized Cartan matrices")
    _add_diagram(command(g, "validate", cmd_gcm_validate, "check axioms and classify"))
    _add_diagram(command(g, "show", cmd_gcm_show, "print the matrix and diagram"))

    g = group("roots", "root systems")
    p = command(g, "enumerate", cmd_roots_enumerate, "all roots of a finite type")
    _add_diagram(p)
    p.add_argument("--positive", action="store_true")
    p = command(g, "member", cmd_roots_member, "classify a vector as real, imaginary or not a root")
    _add_diagram(p)
    p.add_argument("--vector", required=True)
    p = command(g, "string", cmd_roots_string, "alpha-string through beta")
    _add_diagram(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    g = group("berman", "Berman generators")
    _add_diagram(command(g, "spectrum", cmd_berman_spectrum, "coloring spectrum mu"), True)
    _add_diagram(command(g, "relations", cmd_berman_relations, "check the Berman relations"), True)

    g = group("qmsa", "quasi-multiplicative spectrum algebras")
    p = command(g, "verify", cmd_qmsa_verify, "Berman generators as a QMSA morphism")
    _add_diagram(p, True)
    p.add_argument("--negative", help="comma list of generators in the negative block")
    p.add_argument("--spectrum", help="comma list of mu_j (default: coloring spectrum)")
    p = command(g, "scenario", cmd_qmsa_scenario, "run a named worked example")
    p.add_argument("scenario", nargs="?")
    p.add_argument("--list", action="store_true")

    g = group("spinrep", "spin-1/2 representations")
    for name, fn, help_ in (("build", cmd_spinrep_build, "matrices"), ("verify", cmd_spinrep_verify, "checks")):
        p = command(g, name, fn, help_)
        _add_diagram(p, True)
        p.add_argument("--max-nodes", type=int, default=12)

    g = group("freelie", "free Lie algebras")
    p = command(g, "dims", cmd_freelie_dims, "graded dimensions of a QMSA quotient")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--signature", help="p,m")
    p.add_argument("--spectrum")
    p = command(g, "herscovich", cmd_freelie_herscovich, "x_j -> y_j, x_{j+n} -> i y_j")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--mixed", help="comma list of pairs using the negative block")

    g = group("loop", "loop algebra realization")
    _add_diagram(command(g, "split", cmd_loop_split, "Fix(sigma) = L+ s+ + L- s-"), True)
    p = command(g, "eval", cmd_loop_eval, "evaluate Berman generators at t = a")
    _add_diagram(p, True)
    p.add_argument("--a", required=True)
    return parser


def _render(result: Any, fmt: str) -> str:
    if isinstance(result, Report):
        return emit_report(result, fmt)
    if fmt == "json":
        return dumps(result)
    data = jsonable(result)
    return "\n".join(f"{k}: {json.dumps(v, sort_keys=True, ensure_ascii=False)}" for k, v in sorted(data.items()))


_VALUE_FLAGS = {"--coloring", "--negative", "--spectrum", "--vector", "--alpha", "--beta", "--a"}


def _glue_values(argv: Sequence[str]) -> List[str]:
    """``--beta -1,0`` -> ``--beta=-1,0`` so argparse does not read the value as a flag."""
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = _glue_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        result = args.func(args)
    except UnknownScenario as exc:
        print(f"kmlie: unknown scenario {exc.args[0]!r}; try 'kmlie qmsa scenario --list'", file=sys.stderr)
        return 2
    except (UsageError, GcmError, RootError, ValueError) as exc:
        print(f"kmlie: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(_render(result, args.format))
    if isinstance(result, Report) and not result.passed:
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
