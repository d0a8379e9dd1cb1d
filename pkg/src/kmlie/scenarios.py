"""Named worked examples, each a list of claims with exact witnesses.

A scenario is a sequence of tasks; each task is a module-level function
returning claims, so tasks can run in worker processes (``jobs > 1``) while
the report keeps a fixed order.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from .berman import (Signature, berman_generators, coloring_spectrum, delta_report,
                     double_ad, verify_berman_relations)
from .cartan import BLACK, Coloring, named_gcm
from .chevalley import (build_algebra, chevalley_involution, defining_rep, generated_subalgebra)
from .freelie import LyndonBasis, herscovich_check, qmsa_quotient_dims, witt_dimension
from .loopalg import (LoopAlgebra, LoopInvolution, eval_rep, fixed_split, is_skew_adjoint,
                      killing_inertia, t_power, tensor, LaurentPoly)
from .qmsa import (HypothesisViolated, MatrixTarget, QmsaPresentation, e8_classical_images,
                   e9_descent_path, e9_loop_images, scenario_e10_chi,
                   scenario_e9_membership_checks, surjectivity_certificate, verify_morphism)
from .report import Claim, Report
from .rootsys import enumerate_finite, neg, serre_pair_check
from .spinrep import build_spin_rep, verify_spin_properties

DEFAULT_CUTOFF = 6


class UnknownScenario(KeyError):
    pass


@lru_cache(maxsize=None)
def _algebra(name: str):
    return build_algebra(named_gcm(name))


@lru_cache(maxsize=None)
def _loop(name: str) -> LoopAlgebra:
    return LoopAlgebra(_algebra(name))


# ---------------------------------------------------------------------------
# affine A3

EUCLIDEAN = (1, -1, -1, 1)     # node 0 (affine) black, 1 and 2 white, 3 black
LORENTZIAN = (-1, -1, -1, 1)   # only node 3 black


def _a3_common(coloring, negative, cutoff, anchor) -> List[Claim]:
    loop = _loop("A3")
    gens = berman_generators(loop, coloring)
    sig = Signature.from_negative(4, negative)
    claims = [Claim("Berman generators " + ",".join(gens.names()), anchor, True, gens.names())]
    claims.append(Claim("every Z_i is fixed by the loop involution", anchor,
                        all(gens.fixed()), gens.fixed()))
    degree = 0
    for i, res, ok in delta_report(gens, sig):
        claims.append(Claim(f"Delta(Z_{i}) = 0 with negative block {list(negative)}", anchor, ok,
                            res.to_json() if res else 0))
        degree = max(degree, res.max_abs_degree())
    for i, z in enumerate(gens.elements):
        for j in range(4):
            degree = max(degree, double_ad(loop, gens.elements[j], z).max_abs_degree())
    claims.append(Claim(f"all double brackets stay within |degree| <= {cutoff}", anchor,
                        degree <= cutoff, degree))
    q = QmsaPresentation(4, tuple(negative))
    rep = verify_morphism(q, gens.elements, loop)
    claims.append(Claim(f"{q.label()} -> Fix(sigma) is a homomorphism", anchor, rep.passed,
                        rep.to_json()))
    rel = verify_berman_relations(gens)
    claims.append(Claim("Berman relations hold by explicit brackets", anchor, rel.passed,
                        {"checked": len(rel.checks), "failed": [c.to_json() for c in rel.checks if not c.passed]}))
    inv = gens.involution()
    split = fixed_split(inv, cutoff)
    checks = split.check_relations()
    claims.append(Claim(f"Fix(sigma) = L+ (x) s+ + L- (x) s- grading up to degree {cutoff}", anchor,
                        all(bad == 0 for _, bad in checks.values()),
                        {k: {"checked": c, "failed": b} for k, (c, b) in checks.items()}))
    inertia = killing_inertia(loop.base, split.s_plus)
    claims.append(Claim("s+ has dimension 6 and Killing inertia (3,0,3) as so(1,3)", anchor,
                        len(split.s_plus) == 6 and inertia == (3, 0, 3),
                        {"dim": len(split.s_plus), "inertia": list(inertia)}))
    return claims


def task_a3_euclidean(cutoff: int) -> List[Claim]:
    anchor = "affine A3, euclidean coloring"
    loop = _loop("A3")
    claims = [Claim("coloring: nodes 1,2 white; 3 and the affine node black", anchor,
                    Coloring(EUCLIDEAN).signs == (BLACK, -1, -1, BLACK), list(EUCLIDEAN))]
    inv = LoopInvolution(loop.base, 1, EUCLIDEAN[1:])
    claims.append(Claim("sigma0(e_theta) = e_-theta (epsilon = +1)", anchor, inv.epsilon == 1, inv.epsilon))
    claims.append(Claim("beta_+ (x) sigma0 sends e0 to f0 (rho_0 = +1)", anchor,
                        inv.affine_sign == 1, inv.affine_sign))
    mu = coloring_spectrum(loop.gcm, EUCLIDEAN)
    claims.append(Claim("coloring spectrum is (0,0,0,0)", anchor, mu == (0, 0, 0, 0), list(mu)))
    claims += _a3_common(EUCLIDEAN, (), cutoff, anchor)
    return claims


def task_a3_lorentzian(cutoff: int) -> List[Claim]:
    anchor = "affine A3, lorentzian signature"
    loop = _loop("A3")
    alg = loop.base
    sigma0 = LoopInvolution(alg, -1, LORENTZIAN[1:])
    claims = [Claim("sigma0(e_theta) = e_-theta computed in g(A3)", anchor, sigma0.epsilon == 1,
                    sigma0.epsilon)]
    claims.append(Claim("beta_- (x) sigma0 gives rho_0 = -epsilon = -1 (derived from sigma(e0))", anchor,
                        sigma0.affine_sign == -1, sigma0.affine_sign))
    gens = berman_generators(loop, LORENTZIAN)
    z = gens.elements
    for j in (1, 3):
        lhs = double_ad(loop, z[0], z[j])
        claims.append(Claim(f"ad(Z_0)^2(Z_{j}) = -Z_{j}", anchor, lhs == -z[j], lhs.to_json()))
    split = fixed_split(sigma0, cutoff)
    lp = [p.coeffs for p in split.l_plus]
    expect_plus = [{0: 1}] + [{k: 1, -k: (-1) ** k} for k in range(1, cutoff + 1)]
    expect_minus = [{k: 1, -k: -(-1) ** k} for k in range(1, cutoff + 1)]
    claims.append(Claim("L+ = span{1, t^n + (-1)^n t^-n}, L- = span{t^n - (-1)^n t^-n}", anchor,
                        lp == expect_plus and [p.coeffs for p in split.l_minus] == expect_minus,
                        {"L+": [str(p) for p in split.l_plus], "L-": [str(p) for p in split.l_minus]}))
    claims += _a3_common(LORENTZIAN, (0,), cutoff, anchor)
    return claims


# ---------------------------------------------------------------------------
# maximal compact subalgebra of affine A_{n-1}


def task_k_affine(n: int, cutoff: int) -> List[Claim]:
    anchor = f"k(affine A{n - 1}) example"
    loop = _loop(f"A{n - 1}")
    alg = loop.base
    white = (-1,) * n
    claims = []
    mu = coloring_spectrum(loop.gcm, white)
    claims.append(Claim(f"all-white coloring spectrum is ({','.join(['-2'] * n)})", anchor,
                        mu == (-2,) * n, list(mu)))
    gens = berman_generators(loop, white)
    res = delta_report(gens, Signature.euclidean(n), [-2] * n)
    claims.append(Claim("Delta(X_j) = -2 X_j by explicit brackets", anchor, all(ok for *_, ok in res),
                        [i for i, _, ok in res if not ok]))
    q = QmsaPresentation(n, (), (-2,) * n)
    rep = verify_morphism(q, gens.elements, loop)
    claims.append(Claim(f"{q.label()} -> k is a homomorphism", anchor, rep.passed, rep.to_json()))
    inv = gens.involution()
    drep = defining_rep(alg)
    root_elems, cartan_elems = [], []
    for m in range(0, cutoff + 1):
        for r in alg.root_system.positive_roots:
            x = t_power(m, alg.root_vector(r))
            root_elems.append(x + inv(x))
        if m:
            for i in range(alg.rank):
                cartan_elems.append(tensor(LaurentPoly({m: 1, -m: -1}), alg.h(i)))
    fixed_ok = all(inv(x) == x for x in root_elems + cartan_elems)
    claims.append(Claim("t^m E_a - t^-m E_-a and (t^m - t^-m) h lie in k", anchor, fixed_ok,
                        len(root_elems) + len(cartan_elems)))
    for a in (1, -1):
        skew = all(is_skew_adjoint(eval_rep(drep, a, x)) for x in root_elems)
        zero = all(not any(v != 0 for v in eval_rep(drep, a, x).flat) for x in cartan_elems)
        claims.append(Claim(f"ev_{a}: root-type elements skew-adjoint, Cartan-type elements zero", anchor,
                            skew and zero, {"root_type": len(root_elems), "cartan_type": len(cartan_elems)}))
    witness = next((x for x in root_elems if x.max_abs_degree() == 1
                    and not is_skew_adjoint(eval_rep(drep, 2, x))), None)
    claims.append(Claim("a = 2 gives a non skew-adjoint image", anchor, witness is not None,
                        None if witness is None else {"element": witness.to_json(),
                                                      "matrix": eval_rep(drep, 2, witness).tolist()}))
    return claims


# ---------------------------------------------------------------------------
# E8, E9, E10


def task_e8_serre() -> List[Claim]:
    anchor = "E8 root pairs, ad(x)^2(y) = 0"
    gcm = named_gcm("E8")
    roots = enumerate_finite(gcm).roots
    pairs = bad = 0
    for a, b in combinations(roots, 2):
        if a == neg(b):
            continue
        pairs += 1
        if not serre_pair_check(gcm, a, b):
            bad += 1
    return [Claim("serre_pair_check over all unordered non-opposite E8 root pairs", anchor,
                  bad == 0 and pairs == 28560, {"pairs": pairs, "failures": bad})]


def task_e8_brackets() -> List[Claim]:
    anchor = "E8 root pairs, ad(x)^2(y) = 0"
    alg = _algebra("E8")
    nonzero = 0
    for a, b in combinations(alg.root_system.roots, 2):
        if a == neg(b):
            continue
        ea, eb = alg.root_vector(a), alg.root_vector(b)
        if alg.ad(ea, eb, 2) or alg.ad(eb, ea, 2):
            nonzero += 1
    return [Claim("ad(e_a)^2(e_b) = 0 by brackets for the same pairs", anchor, nonzero == 0, nonzero)]


def task_e8_morphism() -> List[Claim]:
    anchor = "E8 classical epimorphism"
    alg = _algebra("E8")
    images = e8_classical_images(alg)
    q = QmsaPresentation(9)
    rep = verify_morphism(q, images, alg)
    claims = [Claim(f"{q.label()} with f_1..f_8, e_theta is a homomorphism", anchor, rep.passed,
                    rep.to_json())]
    cert = surjectivity_certificate(images, alg, "FiniteDimClosure")
    claims.append(Claim("FiniteDimClosure reaches dimension 248", anchor, cert.passed and cert.replay(),
                        cert.to_json()))
    for d in (1, 4):
        qd = QmsaPresentation.split(9 - d, d)
        claims.append(Claim(f"{qd.label()} also passes (every ad^2 term vanishes)", anchor,
                            verify_morphism(qd, images, alg).passed, None))
    extra = [(1, 1, 0, 0, 0, 0, 0, 0), (0, 0, 1, 1, 1, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0, 0)]
    ext = e8_classical_images(alg, extra)
    qe = QmsaPresentation(9 + len(extra))
    claims.append(Claim(f"{qe.label()} with extra e_beta (repeats allowed)", anchor,
                        verify_morphism(qe, ext, alg).passed, [list(b) for b in extra]))
    try:
        e8_classical_images(alg, [neg(alg.root_system.highest_root)])
        rejected = False
    except HypothesisViolated:
        rejected = True
    claims.append(Claim("extra root -theta is rejected", anchor, rejected, None))
    return claims


def _phi_pm_claim(name: str) -> Claim:
    alg = _algebra(name)
    om = chevalley_involution(alg)
    ok = all(alg.e(i) == -om(alg.f(i)) for i in range(alg.rank))
    return Claim(f"phi+ = -omega o phi- on generators of {name}", "n+ / n- epimorphisms", ok, None)


E9_BETAS: Tuple[Tuple[Tuple[int, ...], int], ...] = (
    ((1, 1, 0, 0, 0, 0, 0, 0), 2),
    ((-1, -1, -1, 0, 0, 0, 0, 0), 2),
    ((0, 1, 1, 1, 1, 0, 0, 1), 1),
    ((0, 0, 0, 0, 1, 1, 0, 0), -1),
)


def task_e9_membership() -> List[Claim]:
    anchor = "E9 proposition"
    claims = []
    for beta, n in E9_BETAS:
        cs = scenario_e9_membership_checks(beta, n)
        claims.append(Claim(f"beta = {list(beta)}, n = {n}: all {len(cs)} root checks pass", anchor,
                            all(c.passed for c in cs), [c.to_json() for c in cs if not c.passed]))
    fin = enumerate_finite(named_gcm("E8"))
    for label, beta in (("-theta", neg(fin.highest_root)), ("alpha_1", fin.simple_roots()[0])):
        try:
            scenario_e9_membership_checks(beta, 2)
            rejected = False
        except HypothesisViolated:
            rejected = True
        claims.append(Claim(f"beta = {label} is rejected by the hypothesis", anchor, rejected, None))
    return claims


def task_e9_generation(cutoff: int) -> List[Claim]:
    anchor = "E9 proposition"
    loop = _loop("E8")
    claims = []
    beta, n = E9_BETAS[0]
    images = e9_loop_images(loop, beta, n)
    q = QmsaPresentation(10)
    claims.append(Claim(f"{q.label()} with f_0..f_8, e_gamma (gamma = {n}delta + beta)", anchor,
                        verify_morphism(q, images, loop).passed, None))
    for b, k in E9_BETAS:
        if k != 2:
            continue
        path = e9_descent_path(loop, b, k)
        claims.append(Claim(f"path e_gamma -> {k}delta - theta -> theta for beta = {list(b)}, n = {k}",
                            anchor, path["ok"], {"steps": len(path["steps"]), "final": path.get("final")}))
    window = min(cutoff, 3) if cutoff else 3
    cert = surjectivity_certificate(images, loop, "TruncatedGradedClosure", window)
    claims.append(Claim(f"TruncatedGradedClosure spans every degree |k| <= {window}", anchor,
                        cert.passed and cert.replay(), cert.to_json()))
    return claims


def task_e10() -> List[Claim]:
    return scenario_e10_chi()


# ---------------------------------------------------------------------------
# free Lie algebra scenarios


def task_herscovich(cutoff: int) -> List[Claim]:
    anchor = "free Lie epimorphism x_j -> y_j, x_{j+n} -> i y_j"
    D = max(4, min(cutoff, 4)) if cutoff else 4
    claims = []
    for n in (1, 2, 3):
        rep = herscovich_check(n, D)
        claims.append(Claim(f"n = {n}: all {2 * n} relators vanish up to degree {D}", anchor,
                            rep.passed, rep.to_json()))
        mixed = herscovich_check(n, D, mixed=[0])
        claims.append(Claim(f"n = {n}: mixed-signature pair 0 (x_{{n+1}} -> y_1, negative block)", anchor,
                            mixed.passed, mixed.to_json()))
    return claims


def task_heisenberg(cutoff: int) -> List[Claim]:
    anchor = "Heisenberg algebra"
    D = max(cutoff, 4)
    claims = []
    expect = (2, 1) + (0,) * (D - 2)
    for sig in ((2, 0), (1, 1)):
        dims = qmsa_quotient_dims(2, sig, D)
        claims.append(Claim(f"Q_{{{sig[0]},{sig[1]}}}(0,0) graded dims {list(expect)}", anchor,
                            dims.quotient == expect, dims.to_json()))
    dims3 = qmsa_quotient_dims(3, (3, 0), 3)
    claims.append(Claim("Q_{3,0}(0,0,0) degree 3 = 8 - rank(relators) = 5", anchor,
                        dims3.quotient[2] == witt_dimension(3, 3) - 3 == 5, dims3.to_json()))
    basis = LyndonBasis(2, D)
    claims.append(Claim("Lyndon basis of the free Lie algebra on 2 letters matches Witt", anchor,
                        basis.dims() == tuple(witt_dimension(2, d) for d in range(1, D + 1)),
                        list(basis.dims())))
    return claims


# ---------------------------------------------------------------------------
# spin representation

SPIN_CASES = (
    ("A3~", EUCLIDEAN, ()),
    ("A3~", LORENTZIAN, (0,)),
    ("A2", (-1, -1), ()),
    ("A2", (-1, 1), ()),
    ("D4", (-1, -1, -1, -1), ()),
    ("D4", (1, -1, 1, -1), ()),
)


def task_spin(name: str, coloring: Sequence[int], negative: Sequence[int]) -> List[Claim]:
    anchor = "spin-1/2 representation"
    gcm = named_gcm(name)
    rep = build_spin_rep(gcm, coloring)
    rpt = verify_spin_properties(rep)
    tag = f"{name} coloring {list(coloring)}"
    claims = [
        Claim(f"{tag}: phi(Z_i)^2 = rho_i/4 Id", anchor, all(rpt.squares), rpt.squares),
        Claim(f"{tag}: (anti)commutation per diagram, GF(2) prediction agrees", anchor,
              all(ok and ag for *_, ok, ag in rpt.pair_checks), len(rpt.pair_checks)),
        Claim(f"{tag}: white images anti-hermitian, black hermitian", anchor, all(rpt.adjointness),
              rpt.adjointness),
        Claim(f"{tag}: Berman relations as matrix identities", anchor, rpt.relations.passed,
              {"checked": len(rpt.relations.checks), "notes": rpt.relations.notes}),
    ]
    mu = coloring_spectrum(gcm, coloring)
    q = QmsaPresentation(gcm.size, (), mu)
    mrep = verify_morphism(q, rep.matrices, MatrixTarget(rep.dimension))
    claims.append(Claim(f"{tag}: x_i -> phi(Z_i) satisfies {q.label()}", anchor, mrep.passed, None))
    if negative:
        qn = QmsaPresentation(gcm.size, tuple(negative))
        mneg = verify_morphism(qn, rep.matrices, MatrixTarget(rep.dimension))
        claims.append(Claim(f"{tag}: x_i -> phi(Z_i) satisfies {qn.label()}", anchor, mneg.passed, None))
    return claims


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    tasks: Tuple[Tuple[Callable, tuple], ...]
    notes: Tuple[str, ...] = ()


def _catalog(cutoff: int) -> Dict[str, Scenario]:
    return {
        "a3tilde-euclidean": Scenario(
            "a3tilde-euclidean", "affine A3, coloring (white, white, black, black), Q_{4,0}(0,0,0,0)",
            ((task_a3_euclidean, (cutoff,)),)),
        "a3tilde-lorentzian": Scenario(
            "a3tilde-lorentzian", "affine A3, rho_3 = +1 else -1, Q_{3,1}(0,0,0,0)",
            ((task_a3_lorentzian, (cutoff,)),)),
        "k-affine-an": Scenario(
            "k-affine-an", "maximal compact subalgebra of affine A_{n-1}, n = 3, 4, 5",
            tuple((task_k_affine, (n, cutoff)) for n in (3, 4, 5)),
            ("the maximal compact case uses rho_i = -1 on every node, i.e. every node white "
             "(X generators) in this coloring convention",)),
        "e8-classical": Scenario(
            "e8-classical", "E8: Serre-type pairs, Q_{9,0} epimorphism, closure to 248",
            ((task_e8_serre, ()), (task_e8_brackets, ()), (task_e8_morphism, ()),
             (_phi_claims, (("A3", "D4", "E8"),))),
            ("the triple subscript Q_{p,q,d} is read as Q_{p,q}",)),
        "e9-derived": Scenario(
            "e9-derived", "affine E8: gamma = n delta + beta non-membership and generation",
            ((task_e9_membership, ()), (task_e9_generation, (cutoff,)))),
        "e10-chi": Scenario("e10-chi", "E10: the 26-element set chi", ((task_e10, ()),)),
        "herscovich": Scenario(
            "herscovich", "free Lie algebra epimorphism from Q_{2n,0}(0,...,0)",
            ((task_herscovich, (cutoff,)),),
            ("mixed signature: the pair's second generator maps to y_j without the factor i",)),
        "spinrep": Scenario(
            "spinrep", "spin-1/2 matrices for Berman generators",
            tuple((task_spin, case) for case in SPIN_CASES),
            ("same-node relations need both X_i and Y_i; the representation carries one per node",)),
        "heisenberg": Scenario(
            "heisenberg", "Q_{2,0}(0,0) and Q_{1,1}(0,0) graded dimensions",
            ((task_heisenberg, (cutoff,)),)),
    }


def _phi_claims(names: Sequence[str]) -> List[Claim]:
    return [_phi_pm_claim(n) for n in names]


def scenario_names() -> List[str]:
    return list(_catalog(DEFAULT_CUTOFF))


def get_scenario(name: str, cutoff: int = DEFAULT_CUTOFF) -> Scenario:
    cat = _catalog(cutoff)
    if name not in cat:
        raise UnknownScenario(name)
    return cat[name]


def _run_task(task: Tuple[Callable, tuple]) -> List[Claim]:
    fn, args = task
    return fn(*args)


def run_scenario(name: str, cutoff: int = DEFAULT_CUTOFF, jobs: int = 1) -> Report:
    sc = get_scenario(name, cutoff)
    if jobs > 1 and len(sc.tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_task, sc.tasks))
    else:
        results = [_run_task(t) for t in sc.tasks]
    claims = [c for r in results for c in r]
    return Report(name, claims, list(sc.notes))


def a3_generated_dimension() -> int:
    """Dimension generated by ``e_theta, f_1, f_2, f_3`` in ``g(A3)``."""
    alg = _algebra("A3")
    return generated_subalgebra(alg, [alg.highest_root_vector()] + [alg.f(i) for i in range(3)]).dimension
