from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kmlie.chevalley import adjoint_rep, commutator, defining_rep, is_zero, mat_equal, rep_apply
from kmlie.loopalg import (BaseMismatch, LaurentPoly, LoopInvolution, NotInFixedSubalgebra,
                           ZeroEvaluationPoint, affine_chevalley_pair, apply_involution, eval_rep,
                           fix_split_rep, fixed_split, is_skew_adjoint, killing_inertia, loop_bracket,
                           minus_kernel_points, t_power, tensor, truncated_closure)
from kmlie.rootsys import bilinear_form
from kmlie.scalars import I

from conftest import algebra, loop

EUCLIDEAN = (1, -1, -1, 1)
LORENTZIAN = (-1, -1, -1, 1)


def loop_elements(name, max_deg=2):
    alg = algebra(name)
    term = st.tuples(st.integers(-max_deg, max_deg), st.integers(0, alg.dim - 1), st.integers(-2, 2))
    return st.lists(term, max_size=4).map(
        lambda ts: sum((t_power(d, alg.basis_vector(k)) * c for d, k, c in ts), loop(name).zero()))


def test_laurent_arithmetic():
    p = LaurentPoly({2: 1, -2: 1})
    assert p(1) == 2
    assert p(2) == Fraction(17, 4)
    assert p(I) == -2
    assert p * LaurentPoly.monomial(-2) == LaurentPoly({0: 1, -4: 1})
    assert p - p == 0
    with pytest.raises(ZeroEvaluationPoint):
        p(0)
    assert LaurentPoly({1: 1}).involute(-1) == LaurentPoly({-1: -1})


@given(st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5),
       st.sampled_from([Fraction(2), Fraction(-3, 5), Fraction(1, 7), I + 1]))
def test_evaluation_and_ring_involution(coeffs, a):
    p = LaurentPoly(coeffs)
    assert p.involute(1)(a) == p(1 / a)
    assert p.involute(1).involute(1) == p
    assert p.involute(-1).involute(-1) == p
    for b in (1, -1):
        assert p.involute(1)(b) == p(b)


def test_loop_bracket_examples(a3_loop):
    alg = a3_loop.base
    x = loop_bracket(t_power(1, alg.e(0)), t_power(-1, alg.f(0)))
    assert x == t_power(0, alg.h(0))
    comm = loop_bracket(t_power(1, alg.e(0)), t_power(1, alg.e(2)))
    assert comm == 0
    pair = a3_loop.pair
    assert loop_bracket(pair.e0, pair.f0) == t_power(0, alg.bracket(pair.e_minus_theta, pair.e_theta))


def test_affine_pair_a3(a3):
    pair = affine_chevalley_pair(a3)
    assert pair.e_theta == a3.bracket(a3.e(0), a3.bracket(a3.e(1), a3.e(2)))
    assert pair.e_minus_theta == a3.bracket(a3.f(0), a3.bracket(a3.f(1), a3.f(2)))
    for i in range(3):
        lhs = loop_bracket(t_power(0, a3.h(i)), pair.e0)
        assert lhs == pair.e0 * -bilinear_form(a3.gcm, (1, 1, 1), tuple(int(k == i) for k in range(3)))


def test_affine_pair_a1():
    a1 = algebra("A1")
    pair = affine_chevalley_pair(a1)
    assert pair.e0.terms[1] in (a1.f(0), -a1.f(0))


def test_base_mismatch(a3_loop):
    with pytest.raises(BaseMismatch):
        loop_bracket(a3_loop.e(1), loop("A2").e(1))


def test_affine_sign_derived():
    base = algebra("A3")
    plus = LoopInvolution(base, 1, (-1, -1, 1))
    minus = LoopInvolution(base, -1, (-1, -1, 1))
    assert plus.epsilon == minus.epsilon == 1
    assert plus.affine_sign == 1 and plus(plus.pair.e0) == plus.pair.f0
    assert minus.affine_sign == -1
    assert loop("A3").involution_for(LORENTZIAN).ring_sign == -1
    assert loop("A3").involution_for(EUCLIDEAN).ring_sign == 1


@given(loop_elements("A3"), loop_elements("A3"))
def test_involution_is_automorphism(x, y):
    inv = loop("A3").involution_for(LORENTZIAN)
    assert inv(inv(x)) == x
    assert inv(loop_bracket(x, y)) == loop_bracket(inv(x), inv(y))
    assert apply_involution(inv, x) == inv(x)


@given(loop_elements("A2", 1), loop_elements("A2", 1), loop_elements("A2", 1))
def test_loop_jacobi(x, y, z):
    b = loop_bracket
    assert b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y)) == 0


@given(loop_elements("A2"), loop_elements("A2"), st.sampled_from([Fraction(1), Fraction(-2), Fraction(3, 2), I]))
def test_eval_rep_is_homomorphism(x, y, a):
    rep = defining_rep(algebra("A2"))
    lhs = eval_rep(rep, a, loop_bracket(x, y))
    assert mat_equal(lhs, commutator(eval_rep(rep, a, x), eval_rep(rep, a, y)))


def test_eval_zero_point(a3_loop):
    with pytest.raises(ZeroEvaluationPoint):
        eval_rep(defining_rep(a3_loop.base), 0, a3_loop.e(0))


def test_sl2_skew_only_at_unit_points():
    a1 = algebra("A1")
    rep = defining_rep(a1)
    x = t_power(1, a1.e(0)) - t_power(-1, a1.f(0))
    assert is_skew_adjoint(eval_rep(rep, 1, x))
    assert is_skew_adjoint(eval_rep(rep, -1, x))
    assert not is_skew_adjoint(eval_rep(rep, 2, x))


def test_fixed_split_a1_chevalley():
    inv = LoopInvolution(algebra("A1"), 1, (-1,))
    split = fixed_split(inv, 0)
    assert len(split.s_plus) == 1 and len(split.plus_part) == 1
    assert split.s_plus[0] in (inv.alg.e(0) - inv.alg.f(0), inv.alg.f(0) - inv.alg.e(0))


def test_fixed_split_lorentzian():
    inv = loop("A3").involution_for(LORENTZIAN)
    split = fixed_split(inv, 3)
    assert split.l_plus == [LaurentPoly({0: 1}), LaurentPoly({1: 1, -1: -1}), LaurentPoly({2: 1, -2: 1}),
                            LaurentPoly({3: 1, -3: -1})]
    assert split.l_minus == [LaurentPoly({1: 1, -1: 1}), LaurentPoly({2: 1, -2: -1}), LaurentPoly({3: 1, -3: 1})]
    assert len(split.s_plus) == 6 and len(split.s_minus) == 9
    assert killing_inertia(inv.alg, split.s_plus) == (3, 0, 3)
    assert all(bad == 0 for _, bad in split.check_relations().values())
    assert all(inv(x) == x for x in split.plus_part + split.minus_part)


def test_fixed_split_compact_case():
    inv = LoopInvolution(algebra("A3"), 1, (-1, -1, -1))
    split = fixed_split(inv, 2)
    assert killing_inertia(inv.alg, split.s_plus) == (0, 0, 6)
    assert all(bad == 0 for _, bad in split.check_relations().values())


def test_fixed_split_negative_cutoff():
    with pytest.raises(ValueError):
        fixed_split(loop("A3").involution_for(EUCLIDEAN), -1)


def test_fix_split_rep_kills_minus_part():
    inv = loop("A3").involution_for(EUCLIDEAN)
    split = fixed_split(inv, 2)
    phi = adjoint_rep(inv.alg)
    for x in split.minus_part:
        assert is_zero(fix_split_rep(phi, 1, x, split))
    x_plus = split.s_plus[0]
    assert mat_equal(fix_split_rep(phi, 3, t_power(0, x_plus), split), rep_apply(phi, x_plus))
    with pytest.raises(NotInFixedSubalgebra):
        fix_split_rep(phi, 1, t_power(1, inv.alg.e(0)), split)


def _split_rep_failures(split, phi, a, elems):
    bad = 0
    for x in elems:
        for y in elems:
            lhs = fix_split_rep(phi, a, loop_bracket(x, y), split)
            rhs = commutator(fix_split_rep(phi, a, x, split), fix_split_rep(phi, a, y, split))
            bad += not mat_equal(lhs, rhs)
    return bad


@pytest.mark.parametrize("coloring,points", [(EUCLIDEAN, (1, -1)), (LORENTZIAN, (I, -I))])
def test_fix_split_rep_homomorphism_points(coloring, points):
    inv = loop("A3").involution_for(coloring)
    split = fixed_split(inv, 2)
    phi = defining_rep(inv.alg)
    assert minus_kernel_points(int(inv.ring_sign)) == (("1", "-1") if points[0] == 1 else ("i", "-i"))
    elems = split.plus_part[::3] + split.minus_part[::3]
    for a in points:
        assert _split_rep_failures(split, phi, a, elems) == 0
    assert _split_rep_failures(split, phi, 2, elems) > 0


def test_truncated_closure_small():
    lp = loop("A2")
    gens = [lp.e(i) for i in range(3)] + [lp.f(i) for i in range(3)]
    cl = truncated_closure(lp, gens, 2)
    assert cl.complete and cl.dims == {d: 8 for d in range(-2, 3)}
    with pytest.raises(ValueError):
        truncated_closure(lp, [lp.e(0) + lp.e(1)], 1)


def test_tensor_and_serialization(a3_loop):
    x = tensor(LaurentPoly({1: 2, -1: -1}), a3_loop.base.e(0))
    assert x.degrees() == [-1, 1] and x.max_abs_degree() == 1
    assert x.to_json()[0][0] == -1
