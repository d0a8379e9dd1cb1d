import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kmlie.cartan import Gcm, named_gcm
from kmlie.rootsys import (AlphaNotReal, BetaNotRoot, DimensionMismatch, MixedSignVector, OppositePair,
                           RootClass, add, affine_classify, affine_compose, affine_decompose, bilinear_form,
                           classify, enumerate_finite, is_real_root, is_root, norm, null_root, reflect,
                           root_string, scale, serre_pair_check, simple_root)

E10 = named_gcm("E10")
E9 = named_gcm("E9")
BETA = (0, 0, 0, 0, 0, 0, 1, 0, 0, 1)


def alpha(n, *idx):
    """Sum of simple roots, 1-based indices."""
    v = [0] * n
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


def norm_two_oracle(name, bound):
    g = named_gcm(name)
    out = set()
    for v in itertools.product(range(-bound, bound + 1), repeat=g.size):
        if norm(g, v) == 2:
            out.add(v)
    return out


def e8_lattice_count():
    """Roots of E8 in the even coordinate model: +-e_i +- e_j and (+-1/2)^8 with an even number of minus signs."""
    count = 4 * 28
    count += sum(1 for signs in itertools.product((0, 1), repeat=8) if sum(signs) % 2 == 0)
    return count


@pytest.mark.parametrize("name,bound,count", [("A2", 2, 6), ("A3", 2, 12), ("D4", 2, 24), ("E6", 3, 72)])
def test_enumeration_matches_norm_two_oracle(name, bound, count):
    rs = enumerate_finite(named_gcm(name))
    assert set(rs.roots) == norm_two_oracle(name, bound)
    assert len(rs.roots) == count


def test_highest_roots():
    assert enumerate_finite(named_gcm("A2")).highest_root == (1, 1)
    assert enumerate_finite(named_gcm("A3")).highest_root == (1, 1, 1)
    e8 = enumerate_finite(named_gcm("E8"))
    assert len(e8.roots) == e8_lattice_count() == 240
    theta = e8.highest_root
    assert norm(named_gcm("E8"), theta) == 2
    assert all(add(theta, simple_root(8, i)) not in e8 for i in range(8))


def test_enumeration_closed_under_reflections():
    g = named_gcm("E7")
    rs = enumerate_finite(g)
    assert len(rs.roots) == 126
    assert all(reflect(g, r, i) in rs for r in rs.roots for i in range(g.size))


def test_multiply_laced_enumeration():
    assert len(enumerate_finite(Gcm(((2, -2), (-1, 2)))).roots) == 8
    assert len(enumerate_finite(Gcm(((2, -3), (-1, 2)))).roots) == 12


def test_bilinear_form_e10():
    assert bilinear_form(E10, BETA, alpha(10, 7)) == 1
    assert bilinear_form(E10, BETA, alpha(10, 6, 7, 8)) == -1
    assert bilinear_form(E10, alpha(10, 1), alpha(10, 1)) == 2
    assert bilinear_form(E10, BETA, alpha(10, 6)) == bilinear_form(E10, BETA, alpha(10, 8)) == -1
    with pytest.raises(DimensionMismatch):
        bilinear_form(E10, BETA, (1, 0))


def test_real_roots_e10():
    assert is_real_root(E10, BETA)
    assert is_real_root(E10, add(BETA, alpha(10, 6)))
    assert not is_real_root(E10, scale(2, alpha(10, 1)))
    assert not is_real_root(E10, (0,) * 10)
    with pytest.raises(MixedSignVector):
        is_real_root(E10, (1, -1, 0, 0, 0, 0, 0, 0, 0, 0))


def test_classify_e10():
    delta9 = (0, 1, 2, 3, 4, 5, 6, 4, 2, 3)  # null root of the E9 sub-diagram
    assert norm(E10, delta9) == 0
    assert classify(E10, delta9) is RootClass.IMAGINARY
    assert classify(E10, scale(2, alpha(10, 3))) is RootClass.NOT_ROOT
    assert classify(E10, (1, 0, 1, 0, 0, 0, 0, 0, 0, 0)) is RootClass.NOT_ROOT


def test_affine_classify():
    a3t = named_gcm("A3~")
    delta = null_root(a3t)
    assert delta == (1, 1, 1, 1)
    assert affine_classify(a3t, delta) is RootClass.IMAGINARY
    assert affine_classify(a3t, (2, 0, 0, 0)) is RootClass.NOT_ROOT
    theta = enumerate_finite(named_gcm("E8")).highest_root
    v = affine_compose(E9, 2, tuple(-x for x in theta))
    assert affine_classify(E9, v) is RootClass.REAL
    assert affine_decompose(E9, v) == (2, tuple(-x for x in theta))
    assert null_root(E9)[0] == 1


@given(st.integers(-3, 3), st.integers(0, 239))
def test_affine_classify_agrees_with_descent(n, k):
    fin = enumerate_finite(named_gcm("E8"))
    v = affine_compose(E9, n, fin.roots[k])
    if all(x >= 0 for x in v) or all(x <= 0 for x in v):
        assert classify(E9, v) is affine_classify(E9, v) is RootClass.REAL


def test_root_string_a2():
    a2 = named_gcm("A2")
    s = root_string(a2, (1, 0), (0, 1))
    assert (s.p, s.q, s.members, s.r) == (0, 1, ((0, 1), (1, 1)), 2)
    s = root_string(a2, (1, 0), (1, 1))
    assert (s.p, s.q, s.r) == (1, 0, 2)
    with pytest.raises(OppositePair):
        root_string(a2, (1, 0), (-1, 0))
    with pytest.raises(AlphaNotReal):
        root_string(a2, (2, 0), (0, 1))
    with pytest.raises(BetaNotRoot):
        root_string(a2, (1, 0), (2, 1))


def test_root_string_e9_through_delta():
    delta = null_root(E9)
    a1 = simple_root(9, 1)
    s = root_string(E9, a1, delta, affine_classify)
    assert (s.p, s.q) == (1, 1)
    assert s.kinds == (RootClass.REAL, RootClass.IMAGINARY, RootClass.REAL)
    assert s.case_ok


def test_serre_pair_probe_fails_in_e9():
    a1 = simple_root(9, 1)
    beta = add(null_root(E9), a1, -1)
    assert affine_classify(E9, beta) is RootClass.REAL
    assert not serre_pair_check(E9, a1, beta, lambda g, v: affine_classify(g, v) is not RootClass.NOT_ROOT)


def test_serre_pairs_e10_beta():
    from kmlie.qmsa import e10_gamma_set
    for g in e10_gamma_set() + [tuple(-x for x in simple_root(10, i)) for i in range(10)]:
        assert serre_pair_check(E10, BETA, g)


def _e10_real_roots(draw_word):
    v = simple_root(10, draw_word[0])
    for i in draw_word[1:]:
        w = reflect(E10, v, i)
        if all(x >= 0 for x in w):
            v = w
    return v


@given(st.lists(st.integers(0, 9), min_size=1, max_size=25), st.integers(0, 9))
def test_reflection_invariance_e10(word, i):
    v = _e10_real_roots(word)
    assert is_real_root(E10, v)
    w = reflect(E10, v, i)
    assert is_root(E10, w)
    assert all(x >= 0 for x in w) or all(x <= 0 for x in w)


@given(st.lists(st.integers(-3, 3), min_size=10, max_size=10))
def test_descent_terminates_and_sign_uniform(v):
    cls = classify(E10, v)
    if cls is not RootClass.NOT_ROOT:
        assert all(x >= 0 for x in v) or all(x <= 0 for x in v)
        assert norm(E10, v) <= 2
        assert (norm(E10, v) == 2) == (cls is RootClass.REAL)


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_finite_root_strings_short(name):
    g = named_gcm(name)
    rs = enumerate_finite(g)
    for a in rs.positive_roots:
        for b in rs.roots:
            if b in (a, tuple(-x for x in a)):
                continue
            s = root_string(g, a, b)
            assert s.p - s.q == s.pairing
            assert len(s.members) <= 2 and s.r == len(s.members)


def test_pairing_is_integer_for_simply_laced():
    g = named_gcm("E8")
    theta = enumerate_finite(g).highest_root
    assert bilinear_form(g, theta, theta) == Fraction(2)
