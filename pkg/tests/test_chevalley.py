import itertools
import random

import pytest
from hypothesis import given, strategies as st

from kmlie.cartan import NotFiniteType, NotSimplyLaced, Gcm, named_gcm
from kmlie.chevalley import (Automorphism, BasisMismatch, all_triples, berman_involution, bracket,
                             chevalley_involution, check_homomorphism, commutator, defining_rep,
                             generated_subalgebra, jacobi_failures, mat_equal, matrix_oracle_An,
                             rep_apply, replay_closure, unit)
from kmlie.rootsys import add, enumerate_finite, serre_pair_check

from conftest import algebra

SMALL = ["A1", "A2", "A3", "A4", "D4"]
LARGE = ["E6", "E7", "E8"]
ALL = SMALL + ["D5", "A7"] + LARGE


def test_a1_relations():
    alg = algebra("A1")
    assert alg.dim == 3
    e, f, h = alg.e(0), alg.f(0), alg.h(0)
    assert alg.bracket(e, f) == h
    assert alg.bracket(h, e) == e * 2
    assert alg.bracket(h, f) == f * -2


def test_a2_bracket_examples(a2):
    assert a2.dim == 8
    assert bracket(a2, a2.e(0), a2.f(0)) == a2.h(0)
    assert a2.bracket(a2.h(0), a2.e(1)) == -a2.e(1)
    top = a2.bracket(a2.e(0), a2.e(1))
    assert top in (a2.root_vector((1, 1)), -a2.root_vector((1, 1)))


def test_dimensions():
    assert algebra("E8").dim == 248 == len(enumerate_finite(named_gcm("E8")).roots) + 8
    assert algebra("D4").dim == 28


def test_rejects_unsupported_types():
    with pytest.raises(NotFiniteType):
        algebra("A3~")
    with pytest.raises(NotSimplyLaced):
        from kmlie.chevalley import build_algebra
        build_algebra(Gcm(((2, -2), (-1, 2))))


@pytest.mark.parametrize("name", SMALL)
def test_jacobi_exhaustive(name):
    alg = algebra(name)
    assert jacobi_failures(alg, all_triples(alg.dim)) == (0, -1)


@pytest.mark.parametrize("name", LARGE)
def test_jacobi_random(name):
    alg = algebra(name)
    rng = random.Random(name)
    triples = [tuple(rng.randrange(alg.dim) for _ in range(3)) for _ in range(100_000)]
    assert jacobi_failures(alg, triples) == (0, -1)


@pytest.mark.parametrize("name", ALL)
def test_serre_relations(name):
    alg = algebra(name)
    for i, j in itertools.permutations(range(alg.rank), 2):
        power = 1 - alg.gcm[i, j]
        assert not alg.ad(alg.e(i), alg.e(j), power)
        assert not alg.ad(alg.f(i), alg.f(j), power)


@pytest.mark.parametrize("name", ["A3", "D4", "E6"])
def test_root_grading(name):
    alg = algebra(name)
    for x, y in itertools.product(range(alg.dim), repeat=2):
        target = add(alg.degree(x), alg.degree(y))
        for k, _ in alg.bracket_basis(x, y):
            assert alg.degree(k) == target


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_serre_pairs_two_oracles_agree(name):
    alg = algebra(name)
    roots = alg.root_system.roots
    for a, b in itertools.combinations(roots, 2):
        if a == tuple(-x for x in b):
            continue
        ea, eb = alg.root_vector(a), alg.root_vector(b)
        by_roots = serre_pair_check(alg.gcm, a, b)
        by_brackets = not alg.ad(ea, eb, 2) and not alg.ad(eb, ea, 2)
        assert by_roots == by_brackets is True


@pytest.mark.parametrize("name", ALL)
def test_omega_is_involutive_automorphism(name):
    alg = algebra(name)
    om = chevalley_involution(alg)
    basis = alg.basis()
    images = [om(x) for x in basis]
    assert all(om(y) == x for x, y in zip(basis, images))
    for x, y in itertools.combinations(range(alg.dim), 2):
        assert om(alg.bracket(basis[x], basis[y])) == alg.bracket(images[x], images[y])


def test_omega_values(a3):
    assert chevalley_involution(a3, a3.e(0)) == -a3.f(0)
    assert chevalley_involution(a3, a3.h(0)) == -a3.h(0)
    e_theta = a3.highest_root_vector()
    assert e_theta == a3.bracket(a3.e(0), a3.bracket(a3.e(1), a3.e(2)))
    e_minus = -chevalley_involution(a3, e_theta)
    assert e_minus == a3.bracket(a3.f(0), a3.bracket(a3.f(1), a3.f(2)))


def test_generated_subalgebras(a2, a3):
    full = generated_subalgebra(a3, [a3.highest_root_vector()] + [a3.f(i) for i in range(3)])
    assert full.dimension == 15
    assert replay_closure([a3.highest_root_vector()] + [a3.f(i) for i in range(3)],
                          a3.bracket, lambda x: x.coeffs, full.trace) == 15
    assert generated_subalgebra(a2, [a2.e(0), a2.e(1)]).dimension == 3
    a1 = algebra("A1")
    assert generated_subalgebra(a1, [a1.h(0)]).dimension == 1


def test_basis_mismatch(a2, a3):
    with pytest.raises(BasisMismatch):
        a2.e(0) + a3.e(0)


@given(st.lists(st.integers(-3, 3), min_size=15, max_size=15))
def test_antisymmetry(coeffs):
    alg = algebra("A3")
    x = alg.element(dict(enumerate(coeffs)))
    assert not alg.bracket(x, x)


@given(st.lists(st.integers(-2, 2), min_size=24, max_size=24),
       st.lists(st.integers(-2, 2), min_size=24, max_size=24),
       st.lists(st.integers(-2, 2), min_size=24, max_size=24))
def test_jacobi_on_random_elements(a, b, c):
    alg = algebra("A4")
    x, y, z = (alg.element(dict(enumerate(v))) for v in (a, b, c))
    br = alg.bracket
    assert not (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)))


# ---------------------------------------------------------------------------
# matrix oracle


def test_oracle_small_cases():
    o2 = matrix_oracle_An(2)
    assert mat_equal(commutator(o2.e(0), o2.f(0)), o2.h(0))
    assert o2.h(0)[0, 0] == 1 and o2.h(0)[1, 1] == -1
    o3 = matrix_oracle_An(3)
    assert mat_equal(commutator(o3.e(0), o3.e(1)), unit(3, 0, 2))


def test_e_theta_is_e14():
    alg = algebra("A3")
    rep = defining_rep(alg)
    m = rep_apply(rep, alg.highest_root_vector())
    assert mat_equal(m, unit(4, 0, 3)) or mat_equal(m, -unit(4, 0, 3))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4"])
def test_structure_constants_match_oracle(name):
    alg = algebra(name)
    assert check_homomorphism(alg, defining_rep(alg)) == []


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_iterated_generator_brackets_match_oracle(name):
    alg = algebra(name)
    n = alg.rank + 1
    orc = matrix_oracle_An(n)
    rep = defining_rep(alg)
    gens = []
    for i in range(alg.rank):
        gens += [(alg.e(i), orc.e(i)), (alg.f(i), orc.f(i)), (alg.h(i), orc.h(i))]
    for x, m in gens:
        assert mat_equal(rep_apply(rep, x), m)
    level = gens
    for _ in range(2):
        level = [(alg.bracket(gx, x), commutator(gm, m)) for gx, gm in gens for x, m in level]
        for x, m in level:
            assert mat_equal(rep_apply(rep, x), m)


def test_berman_involution_signs(a3):
    sigma = berman_involution(a3, (-1, 1, -1))
    assert isinstance(sigma, Automorphism)
    assert sigma(a3.e(1)) == a3.f(1)
    assert sigma(a3.f(0)) == -a3.e(0)
    assert sigma(a3.h(2)) == -a3.h(2)
    for x in a3.basis():
        assert sigma(sigma(x)) == x
    omega = chevalley_involution(a3)
    assert all(omega(x) == berman_involution(a3, (-1, -1, -1))(x) for x in a3.basis())


def test_structure_table_export(a2):
    table = a2.to_json()
    assert table["dimension"] == 8 and len(table["structure_constants"]) == len(a2.structure_constants())
    consts = a2.structure_constants()
    assert all(isinstance(k, int) for *_, k in consts)
    assert (a2.h_index(0), a2.root_index[(1, 0)], a2.root_index[(1, 0)], 2) in consts
