import itertools

import pytest

from kmlie.berman import (BadSignature, Signature, berman_generators, black_white_counts, coloring_spectrum,
                          delta, delta_apply, delta_report, double_ad, verify_berman_relations,
                          verify_relations)
from kmlie.cartan import Coloring, LengthMismatch, NotSimplyLaced, Gcm, named_gcm

from conftest import algebra, loop

FINITE = ["A2", "A3", "A4", "D4"]


def colorings(n):
    return list(itertools.product((-1, 1), repeat=n))


def test_names_a3_tilde():
    gens = berman_generators(loop("A3"), (1, -1, -1, 1))
    assert gens.names() == ["Y0", "X1", "X2", "Y3"]
    gens = berman_generators(loop("A3"), (-1, -1, -1, 1))
    assert gens.names() == ["X0", "X1", "X2", "Y3"]


def test_all_x_generators():
    lp = loop("A2")
    gens = berman_generators(lp, ["white"] * 3)
    assert all(z == lp.e(i) - lp.f(i) for i, z in enumerate(gens.elements))


def test_spectrum_examples():
    assert coloring_spectrum(named_gcm("A3~"), (1, -1, -1, 1)) == (0, 0, 0, 0)
    for n in (3, 4, 5):
        assert coloring_spectrum(named_gcm(f"A{n - 1}~"), (-1,) * n) == (-2,) * n
    assert coloring_spectrum(named_gcm("A1"), (1,)) == (0,)
    assert coloring_spectrum(named_gcm("A1"), (-1,)) == (0,)
    with pytest.raises(NotSimplyLaced):
        coloring_spectrum(Gcm(((2, -2), (-1, 2))), (1, 1))
    with pytest.raises(LengthMismatch):
        coloring_spectrum(named_gcm("A2"), Coloring((1,)))


def test_black_white_counts():
    g = named_gcm("D4")
    c = Coloring((1, -1, 1, -1))
    assert black_white_counts(g, c, 1) == (2, 1)
    assert coloring_spectrum(g, c)[1] == 2 - 1


@pytest.mark.parametrize("name", FINITE)
def test_finite_colorings(name):
    alg = algebra(name)
    for col in colorings(alg.rank):
        gens = berman_generators(alg, col)
        assert all(gens.fixed())
        mu = coloring_spectrum(alg.gcm, col)
        assert all(ok for *_, ok in delta_report(gens, Signature.euclidean(alg.rank), mu))
        assert verify_berman_relations(gens).passed


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_affine_colorings(name):
    lp = loop(name)
    n = lp.gcm.size
    for col in colorings(n):
        gens = berman_generators(lp, col)
        assert all(gens.fixed())
        mu = coloring_spectrum(lp.gcm, col)
        res = delta_report(gens, Signature.euclidean(n), mu)
        assert all(ok for *_, ok in res)
        assert all(r.max_abs_degree() <= 2 for _, r, _ in res)
        rel = verify_berman_relations(gens)
        assert rel.passed
        assert len(rel.by_name("same-node-X")) == len(rel.by_name("same-node-Y")) == n


def test_lorentzian_signature_delta():
    lp = loop("A3")
    gens = berman_generators(lp, (-1, -1, -1, 1))
    sig = Signature.from_negative(4, [0])
    assert sig.counts == (3, 1)
    z = gens.elements
    assert double_ad(lp, z[0], z[1]) == -z[1]
    assert double_ad(lp, z[0], z[3]) == -z[3]
    for x in z:
        assert not delta_apply(gens, sig, x)
    assert delta_apply(gens, Signature.euclidean(4), z[1])


def test_relation_signs_flip_under_exchange():
    alg = algebra("A2")
    x0 = alg.e(0) - alg.f(0)
    y0 = alg.e(0) + alg.f(0)
    z1 = alg.e(1) + alg.f(1)
    assert double_ad(alg, x0, z1) == -z1
    assert double_ad(alg, y0, z1) == z1
    assert double_ad(alg, x0, y0) == y0 * -4
    assert double_ad(alg, y0, x0) == x0 * 4


def test_relations_report_failure_and_notes():
    alg = algebra("A2")
    wrong = [alg.e(0) + alg.f(0), alg.e(1) + alg.f(1)]
    rep = verify_relations(alg.gcm, (-1, 1), wrong, alg.bracket, zero=alg.zero())
    assert not rep.passed
    bad = [c for c in rep.checks if not c.passed]
    assert bad[0].name == "white-adjacent" and bad[0].residual
    assert rep.notes and "not applicable" in rep.notes[0]
    assert rep.to_json()["pass"] is False


def test_bad_signature():
    alg = algebra("A2")
    gens = berman_generators(alg, (1, 1))
    with pytest.raises(BadSignature):
        delta(alg, gens.elements, Signature((0,)), alg.e(0))
    assert Signature.from_negative(3, [2, 2]).negative == (2,)
