import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kmlie.cartan import (BLACK, WHITE, Coloring, Gcm, Kind, LengthMismatch, NonSquare, NotFiniteType,
                          NotGcm, NotSimplyLaced, UnknownName, affine_extension, gcm_from_json,
                          named_gcm, symmetrizer, validate_gcm)

A3_TILDE = ((2, -1, 0, -1), (-1, 2, -1, 0), (0, -1, 2, -1), (-1, 0, -1, 2))
CATALOG = ["A1", "A2", "A3", "A4", "A7", "D4", "D5", "D6", "E6", "E7", "E8"]


def test_a2_is_finite_simply_laced():
    info = validate_gcm([[2, -1], [-1, 2]])
    assert info.simply_laced and info.kind is Kind.FINITE
    assert info.symmetrizer == (1, 1)


def test_displayed_a3_tilde_is_affine():
    info = validate_gcm(A3_TILDE)
    assert info.simply_laced and info.kind is Kind.AFFINE
    assert info.rank == 3


def test_asymmetric_zero_pattern():
    with pytest.raises(NotGcm) as exc:
        validate_gcm([[2, -1], [0, 2]])
    assert (exc.value.i, exc.value.j) == (0, 1)


@pytest.mark.parametrize("m,exc", [
    ([[2, 1], [-1, 2]], NotGcm),
    ([[1, -1], [-1, 2]], NotGcm),
    ([[2, -1, 0], [-1, 2]], NonSquare),
])
def test_axiom_violations(m, exc):
    with pytest.raises(exc):
        validate_gcm(m)


def test_named_catalog():
    assert named_gcm("A3~").entries == A3_TILDE
    assert named_gcm("A1").entries == ((2,),)
    e10 = named_gcm("E10")
    assert e10.size == 10
    assert e10[6, 9] == e10[9, 6] == -1
    assert sum(1 for j in range(10) if e10[9, j] == -1) == 1
    assert validate_gcm(e10).kind is Kind.INDEFINITE
    assert validate_gcm(named_gcm("E9")).kind is Kind.AFFINE
    with pytest.raises(UnknownName):
        named_gcm("F4")
    with pytest.raises(UnknownName):
        named_gcm("E5")


def test_affine_extension():
    assert affine_extension(named_gcm("A3")).entries == A3_TILDE
    assert affine_extension(named_gcm("A1")).entries == ((2, -2), (-2, 2))
    e9 = affine_extension(named_gcm("E8"))
    assert e9.size == 9 and validate_gcm(e9).kind is Kind.AFFINE
    assert e9.labels[0] == "0"
    with pytest.raises(NotFiniteType):
        affine_extension(named_gcm("A3~"))
    with pytest.raises(NotSimplyLaced):
        affine_extension(Gcm(((2, -2), (-1, 2))))


@pytest.mark.parametrize("name", CATALOG)
def test_affine_extension_of_catalog_is_affine(name):
    g = named_gcm(name)
    assert validate_gcm(g).kind is Kind.FINITE
    assert validate_gcm(affine_extension(g)).kind is Kind.AFFINE
    assert symmetrizer(g) == (Fraction(1),) * g.size


def test_multiply_laced_and_components():
    b2 = validate_gcm([[2, -2], [-1, 2]])
    assert b2.kind is Kind.FINITE and not b2.simply_laced
    assert b2.symmetrizer in ((1, 2), (2, 1))
    g2 = validate_gcm([[2, -3], [-1, 2]])
    assert g2.kind is Kind.FINITE
    hyp = validate_gcm([[2, -3], [-3, 2]])
    assert hyp.kind is Kind.INDEFINITE
    mixed = validate_gcm([[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -2], [0, 0, -2, 2]])
    assert mixed.kind is Kind.INDEFINITE
    assert mixed.component_kinds == (Kind.FINITE, Kind.AFFINE)
    assert validate_gcm([[2, 0], [0, 2]]).kind is Kind.FINITE


def test_non_symmetrizable():
    m = [[2, -1, -1], [-2, 2, -1], [-1, -1, 2]]
    info = validate_gcm(m)
    assert not info.symmetrizable and info.kind is Kind.INDEFINITE


@given(st.sampled_from(CATALOG + ["A3~", "D4~", "E9", "E10"]), st.randoms(use_true_random=False))
def test_kind_is_permutation_invariant(name, rnd):
    g = named_gcm(name)
    perm = list(range(g.size))
    rnd.shuffle(perm)
    permuted = [[g[perm[i], perm[j]] for j in range(g.size)] for i in range(g.size)]
    assert validate_gcm(permuted).kind is validate_gcm(g).kind


@given(st.lists(st.lists(st.sampled_from([0, -1]), min_size=4, max_size=4), min_size=4, max_size=4))
def test_random_simply_laced_symmetrizer_is_identity(rows):
    n = 4
    m = [[2 if i == j else (rows[min(i, j)][max(i, j)]) for j in range(n)] for i in range(n)]
    assert symmetrizer(Gcm(tuple(map(tuple, m)))) == (1,) * n


def test_json_round_trip():
    g = named_gcm("A3~")
    assert gcm_from_json(g.to_json()) == g
    assert gcm_from_json({"name": "E10"}) == named_gcm("E10")
    assert gcm_from_json({"matrix": [[2, -1], [-1, 2]]}).entries == ((2, -1), (-1, 2))


def test_coloring_parse_and_check():
    c = Coloring.parse(["white", "w", "black", "+1"])
    assert c.signs == (WHITE, WHITE, BLACK, BLACK)
    assert Coloring.parse(["-1", "+1"]).to_json() == ["-1", "+1"]
    with pytest.raises(ValueError):
        Coloring.parse(["grey"])
    with pytest.raises(LengthMismatch):
        c.check(named_gcm("A2"))


def test_all_small_colorings_parse():
    for signs in itertools.product((-1, 1), repeat=3):
        assert Coloring.parse(list(signs)).signs == signs
