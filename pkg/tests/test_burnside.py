import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from monoburn.burnside import (
    BurnsideElement,
    basis_element,
    basis_of_class,
    convolve_spectra,
    decompose_fibred,
    disjoint_union_fibred,
    element_from_mark_vector,
    find_units,
    identity_fibred,
    is_unit,
    mark,
    mark_matrix,
    mark_spectrum,
    mark_vector,
    monomial_tensor_oracle,
    one,
    standard_fibred,
    tensor_fibred,
    unit_inverse,
    zero,
)
from monoburn.groups import GroupError, all_subgroups, catalog_group, full_subgroup, trivial_subgroup
from monoburn.posets import fibred_to_monomial, monomial_set_to_fibred
from monoburn.randgen import random_element, random_monomial_gset
from monoburn.subchars import Subcharacter, all_characters, subchar_table, trivial_character


def t_s3():
    return subchar_table(catalog_group("S3"), 2)


def test_zero_and_identity():
    t = t_s3()
    x = basis_of_class(t, 0)
    assert x + (-x) == zero(t)
    assert one(t) * x == x
    assert zero(t).is_zero()


def test_basis_of_conjugate_subchars_is_equal():
    G = catalog_group("S3")
    t = subchar_table(G, 2)
    U = next(s for s in all_subgroups(G) if len(s.members) == 2)
    ch = all_characters(U, 2)[1]
    from monoburn.subchars import conj_subchar
    sc = Subcharacter(U, ch)
    for g in G.elements():
        assert basis_element(t, sc) == basis_element(t, conj_subchar(g, sc))


def test_identity_is_full_group_trivial_class():
    t = t_s3()
    i = t.one_index()
    sc = t.classes[i]
    assert len(sc.subgroup.members) == 6
    assert sc.character.is_trivial()


def test_c2_sign_squares_to_trivial():
    t = subchar_table(catalog_group("C2"), 2)
    # classes: ({1},1), (C2,1), (C2,sgn) in table order
    sgn = basis_of_class(t, 2)
    assert sgn * sgn == basis_of_class(t, 1)


def test_c2_free_squares_to_twice_free():
    t = subchar_table(catalog_group("C2"), 2)
    free = basis_of_class(t, 0)
    assert free * free == free.scale(2)


@pytest.mark.parametrize("name,n", [("C2", 1), ("C2", 2), ("C4", 2),
                                    ("S3", 2), ("S3", 3), ("D8", 2), ("Q8", 2)])
def test_product_matches_fibred_oracle(name, n):
    t = subchar_table(catalog_group(name), n)
    for i in range(len(t)):
        for j in range(len(t)):
            assert (basis_of_class(t, i) * basis_of_class(t, j)
                    == monomial_tensor_oracle(t, i, j))


@pytest.mark.parametrize("name,n", [("C2", 2), ("S3", 2), ("C4", 4)])
def test_ring_axioms_on_all_basis_triples(name, n):
    t = subchar_table(catalog_group(name), n)
    k = len(t)
    basis = [basis_of_class(t, i) for i in range(k)]
    for a in basis:
        assert one(t) * a == a
        for b in basis:
            assert a * b == b * a
    for a, b, c in itertools.product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)


coeff_lists = st.lists(st.integers(min_value=-4, max_value=4),
                       min_size=6, max_size=6)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_module_and_distributivity_laws(ca, cb, cc):
    t = t_s3()
    a = BurnsideElement(t, dict(enumerate(ca)))
    b = BurnsideElement(t, dict(enumerate(cb)))
    c = BurnsideElement(t, dict(enumerate(cc)))
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == zero(t)


# -- fibred sets --------------------------------------------------------------


def test_identity_fibred_decomposes_to_one():
    for name, n in [("C2", 2), ("S3", 3), ("C4", 4)]:
        t = subchar_table(catalog_group(name), n)
        assert decompose_fibred(identity_fibred(t.group, n), t) == one(t)


def test_standard_fibred_size_and_class():
    for name, n in [("C2", 2), ("S3", 2), ("D8", 2)]:
        t = subchar_table(catalog_group(name), n)
        for i, sc in enumerate(t.classes):
            S = standard_fibred(t, sc)
            assert S.size == n * (t.group.order // len(sc.subgroup.members))
            assert decompose_fibred(S, t) == basis_of_class(t, i)


def test_tensor_with_identity_is_isomorphic():
    t = subchar_table(catalog_group("S3"), 2)
    E = identity_fibred(t.group, 2)
    for i in range(len(t)):
        S = standard_fibred(t, t.classes[i])
        assert decompose_fibred(tensor_fibred(S, E), t) == basis_of_class(t, i)


def test_fibred_monomial_round_trip():
    rng = random.Random(17)
    G = catalog_group("S3")
    for _ in range(10):
        X = random_monomial_gset(G, 2, rng, max_points=5)
        S = monomial_set_to_fibred(X)
        assert S.size == 2 * X.size
        Y = fibred_to_monomial(S)
        S2 = monomial_set_to_fibred(Y)
        assert decompose_fibred(S, ) == decompose_fibred(S2)


def test_disjoint_union_fibred_adds():
    t = subchar_table(catalog_group("C4"), 2)
    S = standard_fibred(t, t.classes[0])
    T = standard_fibred(t, t.classes[1])
    assert (decompose_fibred(disjoint_union_fibred(S, T), t)
            == basis_of_class(t, 0) + basis_of_class(t, 1))


# -- marks --------------------------------------------------------------------


def test_mark_at_bottom_counts_cosets():
    G = catalog_group("S3")
    t = subchar_table(G, 2)
    bottom = Subcharacter(trivial_subgroup(G),
                          trivial_character(trivial_subgroup(G), 2))
    for j, sc in enumerate(t.classes):
        expected = G.order // len(sc.subgroup.members)
        assert mark(t, bottom, basis_of_class(t, j)) == expected


def test_mark_top_identity():
    t = t_s3()
    top = t.classes[t.one_index()]
    assert mark(t, top, one(t)) == 1


def test_c2_mark_values_from_spec_examples():
    t = subchar_table(catalog_group("C2"), 2)
    sgn_class = t.classes[2]
    triv_class = t.classes[1]
    sgn = basis_of_class(t, 2)
    assert mark(t, sgn_class, sgn) == 1
    assert mark(t, triv_class, sgn) == 0


@pytest.mark.parametrize("name,n", [("C2", 2), ("S3", 2), ("D8", 2), ("Q8", 4)])
def test_mark_matrix_upper_triangular_positive_diagonal(name, n):
    t = subchar_table(catalog_group(name), n)
    M = mark_matrix(t)
    for i in range(len(t)):
        assert M[i][i] > 0
        for j in range(i):
            assert M[i][j] == 0


def test_mark_vector_injective():
    t = t_s3()
    rng = random.Random(3)
    for _ in range(40):
        a = random_element(t, rng, bound=3)
        b = random_element(t, rng, bound=3)
        assert (mark_vector(a) == mark_vector(b)) == (a == b)
        assert element_from_mark_vector(t, mark_vector(a)) == a


def test_mark_additive():
    t = t_s3()
    rng = random.Random(5)
    for _ in range(20):
        a = random_element(t, rng, bound=3)
        b = random_element(t, rng, bound=3)
        va, vb, vs = mark_vector(a), mark_vector(b), mark_vector(a + b)
        assert all(x + y == z for x, y, z in zip(va, vb, vs))


def test_mark_spectrum_is_ring_homomorphism():
    # products of spectra convolve in the group ring of Hom(U, C); this is
    # the correct multiplicative form of the mark homomorphism for C != 1
    for name, n in [("C2", 2), ("S3", 2), ("C4", 4)]:
        G = catalog_group(name)
        t = subchar_table(G, n)
        rng = random.Random(11)
        subs = all_subgroups(G)
        for _ in range(25):
            a = random_element(t, rng, bound=2)
            b = random_element(t, rng, bound=2)
            U = subs[rng.randrange(len(subs))]
            conv = convolve_spectra(n, mark_spectrum(a, U), mark_spectrum(b, U))
            sab = mark_spectrum(a * b, U)
            for key in set(conv) | set(sab):
                assert conv.get(key, 0) == sab.get(key, 0)
        # identity spectrum is the delta at the trivial character
        for U in subs:
            spec = mark_spectrum(one(t), U)
            for vals, count in spec.items():
                assert count == (1 if not any(vals) else 0)


def test_pointwise_mark_product_fails_for_nontrivial_c():
    # documented spec defect: single counting marks are not multiplicative
    # once C is nontrivial; the spectrum convolution above is the fix
    t = subchar_table(catalog_group("C2"), 2)
    sgn = basis_of_class(t, 2)
    va = mark_vector(sgn)
    vsq = mark_vector(sgn * sgn)
    assert [x * x for x in va] != list(vsq)


def test_pointwise_mark_product_holds_for_trivial_c():
    t = subchar_table(catalog_group("S3"), 1)
    rng = random.Random(23)
    for _ in range(50):
        a = random_element(t, rng, bound=3)
        b = random_element(t, rng, bound=3)
        va, vb, vm = mark_vector(a), mark_vector(b), mark_vector(a * b)
        assert all(x * y == z for x, y, z in zip(va, vb, vm))


# -- units ---------------------------------------------------------------------


def test_minus_one_is_always_a_unit():
    for name, n in [("C2", 1), ("S3", 2), ("C4", 3)]:
        t = subchar_table(catalog_group(name), n)
        u = -one(t)
        assert is_unit(u)
        assert unit_inverse(u) == u
        assert u * u == one(t)


def test_trivial_group_units():
    t = subchar_table(catalog_group("C1"), 1)
    units = find_units(t, 2)
    assert sorted(str(u) for u in units) == sorted([str(one(t)), str(-one(t))])


def test_c2_trivial_coefficient_unit():
    t = subchar_table(catalog_group("C2"), 1)
    units = find_units(t, 2)
    # [C2,1] - [1,1] squares to the identity
    cand = basis_of_class(t, 1) - basis_of_class(t, 0)
    assert cand * cand == one(t)
    assert any(u == cand for u in units)
    assert all(u * unit_inverse(u) == one(t) for u in units)


def test_c2_sign_class_is_unit_mod2():
    t = subchar_table(catalog_group("C2"), 2)
    sgn = basis_of_class(t, 2)
    assert is_unit(sgn)
    assert unit_inverse(sgn) == sgn


def test_non_unit_detected():
    t = t_s3()
    assert not is_unit(basis_of_class(t, 0))
    with pytest.raises(GroupError):
        unit_inverse(basis_of_class(t, 0))


def test_foreign_table_rejected():
    a = one(subchar_table(catalog_group("C2"), 2))
    b = one(subchar_table(catalog_group("C3"), 2))
    with pytest.raises(GroupError):
        a + b
