import itertools
import random

import pytest

from monoburn.burnside import BurnsideElement, is_unit, mark_vector, one, unit_inverse, zero
from monoburn.groups import (
    GroupError,
    Subgroup,
    all_subgroups,
    catalog_group,
    direct_product,
    full_subgroup,
    trivial_subgroup,
)
from monoburn.lefschetz import lefschetz, realize
from monoburn.posets import (
    MonomialPoset,
    euler_char,
    find_isomorphism,
    fixed_subposet,
    point_poset,
    product,
)
from monoburn.randgen import (
    random_biset,
    random_element,
    random_monomial_poset,
)
from monoburn.subchars import Subcharacter, all_characters, subchar_table
from monoburn.tensor_induction import (
    MonomialBiset,
    alternative_left_reps,
    biset_disjoint_union,
    biset_from_actions,
    bisets_isomorphic,
    compose_bisets,
    composition_law_report,
    empty_biset,
    identity_biset,
    nonfree_counterexample,
    orbit_pairing_bijection,
    tensor_induce_marks,
    tensor_induce_poset,
    tensor_induce_ring,
    tensor_induce_unit_pairing,
)

from oracle_ordinary import brute_equivariant_maps, brute_fixed_euler

S3 = catalog_group("S3")
C2 = catalog_group("C2")
C1 = catalog_group("C1")
C4 = catalog_group("C4")


def regular_biset(G, H, n):
    """H as a (G, H)-biset for G = 1, or generally G embedded trivially."""
    left = tuple(tuple(range(H.order)) for _ in G.elements())
    right = tuple(tuple(H.mul_table[u][h] for h in H.elements())
                  for u in range(H.order))
    return biset_from_actions(G, H, n, H.order, left, right)


# -- biset basics ------------------------------------------------------------------


def test_identity_biset_is_left_and_right_free():
    B = identity_biset(S3, 2)
    assert B.left_free()
    e = S3.identity
    assert all(B.right_act(u, h) != u
               for h in S3.elements() if h != e for u in range(B.size))


def test_empty_biset_is_left_free_vacuously():
    assert empty_biset(S3, C2, 2).left_free()


def test_projection_biset_is_not_left_free():
    # H acting on K = H/N through the projection: not free when N != 1
    H = direct_product(C2, C2)
    left = tuple(tuple(C2.mul_table[H.unpair(h)[1]][v] for v in range(2))
                 for h in H.elements())
    right = tuple(tuple(C2.mul_table[v][k] for k in C2.elements())
                  for v in range(2))
    V = biset_from_actions(H, C2, 2, 2, left, right)
    assert not V.left_free()


def test_compose_with_identity_is_isomorphic():
    rng = random.Random(60)
    for _ in range(5):
        U = random_biset(S3, C2, 2, rng, max_points=4)
        I = identity_biset(C2, 2)
        W = compose_bisets(U, I)
        assert W.left is S3 and W.right is C2
        assert bisets_isomorphic(W, U) or find_isomorphism(W.carrier, U.carrier) is None
        # carriers over distinct product-group instances cannot be compared
        # directly; sizes and ring images must agree instead
        assert W.size == U.size
        t = subchar_table(S3, 2)
        a = random_element(t, rng, bound=1, max_terms=1)
        assert tensor_induce_ring(W, a) == tensor_induce_ring(U, a)


def test_trivial_cocycles_compose_to_plain_product():
    # with trivial functors the carrier is all of U x_H V
    U = regular_biset(C1, C2, 2)
    I = identity_biset(C2, 2)
    W = compose_bisets(U, I)
    assert W.size == (U.size * I.size) // C2.order
    assert all(c == 0 for c in W.carrier.cocycle.values())


def test_compose_well_defined_with_nontrivial_cocycles():
    rng = random.Random(61)
    for _ in range(8):
        U = random_biset(S3, C2, 2, rng, max_points=4)
        V = random_biset(C2, C4, 2, rng, max_points=4)
        W = compose_bisets(U, V)  # internal consistency assert must not fire
        assert W.validate() is None


def test_orbit_pairing_bijection_left_free():
    rng = random.Random(62)
    for _ in range(5):
        U = random_biset(S3, C2, 2, rng, max_points=4)
        V = identity_biset(C2, 2)
        images, total = orbit_pairing_bijection(U, V)
        assert sorted(images) == list(range(total))


# -- tensor induction of posets ------------------------------------------------------


def test_t_of_point_is_point_for_stabilizer_trivial_cocycles():
    rng = random.Random(63)
    for _ in range(6):
        B = random_biset(S3, C2, 2, rng, max_points=4, gauge_trivial=True)
        T = tensor_induce_poset(B, point_poset(S3, 2)).poset
        assert find_isomorphism(T, point_poset(C2, 2)) is not None


def test_t_of_point_can_be_empty_for_twisted_cocycles():
    # a nontrivial stabilizer character forbids every map to the point:
    # the scope boundary of the product and unit laws
    sgn = next(ch for ch in all_characters(full_subgroup(C2), 2)
               if not ch.is_trivial())
    tw = identity_biset(C2, 2, twist=sgn)
    T = tensor_induce_poset(tw, point_poset(C2, 2)).poset
    assert T.size == 1  # identity biset is left free: the map survives
    # but its vertex character is twisted, so T(point) != point
    assert find_isomorphism(T, point_poset(C2, 2)) is None


def test_t_of_empty_biset_is_constant_point():
    rng = random.Random(64)
    for _ in range(5):
        X = random_monomial_poset(S3, 2, rng, max_points=4)
        T = tensor_induce_poset(empty_biset(S3, C2, 2), X).poset
        assert find_isomorphism(T, point_poset(C2, 2)) is not None


def test_t_identity_biset_is_identity_functor():
    rng = random.Random(65)
    for _ in range(6):
        X = random_monomial_poset(S3, 2, rng, max_points=3)
        T = tensor_induce_poset(identity_biset(S3, 2), X).poset
        assert find_isomorphism(T, X) is not None


def test_t_respects_products_for_left_free_gauge_trivial_bisets():
    rng = random.Random(66)
    for _ in range(5):
        B = random_biset(C2, C2, 2, rng, max_points=4,
                         gauge_trivial=True, left_free=True)
        X = random_monomial_poset(C2, 2, rng, max_points=2)
        Y = random_monomial_poset(C2, 2, rng, max_points=2)
        lhs = tensor_induce_poset(B, product(X, Y)).poset
        rhs = product(tensor_induce_poset(B, X).poset,
                      tensor_induce_poset(B, Y).poset)
        assert find_isomorphism(lhs, rhs) is not None


def test_product_law_fails_without_left_freeness():
    # a fixed biset point with full left stabilizer and trivial cocycle:
    # the admissibility condition on a product of posets splits differently
    # than on the factors, so the product law needs left-freeness
    B = biset_from_actions(C2, C2, 2, 1, ((0,), (0,)), ((0, 0),))
    sgn_point = MonomialPoset(C2, 2, ((True,),), ((0,), (0,)),
                              {(0, 0, 0): 0, (1, 0, 0): 1})
    lhs = tensor_induce_poset(B, product(sgn_point, sgn_point)).poset
    rhs = product(tensor_induce_poset(B, sgn_point).poset,
                  tensor_induce_poset(B, sgn_point).poset)
    assert lhs.size == 1 and rhs.size == 0
    t = subchar_table(C2, 2)
    a = lefschetz(sgn_point, t).element
    assert tensor_induce_ring(B, a * a) != (tensor_induce_ring(B, a)
                                            * tensor_induce_ring(B, a))


def test_representative_independence():
    rng = random.Random(67)
    for _ in range(8):
        B = random_biset(S3, C2, 2, rng, max_points=5)
        X = random_monomial_poset(S3, 2, rng, max_points=3)
        first = tensor_induce_poset(B, X).poset
        alt = alternative_left_reps(B)
        second = tensor_induce_poset(B, X, reps=alt).poset
        assert find_isomorphism(first, second) is not None


def test_tensor_output_always_validates():
    rng = random.Random(68)
    for _ in range(8):
        B = random_biset(S3, C2, 2, rng, max_points=4)
        X = random_monomial_poset(S3, 2, rng, max_points=3)
        assert tensor_induce_poset(B, X).poset.validate() is None


# -- tensor induction on the ring -----------------------------------------------------


def test_worked_value_t_of_two():
    # G = 1, H = C2, U = H regular, trivial cocycle, C = Z/2
    U = regular_biset(C1, C2, 2)
    t1 = subchar_table(C1, 2)
    tH = subchar_table(C2, 2)
    a = BurnsideElement(t1, {0: 2})
    out = tensor_induce_ring(U, a, check=True)
    assert out == BurnsideElement(tH, {tH.one_index(): 2, 0: 1})


def test_tensor_ring_preserves_identity_gauge_trivial():
    rng = random.Random(69)
    tG = subchar_table(S3, 2)
    tH = subchar_table(C2, 2)
    for _ in range(5):
        B = random_biset(S3, C2, 2, rng, max_points=4, gauge_trivial=True)
        assert tensor_induce_ring(B, one(tG)) == one(tH)


def test_tensor_ring_multiplicative_left_free_gauge_trivial():
    rng = random.Random(70)
    tG = subchar_table(C2, 2)
    for _ in range(6):
        B = random_biset(C2, C2, 2, rng, max_points=4,
                         gauge_trivial=True, left_free=True,
                         max_left_orbits=2)
        a = random_element(tG, rng, bound=1, max_terms=1)
        b = random_element(tG, rng, bound=1, max_terms=2)
        assert (tensor_induce_ring(B, a * b)
                == tensor_induce_ring(B, a) * tensor_induce_ring(B, b))


def test_tensor_ring_identity_map():
    rng = random.Random(71)
    tG = subchar_table(S3, 2)
    I = identity_biset(S3, 2)
    for _ in range(5):
        a = random_element(tG, rng, bound=2)
        assert tensor_induce_ring(I, a) == a


def test_twisted_identity_breaks_unitality_and_multiplicativity():
    # documented scope boundary: nontrivial stabilizer characters on the
    # biset cocycle make the tensor map fail the unit and product laws
    sgn = next(ch for ch in all_characters(full_subgroup(C2), 2)
               if not ch.is_trivial())
    tw = identity_biset(C2, 2, twist=sgn)
    t = subchar_table(C2, 2)
    img = tensor_induce_ring(tw, one(t))
    assert img != one(t)
    # the twist multiplies by the unit [C2, sgn]
    from monoburn.burnside import basis_of_class
    assert img == basis_of_class(t, 2)
    a = basis_of_class(t, 2)
    assert tensor_induce_ring(tw, a * a) != (tensor_induce_ring(tw, a)
                                             * tensor_induce_ring(tw, a))


def test_disjoint_union_law_general_cocycles():
    rng = random.Random(72)
    tG = subchar_table(C2, 2)
    for _ in range(6):
        U1 = random_biset(C2, C2, 2, rng, max_points=3)
        U2 = random_biset(C2, C2, 2, rng, max_points=3)
        a = random_element(tG, rng, bound=1, max_terms=2)
        lhs = tensor_induce_ring(biset_disjoint_union(U1, U2), a)
        rhs = tensor_induce_ring(U1, a) * tensor_induce_ring(U2, a)
        assert lhs == rhs


def test_disjoint_union_with_empty_multiplies_by_one():
    rng = random.Random(73)
    tG = subchar_table(S3, 2)
    tH = subchar_table(C2, 2)
    U = random_biset(S3, C2, 2, rng, max_points=3)
    E = empty_biset(S3, C2, 2)
    a = random_element(tG, rng, bound=1, max_terms=1)
    assert (tensor_induce_ring(biset_disjoint_union(U, E), a)
            == tensor_induce_ring(U, a) * one(tH))


def test_composition_law_left_free():
    rng = random.Random(74)
    for _ in range(4):
        U = random_biset(S3, C2, 2, rng, max_points=4)
        V = identity_biset(C2, 2)
        X = random_monomial_poset(S3, 2, rng, max_points=3)
        rep = composition_law_report(U, V, X)
        assert rep["poset_isomorphic"] and rep["ring_equal"]


def test_composition_law_chain_of_free_bisets():
    # G = 1, H = C2, K = C4 with free bisets
    U = regular_biset(C1, C2, 2)
    left = tuple(tuple(C4.mul_table[(2 * h) % 4][v] for v in range(4))
                 for h in C2.elements())  # C2 embeds as {0, 2} in C4
    right = tuple(tuple(C4.mul_table[v][k] for k in C4.elements())
                  for v in range(4))
    V = biset_from_actions(C2, C4, 2, 4, left, right)
    assert V.left_free()
    t1 = subchar_table(C1, 2)
    X = realize(t1, BurnsideElement(t1, {0: 2}))
    rep = composition_law_report(U, V, X)
    assert rep["poset_isomorphic"] and rep["ring_equal"]


def test_composition_law_requires_left_free():
    H = direct_product(C2, C2)
    left = tuple(tuple(C2.mul_table[H.unpair(h)[1]][v] for v in range(2))
                 for h in H.elements())
    right = tuple(tuple(C2.mul_table[v][k] for k in C2.elements())
                  for v in range(2))
    V = biset_from_actions(H, C2, 2, 2, left, right)
    U = identity_biset(C2, 2)
    with pytest.raises(GroupError):
        composition_law_report(V, V, point_poset(H, 2))


def test_units_map_to_units_and_pairing_is_bilinear():
    rng = random.Random(75)
    tG = subchar_table(C2, 2)
    B1 = random_biset(C2, C2, 2, rng, max_points=3,
                      gauge_trivial=True, left_free=True)
    B2 = random_biset(C2, C2, 2, rng, max_points=3,
                      gauge_trivial=True, left_free=True)
    u = -one(tG)
    img1 = tensor_induce_ring(B1, u)
    img2 = tensor_induce_ring(B2, u)
    assert is_unit(img1) and is_unit(img2)
    both = tensor_induce_unit_pairing([(B1, 1), (B2, 1)], u)
    assert both == img1 * img2
    inv = tensor_induce_unit_pairing([(B1, -1)], u)
    assert inv == unit_inverse(img1)
    # the union biset pairs to the product of the images
    union = tensor_induce_ring(biset_disjoint_union(B1, B2), u)
    assert union == both


# -- the ghost-side fixed point formula ------------------------------------------------


def _all_subchars(H, n):
    for K in all_subgroups(H):
        for theta in all_characters(K, n):
            yield K, theta


def test_ghost_formula_point_case():
    B = identity_biset(C2, 2)
    P = point_poset(C2, 2)
    T = tensor_induce_poset(B, P).poset
    for K, theta in _all_subchars(C2, 2):
        val = tensor_induce_marks(B, P, K, theta)
        assert val == euler_char(fixed_subposet(T, Subcharacter(K, theta)))
        assert val == (1 if theta.is_trivial() else 0)


def test_ghost_formula_worked_instance():
    U = regular_biset(C1, C2, 2)
    t1 = subchar_table(C1, 2)
    X = realize(t1, BurnsideElement(t1, {0: 2}))
    K = full_subgroup(C2)
    triv = all_characters(K, 2)[0]
    assert triv.is_trivial()
    assert tensor_induce_marks(U, X, K, triv) == 2


@pytest.mark.parametrize("seed", [80, 81, 82])
def test_ghost_formula_matches_direct_fixed_points(seed):
    rng = random.Random(seed)
    for _ in range(4):
        B = random_biset(S3, C2, 2, rng, max_points=4)
        X = random_monomial_poset(S3, 2, rng, max_points=3)
        T = tensor_induce_poset(B, X).poset
        for K, theta in _all_subchars(C2, 2):
            ghost = tensor_induce_marks(B, X, K, theta)
            direct = euler_char(fixed_subposet(T, Subcharacter(K, theta)))
            assert ghost == direct


# -- the non-free counterexample --------------------------------------------------------


def test_nonfree_counterexample_found():
    rep = nonfree_counterexample(n=2)
    assert rep["found"], rep.get("diagnostic")
    assert rep["left_free_V"] is False
    assert rep["witness"]["size"] >= 1


# -- trivial coefficients against the ordinary brute oracle ------------------------------


def test_trivial_c_tensor_agrees_with_brute_force():
    rng = random.Random(83)
    t1H = subchar_table(C2, 1)
    for _ in range(4):
        B = random_biset(C2, C2, 1, rng, max_points=4)
        X = random_monomial_poset(C2, 1, rng, max_points=3)
        T = tensor_induce_poset(B, X).poset
        # independent: enumerate all equivariant maps by brute force
        left_tables = [[B.left_act(g, u) for u in range(B.size)]
                       for g in C2.elements()]
        maps = brute_equivariant_maps(left_tables, C2.order, B.size,
                                      X.act, X.size)
        assert sorted(maps) == sorted(T_map for T_map in
                                      tensor_induce_poset(B, X).maps)
        # marks of the output against brute fixed-point counts
        vec = mark_vector(lefschetz(T, t1H).element)
        brute = tuple(brute_fixed_euler(T.leq, T.act, sc.subgroup.members)
                      for sc in t1H.classes)
        assert vec == brute


def test_realization_independence_checked_path():
    rng = random.Random(84)
    tG = subchar_table(C2, 2)
    for _ in range(4):
        B = random_biset(C2, C2, 2, rng, max_points=3)
        a = random_element(tG, rng, bound=1, max_terms=2)
        tensor_induce_ring(B, a, check=True)  # must not raise
