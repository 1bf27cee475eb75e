"""Named verification suites: one executable check per library invariant."""

from __future__ import annotations

import itertools
import random

from .burnside import (
    basis_of_class,
    convolve_spectra,
    decompose_fibred,
    mark_matrix,
    mark_spectrum,
    mark_vector,
    monomial_tensor_oracle,
    one,
)
from .groups import GSet, Subgroup, all_subgroups, catalog_group, conjugate_subgroup, double_cosets
from .lefschetz import (
    equal_by_marks,
    fixed_point_marks,
    induce_element,
    lefschetz,
    lefschetz_by_vertices,
    quillen_report,
    realize,
    reduced_lefschetz,
)
from .posets import (
    disjoint_union,
    euler_char,
    find_isomorphism,
    fixed_subposet,
    five_point_poset,
    hom_count,
    induce,
    join,
    monomial_set_to_fibred,
    opposite,
    point_poset,
    product,
    restrict,
)
from .randgen import (
    random_biset,
    random_element,
    random_monomial_gset,
    random_monomial_poset,
    random_morphism,
    random_subgroup,
)
from .subchars import conj_subchar, leq_subchar, subchar_table
from .tensor_induction import (
    alternative_left_reps,
    identity_biset,
    nonfree_counterexample,
    tensor_induce_poset,
    tensor_induce_ring,
)


class SuiteResult:
    def __init__(self, name, seed):
        self.name = name
        self.seed = seed
        self.cases = 0
        self.failures = []

    def check(self, ok, detail):
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    @property
    def passed(self):
        return not self.failures

    def as_dict(self):
        return {"suite": self.name, "seed": self.seed, "cases": self.cases,
                "failures": self.failures[:20], "passed": self.passed}


def _suite(name):
    def wrap(fn):
        _SUITES[name] = fn
        return fn
    return wrap


_SUITES = {}


# -- group_core invariants ---------------------------------------------------

@_suite("double-coset-partition")
def _double_coset_partition(group, n, seed):
    res = SuiteResult("double-coset-partition", seed)
    rng = random.Random(seed)
    subs = all_subgroups(group)
    for _ in range(20):
        U = subs[rng.randrange(len(subs))]
        V = subs[rng.randrange(len(subs))]
        covered = set()
        total = 0
        for g in double_cosets(U, V):
            coset = {group.mul_table[group.mul_table[u][g]][v]
                     for u in U.members for v in V.members}
            res.check(not (coset & covered), f"overlap at {U}, {V}, rep {g}")
            covered |= coset
            total += len(coset)
        res.check(total == group.order, f"sizes sum to {total}")
    return res


@_suite("conjugation-composition")
def _conjugation_composition(group, n, seed):
    res = SuiteResult("conjugation-composition", seed)
    rng = random.Random(seed)
    subs = all_subgroups(group)
    for _ in range(20):
        U = subs[rng.randrange(len(subs))]
        g = rng.randrange(group.order)
        h = rng.randrange(group.order)
        lhs = conjugate_subgroup(g, conjugate_subgroup(h, U))
        rhs = conjugate_subgroup(group.mul_table[g][h], U)
        res.check(lhs.members == rhs.members, f"conj fails at {g},{h}")
    return res


@_suite("orbit-stabilizer")
def _orbit_stabilizer(group, n, seed):
    res = SuiteResult("orbit-stabilizer", seed)
    rng = random.Random(seed)
    from .randgen import random_gset
    for _ in range(10):
        gs = random_gset(group, rng, max_points=6)
        for orb in gs.orbits():
            stab = gs.stabilizer(orb[0])
            res.check(len(orb) * len(stab.members) == group.order,
                      f"orbit-stabilizer fails on orbit {orb}")
    return res


# -- subchar invariants -------------------------------------------------------

@_suite("subchar-conjugation")
def _subchar_conjugation(group, n, seed):
    res = SuiteResult("subchar-conjugation", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(30):
        sc = table.classes[rng.randrange(len(table))]
        g = rng.randrange(group.order)
        h = rng.randrange(group.order)
        lhs = conj_subchar(g, conj_subchar(h, sc))
        rhs = conj_subchar(group.mul_table[g][h], sc)
        res.check(lhs.key() == rhs.key(), f"conjugation action fails at {g},{h}")
        other = table.classes[rng.randrange(len(table))]
        if leq_subchar(sc, other):
            res.check(leq_subchar(conj_subchar(g, sc), conj_subchar(g, other)),
                      "conjugation does not preserve the order")
    return res


@_suite("subchar-order")
def _subchar_order(group, n, seed):
    res = SuiteResult("subchar-order", seed)
    table = subchar_table(group, n)
    scs = table.classes
    for a in scs:
        res.check(leq_subchar(a, a), "not reflexive")
        for b in scs:
            if leq_subchar(a, b) and leq_subchar(b, a):
                res.check(a.key() == b.key(), "not antisymmetric")
            for c in scs:
                if leq_subchar(a, b) and leq_subchar(b, c):
                    res.check(leq_subchar(a, c), "not transitive")
    return res


@_suite("subchar-class-size")
def _subchar_class_size(group, n, seed):
    res = SuiteResult("subchar-class-size", seed)
    table = subchar_table(group, n)
    for i in range(len(table)):
        res.check(table.orbit_sizes[i] * len(table.normalizers[i].members)
                  == group.order, f"orbit size law fails at class {i}")
    return res


# -- burnside invariants ------------------------------------------------------

@_suite("ring-product-oracle")
def _ring_product_oracle(group, n, seed):
    res = SuiteResult("ring-product-oracle", seed)
    table = subchar_table(group, n)
    for i in range(len(table)):
        for j in range(len(table)):
            lhs = basis_of_class(table, i) * basis_of_class(table, j)
            rhs = monomial_tensor_oracle(table, i, j)
            res.check(lhs == rhs, f"product oracle fails at ({i},{j})")
    return res


@_suite("ring-axioms")
def _ring_axioms(group, n, seed):
    res = SuiteResult("ring-axioms", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    ident = one(table)
    k = len(table)
    if k <= 20:
        for i in range(k):
            a = basis_of_class(table, i)
            res.check(ident * a == a, f"identity law fails at {i}")
            for j in range(k):
                b = basis_of_class(table, j)
                res.check(a * b == b * a, f"commutativity fails at ({i},{j})")
        triples = itertools.product(range(k), repeat=3) if k <= 8 else \
            ((rng.randrange(k), rng.randrange(k), rng.randrange(k))
             for _ in range(200))
        for (i, j, l) in triples:
            a, b, c = (basis_of_class(table, t) for t in (i, j, l))
            res.check((a * b) * c == a * (b * c),
                      f"associativity fails at ({i},{j},{l})")
    return res


@_suite("mark-homomorphism")
def _mark_homomorphism(group, n, seed):
    """Spectrum form of the mark homomorphism.

    For each subgroup U the full character spectrum of marks at U is
    multiplicative under convolution in the group ring of Hom(U, Z/n);
    pointwise products of single marks only work for trivial C.
    """
    res = SuiteResult("mark-homomorphism", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    subs = all_subgroups(group)
    for _ in range(60):
        a = random_element(table, rng, bound=3)
        b = random_element(table, rng, bound=3)
        U = subs[rng.randrange(len(subs))]
        sa = mark_spectrum(a, U)
        sb = mark_spectrum(b, U)
        sab = mark_spectrum(a * b, U)
        conv = convolve_spectra(n, sa, sb)
        ok = all(conv.get(k, 0) == sab.get(k, 0)
                 for k in set(conv) | set(sab))
        res.check(ok, f"spectrum at U={list(U.members)} not multiplicative")
    return res


@_suite("mark-triangular")
def _mark_triangular(group, n, seed):
    res = SuiteResult("mark-triangular", seed)
    table = subchar_table(group, n)
    M = mark_matrix(table)
    for i in range(len(table)):
        res.check(M[i][i] > 0, f"diagonal not positive at {i}")
        for j in range(i):
            res.check(M[i][j] == 0, f"lower entry nonzero at ({i},{j})")
    return res


@_suite("mark-injective")
def _mark_injective(group, n, seed):
    res = SuiteResult("mark-injective", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(50):
        a = random_element(table, rng, bound=2)
        b = random_element(table, rng, bound=2)
        res.check((mark_vector(a) == mark_vector(b)) == (a == b),
                  "mark vector does not separate elements")
    return res


# -- monomial poset invariants --------------------------------------------------

@_suite("chain-stabilizer")
def _chain_stabilizer(group, n, seed):
    res = SuiteResult("chain-stabilizer", seed)
    rng = random.Random(seed)
    from .posets import all_chains, max_chain_length
    for _ in range(15):
        X = random_monomial_poset(group, n, rng, max_points=5)
        for length in range(max_chain_length(X) + 1):
            for ch in all_chains(X, length):
                for g in group.elements():
                    moved = tuple(X.act[g][v] for v in ch)
                    if set(moved) == set(ch):
                        res.check(moved == ch,
                                  f"setwise chain stabilizer moved {ch}")
    return res


@_suite("restriction-compatibility")
def _restriction_compat(group, n, seed):
    res = SuiteResult("restriction-compatibility", seed)
    rng = random.Random(seed)
    for _ in range(15):
        X = random_monomial_poset(group, n, rng, max_points=5)
        for x in range(X.size):
            for y in range(X.size):
                if not X.leq[x][y] or x == y:
                    continue
                for g in group.elements():
                    if X.act[g][x] == x and X.act[g][y] == y:
                        res.check(X.cocycle[(g, x, x)] == X.cocycle[(g, y, y)],
                                  f"comparable vertex characters differ at ({x},{y})")
    return res


@_suite("induction-commutes")
def _induction_commutes(group, n, seed):
    res = SuiteResult("induction-commutes", seed)
    rng = random.Random(seed)
    from .posets import trivial_monomial_poset
    subs = [U for U in all_subgroups(group) if len(U.members) < group.order]
    for _ in range(10):
        H = subs[rng.randrange(len(subs))] if subs else None
        if H is None:
            break
        local = H.as_group()
        Xh = random_monomial_poset(local, n, rng, max_points=3)
        plain = trivial_monomial_poset(local, n, Xh.leq, Xh.act)
        lhs = induce(group, H, plain)
        rhs_plain = induce(group, H, Xh)
        triv = trivial_monomial_poset(group, n, rhs_plain.leq, rhs_plain.act)
        res.check(find_isomorphism(lhs, triv) is not None,
                  "trivial-cocycle square does not commute")
    return res


@_suite("adjunction-cardinality")
def _adjunction(group, n, seed):
    res = SuiteResult("adjunction-cardinality", seed)
    rng = random.Random(seed)
    subs = [U for U in all_subgroups(group) if 1 < len(U.members) < group.order]
    if not subs:
        subs = all_subgroups(group)
    for _ in range(10):
        H = subs[rng.randrange(len(subs))]
        local = H.as_group()
        X = random_monomial_poset(local, n, rng, max_points=3)
        Y = random_monomial_poset(group, n, rng, max_points=5)
        lhs = hom_count(induce(group, H, X), Y)
        rhs = hom_count(X, restrict(Y, H))
        res.check(lhs == rhs, f"adjunction counts differ: {lhs} vs {rhs}")
    return res


@_suite("constructions-validate")
def _constructions_validate(group, n, seed):
    res = SuiteResult("constructions-validate", seed)
    rng = random.Random(seed)
    for _ in range(10):
        X = random_monomial_poset(group, n, rng, max_points=4)
        Y = random_monomial_poset(group, n, rng, max_points=4)
        for Z in (disjoint_union(X, Y), product(X, Y), opposite(X)):
            res.check(Z.validate() is None, "construction fails validation")
        mp = random_morphism(group, n, rng, max_points=3)
        res.check(join(mp).validate() is None, "join fails validation")
    return res


# -- lefschetz invariants -------------------------------------------------------

@_suite("lefschetz-discrete")
def _lefschetz_discrete(group, n, seed):
    res = SuiteResult("lefschetz-discrete", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(20):
        X = random_monomial_gset(group, n, rng, max_points=6)
        lhs = lefschetz(X, table).element
        rhs = decompose_fibred(monomial_set_to_fibred(X), table)
        res.check(lhs == rhs, "discrete invariant differs from the fibred class")
    return res


@_suite("lefschetz-additivity")
def _lefschetz_additivity(group, n, seed):
    res = SuiteResult("lefschetz-additivity", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(20):
        X = random_monomial_poset(group, n, rng, max_points=4)
        Y = random_monomial_poset(group, n, rng, max_points=4)
        lhs = lefschetz(disjoint_union(X, Y), table).element
        rhs = lefschetz(X, table).element + lefschetz(Y, table).element
        res.check(lhs == rhs, "additivity fails")
    return res


@_suite("lefschetz-multiplicativity")
def _lefschetz_multiplicativity(group, n, seed):
    res = SuiteResult("lefschetz-multiplicativity", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(15):
        X = random_monomial_poset(group, n, rng, max_points=4)
        Y = random_monomial_poset(group, n, rng, max_points=4)
        lhs = lefschetz(product(X, Y), table).element
        rhs = lefschetz(X, table).element * lefschetz(Y, table).element
        res.check(lhs == rhs, "multiplicativity fails")
    return res


@_suite("opposite-invariance")
def _opposite_invariance(group, n, seed):
    res = SuiteResult("opposite-invariance", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(20):
        X = random_monomial_poset(group, n, rng, max_points=5)
        res.check(lefschetz(X, table).element
                  == lefschetz(opposite(X), table).element,
                  "opposite changes the invariant")
    return res


@_suite("join-absorption")
def _join_absorption(group, n, seed):
    res = SuiteResult("join-absorption", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(15):
        mp = random_morphism(group, n, rng, max_points=3)
        res.check(lefschetz(join(mp), table).element
                  == lefschetz(mp.target, table).element,
                  "join invariant differs from the target invariant")
    return res


@_suite("mark-consistency")
def _mark_consistency(group, n, seed):
    res = SuiteResult("mark-consistency", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(15):
        X = random_monomial_poset(group, n, rng, max_points=5)
        res.check(mark_vector(lefschetz(X, table).element)
                  == fixed_point_marks(X, table),
                  "marks of the invariant differ from fixed-subposet chi")
    return res


@_suite("vertex-recursion")
def _vertex_recursion(group, n, seed):
    res = SuiteResult("vertex-recursion", seed)
    rng = random.Random(seed)
    table = subchar_table(group, n)
    for _ in range(15):
        X = random_monomial_poset(group, n, rng, max_points=5)
        res.check(lefschetz(X, table).element == lefschetz_by_vertices(X, table),
                  "vertex recursion disagrees with the chain sum")
    return res


# -- tensor induction invariants --------------------------------------------------

@_suite("tensor-product-iso")
def _tensor_product_iso(group, n, seed):
    res = SuiteResult("tensor-product-iso", seed)
    rng = random.Random(seed)
    H = catalog_group("C2")
    for _ in range(6):
        B = random_biset(group, H, n, rng, max_points=4,
                         gauge_trivial=True, left_free=True,
                         max_left_orbits=2)
        X = random_monomial_poset(group, n, rng, max_points=2)
        Y = random_monomial_poset(group, n, rng, max_points=2)
        lhs = tensor_induce_poset(B, product(X, Y)).poset
        rhs = product(tensor_induce_poset(B, X).poset,
                      tensor_induce_poset(B, Y).poset)
        res.check(find_isomorphism(lhs, rhs) is not None,
                  "tensor induction does not respect products")
    return res


@_suite("tensor-multiplicative")
def _tensor_multiplicative(group, n, seed):
    res = SuiteResult("tensor-multiplicative", seed)
    rng = random.Random(seed)
    H = catalog_group("C2")
    table = subchar_table(group, n)
    for _ in range(4):
        B = random_biset(group, H, n, rng, max_points=3,
                         gauge_trivial=True, left_free=True,
                         max_left_orbits=1)
        a = random_element(table, rng, bound=1, max_terms=1)
        b = random_element(table, rng, bound=1, max_terms=1)
        lhs = tensor_induce_ring(B, a * b)
        rhs = tensor_induce_ring(B, a) * tensor_induce_ring(B, b)
        res.check(lhs == rhs, "tensor induction is not multiplicative")
        res.check(tensor_induce_ring(B, one(table))
                  == one(subchar_table(H, n)),
                  "tensor induction does not preserve the identity")
    return res


@_suite("tensor-representative-independence")
def _tensor_rep_independence(group, n, seed):
    res = SuiteResult("tensor-representative-independence", seed)
    rng = random.Random(seed)
    H = catalog_group("C2")
    for _ in range(6):
        B = random_biset(group, H, n, rng, max_points=4)
        X = random_monomial_poset(group, n, rng, max_points=3)
        first = tensor_induce_poset(B, X).poset
        second = tensor_induce_poset(B, X, reps=alternative_left_reps(B)).poset
        res.check(find_isomorphism(first, second) is not None,
                  "representative choice changes the result")
    return res


@_suite("tensor-trivial-c")
def _tensor_trivial_c(group, n, seed):
    res = SuiteResult("tensor-trivial-c", seed)
    rng = random.Random(seed)
    H = catalog_group("C2")
    table1 = subchar_table(group, 1)
    for _ in range(5):
        B = random_biset(group, H, 1, rng, max_points=4)
        X = random_monomial_poset(group, 1, rng, max_points=3)
        T = tensor_induce_poset(B, X).poset
        # with n = 1 marks are plain fixed-point counts: compare directly
        vec = fixed_point_marks(T, subchar_table(H, 1))
        res.check(mark_vector(lefschetz(T, subchar_table(H, 1)).element) == vec,
                  "trivial-C tensor induction disagrees with fixed points")
    return res


@_suite("tensor-composition-bijection")
def _tensor_composition_bijection(group, n, seed):
    res = SuiteResult("tensor-composition-bijection", seed)
    rng = random.Random(seed)
    from .tensor_induction import orbit_pairing_bijection
    H = catalog_group("C2")
    K = catalog_group("C2")
    for _ in range(5):
        U = random_biset(group, H, n, rng, max_points=4)
        V = identity_biset(H, n)
        images, total = orbit_pairing_bijection(U, V)
        res.check(sorted(images) == list(range(total)),
                  "orbit pairing is not a bijection for a left-free biset")
    return res


@_suite("nonfree-counterexample")
def _nonfree(group, n, seed):
    res = SuiteResult("nonfree-counterexample", seed)
    report = nonfree_counterexample(n=max(2, n))
    res.check(report.get("found", False), report.get("diagnostic", "not found"))
    return res


SUITES = dict(_SUITES)


def run_suite(name, group, n, seed=0):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[name](group, n, seed)
