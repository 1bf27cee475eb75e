"""The monomial Burnside ring of (G, Z/n).

Free Z-module on subcharacter classes with the double-coset product,
the mark homomorphisms, and a brute-force fibred-set layer used as the
ground-truth oracle for the ring product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    coset_reps,
    double_cosets,
    intersect_subgroups,
)
from .subchars import (
    Character,
    SubcharTable,
    Subcharacter,
    subchar_table,
    trivial_character,
)

FIND_UNITS_SEARCH_CAP = 10_000_000


class BurnsideElement:
    """A sparse integer vector over the subcharacter classes of one table."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table, coeffs=None):
        self.table = table
        self.coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}
        for k in self.coeffs:
            if not (0 <= k < len(table)):
                raise GroupError(f"class index {k} out of range")

    def _require_same_table(self, other):
        if self.table is not other.table:
            raise GroupError("elements over different subcharacter tables")

    def __add__(self, other):
        self._require_same_table(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BurnsideElement(self.table, out)

    def __neg__(self):
        return BurnsideElement(self.table, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return BurnsideElement(self.table, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        self._require_same_table(other)
        out = {}
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                for k, m in _basis_product(self.table, i, j).items():
                    out[k] = out.get(k, 0) + ci * cj * m
        return BurnsideElement(self.table, out)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("use unit_inverse for negative powers")
        out = one(self.table)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement)
                and self.table is other.table and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.table), tuple(sorted(self.coeffs.items()))))

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, i):
        return self.coeffs.get(i, 0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for k in sorted(self.coeffs):
            sc = self.table.classes[k]
            bits.append(f"{self.coeffs[k]}*[{list(sc.subgroup.members)},"
                        f"{list(sc.character.values)}]")
        return " + ".join(bits)


def zero(table):
    return BurnsideElement(table, {})


def one(table):
    return BurnsideElement(table, {table.one_index(): 1})


def basis_element(table, sc):
    """The basis element [U, mu]_G of the canonical class of a subcharacter."""
    return BurnsideElement(table, {table.class_index(sc): 1})


def basis_of_class(table, i):
    return BurnsideElement(table, {i: 1})


def _basis_product(table, i, j):
    """Coefficients of class_i * class_j via the double-coset expansion."""
    key = (i, j)
    cached = table._mul_cache.get(key)
    if cached is not None:
        return cached
    G = table.group
    a = table.classes[i]
    b = table.classes[j]
    U, mu = a.subgroup, a.character
    V, nu = b.subgroup, b.character
    mu_pos = {x: k for k, x in enumerate(U.members)}
    nu_pos = {x: k for k, x in enumerate(V.members)}
    out = {}
    for g in double_cosets(U, V):
        gV = Subgroup(G, tuple(G.conj(g, x) for x in V.members))
        W = intersect_subgroups(U, gV)
        gi = G.inv_table[g]
        vals = tuple((mu.values[mu_pos[w]]
                      + nu.values[nu_pos[G.conj(gi, w)]]) % table.n
                     for w in W.members)
        sc = Subcharacter(W, Character(W, table.n, vals))
        k = table.class_index(sc)
        out[k] = out.get(k, 0) + 1
    table._mul_cache[key] = out
    return out


# ---------------------------------------------------------------------------
# marks


def _coset_reps_for(table, V):
    got = table._coset_reps.get(V.members)
    if got is None:
        got = coset_reps(table.group, V)
        table._coset_reps[V.members] = got
    return got


def basis_mark(table, i, j):
    """Number of cosets gV in G/V with (U_i, mu_i) <= g(V_j, nu_j)."""
    G = table.group
    a = table.classes[i]
    b = table.classes[j]
    U, mu = a.subgroup, a.character
    V, nu = b.subgroup, b.character
    nu_pos = {x: k for k, x in enumerate(V.members)}
    vmem = set(V.members)
    count = 0
    for g in _coset_reps_for(table, V):
        gi = G.inv_table[g]
        ok = True
        for u, mv in zip(U.members, mu.values):
            w = G.conj(gi, u)
            if w not in vmem or nu.values[nu_pos[w]] != mv:
                ok = False
                break
        if ok:
            count += 1
    return count


def mark_matrix(table):
    """The full table of basis marks, rows and columns in class order."""
    if table._mark_matrix is None:
        k = len(table)
        table._mark_matrix = tuple(
            tuple(basis_mark(table, i, j) for j in range(k)) for i in range(k))
    return table._mark_matrix


def mark(table, sc, elem):
    """The mark of an element at a subcharacter (U, mu)."""
    i = table.class_index(sc)
    M = mark_matrix(table)
    return sum(c * M[i][j] for j, c in elem.coeffs.items())


def mark_vector(elem):
    table = elem.table
    M = mark_matrix(table)
    return tuple(sum(c * M[i][j] for j, c in elem.coeffs.items())
                 for i in range(len(table)))


def element_from_mark_vector(table, vec):
    """Solve the upper-triangular mark system; None if no integral solution."""
    M = mark_matrix(table)
    k = len(table)
    if len(vec) != k:
        raise GroupError("mark vector has wrong length")
    coeffs = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        acc = Fraction(vec[i])
        for j in range(i + 1, k):
            acc -= M[i][j] * coeffs[j]
        if M[i][i] == 0:
            raise GroupError("mark matrix has a zero diagonal entry")
        coeffs[i] = acc / M[i][i]
    if any(c.denominator != 1 for c in coeffs):
        return None
    return BurnsideElement(table, {i: int(c) for i, c in enumerate(coeffs) if c})


def mark_spectrum(elem, U):
    """Fixed-orbit counts at every character of U: the spectrum at U.

    The map a -> spectrum(a, U) is a ring homomorphism into the group ring
    of Hom(U, C): spectra of products are convolutions of spectra.  The
    individual counting marks are its coefficients and are not pointwise
    multiplicative once C is nontrivial.
    """
    from .subchars import all_characters
    table = elem.table
    out = {}
    for nu in all_characters(U, table.n):
        out[nu.values] = mark(table, Subcharacter(U, nu), elem)
    return out


def convolve_spectra(n, A, B):
    """Product in the group ring of Hom(U, Z/n): characters add pointwise."""
    out = {}
    for va, ca in A.items():
        for vb, cb in B.items():
            key = tuple((x + y) % n for x, y in zip(va, vb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def multiplication_matrix(elem):
    """The integer matrix of multiplication by elem in the class basis."""
    table = elem.table
    k = len(table)
    cols = []
    for j in range(k):
        col = (elem * basis_of_class(table, j)).coeffs
        cols.append(col)
    return [[cols[j].get(i, 0) for j in range(k)] for i in range(k)]


def _det_and_solve(matrix, rhs):
    """Exact determinant and solution of M y = rhs over the rationals."""
    k = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])]
           for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            return Fraction(0), None
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
            det = -det
        det *= aug[col][col]
        inv = aug[col][col]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col] / inv
                for c in range(col, k + 1):
                    aug[r][c] -= factor * aug[col][c]
    sol = [aug[i][k] / aug[i][i] for i in range(k)]
    return det, sol


def is_unit(elem):
    """Invertibility of the multiplication-by-elem matrix over the integers."""
    if elem.is_zero():
        return False
    det, _ = _det_and_solve(multiplication_matrix(elem),
                            [0] * len(elem.table))
    return det in (1, -1)


def unit_inverse(elem):
    """The inverse of a unit, from the multiplication matrix."""
    table = elem.table
    k = len(table)
    rhs = [0] * k
    rhs[table.one_index()] = 1
    det, sol = _det_and_solve(multiplication_matrix(elem), rhs)
    if det not in (1, -1) or sol is None:
        raise GroupError("element is not a unit")
    inv = BurnsideElement(table, {i: int(c) for i, c in enumerate(sol) if c})
    if elem * inv != one(table):
        raise GroupError("inverse verification failed")
    return inv


def find_units(table, bound):
    """All units with every coefficient in [-bound, bound], by exhaustive search.

    Candidates are prefiltered by the ordinary marks of the underlying
    G-set class (which must be 1 or -1), then confirmed by inverting the
    multiplication matrix and checking the product.
    """
    if bound < 1:
        raise GroupError("bound must be at least 1")
    k = len(table)
    box = 2 * bound + 1
    if box ** k > FIND_UNITS_SEARCH_CAP:
        raise GroupError("unit search box too large")
    M = mark_matrix(table)
    # augmented marks: for each class row i, sum the counting marks over all
    # characters of U_i; this is the mark of the underlying G-set, and the
    # forgetful map to the ordinary Burnside ring is a ring homomorphism.
    groups_of = [table.classes[i].subgroup.members for i in range(k)]
    agg_rows = {}
    for i in range(k):
        mem = groups_of[i]
        agg_rows.setdefault(mem, [0] * k)
        for j in range(k):
            agg_rows[mem][j] += M[i][j]
    agg = list(agg_rows.values())
    units = []
    for combo in itertools.product(range(-bound, bound + 1), repeat=k):
        if not any(combo):
            continue
        ok = True
        for row in agg:
            m = sum(c * row[j] for j, c in enumerate(combo) if c)
            if m not in (1, -1):
                ok = False
                break
        if not ok:
            continue
        cand = BurnsideElement(table, dict(enumerate(combo)))
        try:
            inv = unit_inverse(cand)
        except GroupError:
            continue
        units.append(cand)
    return units


# ---------------------------------------------------------------------------
# the fibred-set layer: the paper-faithful ground truth for the ring product


class RawFibredSet:
    """A C-free (C x G)-set with the C-action generated by one permutation."""

    __slots__ = ("group", "n", "size", "g_act", "c_perm")

    def __init__(self, group, n, g_act, c_perm, check=True):
        self.group = group
        self.n = int(n)
        self.g_act = tuple(tuple(int(x) for x in row) for row in g_act)
        self.c_perm = tuple(int(x) for x in c_perm)
        self.size = len(self.c_perm)
        if check:
            self.validate()

    def validate(self):
        G = self.group
        m = self.size
        if len(self.g_act) != G.order or any(len(r) != m for r in self.g_act):
            raise GroupError("G-action table has wrong shape")
        e = G.identity
        if any(self.g_act[e][x] != x for x in range(m)):
            raise GroupError("identity does not act trivially")
        for g in G.elements():
            for h in G.elements():
                gh = G.mul_table[g][h]
                if any(self.g_act[g][self.g_act[h][x]] != self.g_act[gh][x]
                       for x in range(m)):
                    raise GroupError("G-action law fails")
        # C-action must commute with G and be free with exponent n
        for g in G.elements():
            if any(self.g_act[g][self.c_perm[x]] != self.c_perm[self.g_act[g][x]]
                   for x in range(m)):
                raise GroupError("C- and G-actions do not commute")
        for x in range(m):
            y = x
            for k in range(1, self.n):
                y = self.c_perm[y]
                if y == x:
                    raise GroupError("C does not act freely")
            if self.c_perm[y] != x:
                raise GroupError("C-action has wrong exponent")

    def c_pow(self, c, x):
        c %= self.n
        for _ in range(c):
            x = self.c_perm[x]
        return x

    def act(self, c, g, x):
        return self.c_pow(c, self.g_act[g][x])

    def orbits_cg(self):
        """Orbits under the full C x G action."""
        seen = [False] * self.size
        out = []
        gens = list(self.group.generators) + [None]  # None marks the C-generator
        for x in range(self.size):
            if seen[x]:
                continue
            orb = set()
            frontier = [x]
            while frontier:
                p = frontier.pop()
                if p in orb:
                    continue
                orb.add(p)
                for g in gens:
                    frontier.append(self.c_perm[p] if g is None else self.g_act[g][p])
            orb = sorted(orb)
            for p in orb:
                seen[p] = True
            out.append(orb)
        return out


def identity_fibred(group, n):
    """The set C with trivial G-action: the identity of the ring."""
    g_act = tuple(tuple(range(n)) for _ in group.elements())
    c_perm = tuple((x + 1) % n for x in range(n))
    return RawFibredSet(group, n, g_act, c_perm, check=False)


def standard_fibred(table, sc):
    """The transitive fibred set (C x G)/U_mu for a subcharacter (U, mu).

    Points are cosets (c, g)U_mu; realized concretely as C x G/U with the
    twisted action so no coset arithmetic over C x G is needed.
    """
    from .posets import mu_hat_poset, monomial_set_to_fibred
    return monomial_set_to_fibred(mu_hat_poset(table.group, table.n,
                                               sc.subgroup, sc.character))


def tensor_fibred(S, T):
    """Tensor product over C: orbits of c.(x,y) = (cx, c^-1 y)."""
    if S.group is not T.group or S.n != T.n:
        raise GroupError("fibred sets over different (G, C)")
    n, G = S.n, S.group
    rep_index = {}
    reps = []

    def orbit_rep(x, y):
        best = (x, y)
        cx, cy = x, y
        for _ in range(n - 1):
            cx = S.c_perm[cx]
            cy = T.c_pow(n - 1, cy)
            if (cx, cy) < best:
                best = (cx, cy)
        return best

    for x in range(S.size):
        for y in range(T.size):
            r = orbit_rep(x, y)
            if r not in rep_index:
                rep_index[r] = len(reps)
                reps.append(r)
    g_act = []
    for g in G.elements():
        row = []
        for (x, y) in reps:
            row.append(rep_index[orbit_rep(S.g_act[g][x], T.g_act[g][y])])
        g_act.append(tuple(row))
    c_perm = tuple(rep_index[orbit_rep(S.c_perm[x], y)] for (x, y) in reps)
    return RawFibredSet(G, n, tuple(g_act), c_perm, check=False)


def disjoint_union_fibred(S, T):
    if S.group is not T.group or S.n != T.n:
        raise GroupError("fibred sets over different (G, C)")
    off = S.size
    g_act = tuple(tuple(list(Sr) + [x + off for x in Tr])
                  for Sr, Tr in zip(S.g_act, T.g_act))
    c_perm = tuple(list(S.c_perm) + [x + off for x in T.c_perm])
    return RawFibredSet(S.group, S.n, g_act, c_perm, check=False)


def decompose_fibred(S, table=None):
    """Decompose a fibred set into basis classes: the product oracle."""
    G = S.group
    if table is None:
        table = subchar_table(G, S.n)
    coeffs = {}
    for orb in S.orbits_cg():
        x = orb[0]
        stab = {}
        for g in G.elements():
            gx = S.g_act[g][x]
            y = gx
            for c in range(S.n):
                if y == x:
                    if g in stab:
                        raise GroupError("input is not C-free (malformed)")
                    stab[g] = c
                y = S.c_perm[y]
        U = Subgroup(G, tuple(sorted(stab)))
        # stabilizer is {(mu(a)^-1, a)}: recorded c is -mu(a)
        vals = tuple((-stab[a]) % S.n for a in U.members)
        sc = Subcharacter(U, Character(U, S.n, vals))
        k = table.class_index(sc)
        coeffs[k] = coeffs.get(k, 0) + 1
    return BurnsideElement(table, coeffs)


def fibred_sets_isomorphic(S, T):
    """(C x G)-isomorphism test via equality of transitive decompositions."""
    if S.group is not T.group or S.n != T.n:
        return False
    return decompose_fibred(S) == decompose_fibred(T)


def monomial_tensor_oracle(table, i, j):
    """Basis product computed the slow, faithful way: tensor then decompose."""
    S = standard_fibred(table, table.classes[i])
    T = standard_fibred(table, table.classes[j])
    return decompose_fibred(tensor_fibred(S, T), table)
