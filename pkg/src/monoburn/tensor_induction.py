"""Monomial bisets, their composition, and generalized tensor induction.

A monomial (G, H)-biset is a discrete monomial poset over G x H with the
action (g, h).u = g u h^-1.  Tensor induction sends a monomial G-poset to
the H-poset of equivariant maps from the biset compatible with the cocycle
on left stabilizers, and induces a map of monomial Burnside rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .burnside import BurnsideElement, one, zero
from .groups import (
    FiniteGroup,
    GroupError,
    GSet,
    ProductGroup,
    Subgroup,
    direct_product,
)
from .lefschetz import lefschetz, realize
from .posets import (
    MonomialPoset,
    PosetError,
    discrete_leq,
    disjoint_union,
    euler_char,
    find_isomorphism,
    fixed_subposet,
    five_point_poset,
    point_poset,
    product as poset_product,
)
from .subchars import Character, Subcharacter, all_characters, subchar_table

MAP_ENUMERATION_CAP = 2_000_000


class MonomialBiset:
    """A C-monomial (G, H)-biset: discrete monomial poset over G x H."""

    def __init__(self, left, right, carrier, prod=None):
        if prod is None:
            prod = direct_product(left, right)
        if carrier.group is not prod:
            raise GroupError("carrier is not over the product group")
        if not carrier.is_discrete():
            raise GroupError("biset carrier must be a discrete poset")
        self.left = left
        self.right = right
        self.prod = prod
        self.carrier = carrier
        self.n = carrier.n
        self.size = carrier.size
        eH = right.identity
        eG = left.identity
        self._left_act = tuple(
            tuple(carrier.act[prod.pair(g, eH)][u] for u in range(self.size))
            for g in left.elements())
        self._right_act = tuple(
            tuple(carrier.act[prod.pair(eG, right.inv_table[h])][u]
                  for u in range(self.size))
            for h in right.elements())

    def left_act(self, g, u):
        return self._left_act[g][u]

    def right_act(self, u, h):
        """u.h, the right translation."""
        return self._right_act[h][u]

    def lam(self, g, h, u, v):
        """The cocycle value on the morphism (g, h): u -> v (g u = v h)."""
        return self.carrier.cocycle[(self.prod.pair(g, h), u, v)]

    def left_stabilizer(self, u):
        return Subgroup(self.left, tuple(g for g in self.left.elements()
                                         if self._left_act[g][u] == u))

    def left_free(self):
        e = self.left.identity
        return all(self._left_act[g][u] != u
                   for g in self.left.elements() if g != e
                   for u in range(self.size))

    def left_orbits(self):
        gset = GSet(self.left, self.size, self._left_act)
        return gset.orbits()

    def validate(self):
        return self.carrier.validate()

    def __repr__(self):
        return (f"MonomialBiset({self.left.name}, {self.right.name}, "
                f"size={self.size}, n={self.n})")


def identity_biset(G, n, twist=None, prod=None):
    """The identity (G, G)-biset; `twist` twists the cocycle by a character of G.

    With a nontrivial twist the stabilizer characters of the cocycle are
    nontrivial, which breaks multiplicativity of tensor induction: it is the
    standard counterexample, not a lawful identity biset.
    """
    if prod is None:
        prod = direct_product(G, G)
    m = G.order
    act = []
    for p in range(prod.order):
        g, h = prod.unpair(p)
        hi = G.inv_table[h]
        act.append(tuple(G.mul_table[G.mul_table[g][u]][hi] for u in range(m)))
    leq = discrete_leq(m)
    cocycle = {}
    for p in range(prod.order):
        g, h = prod.unpair(p)
        val = 0 if twist is None else twist.value(h)
        for u in range(m):
            cocycle[(p, u, act[p][u])] = val
    carrier = MonomialPoset(prod, n, leq, tuple(act), cocycle)
    return MonomialBiset(G, G, carrier, prod=prod)


def empty_biset(G, H, n, prod=None):
    if prod is None:
        prod = direct_product(G, H)
    carrier = MonomialPoset(prod, n, (), tuple(() for _ in prod.elements()), {})
    return MonomialBiset(G, H, carrier, prod=prod)


def biset_from_actions(G, H, n, size, left_table, right_table, prod=None):
    """A biset with trivial cocycle from commuting left G- and right H-tables."""
    if prod is None:
        prod = direct_product(G, H)
    act = []
    for p in range(prod.order):
        g, h = prod.unpair(p)
        hi = H.inv_table[h]
        act.append(tuple(right_table[left_table[g][u]][hi] for u in range(size)))
    leq = discrete_leq(size)
    cocycle = {}
    for p in range(prod.order):
        for u in range(size):
            cocycle[(p, u, act[p][u])] = 0
    carrier = MonomialPoset(prod, n, leq, tuple(act), cocycle)
    return MonomialBiset(G, H, carrier, prod=prod)


def biset_disjoint_union(A, B):
    if A.left is not B.left or A.right is not B.right or A.n != B.n:
        raise GroupError("bisets over different (G, H, C)")
    return MonomialBiset(A.left, A.right, disjoint_union(A.carrier, B.carrier),
                         prod=A.prod)


def bisets_isomorphic(A, B):
    if A.left is not B.left or A.right is not B.right:
        return False
    return find_isomorphism(A.carrier, B.carrier) is not None


# ---------------------------------------------------------------------------
# composition of bisets


def compose_bisets(U, V):
    """U_lambda o_H V_rho: the monomial composition over the middle group."""
    if U.right is not V.left or U.n != V.n:
        raise GroupError("bisets are not composable")
    G, H, K, n = U.left, U.right, V.right, U.n
    eG, eH, eK = G.identity, H.identity, K.identity
    pairs = []
    for u in range(U.size):
        Hu = [h for h in H.elements() if U.right_act(u, h) == u]
        for v in range(V.size):
            Hv = [h for h in Hu if V.left_act(h, v) == v]
            if all((U.lam(eG, h, u, u) + V.lam(h, eK, v, v)) % n == 0
                   for h in Hv):
                pairs.append((u, v))
    pair_set = set(pairs)
    # H-orbits of h.(u, v) = (u h^-1, h v)
    orbit_of = {}
    reps = []
    for p in pairs:
        if p in orbit_of:
            continue
        orb = set()
        frontier = [p]
        while frontier:
            (u, v) = frontier.pop()
            if (u, v) in orb:
                continue
            orb.add((u, v))
            for h in H.elements():
                q = (U.right_act(u, H.inv_table[h]), V.left_act(h, v))
                if q not in pair_set:
                    raise GroupError("composition condition set is not H-stable")
                frontier.append(q)
        idx = len(reps)
        reps.append(min(orb))
        for q in orb:
            orbit_of[q] = idx
    m = len(reps)
    prodGK = direct_product(G, K)
    act = []
    for p in range(prodGK.order):
        g, k = prodGK.unpair(p)
        ki = K.inv_table[k]
        row = []
        for (u, v) in reps:
            row.append(orbit_of[(U.left_act(g, u), V.right_act(v, ki))])
        act.append(tuple(row))
    cocycle = {}
    for p in range(prodGK.order):
        g, k = prodGK.unpair(p)
        for i, (u, v) in enumerate(reps):
            j = act[p][i]
            u2, v2 = reps[j]
            vals = set()
            for h in H.elements():
                if (U.left_act(g, u) == U.right_act(u2, h)
                        and V.left_act(h, v) == V.right_act(v2, k)):
                    vals.add((U.lam(g, h, u, u2) + V.lam(h, k, v, v2)) % n)
            if len(vals) != 1:
                raise GroupError("composed cocycle value is not well defined")
            cocycle[(p, i, j)] = vals.pop()
    carrier = MonomialPoset(prodGK, n, discrete_leq(m), tuple(act), cocycle)
    return MonomialBiset(G, K, carrier, prod=prodGK)


def _composite_rep_pairs(U, V):
    """Representative (u, v) pairs of the composite, in carrier order."""
    G, H, K, n = U.left, U.right, V.right, U.n
    eG, eK = G.identity, K.identity
    pairs = []
    for u in range(U.size):
        Hu = [h for h in H.elements() if U.right_act(u, h) == u]
        for v in range(V.size):
            Hv = [h for h in Hu if V.left_act(h, v) == v]
            if all((U.lam(eG, h, u, u) + V.lam(h, eK, v, v)) % n == 0
                   for h in Hv):
                pairs.append((u, v))
    seen = set()
    reps = []
    for p in pairs:
        if p in seen:
            continue
        orb = set()
        frontier = [p]
        while frontier:
            (u, v) = frontier.pop()
            if (u, v) in orb:
                continue
            orb.add((u, v))
            for h in H.elements():
                frontier.append((U.right_act(u, H.inv_table[h]),
                                 V.left_act(h, v)))
        reps.append(min(orb))
        seen |= orb
    return reps


def orbit_pairing_bijection(U, V):
    """The map [G\\U] x [H\\V] -> [G\\(U o_H V)]; bijective when V is left free."""
    comp = compose_bisets(U, V)
    left_reps_U = [o[0] for o in U.left_orbits()]
    hv_gset = GSet(U.right, V.size,
                   tuple(tuple(V.left_act(h, v) for v in range(V.size))
                         for h in U.right.elements()))
    left_reps_V = [o[0] for o in hv_gset.orbits()]
    rep_to_orbit = {}
    for idx, orb in enumerate(comp.left_orbits()):
        for w in orb:
            rep_to_orbit[w] = idx
    lookup = {p: i for i, p in enumerate(_composite_rep_pairs(U, V))}
    images = []
    for u0 in left_reps_U:
        for v0 in left_reps_V:
            # the composite carrier point holding the H-orbit of (u0, v0)
            orbit = set()
            frontier = [(u0, v0)]
            while frontier:
                (u, v) = frontier.pop()
                if (u, v) in orbit:
                    continue
                orbit.add((u, v))
                for h in U.right.elements():
                    frontier.append((U.right_act(u, U.right.inv_table[h]),
                                     V.left_act(h, v)))
            images.append(rep_to_orbit[lookup[min(orbit)]])
    return images, len(comp.left_orbits())


# ---------------------------------------------------------------------------
# tensor induction of posets


@dataclass
class TensorInductionResult:
    """The induced H-poset with the map enumeration that produced it."""

    poset: MonomialPoset
    maps: list          # each map is a tuple over the biset carrier
    reps: list          # the chosen representatives [G\\U]
    rep_of: dict        # carrier point -> its representative
    transport: dict     # carrier point u -> a_u with u = a_u . rep

    def factor_trace(self, biset, X, h, i, j):
        """Per-representative factors of the cocycle value L(h, f_i, f_j)."""
        out = []
        f, fp = self.maps[i], self.maps[j]
        for u in self.reps:
            uh = biset.right_act(u, h)
            sigma = self.rep_of[uh]
            g = self.transport[uh]
            out.append({
                "rep": u, "sigma": sigma, "g": g,
                "l": X.cocycle[(g, f[sigma], fp[u])],
                "lam": biset.lam(g, h, sigma, u),
            })
        return out


def _left_orbit_bookkeeping(B, reps=None):
    orbits = B.left_orbits()
    if reps is None:
        reps = [o[0] for o in orbits]
    else:
        reps = list(reps)
        if len(reps) != len(orbits):
            raise GroupError("wrong number of orbit representatives")
    rep_of = {}
    transport = {}
    G = B.left
    gens = G.generators or tuple(G.elements())
    chosen = set(reps)
    for orb in orbits:
        in_orbit = [v for v in orb if v in chosen]
        if len(in_orbit) != 1:
            raise GroupError("representatives must pick one point per orbit")
        r = in_orbit[0]
        rep_of[r] = r
        transport[r] = G.identity
        frontier = [r]
        seen = {r}
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = B.left_act(g, v)
                if w not in seen:
                    seen.add(w)
                    rep_of[w] = r
                    transport[w] = G.mul_table[g][transport[v]]
                    frontier.append(w)
        if seen != set(orb):
            raise GroupError("orbit transport failed")
    ordered_reps = [rep_of[o[0]] for o in orbits]
    return ordered_reps, rep_of, transport


def tensor_induce_poset(B, X, reps=None):
    """T_{U,lambda}(X, l): the monomial H-poset of compatible equivariant maps."""
    if X.group is not B.left or X.n != B.n:
        raise GroupError("poset is not over the biset's left group")
    G, H, n = B.left, B.right, B.n
    eH = H.identity
    ordered_reps, rep_of, transport = _left_orbit_bookkeeping(B, reps)
    candidates = []
    for r in ordered_reps:
        stab = [g for g in G.elements() if B.left_act(g, r) == r]
        cand = []
        for x in range(X.size):
            if any(X.act[g][x] != x for g in stab):
                continue
            if all(X.cocycle[(g, x, x)] == B.lam(g, eH, r, r) for g in stab):
                cand.append(x)
        candidates.append(cand)
    total = 1
    for c in candidates:
        total *= len(c)
        if total > MAP_ENUMERATION_CAP:
            raise GroupError("map enumeration exceeds cap")
    maps = []
    for combo in itertools.product(*candidates):
        image = dict(zip(ordered_reps, combo))
        f = tuple(X.act[transport[u]][image[rep_of[u]]] for u in range(B.size))
        maps.append(f)
    maps.sort()
    index = {f: i for i, f in enumerate(maps)}
    m = len(maps)
    act = []
    for h in H.elements():
        row = []
        for f in maps:
            hf = tuple(f[B.right_act(u, h)] for u in range(B.size))
            row.append(index[hf])
        act.append(tuple(row))
    if B.size == 0:
        leq = discrete_leq(m)
    else:
        leq = tuple(tuple(all(X.leq[fi[u]][fj[u]] for u in range(B.size))
                          for fj in maps) for fi in maps)
    cocycle = {}
    for h in H.elements():
        for i, f in enumerate(maps):
            hi = act[h][i]
            for j, fp in enumerate(maps):
                if not leq[hi][j]:
                    continue
                val = 0
                for u in ordered_reps:
                    uh = B.right_act(u, h)
                    sigma = rep_of[uh]
                    g = transport[uh]
                    val += X.cocycle[(g, f[sigma], fp[u])]
                    val -= B.lam(g, h, sigma, u)
                cocycle[(h, i, j)] = val % n
    poset = MonomialPoset(H, n, leq, tuple(act), cocycle)
    return TensorInductionResult(poset=poset, maps=maps, reps=ordered_reps,
                                 rep_of=rep_of, transport=transport)


def alternative_left_reps(B):
    """Lexicographically maximal orbit representatives, for independence checks."""
    return [max(o) for o in B.left_orbits()]


# ---------------------------------------------------------------------------
# tensor induction of ring elements


def tensor_induce_ring(B, a, check=False):
    """T applied to a ring element through any realization of it as a poset."""
    table_G = subchar_table(B.left, B.n)
    if a.table is not table_G:
        raise GroupError("element is not over the biset's left ring")
    table_H = subchar_table(B.right, B.n)
    X = realize(table_G, a)
    out = lefschetz(tensor_induce_poset(B, X).poset, table_H).element
    if check:
        pad = disjoint_union(point_poset(B.left, B.n),
                             poset_product(point_poset(B.left, B.n),
                                           five_point_poset(B.left, B.n)))
        X2 = disjoint_union(X, pad)
        out2 = lefschetz(tensor_induce_poset(B, X2).poset, table_H).element
        if out2 != out:
            raise AssertionError("tensor induction depends on the realization")
    return out


def tensor_induce_unit_pairing(bisets_with_multiplicity, a):
    """The bilinear pairing: integer combinations of bisets acting on a unit.

    Negative multiplicities use the inverse in the unit group; requires every
    tensor image to be a unit (true for cocycles with trivial stabilizer
    characters).
    """
    from .burnside import is_unit, unit_inverse
    out = None
    for B, mult in bisets_with_multiplicity:
        img = tensor_induce_ring(B, a)
        if out is None:
            out = one(img.table)
        if not is_unit(img):
            raise GroupError("tensor image is not a unit")
        factor = img if mult >= 0 else unit_inverse(img)
        for _ in range(abs(mult)):
            out = out * factor
    if out is None:
        raise GroupError("empty biset combination")
    return out


# ---------------------------------------------------------------------------
# the ghost-side fixed-point formula


def _double_coset_reps(B, K):
    """Orbit reps of the carrier under left G and right K translations."""
    seen = set()
    reps = []
    kgens = list(K.members)
    ggens = list(B.left.generators or B.left.elements())
    for u in range(B.size):
        if u in seen:
            continue
        orb = set()
        frontier = [u]
        while frontier:
            w = frontier.pop()
            if w in orb:
                continue
            orb.add(w)
            for g in ggens:
                frontier.append(B.left_act(g, w))
            for k in kgens:
                frontier.append(B.right_act(w, k))
        reps.append(min(orb))
        seen |= orb
    return reps


def tensor_induce_marks(B, X, K, theta):
    """chi of the (K, theta)-fixed subposet of T(X), by the character-family sum.

    Enumerates families of characters xi_u on the groups uK = {g : exists k
    in K with g u = u k}, compatible with the cocycle on left stabilizers and
    satisfying the theta product condition, and sums the products of fixed
    subposet Euler characteristics.
    """
    if K.parent is not B.right:
        raise GroupError("K is not a subgroup of the right-hand group")
    G, H, n = B.left, B.right, B.n
    theta_pos = {k: i for i, k in enumerate(K.members)}
    dreps = _double_coset_reps(B, K)
    per_u = []
    for u in dreps:
        uK_members = []
        K_cap = []
        for g in G.elements():
            if any(B.carrier.act[B.prod.pair(g, k)][u] == u for k in K.members):
                uK_members.append(g)
        for k in K.members:
            if any(B.carrier.act[B.prod.pair(g, k)][u] == u
                   for g in G.elements()):
                K_cap.append(k)
        uK = Subgroup(G, tuple(uK_members))
        Kg = Subgroup(B.right, tuple(K_cap))
        # right coset representatives of (K cap G^u) \ K
        covered = set()
        treps = []
        for t in K.members:
            if t in covered:
                continue
            treps.append(t)
            covered |= {H.mul_table[c][t] for c in Kg.members}
        # bookkeeping: tk = c (tau) with c in K cap G^u, and u.c = gamma.u
        gamma = {}
        phi_key = {}
        for k in K.members:
            for t in treps:
                tk = H.mul_table[t][k]
                tau = next(tt for tt in treps
                           if H.mul_table[tk][H.inv_table[tt]] in Kg.members)
                c = H.mul_table[tk][H.inv_table[tau]]
                gam = next(g for g in G.elements()
                           if B.carrier.act[B.prod.pair(g, c)][u] == u)
                gamma[(k, t)] = gam
                phi_key[(k, t)] = (gam, k, B.right_act(u, tau),
                                   B.right_act(u, t))
        # admissible characters on uK: must extend the cocycle on the left stabilizer
        stab = [g for g in G.elements() if B.left_act(g, u) == u]
        eH = H.identity
        chars = []
        for ch in all_characters(uK, n):
            pos = {g: i for i, g in enumerate(uK.members)}
            if all(ch.values[pos[w]] == B.lam(w, eH, u, u) for w in stab):
                chars.append(ch)
        per_u.append({"u": u, "uK": uK, "treps": treps, "gamma": gamma,
                      "phi_key": phi_key, "chars": chars})
    # phi_u(k) is character-independent
    phi = []
    for info in per_u:
        row = {}
        for k in K.members:
            s = 0
            for t in info["treps"]:
                (gam, kk, a, b) = info["phi_key"][(k, t)]
                s -= B.lam(gam, kk, a, b)
            row[k] = s % n
        phi.append(row)
    total = 0
    for combo in itertools.product(*[info["chars"] for info in per_u]):
        ok = True
        for k in K.members:
            acc = 0
            for info, ch in zip(per_u, combo):
                pos = {g: i for i, g in enumerate(info["uK"].members)}
                for t in info["treps"]:
                    acc += ch.values[pos[info["gamma"][(k, t)]]]
            acc += sum(row[k] for row in phi)
            if acc % n != theta.values[theta_pos[k]]:
                ok = False
                break
        if not ok:
            continue
        prod_chi = 1
        for info, ch in zip(per_u, combo):
            sc = Subcharacter(info["uK"], ch)
            prod_chi *= euler_char(fixed_subposet(X, sc))
            if prod_chi == 0:
                break
        total += prod_chi
    return total


# ---------------------------------------------------------------------------
# law reports


def composition_law_report(U, V, X):
    """T_V(T_U(X)) against T_{U o V}(X), as posets and in the ring."""
    if not V.left_free():
        raise GroupError("composition law requires a left-free second biset")
    comp = compose_bisets(U, V)
    via_steps = tensor_induce_poset(V, tensor_induce_poset(U, X).poset).poset
    direct = tensor_induce_poset(comp, X).poset
    iso = find_isomorphism(via_steps, direct)
    table_K = subchar_table(V.right, V.n)
    ring_equal = (lefschetz(via_steps, table_K).element
                  == lefschetz(direct, table_K).element)
    return {"poset_isomorphic": iso is not None, "ring_equal": ring_equal}


def nonfree_counterexample(n=2):
    """The Klein-group witness that left-freeness matters for composition.

    H = N x K with N = K = C2, G = K; U is H as a (G, H)-biset and V is K
    with H acting through the projection.  U o_H V is the identity biset,
    yet T_V o T_U is not the identity functor: the report exhibits a
    monomial poset moved to a non-isomorphic one.
    """
    from .groups import catalog_group, cyclic_group
    G = catalog_group("C2")
    N = catalog_group("C2")
    H = direct_product(N, G)  # pair (a, b), projection to K is the b part
    # U = H with G embedded as K = {(0, b)}
    left_u = tuple(tuple(H.mul_table[H.pair(0, g)][u] for u in range(H.order))
                   for g in G.elements())
    right_u = tuple(tuple(H.mul_table[u][h] for h in H.elements())
                    for u in range(H.order))
    U = biset_from_actions(G, H, n, H.order, left_u,
                           tuple(tuple(right_u[u][h] for h in H.elements())
                                 for u in range(H.order)))
    # V = K with H acting by projection on the left
    left_v = tuple(tuple(G.mul_table[H.unpair(h)[1]][v] for v in range(G.order))
                   for h in H.elements())
    right_v = tuple(tuple(G.mul_table[v][k] for k in G.elements())
                    for v in range(G.order))
    V = biset_from_actions(H, G, n, G.order, left_v, right_v)
    comp = compose_bisets(U, V)
    ident = identity_biset(G, n, prod=comp.prod)
    if not bisets_isomorphic(comp, ident):
        return {"found": False,
                "diagnostic": "composite is not the identity biset"}
    if not V.left_free():
        pass  # expected: V is exactly the non-free side
    witness = None
    checked = 0
    for X in _enumerate_small_monomial_posets(G, n, max_points=3):
        checked += 1
        round_trip = tensor_induce_poset(
            V, tensor_induce_poset(U, X).poset).poset
        ident_applied = tensor_induce_poset(comp, X).poset
        if find_isomorphism(ident_applied, X) is None:
            return {"found": False,
                    "diagnostic": "identity biset did not act as identity"}
        if find_isomorphism(round_trip, X) is None:
            witness = {"size": X.size, "leq": X.leq, "act": X.act,
                       "cocycle": sorted(X.cocycle.items()),
                       "round_trip_size": round_trip.size}
            break
    if witness is None:
        return {"found": False, "checked": checked,
                "diagnostic": "exhausted the search space without a witness"}
    return {"found": True, "checked": checked, "witness": witness,
            "left_free_V": V.left_free()}


def _enumerate_small_monomial_posets(G, n, max_points=3):
    """All monomial posets over small carriers: shapes x valid cocycles."""
    shapes = []
    for m in range(1, max_points + 1):
        # trivial action; orders: all level assignments over a chain-like shape
        act = tuple(tuple(range(m)) for _ in G.elements())
        for rel in itertools.product([False, True], repeat=m * m):
            leq = tuple(tuple(rel[i * m + j] or i == j for j in range(m))
                        for i in range(m))
            if _is_partial_order(leq):
                shapes.append((leq, act))
    seen = set()
    for (leq, act) in shapes:
        key = (leq, act)
        if key in seen:
            continue
        seen.add(key)
        admissible = [(g, x, y)
                      for g in G.elements()
                      for x in range(len(leq)) for y in range(len(leq))
                      if leq[act[g][x]][y]]
        if n ** len(admissible) > 4096:
            continue
        for values in itertools.product(range(n), repeat=len(admissible)):
            cocycle = dict(zip(admissible, values))
            try:
                X = MonomialPoset(G, n, leq, act, cocycle)
            except PosetError:
                continue
            yield X


def _is_partial_order(leq):
    m = len(leq)
    for i in range(m):
        if not leq[i][i]:
            return False
        for j in range(m):
            if i != j and leq[i][j] and leq[j][i]:
                return False
    for i in range(m):
        for j in range(m):
            if leq[i][j]:
                for k in range(m):
                    if leq[j][k] and not leq[i][k]:
                        return False
    return True
