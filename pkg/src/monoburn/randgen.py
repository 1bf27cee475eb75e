"""Seeded random generators for monomial posets, bisets and ring elements.

Cocycles are built by assigning values on a spanning set of the transporter
category and completing by composition; inconsistent draws are rejected and
redrawn, with the validator as the final gatekeeper.
"""

from __future__ import annotations

import random

from .groups import GSet, Subgroup, all_subgroups, coset_gset, direct_product
from .posets import (
    MonomialPoset,
    MonomialPosetMap,
    PosetError,
    discrete_leq,
    enumerate_morphisms,
    mu_hat_poset,
    point_poset,
    trivial_monomial_poset,
)
from .subchars import all_characters

_MAX_ATTEMPTS = 400


def random_subgroup(group, rng):
    subs = all_subgroups(group)
    return subs[rng.randrange(len(subs))]


def random_gset(group, rng, max_points=5, allow_empty=False):
    """A random G-set assembled from random transitive pieces."""
    size = 0
    blocks = []
    min_orbits = 0 if allow_empty else 1
    want = rng.randint(min_orbits, 3)
    guard = 0
    while len(blocks) < want and guard < 20:
        guard += 1
        U = random_subgroup(group, rng)
        piece = coset_gset(group, U)
        if size + piece.size > max_points:
            continue
        blocks.append(piece)
        size += piece.size
    if not blocks:
        if allow_empty:
            return GSet(group, 0, tuple(() for _ in group.elements()))
        blocks = [coset_gset(group, Subgroup(group, tuple(group.elements())))]
        size = blocks[0].size
    act = []
    for g in group.elements():
        row = []
        off = 0
        for b in blocks:
            row.extend(x + off for x in b.action[g])
            off += b.size
        act.append(tuple(row))
    return GSet(group, size, tuple(act))


def random_g_poset(group, rng, max_points=5, allow_empty=False):
    """A random G-poset: a random G-set with random level-respecting relations."""
    gset = random_gset(group, rng, max_points=max_points, allow_empty=allow_empty)
    m = gset.size
    leq = [[i == j for j in range(m)] for i in range(m)]
    if m > 1:
        orbits = gset.orbits()
        level = {}
        for orb in orbits:
            lv = rng.randint(0, 2)
            for v in orb:
                level[v] = lv
        tries = rng.randint(0, 2 * m)
        for _ in range(tries):
            x = rng.randrange(m)
            y = rng.randrange(m)
            if x == y or level[x] >= level[y]:
                continue
            for g in group.elements():
                leq[gset.action[g][x]][gset.action[g][y]] = True
        # transitive closure (levels strictly increase, so no cycles appear)
        changed = True
        while changed:
            changed = False
            for a in range(m):
                for b in range(m):
                    if a != b and leq[a][b]:
                        for c in range(m):
                            if leq[b][c] and not leq[a][c]:
                                leq[a][c] = True
                                changed = True
    return gset, tuple(tuple(r) for r in leq)


def _complete_cocycle(group, n, leq, act, rng):
    """Assign and saturate cocycle values; None when a contradiction appears."""
    from .posets import composition_relations, saturate_cocycle
    admissible, relations = composition_relations(group, leq, act)
    values = {(group.identity, x, x): 0 for x in range(len(leq))}
    try:
        saturate_cocycle(n, relations, values)
        for key in admissible:
            if key not in values:
                values[key] = rng.randrange(n)
                saturate_cocycle(n, relations, values)
    except PosetError:
        return None
    return values


def random_monomial_poset(group, n, rng, max_points=5, allow_empty=False,
                          discrete=False):
    """A seeded random valid monomial poset; retries on inconsistent draws."""
    for _ in range(_MAX_ATTEMPTS):
        gset, leq = random_g_poset(group, rng, max_points=max_points,
                                   allow_empty=allow_empty)
        if discrete:
            leq = discrete_leq(gset.size)
        values = _complete_cocycle(group, n, leq, gset.action, rng)
        if values is None:
            continue
        try:
            return MonomialPoset(group, n, leq, gset.action, values)
        except PosetError:
            continue
    raise RuntimeError("random monomial poset generation kept failing")


def random_monomial_gset(group, n, rng, max_points=5, allow_empty=False):
    return random_monomial_poset(group, n, rng, max_points=max_points,
                                 allow_empty=allow_empty, discrete=True)


def random_morphism(group, n, rng, max_points=4):
    """A seeded random map of monomial posets, via exhaustive enumeration."""
    for _ in range(_MAX_ATTEMPTS):
        X = random_monomial_poset(group, n, rng, max_points=max_points)
        Y = random_monomial_poset(group, n, rng, max_points=max_points)
        morphisms = enumerate_morphisms(X, Y)
        if morphisms:
            return morphisms[rng.randrange(len(morphisms))]
    # a trivially-cocycled source always maps to the point
    raw = random_monomial_poset(group, n, rng, max_points=max_points)
    X = trivial_monomial_poset(group, n, raw.leq, raw.act)
    return enumerate_morphisms(X, point_poset(group, n))[0]


def random_element(table, rng, bound=3, max_terms=None):
    """A seeded random ring element with coefficients in [-bound, bound]."""
    k = len(table)
    terms = max_terms if max_terms is not None else k
    coeffs = {}
    for i in rng.sample(range(k), min(terms, k)):
        c = rng.randint(-bound, bound)
        if c:
            coeffs[i] = c
    from .burnside import BurnsideElement
    return BurnsideElement(table, coeffs)


def _assemble_gset(group, blocks):
    size = sum(b.size for b in blocks)
    act = []
    for g in group.elements():
        row = []
        off = 0
        for b in blocks:
            row.extend(x + off for x in b.action[g])
            off += b.size
        act.append(tuple(row))
    return GSet(group, size, tuple(act))


def random_biset(G, H, n, rng, max_points=6, gauge_trivial=False,
                 left_free=False, max_left_orbits=None):
    """A seeded random monomial (G, H)-biset.

    gauge_trivial makes the cocycle a coboundary on every orbit (trivial
    stabilizer characters); together with left_free this is the class of
    bisets for which tensor induction is multiplicative and unital.
    max_left_orbits bounds the G-orbit count, and with it the map count
    |X|^orbits of a tensor induction over the biset.
    """
    from .tensor_induction import MonomialBiset
    prod = direct_product(G, H)
    subs = all_subgroups(prod)
    if left_free:
        # stabilizers meeting G x 1 trivially give free left actions
        left_block = {prod.pair(g, H.identity) for g in G.elements()}
        subs = [S for S in subs
                if len(set(S.members) & left_block) == 1]
    for _ in range(_MAX_ATTEMPTS):
        blocks = []
        size = 0
        for _ in range(rng.randint(0, 3)):
            S = subs[rng.randrange(len(subs))]
            piece = coset_gset(prod, S)
            if size + piece.size > max_points:
                continue
            blocks.append(piece)
            size += piece.size
        gset = _assemble_gset(prod, blocks)
        if max_left_orbits is not None:
            left = GSet(G, gset.size,
                        tuple(tuple(gset.action[prod.pair(g, H.identity)][u]
                                    for u in range(gset.size))
                              for g in G.elements()))
            if len(left.orbits()) > max_left_orbits:
                continue
        leq = discrete_leq(gset.size)
        if gauge_trivial:
            values = _gauge_trivial_cocycle(prod, n, gset, rng)
        else:
            values = _complete_cocycle(prod, n, leq, gset.action, rng)
        if values is None:
            continue
        try:
            carrier = MonomialPoset(prod, n, leq, gset.action, values)
        except PosetError:
            continue
        return MonomialBiset(G, H, carrier, prod=prod)
    raise RuntimeError("random biset generation kept failing")


def _gauge_trivial_cocycle(group, n, gset, rng):
    """A discrete cocycle that is a coboundary on every orbit."""
    m = gset.size
    gauge = [rng.randrange(n) for _ in range(m)]
    values = {}
    for g in group.elements():
        for x in range(m):
            gx = gset.action[g][x]
            values[(g, x, gx)] = (gauge[gx] - gauge[x]) % n
    return values
