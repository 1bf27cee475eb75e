"""C-monomial G-posets: finite G-posets with a validated C-valued cocycle.

The cocycle l assigns a residue mod n to every triple (g, x, y) with
g.x <= y, functorially: l(h,y,z) + l(g,x,y) = l(hg,x,z) and l(1,x,x) = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    GroupError,
    GSet,
    Subgroup,
    all_subgroups,
    coset_gset,
    left_cosets,
)
from .subchars import Character, Subcharacter, all_characters, trivial_character

POSET_SIZE_CAP = 4096


class PosetError(ValueError):
    """Raised for malformed monomial posets or maps."""


class MonomialPoset:
    """A finite G-poset with an order-compatible action and a C-cocycle."""

    __slots__ = ("group", "n", "size", "leq", "act", "cocycle")

    def __init__(self, group, n, leq, act, cocycle, check=True):
        self.group = group
        self.n = int(n)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.size = len(self.leq)
        self.act = tuple(tuple(int(v) for v in row) for row in act)
        self.cocycle = {(g, x, y): int(c) % self.n
                        for (g, x, y), c in cocycle.items()}
        if check:
            err = self.validate()
            if err is not None:
                raise PosetError(err)

    # -- structure ---------------------------------------------------------

    def admissible(self, g, x, y):
        return self.leq[self.act[g][x]][y]

    def value(self, g, x, y):
        return self.cocycle[(g, x, y)]

    def stabilizer(self, x):
        G = self.group
        return Subgroup(G, tuple(g for g in G.elements() if self.act[g][x] == x))

    def vertex_character(self, x):
        """The character l_x(g) = l(g,x,x) on the stabilizer of x."""
        Gx = self.stabilizer(x)
        vals = tuple(self.cocycle[(g, x, x)] for g in Gx.members)
        return Character(Gx, self.n, vals)

    def is_discrete(self):
        return all(not self.leq[x][y]
                   for x in range(self.size) for y in range(self.size) if x != y)

    def orbit_reps(self):
        gset = GSet(self.group, self.size, self.act)
        return [orb[0] for orb in gset.orbits()]

    def gset(self):
        return GSet(self.group, self.size, self.act)

    # -- validation --------------------------------------------------------

    def validate(self):
        """None if every invariant holds, else a description of the first failure.

        The cocycle law is checked through its generating decomposition
        (translations, inclusions, and their exchange relation), which is
        equivalent to the full two-morphism composition law.
        """
        m, G, n = self.size, self.group, self.n
        if m > POSET_SIZE_CAP:
            return f"poset size {m} exceeds cap {POSET_SIZE_CAP}"
        if any(len(row) != m for row in self.leq):
            return "order matrix is not square"
        if len(self.act) != G.order or any(len(row) != m for row in self.act):
            return "action table has wrong shape"
        for x in range(m):
            if not self.leq[x][x]:
                return f"order not reflexive at {x}"
            for y in range(m):
                if x != y and self.leq[x][y] and self.leq[y][x]:
                    return f"order not antisymmetric at ({x},{y})"
        for x in range(m):
            for y in range(m):
                if not self.leq[x][y]:
                    continue
                for z in range(m):
                    if self.leq[y][z] and not self.leq[x][z]:
                        return f"order not transitive at ({x},{y},{z})"
        e = G.identity
        if any(self.act[e][x] != x for x in range(m)):
            return "identity does not act trivially"
        for g in G.elements():
            for h in G.elements():
                gh = G.mul_table[g][h]
                if any(self.act[g][self.act[h][x]] != self.act[gh][x]
                       for x in range(m)):
                    return f"action law fails at ({g},{h})"
        for g in G.elements():
            for x in range(m):
                for y in range(m):
                    if self.leq[x][y] and not self.leq[self.act[g][x]][self.act[g][y]]:
                        return f"action does not preserve the order at ({g},{x},{y})"
        admissible = {(g, x, y)
                      for g in G.elements()
                      for x in range(m) for y in range(m)
                      if self.leq[self.act[g][x]][y]}
        if set(self.cocycle) != admissible:
            missing = admissible - set(self.cocycle)
            if missing:
                return f"cocycle missing admissible triple {sorted(missing)[0]}"
            extra = set(self.cocycle) - admissible
            return f"cocycle defined on inadmissible triple {sorted(extra)[0]}"
        for x in range(m):
            if self.cocycle[(e, x, x)] != 0:
                return f"cocycle nonzero on the identity loop at {x}"
        # translations: l(hg, x, (hg)x) = l(h, gx, (hg)x) + l(g, x, gx)
        for g in G.elements():
            for h in G.elements():
                gh = G.mul_table[h][g]
                for x in range(m):
                    gx = self.act[g][x]
                    ghx = self.act[gh][x]
                    lhs = self.cocycle[(gh, x, ghx)]
                    rhs = (self.cocycle[(h, gx, ghx)] + self.cocycle[(g, x, gx)]) % n
                    if lhs != rhs:
                        return f"cocycle composition fails at ({h},{g},{x})"
        # inclusions: l(1, y, z) + l(1, x, y) = l(1, x, z)
        for x in range(m):
            for y in range(m):
                if not self.leq[x][y]:
                    continue
                for z in range(m):
                    if self.leq[y][z]:
                        lhs = self.cocycle[(e, x, z)]
                        rhs = (self.cocycle[(e, y, z)] + self.cocycle[(e, x, y)]) % n
                        if lhs != rhs:
                            return f"cocycle composition fails at (1,{x},{y},{z})"
        # exchange: l(g, x, y) = l(1, gx, y) + l(g, x, gx) for gx <= y
        for (g, x, y) in admissible:
            gx = self.act[g][x]
            lhs = self.cocycle[(g, x, y)]
            rhs = (self.cocycle[(e, gx, y)] + self.cocycle[(g, x, gx)]) % n
            if lhs != rhs:
                return f"cocycle decomposition fails at ({g},{x},{y})"
        # exchange naturality: l(1, gx, gy) + l(g, x, gx) = l(g, y, gy) + l(1, x, y)
        for g in G.elements():
            for x in range(m):
                for y in range(m):
                    if not self.leq[x][y]:
                        continue
                    gx, gy = self.act[g][x], self.act[g][y]
                    lhs = (self.cocycle[(e, gx, gy)] + self.cocycle[(g, x, gx)]) % n
                    rhs = (self.cocycle[(g, y, gy)] + self.cocycle[(e, x, y)]) % n
                    if lhs != rhs:
                        return f"cocycle exchange fails at ({g},{x},{y})"
        return None

    def validate_full(self):
        """Exhaustive two-morphism composition check; cross-checks validate()."""
        err = self.validate()
        if err is not None:
            return err
        n = self.n
        adm = list(self.cocycle)
        by_source = {}
        for (h, y, z) in adm:
            by_source.setdefault(y, []).append((h, z))
        for (g, x, y) in adm:
            for (h, z) in by_source.get(y, ()):
                hg = self.group.mul_table[h][g]
                lhs = (self.cocycle[(h, y, z)] + self.cocycle[(g, x, y)]) % n
                if lhs != self.cocycle[(hg, x, z)]:
                    return f"composition fails at ({h},{y},{z})o({g},{x},{y})"
        return None

    def check(self):
        err = self.validate()
        if err is not None:
            raise PosetError(err)
        return self

    def __repr__(self):
        return (f"MonomialPoset({self.group.name}, n={self.n}, "
                f"size={self.size})")


# ---------------------------------------------------------------------------
# cocycle completion from partial data


def admissible_triples(group, leq, act):
    m = len(leq)
    return [(g, x, y)
            for g in group.elements()
            for x in range(m) for y in range(m)
            if leq[act[g][x]][y]]


def composition_relations(group, leq, act):
    """All relation triples (second, first, composite) of the cocycle law."""
    adm = admissible_triples(group, leq, act)
    by_source = {}
    for (g, x, y) in adm:
        by_source.setdefault(x, []).append((g, y))
    out = []
    for (g, x, y) in adm:
        for (h, z) in by_source.get(y, ()):
            out.append(((h, y, z), (g, x, y), (group.mul_table[h][g], x, z)))
    return adm, out


def saturate_cocycle(n, relations, values):
    """Propagate the composition law through partially known values.

    Mutates and returns the value dict; raises PosetError on a conflict.
    Relations whose unknowns cannot be pinned down are left open.
    """
    pending = True
    while pending:
        pending = False
        for (a, b, c) in relations:
            ka, kb, kc = values.get(a), values.get(b), values.get(c)
            known = (ka is not None) + (kb is not None) + (kc is not None)
            if known == 3:
                if (ka + kb) % n != kc:
                    raise PosetError(f"cocycle conflict at {a} o {b} = {c}")
            elif known == 2:
                if ka is None:
                    values[a] = (kc - kb) % n
                elif kb is None:
                    values[b] = (kc - ka) % n
                else:
                    values[c] = (ka + kb) % n
                pending = True
    return values


def complete_monomial_poset(group, n, leq, act, partial):
    """Build a monomial poset from cocycle values on a generating set.

    Typical generating data: values on covering relations (1, x, y) and on
    translation pairs (g, x, gx).  The remaining values are derived through
    the composition law; underdetermined or inconsistent data is an error,
    and the full validator gates the result.
    """
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    act = tuple(tuple(int(v) for v in row) for row in act)
    adm, relations = composition_relations(group, leq, act)
    adm_set = set(adm)
    values = {(group.identity, x, x): 0 for x in range(len(leq))}
    for key, val in partial.items():
        key = (int(key[0]), int(key[1]), int(key[2]))
        if key not in adm_set:
            raise PosetError(f"triple {key} is not admissible")
        if values.get(key, val % n) != val % n:
            raise PosetError(f"conflicting value for {key}")
        values[key] = val % n
    saturate_cocycle(n, relations, values)
    missing = [k for k in adm if k not in values]
    if missing:
        raise PosetError(f"cocycle underdetermined, e.g. at {missing[0]}")
    return MonomialPoset(group, n, leq, act, values)


# ---------------------------------------------------------------------------
# basic constructors


def _full_cocycle_from(group, n, leq, act, values):
    """Total cocycle dict over all admissible triples from a callable."""
    cocycle = {}
    m = len(leq)
    for g in group.elements():
        for x in range(m):
            gx = act[g][x]
            for y in range(m):
                if leq[gx][y]:
                    cocycle[(g, x, y)] = values(g, x, y) % n
    return cocycle


def trivial_monomial_poset(group, n, leq, act):
    """The trivial-cocycle embedding of a plain G-poset."""
    cocycle = _full_cocycle_from(group, n, leq, act, lambda g, x, y: 0)
    return MonomialPoset(group, n, leq, act, cocycle)


def empty_poset(group, n):
    return MonomialPoset(group, n, (), tuple(() for _ in group.elements()), {})


def point_poset(group, n):
    leq = ((True,),)
    act = tuple((0,) for _ in group.elements())
    return trivial_monomial_poset(group, n, leq, act)


def discrete_leq(m):
    return tuple(tuple(i == j for j in range(m)) for i in range(m))


def mu_hat_poset(group, n, U, mu):
    """The discrete monomial G-set (G/U, mu-hat) attached to a subcharacter."""
    cosets = left_cosets(group, U)
    reps = [cs[0] for cs in cosets]
    index = {}
    for i, cs in enumerate(cosets):
        for x in cs:
            index[x] = i
    m = len(cosets)
    act = tuple(tuple(index[group.mul_table[g][reps[i]]] for i in range(m))
                for g in group.elements())
    leq = discrete_leq(m)
    mu_pos = {x: k for k, x in enumerate(U.members)}

    def val(g, i, j):
        # mu_hat(h, gU, kU) = mu(k^-1 h g)
        w = group.mul_table[group.inv_table[reps[j]]][group.mul_table[g][reps[i]]]
        return mu.values[mu_pos[w]]

    cocycle = _full_cocycle_from(group, n, leq, act, val)
    return MonomialPoset(group, n, leq, act, cocycle)


def five_point_poset(group, n):
    """Two minimal points under three maximal ones, trivial action and cocycle.

    Its Lefschetz invariant is -[G, 1]: the canonical realization of -1.
    """
    m = 5
    leq = [[i == j for j in range(m)] for i in range(m)]
    for a in (0, 1):
        for b in (2, 3, 4):
            leq[a][b] = True
    act = tuple(tuple(range(m)) for _ in group.elements())
    return trivial_monomial_poset(group, n, tuple(tuple(r) for r in leq), act)


# ---------------------------------------------------------------------------
# constructions


def disjoint_union(X, Y):
    if X.group is not Y.group or X.n != Y.n:
        raise PosetError("disjoint union over different (G, C)")
    off = X.size
    m = X.size + Y.size
    leq = [[False] * m for _ in range(m)]
    for x in range(X.size):
        for y in range(X.size):
            leq[x][y] = X.leq[x][y]
    for x in range(Y.size):
        for y in range(Y.size):
            leq[off + x][off + y] = Y.leq[x][y]
    act = tuple(tuple(list(Xr) + [off + v for v in Yr])
                for Xr, Yr in zip(X.act, Y.act))
    cocycle = dict(X.cocycle)
    for (g, x, y), c in Y.cocycle.items():
        cocycle[(g, off + x, off + y)] = c
    return MonomialPoset(X.group, X.n, tuple(tuple(r) for r in leq), act, cocycle)


def product(X, Y):
    if X.group is not Y.group or X.n != Y.n:
        raise PosetError("product over different (G, C)")
    mY = Y.size
    m = X.size * mY

    def pack(x, y):
        return x * mY + y

    leq = [[False] * m for _ in range(m)]
    for x1 in range(X.size):
        for y1 in range(Y.size):
            for x2 in range(X.size):
                if not X.leq[x1][x2]:
                    continue
                for y2 in range(Y.size):
                    if Y.leq[y1][y2]:
                        leq[pack(x1, y1)][pack(x2, y2)] = True
    act = tuple(tuple(pack(Xr[x], Yr[y])
                      for x in range(X.size) for y in range(Y.size))
                for Xr, Yr in zip(X.act, Y.act))
    cocycle = {}
    for g in X.group.elements():
        for x1 in range(X.size):
            gx1 = X.act[g][x1]
            for y1 in range(Y.size):
                gy1 = Y.act[g][y1]
                for x2 in range(X.size):
                    if not X.leq[gx1][x2]:
                        continue
                    cx = X.cocycle[(g, x1, x2)]
                    for y2 in range(Y.size):
                        if Y.leq[gy1][y2]:
                            cocycle[(g, pack(x1, y1), pack(x2, y2))] = \
                                (cx + Y.cocycle[(g, y1, y2)]) % X.n
    return MonomialPoset(X.group, X.n, tuple(tuple(r) for r in leq), act, cocycle)


def opposite(X):
    """Order reversed; cocycle l_op(g,x,y) = -l(g^-1,y,x)."""
    G = X.group
    leq = tuple(tuple(X.leq[y][x] for y in range(X.size)) for x in range(X.size))
    cocycle = {}
    for g in G.elements():
        gi = G.inv_table[g]
        for x in range(X.size):
            gx = X.act[g][x]
            for y in range(X.size):
                if leq[gx][y]:
                    cocycle[(g, x, y)] = (-X.cocycle[(gi, y, x)]) % X.n
    return MonomialPoset(G, X.n, leq, X.act, cocycle)


def sub_monomial_poset(X, vertices, H=None):
    """The induced sub-monomial-poset on a vertex subset, over a subgroup H.

    H defaults to the full group; the vertex set must be H-stable.
    Returns (poset over H.as_group(), vertex list), or with the original
    group when H is None.
    """
    verts = sorted(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    if H is None:
        grp = X.group
        elems = list(X.group.elements())
        lift = elems
    else:
        grp = H.as_group()
        lift = H.members
        elems = range(len(lift))
    for v in verts:
        for i in elems:
            if X.act[lift[i]][v] not in pos:
                raise PosetError("vertex set is not stable under the subgroup")
    m = len(verts)
    leq = tuple(tuple(X.leq[verts[i]][verts[j]] for j in range(m))
                for i in range(m))
    act = tuple(tuple(pos[X.act[lift[i]][verts[j]]] for j in range(m))
                for i in elems)
    cocycle = {}
    for i in elems:
        for a in range(m):
            ga = act[i][a]
            for b in range(m):
                if leq[ga][b]:
                    cocycle[(i, a, b)] = X.cocycle[(lift[i], verts[a], verts[b])]
    return MonomialPoset(grp, X.n, leq, act, cocycle), verts


def restrict(Y, H):
    """Restriction to a subgroup H <= G, over H.as_group()."""
    poset, _ = sub_monomial_poset(Y, range(Y.size), H)
    return poset


def induce(G, H, X):
    """Induction of a monomial poset from H.as_group() up to G.

    Carrier is [G:H] x X; order relates only pairs in the same coset block.
    """
    if X.group is not H.as_group():
        raise PosetError("poset is not over the subgroup's group")
    hpos = {x: i for i, x in enumerate(H.members)}
    reps = [cs[0] for cs in left_cosets(G, H)]
    rep_index = {}
    for i, r in enumerate(reps):
        for u in H.members:
            rep_index[G.mul_table[r][u]] = i
    mX = X.size
    m = len(reps) * mX

    def pack(i, x):
        return i * mX + x

    leq = [[False] * m for _ in range(m)]
    for i in range(len(reps)):
        for x in range(mX):
            for y in range(mX):
                if X.leq[x][y]:
                    leq[pack(i, x)][pack(i, y)] = True
    act = []
    conn = {}  # (g, i) -> (j, local h index) with g*reps[i] = reps[j]*h
    for g in G.elements():
        row = []
        for i in range(len(reps)):
            gr = G.mul_table[g][reps[i]]
            j = rep_index[gr]
            h = G.mul_table[G.inv_table[reps[j]]][gr]
            conn[(g, i)] = (j, hpos[h])
            for x in range(mX):
                row.append(0)
        act.append(row)
    for g in G.elements():
        for i in range(len(reps)):
            j, h = conn[(g, i)]
            for x in range(mX):
                act[g][pack(i, x)] = pack(j, X.act[h][x])
    cocycle = {}
    for g in G.elements():
        for i in range(len(reps)):
            j, h = conn[(g, i)]
            for x in range(mX):
                hx = X.act[h][x]
                for y in range(mX):
                    if X.leq[hx][y]:
                        cocycle[(g, pack(i, x), pack(j, y))] = X.cocycle[(h, x, y)]
    return MonomialPoset(G, X.n, tuple(tuple(r) for r in leq),
                         tuple(tuple(r) for r in act), cocycle)


# ---------------------------------------------------------------------------
# chains


def all_chains(X, length):
    """All strictly increasing chains with length+1 vertices, lexicographic."""
    out = []
    strictly_above = [[y for y in range(X.size) if X.leq[x][y] and x != y]
                      for x in range(X.size)]

    def extend(chain):
        if len(chain) == length + 1:
            out.append(tuple(chain))
            return
        for y in strictly_above[chain[-1]]:
            chain.append(y)
            extend(chain)
            chain.pop()

    for x in range(X.size):
        extend([x])
    return out


def max_chain_length(X):
    best = 0
    memo = {}

    def height(x):
        if x in memo:
            return memo[x]
        h = 0
        for y in range(X.size):
            if X.leq[x][y] and x != y:
                h = max(h, 1 + height(y))
        memo[x] = h
        return h

    for x in range(X.size):
        best = max(best, height(x))
    return best


def chains_poset(X, length):
    """(Sd_length(X), l_length) as a discrete monomial G-set, with its chains.

    The cocycle of a chain morphism reads off l at the smallest entries.
    """
    chains = all_chains(X, length)
    index = {c: i for i, c in enumerate(chains)}
    m = len(chains)
    G = X.group
    act = tuple(tuple(index[tuple(X.act[g][v] for v in c)] for c in chains)
                for g in G.elements())
    leq = discrete_leq(m)
    cocycle = {}
    for g in G.elements():
        for i, c in enumerate(chains):
            j = act[g][i]
            cocycle[(g, i, j)] = X.cocycle[(g, c[0], chains[j][0])]
    return MonomialPoset(G, X.n, leq, act, cocycle, check=False), chains


# ---------------------------------------------------------------------------
# fixed subposets and Euler characteristics


@dataclass(frozen=True)
class PlainPoset:
    """A bare finite poset: vertex labels plus an order matrix."""

    vertices: tuple
    leq: tuple

    @property
    def size(self):
        return len(self.vertices)


def fixed_subposet(X, sc):
    """(X, l)^{U,mu}: U-fixed vertices whose vertex character restricts to mu."""
    U = sc.subgroup
    mu = sc.character
    verts = []
    for x in range(X.size):
        if any(X.act[u][x] != x for u in U.members):
            continue
        if all(X.cocycle[(u, x, x)] == mv
               for u, mv in zip(U.members, mu.values)):
            verts.append(x)
    leq = tuple(tuple(X.leq[a][b] for b in verts) for a in verts)
    return PlainPoset(tuple(verts), leq)


def euler_char(P):
    """Alternating chain count; the empty poset has Euler characteristic 0."""
    m = P.size
    memo = {}

    def from_vertex(v):
        # alternating sum over chains with minimum entry v
        if v in memo:
            return memo[v]
        total = 1
        for w in range(m):
            if P.leq[v][w] and v != w:
                total -= from_vertex(w)
        memo[v] = total
        return total

    return sum(from_vertex(v) for v in range(m))


# ---------------------------------------------------------------------------
# maps of monomial posets


@dataclass(frozen=True)
class MonomialPosetMap:
    """A pair (f, lambda): equivariant order-preserving map with natural twist."""

    source: MonomialPoset
    target: MonomialPoset
    f: tuple
    lam: tuple

    def __post_init__(self):
        X, Y = self.source, self.target
        if X.group is not Y.group or X.n != Y.n:
            raise PosetError("map between posets over different (G, C)")
        f = tuple(int(v) for v in self.f)
        lam = tuple(int(v) % X.n for v in self.lam)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "lam", lam)
        if len(f) != X.size or len(lam) != X.size:
            raise PosetError("map tables have wrong length")
        for g in X.group.elements():
            for x in range(X.size):
                if f[X.act[g][x]] != Y.act[g][f[x]]:
                    raise PosetError(f"map not equivariant at ({g},{x})")
        for x in range(X.size):
            for y in range(X.size):
                if X.leq[x][y] and not Y.leq[f[x]][f[y]]:
                    raise PosetError(f"map not order-preserving at ({x},{y})")
        for (g, x, y), c in X.cocycle.items():
            lhs = (Y.cocycle[(g, f[x], f[y])] + lam[x]) % X.n
            if lhs != (lam[y] + c) % X.n:
                raise PosetError(f"twist not natural at ({g},{x},{y})")


def identity_map(X):
    return MonomialPosetMap(X, X, tuple(range(X.size)), (0,) * X.size)


def enumerate_poset_maps(X, Y):
    """All G-equivariant order-preserving vertex maps X -> Y."""
    if X.size == 0:
        return [()]
    G = X.group
    gset = GSet(G, X.size, X.act)
    orbits = gset.orbits()
    reps = [o[0] for o in orbits]
    transport = {}
    for orb in orbits:
        r = orb[0]
        transport[r] = G.identity
        frontier = [r]
        seen = {r}
        while frontier:
            v = frontier.pop()
            for g in G.generators if G.generators else []:
                w = X.act[g][v]
                if w not in seen:
                    seen.add(w)
                    transport[w] = G.mul_table[g][transport[v]]
                    frontier.append(w)
    candidates = []
    for r in reps:
        stab = [g for g in G.elements() if X.act[g][r] == r]
        cand = [y for y in range(Y.size)
                if all(Y.act[g][y] == y for g in stab)]
        candidates.append(cand)
    maps = []
    for combo in itertools.product(*candidates):
        f = [None] * X.size
        for r, y in zip(reps, combo):
            f[r] = y
        for v in range(X.size):
            if f[v] is None:
                r = next(rr for rr, orb in zip(reps, orbits) if v in orb)
                f[v] = Y.act[transport[v]][f[r]]
        ok = all(Y.leq[f[a]][f[b]]
                 for a in range(X.size) for b in range(X.size) if X.leq[a][b])
        if ok:
            maps.append(tuple(f))
    return maps


def enumerate_twists(X, Y, f):
    """All natural transformations lambda for a fixed vertex map f."""
    n = X.n
    m = X.size
    if m == 0:
        return [()]
    # constraint graph: lam[y] - lam[x] = Y.cocycle(g,fx,fy) - X.cocycle(g,x,y)
    offsets = {}
    for (g, x, y), c in X.cocycle.items():
        d = (Y.cocycle[(g, f[x], f[y])] - c) % n
        prev = offsets.get((x, y))
        if prev is not None and prev != d:
            return []
        offsets[(x, y)] = d
    adj = {x: [] for x in range(m)}
    for (x, y), d in offsets.items():
        adj[x].append((y, d))
        adj[y].append((x, (-d) % n))
    components = []
    assigned = [None] * m
    for root in range(m):
        if assigned[root] is not None:
            continue
        comp = [root]
        assigned[root] = 0
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for (w, d) in adj[v]:
                val = (assigned[v] + d) % n
                if assigned[w] is None:
                    assigned[w] = val
                    comp.append(w)
                    frontier.append(w)
                elif assigned[w] != val:
                    return []
        components.append(comp)
    base = list(assigned)
    out = []
    for shifts in itertools.product(range(n), repeat=len(components)):
        lam = list(base)
        for comp, s in zip(components, shifts):
            for v in comp:
                lam[v] = (lam[v] + s) % n
        out.append(tuple(lam))
    return out


def enumerate_morphisms(X, Y):
    """Every map of monomial posets (f, lambda): X -> Y, exhaustively."""
    out = []
    for f in enumerate_poset_maps(X, Y):
        for lam in enumerate_twists(X, Y, f):
            out.append(MonomialPosetMap(X, Y, f, lam))
    return out


def hom_count(X, Y):
    return sum(len(enumerate_twists(X, Y, f)) for f in enumerate_poset_maps(X, Y))


# ---------------------------------------------------------------------------
# joins, fibers, intervals


def join(mp):
    """X *_{f,lambda} Y on the carrier X ⊔ Y, cross order via f."""
    X, Y = mp.source, mp.target
    off = X.size
    m = X.size + Y.size
    leq = [[False] * m for _ in range(m)]
    for a in range(X.size):
        for b in range(X.size):
            leq[a][b] = X.leq[a][b]
    for a in range(Y.size):
        for b in range(Y.size):
            leq[off + a][off + b] = Y.leq[a][b]
    for a in range(X.size):
        for b in range(Y.size):
            leq[a][off + b] = Y.leq[mp.f[a]][b]
    act = tuple(tuple(list(Xr) + [off + v for v in Yr])
                for Xr, Yr in zip(X.act, Y.act))
    n = X.n
    cocycle = dict(X.cocycle)
    for (g, a, b), c in Y.cocycle.items():
        cocycle[(g, off + a, off + b)] = c
    for g in X.group.elements():
        for a in range(X.size):
            ga = X.act[g][a]
            for b in range(Y.size):
                if Y.leq[mp.f[ga]][b]:
                    cocycle[(g, a, off + b)] = \
                        (Y.cocycle[(g, mp.f[a], b)] + mp.lam[a]) % n
    return MonomialPoset(X.group, n, tuple(tuple(r) for r in leq), act, cocycle)


def fiber_below(mp, y):
    """f^y = {x : f(x) <= y} as a monomial poset over the stabilizer of y."""
    X, Y = mp.source, mp.target
    Gy = Y.stabilizer(y)
    verts = [x for x in range(X.size) if Y.leq[mp.f[x]][y]]
    return sub_monomial_poset(X, verts, Gy)


def fiber_above(mp, y):
    """f_y = {x : f(x) >= y} as a monomial poset over the stabilizer of y."""
    X, Y = mp.source, mp.target
    Gy = Y.stabilizer(y)
    verts = [x for x in range(X.size) if Y.leq[y][mp.f[x]]]
    return sub_monomial_poset(X, verts, Gy)


def open_interval_above(X, x):
    """]x, .[ with the restricted cocycle, over the stabilizer of x."""
    Gx = X.stabilizer(x)
    verts = [y for y in range(X.size) if X.leq[x][y] and y != x]
    return sub_monomial_poset(X, verts, Gx)


def open_interval_below(X, x):
    """]., x[ with the restricted cocycle, over the stabilizer of x."""
    Gx = X.stabilizer(x)
    verts = [y for y in range(X.size) if X.leq[y][x] and y != x]
    return sub_monomial_poset(X, verts, Gx)


# ---------------------------------------------------------------------------
# isomorphism


def _orbit_profile(X):
    gset = X.gset()
    profile = []
    for orb in gset.orbits():
        r = orb[0]
        stab = tuple(g for g in X.group.elements() if X.act[g][r] == r)
        chars = tuple(sorted(X.cocycle[(g, r, r)] for g in stab))
        down = sum(1 for y in range(X.size) if X.leq[y][r])
        up = sum(1 for y in range(X.size) if X.leq[r][y])
        profile.append((len(orb), stab and len(stab), chars, down, up))
    return sorted(profile)


def find_isomorphism(X, Y):
    """An isomorphism of monomial posets (f, lambda), or None.

    Backtracking over equivariant order isomorphisms with a compatible
    natural twist; intended for small instances only.
    """
    if X.group is not Y.group or X.n != Y.n or X.size != Y.size:
        return None
    if X.size == 0:
        return MonomialPosetMap(X, Y, (), ())
    if _orbit_profile(X) != _orbit_profile(Y):
        return None
    G = X.group
    orbits = X.gset().orbits()
    reps = [o[0] for o in orbits]

    def extend(i, f, used):
        if i == len(reps):
            fv = tuple(f)
            for a in range(X.size):
                for b in range(X.size):
                    if X.leq[a][b] != Y.leq[fv[a]][fv[b]]:
                        return None
            twists = enumerate_twists(X, Y, fv)
            if twists:
                return MonomialPosetMap(X, Y, fv, twists[0])
            return None
        r = reps[i]
        stab = [g for g in G.elements() if X.act[g][r] == r]
        for y in range(Y.size):
            if y in used:
                continue
            if any(Y.act[g][y] != y for g in stab):
                continue
            if sum(1 for g in G.elements() if Y.act[g][y] == y) != len(stab):
                continue
            trial = list(f)
            new = {}
            ok = True
            for g in G.elements():
                src = X.act[g][r]
                dst = Y.act[g][y]
                if trial[src] is None and src not in new:
                    new[src] = dst
                else:
                    cur = new.get(src, trial[src])
                    if cur != dst:
                        ok = False
                        break
            if not ok:
                continue
            if set(new.values()) & used or len(set(new.values())) != len(new):
                continue
            for s, d in new.items():
                trial[s] = d
            res = extend(i + 1, trial, used | set(new.values()))
            if res is not None:
                return res
        return None

    return extend(0, [None] * X.size, set())


def is_isomorphic(X, Y):
    return find_isomorphism(X, Y) is not None


# ---------------------------------------------------------------------------
# conversion to and from fibred sets (discrete case)


def monomial_set_to_fibred(X):
    """F(X, l) = C x_l X with action (k,g)(c,x) = (k+c+l(g,x,gx), gx)."""
    from .burnside import RawFibredSet
    if not X.is_discrete():
        raise PosetError("only discrete monomial posets correspond to fibred sets")
    n, m = X.n, X.size

    def pack(c, x):
        return c * m + x

    g_act = []
    for g in X.group.elements():
        row = [0] * (n * m)
        for c in range(n):
            for x in range(m):
                gx = X.act[g][x]
                row[pack(c, x)] = pack((c + X.cocycle[(g, x, gx)]) % n, gx)
        g_act.append(tuple(row))
    c_perm = tuple(pack((c + 1) % n, x) for c in range(n) for x in range(m))
    return RawFibredSet(X.group, n, tuple(g_act), c_perm, check=False)


def fibred_to_monomial(S):
    """C-orbits of a fibred set with the transported cocycle; quasi-inverse of F."""
    n = S.n
    orbit_rep = {}
    reps = []
    for x in range(S.size):
        if x in orbit_rep:
            continue
        orb = [x]
        y = x
        for _ in range(n - 1):
            y = S.c_perm[y]
            orb.append(y)
        if len(set(orb)) != n:
            raise GroupError("C-action is not free")
        r = min(orb)
        for p in orb:
            if p in orbit_rep and orbit_rep[p] != r:
                raise GroupError("inconsistent C-orbits")
            orbit_rep[p] = r
        if r == x:
            reps.append(x)
    reps = sorted(set(orbit_rep.values()))
    index = {r: i for i, r in enumerate(reps)}
    m = len(reps)
    act = []
    offset = {}
    for g in S.group.elements():
        row = []
        for i, r in enumerate(reps):
            gr = S.g_act[g][r]
            r2 = orbit_rep[gr]
            row.append(index[r2])
            # unique c with g.r = c.r2
            y, c = r2, 0
            while y != gr:
                y = S.c_perm[y]
                c += 1
            offset[(g, i)] = c % n
        act.append(tuple(row))
    leq = discrete_leq(m)
    cocycle = {}
    for g in S.group.elements():
        for i in range(m):
            cocycle[(g, i, act[g][i])] = offset[(g, i)]
    return MonomialPoset(S.group, n, leq, tuple(act), cocycle)
