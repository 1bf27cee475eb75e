"""Finite groups as explicit Cayley tables, with subgroups, cosets and actions.

Elements of a group of order n are the integers 0..n-1.  Everything is
exact and immutable after construction; all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

GROUP_ORDER_CAP = 10_000
_FULL_ASSOC_CHECK_CAP = 256


class GroupError(ValueError):
    """Raised for malformed group data or cap violations."""


class FiniteGroup:
    """Group on elements 0..order-1 given by a full multiplication table."""

    def __init__(self, mul_table, name="G", generators=None, check=True):
        table = tuple(tuple(int(x) for x in row) for row in mul_table)
        n = len(table)
        if n == 0 or n > GROUP_ORDER_CAP:
            raise GroupError(f"group order {n} out of range [1, {GROUP_ORDER_CAP}]")
        for row in table:
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise GroupError("multiplication table is not square over 0..n-1")
        self.order = n
        self.mul_table = table
        self.name = str(name)
        self.identity = self._find_identity()
        self.inv_table = self._find_inverses()
        if check:
            self._check_associative()
        if generators is not None:
            self.generators = tuple(int(g) for g in generators)
        else:
            self.generators = self._small_generating_set()
        self._subgroups = None
        self._subchar_tables = {}

    def _find_identity(self):
        for e in range(self.order):
            if all(self.mul_table[e][x] == x and self.mul_table[x][e] == x
                   for x in range(self.order)):
                return e
        raise GroupError("table has no two-sided identity")

    def _find_inverses(self):
        inv = [None] * self.order
        e = self.identity
        for a in range(self.order):
            for b in range(self.order):
                if self.mul_table[a][b] == e and self.mul_table[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError(f"element {a} has no two-sided inverse")
        return tuple(inv)

    def _check_associative(self):
        n = self.order
        if n > _FULL_ASSOC_CHECK_CAP:
            return
        mt = self.mul_table
        for a in range(n):
            for b in range(n):
                ab = mt[a][b]
                row_a = mt[a]
                for c in range(n):
                    if mt[ab][c] != row_a[mt[b][c]]:
                        raise GroupError(f"table not associative at ({a},{b},{c})")

    def _small_generating_set(self):
        gens = []
        current = {self.identity}
        for x in range(self.order):
            if x not in current:
                gens.append(x)
                current = set(closure_of(self, gens))
                if len(current) == self.order:
                    break
        return tuple(gens)

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        return self.inv_table[a]

    def conj(self, g, x):
        """g x g^-1."""
        return self.mul_table[self.mul_table[g][x]][self.inv_table[g]]

    def elements(self):
        return range(self.order)

    def element_order(self, a):
        e, k, x = self.identity, 1, a
        while x != e:
            x = self.mul_table[x][a]
            k += 1
        return k

    def is_abelian(self):
        mt = self.mul_table
        return all(mt[a][b] == mt[b][a]
                   for a in range(self.order) for b in range(self.order))

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def closure_of(group, seed):
    """Sorted tuple of the subgroup generated by the given elements."""
    e = group.identity
    mt = group.mul_table
    seen = {e}
    frontier = [e]
    gens = sorted(set(seed) | {e})
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mt[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a sorted tuple of element indices of its parent."""

    parent: FiniteGroup
    members: tuple

    def __post_init__(self):
        mem = tuple(sorted(set(int(x) for x in self.members)))
        object.__setattr__(self, "members", mem)
        G = self.parent
        ms = set(mem)
        if G.identity not in ms:
            raise GroupError("subgroup misses the identity")
        for a in mem:
            if G.inv_table[a] not in ms:
                raise GroupError("subgroup not closed under inverse")
            for b in mem:
                if G.mul_table[a][b] not in ms:
                    raise GroupError("subgroup not closed under multiplication")
        if G.order % len(mem) != 0:
            raise GroupError("subgroup size does not divide group order")

    @property
    def size(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def index_in_parent(self):
        return self.parent.order // len(self.members)

    def key(self):
        return (len(self.members), self.members)

    def as_group(self):
        """This subgroup as a standalone FiniteGroup.

        The returned group carries `embedding` (local index -> parent
        element) and `parent_group` attributes.
        """
        return _subgroup_as_group(self)

    def local_index(self, parent_elt):
        return self.members.index(parent_elt)

    def __repr__(self):
        return f"Subgroup({self.parent.name}, {list(self.members)})"


_SUBGROUP_GROUP_CACHE = {}


def _subgroup_as_group(sub):
    cache_key = (id(sub.parent), sub.members)
    got = _SUBGROUP_GROUP_CACHE.get(cache_key)
    if got is not None:
        return got[0]
    mem = sub.members
    pos = {x: i for i, x in enumerate(mem)}
    mt = [[pos[sub.parent.mul_table[a][b]] for b in mem] for a in mem]
    grp = FiniteGroup(mt, name=f"{sub.parent.name}|{list(mem)}", check=False)
    grp.embedding = mem
    grp.parent_group = sub.parent
    # keep the parent referenced so the id-based key stays valid
    _SUBGROUP_GROUP_CACHE[cache_key] = (grp, sub.parent)
    return grp


def trivial_subgroup(G):
    return Subgroup(G, (G.identity,))


def full_subgroup(G):
    return Subgroup(G, tuple(G.elements()))


def all_subgroups(G):
    """Every subgroup of G exactly once, sorted by (size, member list).

    Breadth-first closure over cyclic extensions; fine at desk scale.
    """
    if G._subgroups is not None:
        return G._subgroups
    seen = {closure_of(G, ())}
    frontier = list(seen)
    while frontier:
        nxt = []
        for mem in frontier:
            ms = set(mem)
            for g in G.elements():
                if g in ms:
                    continue
                bigger = closure_of(G, mem + (g,))
                if bigger not in seen:
                    seen.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    subs = [Subgroup(G, mem) for mem in sorted(seen, key=lambda m: (len(m), m))]
    G._subgroups = subs
    return subs


def conjugate_subgroup(g, U):
    G = U.parent
    return Subgroup(G, tuple(G.conj(g, x) for x in U.members))


def normalizer(U):
    G = U.parent
    ms = set(U.members)
    norm = [g for g in G.elements()
            if all(G.conj(g, x) in ms for x in U.members)]
    return Subgroup(G, tuple(norm))


def intersect_subgroups(U, V):
    if U.parent is not V.parent:
        raise GroupError("subgroups of different parents")
    return Subgroup(U.parent, tuple(sorted(set(U.members) & set(V.members))))


def double_cosets(U, V):
    """Lexicographically minimal representatives of U\\G/V."""
    if U.parent is not V.parent:
        raise GroupError("subgroups of different parents")
    G = U.parent
    covered = [False] * G.order
    reps = []
    for g in G.elements():
        if covered[g]:
            continue
        reps.append(g)
        for u in U.members:
            ug = G.mul_table[u][g]
            for v in V.members:
                covered[G.mul_table[ug][v]] = True
    return reps


def left_cosets(G, U):
    """Left cosets gU as sorted tuples, ordered by minimal element."""
    seen = set()
    cosets = []
    for g in G.elements():
        if g in seen:
            continue
        cs = tuple(sorted(G.mul_table[g][u] for u in U.members))
        seen.update(cs)
        cosets.append(cs)
    return cosets


def coset_reps(G, U):
    return [cs[0] for cs in left_cosets(G, U)]


@dataclass(frozen=True)
class GSet:
    """A finite left G-set given by an explicit action table."""

    group: FiniteGroup
    size: int
    action: tuple

    def __post_init__(self):
        act = tuple(tuple(int(x) for x in row) for row in self.action)
        object.__setattr__(self, "action", act)
        G = self.group
        if len(act) != G.order or any(len(row) != self.size for row in act):
            raise GroupError("action table has wrong shape")
        e = G.identity
        if any(act[e][x] != x for x in range(self.size)):
            raise GroupError("identity does not act trivially")
        for g in G.elements():
            for h in G.elements():
                gh = G.mul_table[g][h]
                if any(act[g][act[h][x]] != act[gh][x] for x in range(self.size)):
                    raise GroupError(f"action law fails at ({g},{h})")

    def act(self, g, x):
        return self.action[g][x]

    def stabilizer(self, x):
        if not (0 <= x < self.size):
            raise GroupError(f"point {x} out of range")
        G = self.group
        return Subgroup(G, tuple(g for g in G.elements()
                                 if self.action[g][x] == x))

    def orbits(self):
        seen = [False] * self.size
        out = []
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
                for g in self.group.generators:
                    frontier.append(self.action[g][p])
            orb = sorted(orb)
            for p in orb:
                seen[p] = True
            out.append(orb)
        return out


def coset_gset(G, U):
    """The transitive G-set G/U with points ordered by minimal coset element."""
    cosets = left_cosets(G, U)
    index = {cs: i for i, cs in enumerate(cosets)}
    act = []
    for g in G.elements():
        row = []
        for cs in cosets:
            moved = tuple(sorted(G.mul_table[g][x] for x in cs))
            row.append(index[moved])
        act.append(row)
    return GSet(G, len(cosets), tuple(tuple(r) for r in act))


def regular_gset(G):
    return GSet(G, G.order, G.mul_table)


class ProductGroup(FiniteGroup):
    """Direct product G x H with elements packed as a*|H| + b."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        nh = right.order
        order = left.order * nh
        mt = [[0] * order for _ in range(order)]
        for a1 in left.elements():
            for b1 in right.elements():
                x = a1 * nh + b1
                for a2 in left.elements():
                    arow = left.mul_table[a1][a2]
                    for b2 in right.elements():
                        mt[x][a2 * nh + b2] = arow * nh + right.mul_table[b1][b2]
        gens = [g * nh + right.identity for g in left.generators]
        gens += [left.identity * nh + h for h in right.generators]
        super().__init__(mt, name=f"{left.name}x{right.name}",
                         generators=gens, check=False)

    def pair(self, a, b):
        return a * self.right.order + b

    def unpair(self, x):
        return divmod(x, self.right.order)


_PRODUCT_CACHE = {}


def direct_product(G, H):
    """The direct product, cached so repeated calls share one instance."""
    key = (id(G), id(H))
    got = _PRODUCT_CACHE.get(key)
    if got is not None:
        return got[0]
    if G.order * H.order > GROUP_ORDER_CAP:
        raise GroupError("product order exceeds cap")
    prod = ProductGroup(G, H)
    # keep the factors referenced so the id-based key stays valid
    _PRODUCT_CACHE[key] = (prod, G, H)
    return prod


def _perm_closure(generators, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise GroupError(f"generator {g} is not a bijection on 0..{degree-1}")
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    if len(seen) >= GROUP_ORDER_CAP:
                        raise GroupError("closure exceeds the group order cap")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def group_from_permutations(generators, degree, name="G"):
    """The permutation group generated by one-line images on 0..degree-1."""
    perms = _perm_closure(generators, degree)
    index = {p: i for i, p in enumerate(perms)}
    mt = []
    for p in perms:
        row = []
        for q in perms:
            row.append(index[tuple(p[q[i]] for i in range(degree))])
        mt.append(row)
    gen_idx = [index[tuple(g)] for g in generators]
    grp = FiniteGroup(mt, name=name, generators=gen_idx or None)
    grp.degree = degree
    grp.permutations = perms
    return grp


def group_from_table(table, name="G"):
    return FiniteGroup(table, name=name)


def build_group(spec):
    """Build a group from a JSON-style spec dict.

    Accepts {"name", "degree", "generators": [[...], ...]} with 0-based
    one-line permutations, or {"name", "table": [[...], ...]}.
    """
    name = spec.get("name", "G")
    if "table" in spec:
        return group_from_table(spec["table"], name=name)
    if "generators" in spec:
        degree = int(spec["degree"])
        return group_from_permutations(spec["generators"], degree, name=name)
    raise GroupError("group spec needs either 'table' or 'generators'")


def cyclic_group(n, name=None):
    mt = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(mt, name=name or f"C{n}",
                       generators=(1 % n,) if n > 1 else None)


def symmetric_group_3():
    return group_from_permutations([[1, 0, 2], [1, 2, 0]], 3, name="S3")


def dihedral_group_8():
    # symmetries of a square: rotation and the reflection fixing vertex 0
    return group_from_permutations([[1, 2, 3, 0], [0, 3, 2, 1]], 4, name="D8")


def quaternion_group_8():
    # left regular action of Q8 on {1, i, -1, -i, j, k, -j, -k}
    i_perm = [1, 2, 3, 0, 5, 6, 7, 4]
    j_perm = [4, 7, 6, 5, 2, 1, 0, 3]
    return group_from_permutations([i_perm, j_perm], 8, name="Q8")


def klein_group():
    return group_from_permutations([[1, 0, 2, 3], [0, 1, 3, 2]], 4, name="V4")


_CATALOG_BUILDERS = {
    "C1": lambda: cyclic_group(1),
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C5": lambda: cyclic_group(5),
    "C6": lambda: cyclic_group(6),
    "C8": lambda: cyclic_group(8),
    "S3": symmetric_group_3,
    "D8": dihedral_group_8,
    "Q8": quaternion_group_8,
    "V4": klein_group,
}

_CATALOG_ALIASES = {"1": "C1", "TRIVIAL": "C1", "C2XC2": "V4", "K4": "V4"}

_CATALOG_CACHE = {}


def catalog_names():
    return sorted(_CATALOG_BUILDERS)


def catalog_group(name):
    """A built-in group by name (C1..C8, S3, D8, Q8, V4)."""
    key = str(name).upper()
    key = _CATALOG_ALIASES.get(key, key)
    if key not in _CATALOG_BUILDERS:
        raise GroupError(f"unknown catalog group {name!r}; "
                         f"known: {', '.join(catalog_names())}")
    if key not in _CATALOG_CACHE:
        _CATALOG_CACHE[key] = _CATALOG_BUILDERS[key]()
    return _CATALOG_CACHE[key]
