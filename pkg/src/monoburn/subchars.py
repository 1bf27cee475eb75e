"""The coefficient group C = Z/n, characters into C, and subcharacter tables.

A subcharacter of G is a pair (U, mu) of a subgroup U <= G and a
homomorphism mu: U -> C.  C is written additively here (residues mod n);
the multiplicative identity of the literature is the residue 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    all_subgroups,
    closure_of,
    conjugate_subgroup,
)


@dataclass(frozen=True)
class CoefficientGroup:
    """The cyclic group Z/n, written additively."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def elements(self):
        return range(self.modulus)


@dataclass(frozen=True)
class Character:
    """A homomorphism from a subgroup into Z/n, stored as a full value table."""

    subgroup: Subgroup
    modulus: int
    values: tuple  # residues, aligned with subgroup.members

    def __post_init__(self):
        vals = tuple(int(v) % self.modulus for v in self.values)
        object.__setattr__(self, "values", vals)
        mem = self.subgroup.members
        if len(vals) != len(mem):
            raise ValueError("value table does not match the subgroup")
        pos = {x: i for i, x in enumerate(mem)}
        G = self.subgroup.parent
        if vals[pos[G.identity]] != 0:
            raise ValueError("character is nonzero on the identity")
        for a in mem:
            for b in mem:
                if (vals[pos[a]] + vals[pos[b]]) % self.modulus != vals[pos[G.mul_table[a][b]]]:
                    raise ValueError(f"not a homomorphism at ({a},{b})")

    def value(self, g):
        return self.values[self.subgroup.members.index(g)]

    def is_trivial(self):
        return all(v == 0 for v in self.values)

    def restrict(self, U):
        """Restriction to a subgroup U of the domain."""
        if not set(U.members) <= set(self.subgroup.members):
            raise GroupError("restriction target is not contained in the domain")
        pos = {x: i for i, x in enumerate(self.subgroup.members)}
        vals = tuple(self.values[pos[x]] for x in U.members)
        return Character(U, self.modulus, vals)

    def key(self):
        return self.values


def trivial_character(U, n):
    return Character(U, n, (0,) * len(U.members))


def all_characters(U, coeff):
    """All homomorphisms U -> Z/n, each exactly once, sorted by value table.

    Values are assigned on a small generating set and extended by a
    breadth-first sweep that also verifies consistency.
    """
    n = coeff.modulus if isinstance(coeff, CoefficientGroup) else int(coeff)
    G = U.parent
    gens = []
    current = {G.identity}
    for x in U.members:
        if x not in current:
            gens.append(x)
            current = set(closure_of(G, gens))
    out = []
    for assignment in itertools.product(range(n), repeat=len(gens)):
        vals = _extend_assignment(U, gens, assignment, n)
        if vals is not None:
            out.append(Character(U, n, vals))
    out.sort(key=lambda ch: ch.values)
    return out


def _extend_assignment(U, gens, assignment, n):
    G = U.parent
    pos = {x: i for i, x in enumerate(U.members)}
    vals = [None] * len(U.members)
    vals[pos[G.identity]] = 0
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            vx = vals[pos[x]]
            for g, vg in zip(gens, assignment):
                y = G.mul_table[x][g]
                vy = (vx + vg) % n
                if vals[pos[y]] is None:
                    vals[pos[y]] = vy
                    nxt.append(y)
                elif vals[pos[y]] != vy:
                    return None
        frontier = nxt
    return tuple(vals)


def restrict_character(nu, U):
    return nu.restrict(U)


@dataclass(frozen=True)
class Subcharacter:
    """A pair (U, mu): subgroup with a character into Z/n."""

    subgroup: Subgroup
    character: Character

    def __post_init__(self):
        if self.character.subgroup != self.subgroup:
            raise ValueError("character domain differs from the subgroup")

    @property
    def modulus(self):
        return self.character.modulus

    def key(self):
        return (len(self.subgroup.members), self.subgroup.members,
                self.character.values)

    def __repr__(self):
        return (f"Subcharacter({list(self.subgroup.members)}, "
                f"{list(self.character.values)} mod {self.modulus})")


def subcharacter(U, mu):
    return Subcharacter(U, mu)


def conj_subchar(g, sc):
    """The conjugate subcharacter g(U, mu): subgroup gUg^-1, value x -> mu(g^-1 x g)."""
    U = sc.subgroup
    G = U.parent
    V = conjugate_subgroup(g, U)
    gi = G.inv_table[g]
    pos = {x: i for i, x in enumerate(U.members)}
    vals = tuple(sc.character.values[pos[G.conj(gi, x)]] for x in V.members)
    return Subcharacter(V, Character(V, sc.modulus, vals))


def leq_subchar(a, b):
    """(U, mu) <= (V, nu): containment of subgroups with restriction matching."""
    if a.subgroup.parent is not b.subgroup.parent:
        raise GroupError("subcharacters of different groups")
    if a.modulus != b.modulus:
        raise GroupError("subcharacters over different coefficient moduli")
    if not set(a.subgroup.members) <= set(b.subgroup.members):
        return False
    return b.character.restrict(a.subgroup).values == a.character.values


class SubcharTable:
    """Canonical conjugacy classes of subcharacters of one (G, Z/n).

    Classes are ordered by non-decreasing subgroup size, then by the
    canonical key of their minimal representative.
    """

    def __init__(self, group, n):
        self.group = group
        self.coeff = CoefficientGroup(n)
        self.n = n
        classes = []
        class_of = {}
        normalizers = []
        orbit_sizes = []
        for U in all_subgroups(group):
            for ch in all_characters(U, n):
                sc = Subcharacter(U, ch)
                if sc.key() in class_of:
                    continue
                orbit = {}
                for g in group.elements():
                    c = conj_subchar(g, sc)
                    orbit.setdefault(c.key(), c)
                rep = orbit[min(orbit)]
                idx = len(classes)
                classes.append(rep)
                for k in orbit:
                    class_of[k] = idx
                norm = tuple(g for g in group.elements()
                             if conj_subchar(g, rep).key() == rep.key())
                normalizers.append(Subgroup(group, norm))
                orbit_sizes.append(len(orbit))
        order = sorted(range(len(classes)), key=lambda i: classes[i].key())
        self.classes = [classes[i] for i in order]
        rank = {old: new for new, old in enumerate(order)}
        self.class_of_key = {k: rank[v] for k, v in class_of.items()}
        self.normalizers = [normalizers[i] for i in order]
        self.orbit_sizes = [orbit_sizes[i] for i in order]
        for sz, nn in zip(self.orbit_sizes, self.normalizers):
            assert sz * len(nn.members) == group.order
        self._mul_cache = {}
        self._mark_matrix = None
        self._coset_reps = {}

    def __len__(self):
        return len(self.classes)

    def class_index(self, sc):
        """Index of the conjugacy class of a subcharacter."""
        idx = self.class_of_key.get(sc.key())
        if idx is None:
            raise GroupError("subcharacter does not belong to this table")
        return idx

    def class_index_of(self, U, mu):
        return self.class_index(Subcharacter(U, mu))

    def one_index(self):
        """Index of the class of (G, trivial)."""
        from .groups import full_subgroup
        G = full_subgroup(self.group)
        return self.class_index(Subcharacter(G, trivial_character(G, self.n)))

    def normalizer_index(self, i):
        """|N_G(V, nu) : V| for the i-th class."""
        return len(self.normalizers[i].members) // len(self.classes[i].subgroup.members)

    def describe(self, i):
        sc = self.classes[i]
        return {"subgroup": list(sc.subgroup.members),
                "values": {str(g): v for g, v in
                           zip(sc.subgroup.members, sc.character.values)}}


def subchar_table(group, n):
    """The subcharacter table of (group, Z/n), cached on the group object."""
    tab = group._subchar_tables.get(n)
    if tab is None:
        tab = SubcharTable(group, n)
        group._subchar_tables[n] = tab
    return tab
