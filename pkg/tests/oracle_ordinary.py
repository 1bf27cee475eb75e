"""Independent brute-force ordinary Burnside machinery (trivial coefficients).

Deliberately self-contained: subgroups come from an all-subsets scan, marks
from direct fixed-point counts on explicit coset spaces, and Euler
characteristics from naive chain enumeration.  Shares no code paths with
the package internals it cross-checks.
"""

import itertools


def brute_subgroups(mul_table, identity):
    """All subgroups of a small group, by scanning every subset."""
    n = len(mul_table)
    elements = range(n)
    subgroups = []
    for r in range(n + 1):
        for subset in itertools.combinations(elements, r):
            s = set(subset)
            if identity not in s:
                continue
            if all(mul_table[a][b] in s for a in s for b in s):
                subgroups.append(tuple(sorted(s)))
    return sorted(subgroups, key=lambda m: (len(m), m))


def brute_conjugacy_classes(mul_table, inv_table, subgroups):
    """Subgroup conjugacy classes with minimal representatives."""
    n = len(mul_table)
    classes = []
    seen = set()
    for mem in subgroups:
        if mem in seen:
            continue
        orbit = set()
        for g in range(n):
            gi = inv_table[g]
            orbit.add(tuple(sorted(mul_table[mul_table[g][x]][gi] for x in mem)))
        seen |= orbit
        classes.append(min(orbit))
    return sorted(classes, key=lambda m: (len(m), m))


def brute_cosets(mul_table, members):
    n = len(mul_table)
    seen = set()
    cosets = []
    for g in range(n):
        if g in seen:
            continue
        cs = tuple(sorted(mul_table[g][u] for u in members))
        seen.update(cs)
        cosets.append(cs)
    return cosets


def brute_mark(mul_table, U_members, V_members):
    """Number of fixed points of U on G/V, counted coset by coset."""
    count = 0
    for cs in brute_cosets(mul_table, V_members):
        cs_set = set(cs)
        if all(all(mul_table[u][x] in cs_set for x in cs) for u in U_members):
            count += 1
    return count


def brute_table_of_marks(mul_table, inv_table, identity):
    """The classical table of marks over subgroup conjugacy classes."""
    subs = brute_subgroups(mul_table, identity)
    classes = brute_conjugacy_classes(mul_table, inv_table, subs)
    return classes, [[brute_mark(mul_table, U, V) for V in classes]
                     for U in classes]


def brute_chain_count(vertices, leq, length):
    """Strictly increasing chains with length+1 entries among the vertices."""
    count = 0

    def extend(last, depth):
        nonlocal count
        if depth == length:
            count += 1
            return
        for v in vertices:
            if v != last and leq(last, v):
                extend(v, depth + 1)

    for v in vertices:
        extend(v, 0)
    return count


def brute_euler_char(vertices, leq):
    total = 0
    length = 0
    while True:
        c = brute_chain_count(vertices, leq, length)
        if c == 0:
            break
        total += c if length % 2 == 0 else -c
        length += 1
    return total


def brute_fixed_euler(leq_matrix, act, U_members):
    """chi of the U-fixed subposet of a plain G-poset."""
    verts = [x for x in range(len(leq_matrix))
             if all(act[u][x] == x for u in U_members)]
    return brute_euler_char(verts, lambda a, b: leq_matrix[a][b])


def brute_equivariant_maps(left_act_tables, g_count, carrier_size, x_act, x_size):
    """All G-equivariant functions from a biset carrier to a G-set."""
    maps = []
    for combo in itertools.product(range(x_size), repeat=carrier_size):
        if all(combo[left_act_tables[g][u]] == x_act[g][combo[u]]
               for g in range(g_count) for u in range(carrier_size)):
            maps.append(combo)
    return maps
