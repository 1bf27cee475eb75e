"""JSON encoding and decoding for groups, elements, posets and bisets."""

from __future__ import annotations

import json
from pathlib import Path

from .burnside import BurnsideElement, mark_matrix
from .groups import FiniteGroup, GroupError, Subgroup, build_group, catalog_group, direct_product
from .posets import MonomialPoset
from .subchars import Character, SubcharTable, Subcharacter
from .tensor_induction import MonomialBiset


class InputError(ValueError):
    """Raised for malformed or unreadable inputs; maps to exit code 2."""


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def resolve_group(ref):
    """A group from a catalog name, a spec dict, or a path to a JSON file."""
    if isinstance(ref, FiniteGroup):
        return ref
    if isinstance(ref, dict):
        try:
            return build_group(ref)
        except GroupError as exc:
            raise InputError(str(exc)) from exc
    name = str(ref)
    try:
        return catalog_group(name)
    except GroupError:
        pass
    if Path(name).exists():
        return resolve_group(load_json(name))
    raise InputError(f"unknown group {name!r}: not a catalog name or a file")


def subchar_to_json(sc):
    return {"subgroup": list(sc.subgroup.members),
            "values": {str(g): v for g, v in
                       zip(sc.subgroup.members, sc.character.values)}}


def subchar_from_json(group, n, data):
    try:
        members = tuple(sorted(int(x) for x in data["subgroup"]))
        U = Subgroup(group, members)
        values = tuple(int(data["values"][str(g)]) for g in U.members)
        return Subcharacter(U, Character(U, n, values))
    except (KeyError, TypeError, ValueError, GroupError) as exc:
        raise InputError(f"malformed subcharacter: {exc}") from exc


def element_to_json(elem):
    out = []
    for i in sorted(elem.coeffs):
        entry = subchar_to_json(elem.table.classes[i])
        entry["coeff"] = elem.coeffs[i]
        out.append(entry)
    return out


def element_from_json(table, data):
    if not isinstance(data, list):
        raise InputError("element JSON must be a list of terms")
    coeffs = {}
    for entry in data:
        sc = subchar_from_json(table.group, table.n, entry)
        i = table.class_index(sc)
        coeffs[i] = coeffs.get(i, 0) + int(entry.get("coeff", 1))
    return BurnsideElement(table, coeffs)


def poset_to_json(X):
    return {
        "vertices": X.size,
        "leq": [[bool(v) for v in row] for row in X.leq],
        "action": [list(row) for row in X.act],
        "cocycle": [{"g": g, "x": x, "y": y, "c": c}
                    for (g, x, y), c in sorted(X.cocycle.items())],
    }


def poset_from_json(group, n, data):
    try:
        m = int(data["vertices"])
        leq = tuple(tuple(bool(v) for v in row) for row in data["leq"])
        act = tuple(tuple(int(v) for v in row) for row in data["action"])
        spec = data.get("cocycle", "trivial")
        if spec == "trivial":
            cocycle = {}
            for g in group.elements():
                for x in range(m):
                    for y in range(m):
                        if leq[act[g][x]][y]:
                            cocycle[(g, x, y)] = 0
        else:
            cocycle = {(int(e["g"]), int(e["x"]), int(e["y"])): int(e["c"])
                       for e in spec}
        return MonomialPoset(group, n, leq, act, cocycle)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed poset JSON: {exc}") from exc
    except Exception as exc:  # PosetError and friends carry the real message
        raise InputError(f"invalid monomial poset: {exc}") from exc


def biset_to_json(B):
    data = poset_to_json(B.carrier)
    data["left"] = B.left.name
    data["right"] = B.right.name
    return data


def biset_from_json(n, data, left=None, right=None):
    try:
        G = resolve_group(left if left is not None else data["left"])
        H = resolve_group(right if right is not None else data["right"])
    except KeyError as exc:
        raise InputError("biset JSON needs 'left' and 'right' group refs") from exc
    prod = direct_product(G, H)
    carrier = poset_from_json(prod, n, data)
    try:
        return MonomialBiset(G, H, carrier, prod=prod)
    except GroupError as exc:
        raise InputError(f"invalid biset: {exc}") from exc


def mark_matrix_to_json(table):
    return {
        "classes": [subchar_to_json(sc) for sc in table.classes],
        "matrix": [list(row) for row in mark_matrix(table)],
    }


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=True)
