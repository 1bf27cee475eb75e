"""Batch command line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .burnside import mark_matrix, mark_vector
from .groups import GroupError, catalog_group, catalog_names
from .lefschetz import lefschetz, realize
from .serialize import (
    InputError,
    biset_from_json,
    dumps,
    element_from_json,
    element_to_json,
    load_json,
    mark_matrix_to_json,
    poset_from_json,
    poset_to_json,
    resolve_group,
    subchar_to_json,
)
from .subchars import subchar_table
from .verify import SUITES, run_suite

DEFAULT_CAPS = {"group": 48, "poset": 10, "biset": 16, "modulus": 6}


def _parser():
    p = argparse.ArgumentParser(prog="monoburn",
                                description="exact monomial Burnside ring toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, group=True):
        if group:
            sp.add_argument("--group", required=True,
                            help="catalog name or group JSON file")
        sp.add_argument("--n", type=int, default=1,
                        help="coefficient modulus (C = Z/n)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--max-poset", type=int, default=DEFAULT_CAPS["poset"],
                        help="override the poset size cap")
        sp.add_argument("--max-biset", type=int, default=DEFAULT_CAPS["biset"],
                        help="override the biset size cap")
        sp.add_argument("--json", dest="as_json", action="store_true")
        sp.add_argument("--text", dest="as_json", action="store_false")
        sp.set_defaults(as_json=True)

    sp = sub.add_parser("catalog", help="list built-in groups")
    sp.add_argument("--json", dest="as_json", action="store_true", default=True)

    sp = sub.add_parser("subchars", help="subcharacter classes of (G, Z/n)")
    common(sp)

    sp = sub.add_parser("mul", help="multiply two ring elements")
    common(sp)
    sp.add_argument("elements", nargs=2, help="two element JSON files")

    sp = sub.add_parser("marks", help="mark matrix, or the marks of an element")
    common(sp)
    sp.add_argument("--element", help="element JSON file")

    sp = sub.add_parser("lefschetz", help="Lefschetz invariant of a poset file")
    common(sp)
    sp.add_argument("--poset", required=True)

    sp = sub.add_parser("realize", help="a poset realizing an element")
    common(sp)
    sp.add_argument("--element", required=True)

    sp = sub.add_parser("tensor-induce", help="tensor-induce a poset file")
    common(sp, group=False)
    sp.add_argument("--biset", required=True)
    sp.add_argument("--poset", required=True)

    sp = sub.add_parser("tensor-induce-ring", help="tensor-induce an element")
    common(sp, group=False)
    sp.add_argument("--biset", required=True)
    sp.add_argument("--element", required=True)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", choices=sorted(SUITES) + ["all"])
    common(sp)
    return p


def _check_caps(group, n):
    if group.order > DEFAULT_CAPS["group"]:
        raise InputError(f"group order {group.order} exceeds the cap "
                         f"{DEFAULT_CAPS['group']}")
    if not (1 <= n <= DEFAULT_CAPS["modulus"]):
        raise InputError(f"modulus {n} outside 1..{DEFAULT_CAPS['modulus']}")


def _element_report(elem, as_json):
    if as_json:
        return dumps(element_to_json(elem))
    return repr(elem)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return _dispatch(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GroupError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args):
    if args.command == "catalog":
        data = [{"name": name, "order": catalog_group(name).order}
                for name in catalog_names()]
        print(dumps(data))
        return 0

    if args.command == "verify":
        group = resolve_group(args.group)
        _check_caps(group, args.n)
        names = sorted(SUITES) if args.suite == "all" else [args.suite]
        reports = [run_suite(name, group, args.n, seed=args.seed)
                   for name in names]
        payload = [r.as_dict() for r in reports]
        print(dumps(payload) if args.as_json else
              "\n".join(f"{r.name}: {'ok' if r.passed else 'FAIL'} "
                        f"({r.cases} cases)" for r in reports))
        return 0 if all(r.passed for r in reports) else 1

    group = None
    if getattr(args, "group", None) is not None:
        group = resolve_group(args.group)
        _check_caps(group, args.n)

    if args.command == "subchars":
        table = subchar_table(group, args.n)
        data = [dict(subchar_to_json(sc),
                     normalizer_index=table.normalizer_index(i),
                     orbit_size=table.orbit_sizes[i])
                for i, sc in enumerate(table.classes)]
        print(dumps(data) if args.as_json else
              "\n".join(str(d) for d in data))
        return 0

    if args.command == "mul":
        table = subchar_table(group, args.n)
        a = element_from_json(table, load_json(args.elements[0]))
        b = element_from_json(table, load_json(args.elements[1]))
        print(_element_report(a * b, args.as_json))
        return 0

    if args.command == "marks":
        table = subchar_table(group, args.n)
        if args.element:
            elem = element_from_json(table, load_json(args.element))
            data = {"marks": list(mark_vector(elem)),
                    "classes": [subchar_to_json(sc) for sc in table.classes]}
        else:
            data = mark_matrix_to_json(table)
        print(dumps(data))
        return 0

    if args.command == "lefschetz":
        table = subchar_table(group, args.n)
        X = poset_from_json(group, args.n, load_json(args.poset))
        if X.size > args.max_poset:
            raise InputError(f"poset size {X.size} exceeds the cap")
        rep = lefschetz(X, table)
        data = {
            "element": element_to_json(rep.element),
            "chain_orbit_tally": {str(k): v
                                  for k, v in rep.chain_orbit_tally.items()},
            "gamma": {str(k): v for k, v in sorted(rep.gamma.items())},
            "m": {str(k): v for k, v in sorted(rep.m.items())},
            "seed": args.seed,
        }
        print(dumps(data) if args.as_json else repr(rep.element))
        return 0

    if args.command == "realize":
        table = subchar_table(group, args.n)
        elem = element_from_json(table, load_json(args.element))
        X = realize(table, elem)
        print(dumps(poset_to_json(X)))
        return 0

    if args.command == "tensor-induce":
        from .tensor_induction import tensor_induce_poset
        B = biset_from_json(args.n, load_json(args.biset))
        if B.size > args.max_biset:
            raise InputError(f"biset size {B.size} exceeds the cap")
        X = poset_from_json(B.left, args.n, load_json(args.poset))
        result = tensor_induce_poset(B, X)
        print(dumps(poset_to_json(result.poset)))
        return 0

    if args.command == "tensor-induce-ring":
        from .tensor_induction import tensor_induce_ring
        B = biset_from_json(args.n, load_json(args.biset))
        table = subchar_table(B.left, args.n)
        elem = element_from_json(table, load_json(args.element))
        print(_element_report(tensor_induce_ring(B, elem), args.as_json))
        return 0

    raise InputError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
