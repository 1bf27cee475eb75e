import json

import pytest

from monoburn.cli import main
from monoburn.groups import catalog_group
from monoburn.posets import five_point_poset, point_poset
from monoburn.serialize import (
    biset_to_json,
    dumps,
    element_to_json,
    poset_to_json,
)
from monoburn.subchars import subchar_table
from monoburn.burnside import basis_of_class, one
from monoburn.tensor_induction import identity_biset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(dumps(data), encoding="utf-8")
    return str(path)


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    names = {entry["name"] for entry in json.loads(out)}
    assert {"C2", "S3", "D8", "Q8"} <= names


def test_subchars_s3(capsys):
    code, out, _ = run(capsys, "subchars", "--group", "S3", "--n", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 6


def test_mul_identity_echoes_other_factor(tmp_path, capsys):
    t = subchar_table(catalog_group("S3"), 2)
    a = basis_of_class(t, 0) + basis_of_class(t, 2).scale(-2)
    fa = write_json(tmp_path, "a.json", element_to_json(a))
    fe = write_json(tmp_path, "e.json", element_to_json(one(t)))
    code, out, _ = run(capsys, "mul", "--group", "S3", "--n", "2", fa, fe)
    assert code == 0
    assert json.loads(out) == element_to_json(a)


def test_marks_matrix_upper_triangular(capsys):
    code, out, _ = run(capsys, "marks", "--group", "D8", "--n", "2")
    assert code == 0
    data = json.loads(out)
    M = data["matrix"]
    for i in range(len(M)):
        assert M[i][i] > 0
        for j in range(i):
            assert M[i][j] == 0


def test_lefschetz_of_five_point_poset(tmp_path, capsys):
    G = catalog_group("S3")
    W = five_point_poset(G, 2)
    fp = write_json(tmp_path, "w.json", poset_to_json(W))
    code, out, _ = run(capsys, "lefschetz", "--group", "S3", "--n", "2",
                       "--poset", fp)
    assert code == 0
    data = json.loads(out)
    t = subchar_table(G, 2)
    assert data["element"] == element_to_json(-one(t))
    assert data["chain_orbit_tally"] == {"0": 5, "1": 6}


def test_lefschetz_trivial_cocycle_shorthand(tmp_path, capsys):
    G = catalog_group("C2")
    W = five_point_poset(G, 2)
    data = poset_to_json(W)
    data["cocycle"] = "trivial"
    fp = write_json(tmp_path, "w.json", data)
    code, out, _ = run(capsys, "lefschetz", "--group", "C2", "--n", "2",
                       "--poset", fp)
    assert code == 0
    t = subchar_table(G, 2)
    assert json.loads(out)["element"] == element_to_json(-one(t))


def test_realize_roundtrip_through_files(tmp_path, capsys):
    t = subchar_table(catalog_group("S3"), 2)
    a = basis_of_class(t, 1).scale(2) - basis_of_class(t, 3)
    fa = write_json(tmp_path, "a.json", element_to_json(a))
    code, out, _ = run(capsys, "realize", "--group", "S3", "--n", "2",
                       "--element", fa)
    assert code == 0
    fp = write_json(tmp_path, "x.json", json.loads(out))
    # the realized poset is larger than the default cap: exit 2 without the
    # override, success with it
    code, _, _ = run(capsys, "lefschetz", "--group", "S3", "--n", "2",
                     "--poset", fp)
    assert code == 2
    code, out, _ = run(capsys, "lefschetz", "--group", "S3", "--n", "2",
                       "--poset", fp, "--max-poset", "40")
    assert code == 0
    assert json.loads(out)["element"] == element_to_json(a)


def test_tensor_induce_ring_through_files(tmp_path, capsys):
    G = catalog_group("C2")
    B = identity_biset(G, 2)
    fb = write_json(tmp_path, "b.json", biset_to_json(B))
    t = subchar_table(G, 2)
    a = basis_of_class(t, 2)
    fa = write_json(tmp_path, "a.json", element_to_json(a))
    code, out, _ = run(capsys, "tensor-induce-ring", "--n", "2",
                       "--biset", fb, "--element", fa)
    assert code == 0
    assert json.loads(out) == element_to_json(a)


def test_tensor_induce_poset_through_files(tmp_path, capsys):
    G = catalog_group("C2")
    B = identity_biset(G, 2)
    fb = write_json(tmp_path, "b.json", biset_to_json(B))
    P = point_poset(G, 2)
    fp = write_json(tmp_path, "p.json", poset_to_json(P))
    code, out, _ = run(capsys, "tensor-induce", "--n", "2",
                       "--biset", fb, "--poset", fp)
    assert code == 0
    assert json.loads(out)["vertices"] == 1


def test_verify_suite_passes(capsys):
    code, out, _ = run(capsys, "verify", "lefschetz-multiplicativity",
                       "--group", "S3", "--n", "2", "--seed", "7")
    assert code == 0
    data = json.loads(out)
    assert data[0]["passed"] is True
    assert data[0]["seed"] == 7


def test_verify_reports_are_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "mark-homomorphism",
                         "--group", "C2", "--n", "2", "--seed", "3")
    code2, out2, _ = run(capsys, "verify", "mark-homomorphism",
                         "--group", "C2", "--n", "2", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "lefschetz", "--group", "S3", "--n", "2",
                       "--poset", str(bad))
    assert code == 2
    assert "input error" in err


def test_unknown_group_exits_2(capsys):
    code, _, err = run(capsys, "subchars", "--group", "nope", "--n", "2")
    assert code == 2


def test_cap_violation_exits_2(tmp_path, capsys):
    code, _, err = run(capsys, "subchars", "--group", "S3", "--n", "9")
    assert code == 2


def test_group_from_file(tmp_path, capsys):
    spec = {"name": "K", "degree": 4,
            "generators": [[1, 0, 2, 3], [0, 1, 3, 2]]}
    fg = write_json(tmp_path, "grp.json", spec)
    code, out, _ = run(capsys, "subchars", "--group", fg, "--n", "1")
    assert code == 0
    assert len(json.loads(out)) == 5  # V4 has 5 subgroup classes
