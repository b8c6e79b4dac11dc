import json

import pytest

from multlie import builtins
from multlie.algebra import star_closure
from multlie.errors import AxiomViolation
from multlie.group import center
from multlie.io import (algebra_to_dict, group_from_dict, group_to_dict, load_algebra,
                        load_bundle_raw, load_group, parse_ideal, split_names, write_json)


def test_group_roundtrip():
    G = builtins.group("d4")
    H = group_from_dict(json.loads(json.dumps(group_to_dict(G))))
    assert H.same_tables(G) and H.element_names == G.element_names


def test_group_order_mismatch():
    with pytest.raises(ValueError):
        group_from_dict({"order": 3, "mul": [[0, 1], [1, 0]]})


def test_bundle_roundtrip(tmp_path):
    M = builtins.algebra("e1-excision")
    p = tmp_path / "e1.json"
    write_json(algebra_to_dict(M), p)
    N = load_algebra(str(p))
    assert N.same_tables(M)
    assert json.loads(p.read_text())["provenance"]["kind"] == "excision"


def test_bundle_with_group_file_and_moved_identity(tmp_path):
    # Z2 stored with the identity at index 1
    (tmp_path / "g.json").write_text(json.dumps({"mul": [[1, 0], [0, 1]], "elements": ["t", "e"]}))
    (tmp_path / "m.json").write_text(json.dumps({"group": "g.json", "star": [[1, 1], [1, 1]]}))
    G, star, name = load_bundle_raw(str(tmp_path / "m.json"))
    assert G.identity == 0 and G.label(0) == "e"
    assert star == [[0, 0], [0, 0]]
    assert name == "m"


def test_bad_bundle_raises(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"group": "z2", "star": [[0, 1], [1, 0]]}))
    with pytest.raises(AxiomViolation):
        load_algebra(str(p))


def test_load_group_builtin_and_file(tmp_path):
    assert load_group("q8").order == 8
    p = tmp_path / "z3.json"
    write_json(group_to_dict(builtins.group("z3")), p)
    assert load_group(str(p)).same_tables(builtins.group("z3"))


def test_split_names():
    assert split_names("1,a") == ["1", "a"]
    assert split_names("(1,1),(1,a)") == ["(1,1)", "(1,a)"]
    assert split_names("") == []


def test_parse_ideal_keywords():
    M = builtins.algebra("d4-x")
    G = M.group
    assert parse_ideal(M, "all") == G.full()
    assert parse_ideal(M, "trivial") == G.trivial()
    assert parse_ideal(M, "center") == center(G)
    assert parse_ideal(M, "star-closure") == star_closure(M)
    assert parse_ideal(M, "1,x2") == center(G)


def test_parse_ideal_unknown_name():
    with pytest.raises(KeyError):
        parse_ideal(builtins.algebra("v4-a"), "1,q")
