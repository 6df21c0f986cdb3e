import json
from fractions import Fraction as Q

import pytest
from hypothesis import given

from plgroups.cli import run
from plgroups.constructions import bump, interpolate
from plgroups.families import dyadic_reflection_group, gs_group
from plgroups.io import (
    FORMAT_VERSION,
    DocumentError,
    emit,
    group_document,
    group_from_json,
    interval_from_json,
    interval_to_json,
    map_document,
    map_from_json,
    parse,
    parse_interval,
)
from plgroups.plmap import Compact, HalfLine, Line
from plgroups.scalar import sqrt

from strategies import line_maps, unit_maps


# -- documents --------------------------------------------------------------------------------

@given(unit_maps())
def test_map_document_roundtrip(f):
    text = map_document(f, Compact(1))
    kind, payload = parse(text)
    assert kind == "map"
    g, interval = map_from_json(payload)
    assert g == f and interval == Compact(1)
    assert map_document(g, interval) == text


@given(line_maps(decreasing=True))
def test_decreasing_map_roundtrip(f):
    kind, payload = parse(map_document(f))
    assert map_from_json(payload)[0] == f


def test_quadratic_map_roundtrip():
    f = interpolate([(0, 0), (1, sqrt(2))], 1, 1)
    text = map_document(f)
    assert "." not in json.loads(text)["payload"]["points"][1][1]
    assert map_from_json(parse(text)[1])[0] == f


@pytest.mark.parametrize("factory", [gs_group, dyadic_reflection_group])
def test_group_document_roundtrip(factory):
    G = factory()
    text = group_document(G)
    H = group_from_json(parse(text)[1])
    assert H.generators == G.generators
    assert H.slope_group == G.slope_group and H.module == G.module and H.interval == G.interval
    assert group_document(H) == text


def test_intervals():
    for I in (Line(), HalfLine(), Compact(1), Compact(3, Q(1, 2))):
        assert interval_from_json(interval_to_json(I)) == I
    assert parse_interval("line") == Line()
    assert parse_interval("half") == HalfLine()
    assert parse_interval("2") == Compact(2)
    assert parse_interval("[1/2,3]") == Compact(3, Q(1, 2))


def test_document_errors():
    with pytest.raises(DocumentError):
        parse("not json")
    with pytest.raises(DocumentError):
        parse(json.dumps({"format_version": FORMAT_VERSION + 1, "kind": "map", "payload": {}}))
    bad = emit("map", {"interval": "line", "points": [["0", "0"], ["1", "0.5"]], "left": None, "right": None})
    with pytest.raises((DocumentError, ValueError)):
        map_from_json(parse(bad)[1])


# -- command line -------------------------------------------------------------------------------

def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_lemma72_then_verify(tmp_path):
    grp = str(tmp_path / "g.json")
    assert run(["construct", "lemma72", "--out", grp]) == 0
    rep = str(tmp_path / "rep.txt")
    assert run(["verify", "f-relations", grp, "--out", rep]) == 0
    text = open(rep).read()
    assert text.startswith("command: verify f-relations\nproperty: ")
    assert text.rstrip().endswith("status: holds")


def test_builtin_groups_verify():
    assert run(["verify", "f-relations", "builtin:dyadic-gs", "--pair", "f,h"]) == 0


def test_incompatible_radicands_exit_2(tmp_path):
    a = write(tmp_path, "a.json", map_document(interpolate([(0, 0), (1, sqrt(2))], 1, 1)))
    b = write(tmp_path, "b.json", map_document(interpolate([(0, 0), (1, sqrt(3))], 1, 1)))
    assert run(["map", "compose", a, b]) == 2


def test_lemma75_cli(capsys):
    assert run(["units", "lemma75", "--p1", "2,3,5", "--p2", "3,5,7"]) == 0
    assert "distinct_for_all_u, π=2" in capsys.readouterr().out


def test_lemma75_inapplicable_is_unsupported():
    assert run(["units", "lemma75", "--p1", "2,3", "--p2", "3,5"]) == 3


def test_mixed_character_exit_3(tmp_path):
    f = write(tmp_path, "f.json", map_document(bump(2, 1), Compact(1)))
    assert run(["char", "sign", f, "--char", "chi_l+tau_r"]) == 3


def test_char_sign_cli(tmp_path, capsys):
    f = write(tmp_path, "f.json", map_document(bump(2, 1), Compact(1)))
    assert run(["char", "sign", f, "--char", "2*chi_l+3*chi_r"]) == 0
    assert "has sign +1" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    [],
    ["map"],
    ["map", "eval"],
    ["units", "gl2z", "sqrt2"],
    ["group", "ball", "builtin:nope"],
    ["map", "eval", "/nonexistent.json", "1"],
    ["units", "trivial", "--p", "x"],
])
def test_bad_input_exit_2(argv):
    assert run(argv) == 2


def test_budget_overflow_exit_2():
    assert run(["group", "ball", "builtin:gs", "--radius", "4", "--budget", "50"]) == 2


def test_failing_property_exit_1():
    assert run(["units", "gl2z", "(0)+(1)√2", "(0)+(1)√3"]) == 1


def test_json_report_format(capsys):
    assert run(["group", "independence", "builtin:independent", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "report" and doc["format_version"] == FORMAT_VERSION
    assert doc["payload"]["status"] == "independent"


def test_same_seed_same_bytes(tmp_path):
    outs = []
    for k in range(2):
        p = str(tmp_path / f"r{k}.txt")
        argv = ["sigma1", "evidence", "builtin:gs", "--radius", "2", "--random-rays", "4", "--seed", "7", "--out", p]
        assert run(argv) == 0
        outs.append(open(p, "rb").read())
    assert outs[0] == outs[1]
