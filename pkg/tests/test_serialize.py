import json

import pytest
from hypothesis import given, settings, strategies as st

from distcat.bases import BUILTIN_BASES, builtin_base
from distcat.dist import BOT, Dist, DistObject
from distcat.distlaw import DistributorFamily, ProdOfSums, ProdOfSumsObject
from distcat.errors import MalformedInput
from distcat.fam import FamObject
from distcat.models import m3
from distcat.serialize import (
    category_from_dict,
    category_to_dict,
    dist_morphism_from_dict,
    dist_morphism_to_dict,
    dist_object_from_dict,
    dist_object_to_dict,
    fam_object_from_dict,
    fam_object_to_dict,
    family_from_dict,
    family_to_dict,
    lattice_from_dict,
    lattice_to_dict,
    load_json,
    pos_morphism_from_dict,
    pos_morphism_to_dict,
    render_label,
)
from distcat.suite import decode_arg, encode_arg

from helpers import dist_objects, draw_morphism


def test_render_label():
    assert render_label(BOT) == "bot"
    assert render_label((1, ("a", BOT))) == "(1,(a,bot))"
    assert render_label(()) == "()"
    assert render_label("x") == "x"


@pytest.mark.parametrize("name", sorted(BUILTIN_BASES))
def test_category_round_trip(name):
    cat = builtin_base(name)
    again = category_from_dict(json.loads(json.dumps(category_to_dict(cat))))
    assert category_to_dict(again) == category_to_dict(cat)


def test_category_identities_default():
    cat = category_from_dict({"objects": ["a"], "morphisms": []})
    assert cat.identity("a") == "id_a"
    assert cat.compose("id_a", "id_a") == "id_a"


@pytest.mark.parametrize("bad", [
    [],
    {"morphisms": []},
    {"objects": ["a"], "morphisms": [{"id": "f"}]},
    {"objects": ["a"], "morphisms": [{"id": "f", "src": "a", "dst": "a"}],
     "compose": [{"g": "f", "f": "f", "result": "f"}, {"g": "f", "f": "f", "result": "f"}]},
])
def test_malformed_category(bad):
    with pytest.raises(MalformedInput):
        category_from_dict(bad)


def test_load_json_errors(tmp_path, fixtures):
    with pytest.raises(MalformedInput):
        load_json(fixtures / "truncated.json")
    with pytest.raises(MalformedInput):
        load_json(tmp_path / "missing.json")


@settings(max_examples=40)
@given(dist_objects(["a", "b"]))
def test_dist_object_round_trip(x):
    d = dist_object_to_dict(x)
    assert dist_object_from_dict(json.loads(json.dumps(d))) == x


def test_computed_labels_render():
    d = Dist(builtin_base("terminal"))
    e = d.exponential(DistObject.container(1), DistObject.container(2))
    doc = dist_object_to_dict(e)
    again = dist_object_from_dict(doc)
    assert again.outer == tuple(render_label(j) for j in e.outer)
    assert any("bot" in j for j in again.outer)
    assert d.iso(again, e) is not None


@settings(max_examples=30)
@given(dist_objects(["a"]), dist_objects(["a"]), st.data())
def test_dist_morphism_round_trip(x, y, data):
    dist = Dist(category_from_dict({"objects": ["a"]}))
    h = draw_morphism(data, dist, x, y)
    if h is None:
        return
    assert dist_morphism_from_dict(json.loads(json.dumps(dist_morphism_to_dict(h)))) == h


def test_pos_morphism_round_trip():
    pos = ProdOfSums(builtin_base("discrete2"))
    x = ProdOfSumsObject.of(["a", "b"], ["a"])
    y = ProdOfSumsObject.of(["a"], ["b", "a"])
    homs = pos.hom(x, y)
    assert homs
    for g in homs:
        assert pos_morphism_from_dict(json.loads(json.dumps(pos_morphism_to_dict(g)))) == g


def test_fam_and_family_round_trip():
    x = FamObject.of("a", "b", "a")
    assert fam_object_from_dict(fam_object_to_dict(x)) == x
    fam = DistributorFamily.of([1, 2], [], [0])
    assert family_from_dict(family_to_dict(fam)) == fam
    with pytest.raises(MalformedInput):
        family_from_dict({"J": ["1"], "I": {}, "entries": {}})
    with pytest.raises(MalformedInput):
        fam_object_from_dict({"index": ["a"], "entries": {}})
    with pytest.raises(MalformedInput):
        dist_object_from_dict({"outer": ["1"], "inner": {"1": ["0"]}, "entries": {}})


def test_lattice_round_trip(fixtures):
    L = lattice_from_dict(load_json(fixtures / "lattice_m3.json"))
    assert lattice_to_dict(lattice_from_dict(lattice_to_dict(L))) == lattice_to_dict(L)
    assert set(L.elements) == set(m3().elements)
    with pytest.raises(MalformedInput):
        lattice_from_dict({"elements": ["a"]})
    with pytest.raises(MalformedInput):
        lattice_from_dict({"elements": ["a"], "leq": [["a"]]})


def test_witness_args_round_trip():
    d = Dist(builtin_base("terminal"))
    x = DistObject.container(2, 0)
    h = d.identity(x)
    fam = DistributorFamily.of([x], [d.terminal()])
    for v in [None, 3, "s", True, x, h, fam, DistributorFamily.of([1, 2]), FamObject.of(1), [x, 2]]:
        assert decode_arg(json.loads(json.dumps(encode_arg(v)))) == (list(v) if isinstance(v, list) else v)
    with pytest.raises(MalformedInput):
        decode_arg({"nope": 1})
    with pytest.raises(TypeError):
        encode_arg(object())
