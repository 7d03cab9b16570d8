"""JSON file formats for categories, families, lattices and morphisms.

Computed objects carry structured labels (tuples for pairs and choice
functions, ``BOT`` in exponent shapes).  On output every label is rendered to a
string: pairs as ``"(j,i)"`` and ``BOT`` as ``"bot"``.  Loading never parses
labels back, so a reloaded object is equal to the rendered one.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import PresentedCategory, presented
from .dist import BOT, DistMorphism, DistObject
from .distlaw import DistributorFamily, ProdOfSumsMorphism, ProdOfSumsObject
from .errors import MalformedInput
from .fam import FamMorphism, FamObject
from .models import FiniteLattice


def render_label(x) -> str:
    if x is BOT:
        return "bot"
    if isinstance(x, tuple):
        return "(" + ",".join(render_label(y) for y in x) + ")"
    return str(x)


def pair_key(j, i) -> str:
    return f"({render_label(j)},{render_label(i)})"


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"{path}: {exc}") from None


def _require(d, *keys):
    if not isinstance(d, dict):
        raise MalformedInput("expected a JSON object")
    for k in keys:
        if k not in d:
            raise MalformedInput(f"missing key {k!r}")


# categories


def category_from_dict(d: dict) -> PresentedCategory:
    """Identities may be omitted; they default to ``id_<object>``, and missing
    composites with an identity are filled in."""
    _require(d, "objects")
    try:
        objects = [str(o) for o in d["objects"]]
        morphisms = [(str(m["id"]), str(m["src"]), str(m["dst"])) for m in d.get("morphisms", [])]
        identities = {str(k): str(v) for k, v in d.get("identities", {}).items()}
        compose = {}
        for entry in d.get("compose", []):
            key = (str(entry["g"]), str(entry["f"]))
            if key in compose:
                raise MalformedInput(f"composite {key!r} given twice")
            compose[key] = str(entry["result"])
    except (TypeError, KeyError, AttributeError) as exc:
        raise MalformedInput(f"bad category entry: {exc!r}") from None
    return presented(objects, morphisms, compose, identities)


def category_to_dict(cat: PresentedCategory) -> dict:
    return {
        "objects": list(cat.objects),
        "morphisms": [{"id": m, "src": s, "dst": t} for m, s, t in cat.morphisms],
        "identities": dict(cat.identities),
        "compose": [{"g": g, "f": f, "result": r} for (g, f), r in cat.compose_table.items()],
    }


# Fam


def fam_object_to_dict(x: FamObject) -> dict:
    return {
        "index": [render_label(i) for i in x.index],
        "entries": {render_label(i): c for i, c in x.items()},
    }


def fam_object_from_dict(d: dict) -> FamObject:
    _require(d, "index", "entries")
    try:
        return FamObject(d["index"], [d["entries"][i] for i in d["index"]])
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad family: {exc!r}") from None


def fam_morphism_to_dict(f: FamMorphism) -> dict:
    return {
        "src": fam_object_to_dict(f.src),
        "dst": fam_object_to_dict(f.dst),
        "table": {render_label(i): [render_label(j), c] for i, (j, c) in zip(f.src.index, f.table)},
    }


def fam_morphism_from_dict(d: dict) -> FamMorphism:
    _require(d, "src", "dst", "table")
    src, dst = fam_object_from_dict(d["src"]), fam_object_from_dict(d["dst"])
    try:
        return FamMorphism(src, dst, [tuple(d["table"][i]) for i in src.index])
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad Fam morphism: {exc!r}") from None


# Dist


def dist_object_to_dict(x: DistObject) -> dict:
    return {
        "outer": [render_label(j) for j in x.outer],
        "inner": {render_label(j): [render_label(i) for i in ps] for j, ps in zip(x.outer, x.inner)},
        "entries": {
            pair_key(j, i): c
            for j, ps, es in zip(x.outer, x.inner, x.entries)
            for i, c in zip(ps, es)
        },
    }


def dist_object_from_dict(d: dict, cls=DistObject) -> DistObject:
    _require(d, "outer", "inner", "entries")
    try:
        outer = [str(j) for j in d["outer"]]
        inner = [[str(i) for i in d["inner"][j]] for j in outer]
        entries = [[d["entries"][pair_key(j, i)] for i in ps] for j, ps in zip(outer, inner)]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad object: missing {exc!r}") from None
    return cls(outer, inner, entries)


def dist_morphism_to_dict(h: DistMorphism) -> dict:
    table = {}
    for j, (j2, inner) in zip(h.src.outer, h.table):
        table[render_label(j)] = {
            "to": render_label(j2),
            "inner": {
                render_label(i2): [render_label(i), c]
                for i2, (i, c) in zip(h.dst.positions(j2), inner)
            },
        }
    return {"src": dist_object_to_dict(h.src), "dst": dist_object_to_dict(h.dst), "table": table}


def dist_morphism_from_dict(d: dict) -> DistMorphism:
    _require(d, "src", "dst", "table")
    src, dst = dist_object_from_dict(d["src"]), dist_object_from_dict(d["dst"])
    try:
        rows = []
        for j in src.outer:
            row = d["table"][j]
            j2 = row["to"]
            rows.append((j2, [tuple(row["inner"][i2]) for i2 in dst.positions(j2)]))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad Dist morphism: {exc!r}") from None
    return DistMorphism(src, dst, rows)


def pos_morphism_to_dict(g: ProdOfSumsMorphism) -> dict:
    table = {}
    for j2, (j, inner) in zip(g.dst.outer, g.table):
        table[render_label(j2)] = {
            "from": render_label(j),
            "inner": {
                render_label(i): [render_label(i2), c]
                for i, (i2, c) in zip(g.src.positions(j), inner)
            },
        }
    return {"src": dist_object_to_dict(g.src), "dst": dist_object_to_dict(g.dst), "table": table}


def pos_morphism_from_dict(d: dict) -> ProdOfSumsMorphism:
    src = dist_object_from_dict(d["src"], ProdOfSumsObject)
    dst = dist_object_from_dict(d["dst"], ProdOfSumsObject)
    rows = []
    for j2 in dst.outer:
        row = d["table"][j2]
        j = row["from"]
        rows.append((j, [tuple(row["inner"][i]) for i in src.positions(j)]))
    return ProdOfSumsMorphism(src, dst, rows)


# distributor families and lattices


def family_to_dict(fam: DistributorFamily, encode=lambda c: c) -> dict:
    return {
        "J": [render_label(j) for j in fam.outer],
        "I": {render_label(j): [render_label(i) for i in ps] for j, ps in zip(fam.outer, fam.inner)},
        "entries": {
            pair_key(j, i): encode(c)
            for j, ps, es in zip(fam.outer, fam.inner, fam.entries)
            for i, c in zip(ps, es)
        },
    }


def family_from_dict(d: dict, decode=lambda c: c) -> DistributorFamily:
    _require(d, "J", "I", "entries")
    try:
        outer = [str(j) for j in d["J"]]
        inner = [[str(i) for i in d["I"][j]] for j in outer]
        entries = [[decode(d["entries"][pair_key(j, i)]) for i in ps] for j, ps in zip(outer, inner)]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad family: missing {exc!r}") from None
    return DistributorFamily(outer, inner, entries)


def lattice_from_dict(d: dict) -> FiniteLattice:
    _require(d, "elements", "leq")
    try:
        return FiniteLattice.from_pairs([str(e) for e in d["elements"]],
                                        [(str(a), str(b)) for a, b in d["leq"]])
    except (TypeError, ValueError) as exc:
        raise MalformedInput(f"bad lattice: {exc!r}") from None


def lattice_to_dict(lattice: FiniteLattice) -> dict:
    return {
        "elements": list(lattice.elements),
        "leq": [[a, b] for a in lattice.elements for b in lattice.elements
                if a != b and lattice.le(a, b)],
    }
