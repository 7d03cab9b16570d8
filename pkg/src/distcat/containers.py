"""Plain containers ``S |> P`` with morphisms as (forward shape map, backward position maps).

This is deliberately written without reference to :mod:`distcat.dist`; it serves
as an independent check of Dist(1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Container:
    shapes: tuple
    positions: dict  # shape -> tuple of positions


@dataclass(frozen=True)
class ContainerMorphism:
    src: Container
    dst: Container
    on_shapes: dict  # s -> t
    on_positions: dict  # s -> {position of t: position of s}


def compose(v: ContainerMorphism, u: ContainerMorphism) -> ContainerMorphism:
    """``v . u``: shapes forward through u then v; positions back through v then u."""
    on_shapes = {s: v.on_shapes[u.on_shapes[s]] for s in u.src.shapes}
    on_positions = {}
    for s in u.src.shapes:
        t = u.on_shapes[s]
        on_positions[s] = {r: u.on_positions[s][v.on_positions[t][r]] for r in v.dst.positions[on_shapes[s]]}
    return ContainerMorphism(u.src, v.dst, on_shapes, on_positions)


def count_morphisms(a: Container, b: Container) -> int:
    return math.prod(
        sum(len(a.positions[s]) ** len(b.positions[t]) for t in b.shapes) for s in a.shapes
    )


def from_dist_object(x) -> Container:
    return Container(tuple(x.outer), {j: tuple(ps) for j, ps in zip(x.outer, x.inner)})


def from_dist_morphism(h) -> ContainerMorphism:
    on_shapes, on_positions = {}, {}
    for j, (j2, inner) in zip(h.src.outer, h.table):
        on_shapes[j] = j2
        on_positions[j] = {i2: i for i2, (i, _) in zip(h.dst.positions(j2), inner)}
    return ContainerMorphism(from_dist_object(h.src), from_dist_object(h.dst), on_shapes, on_positions)
