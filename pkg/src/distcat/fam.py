"""The free coproduct completion Fam(C) with finite index sets."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import Category
from .errors import MalformedInput, MissingStructure, TypeMismatch

STAR = "*"


@dataclass(frozen=True)
class FamObject:
    """A family ``<C_i>_{i in I>``; ``entries`` is aligned with ``index``."""

    index: tuple
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "index", tuple(self.index))
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.index) != len(self.entries):
            raise MalformedInput("family entries are not total on the index")
        if len(set(self.index)) != len(self.index):
            raise MalformedInput("duplicate index labels")

    @classmethod
    def of(cls, *entries) -> "FamObject":
        return cls(tuple(str(k) for k in range(len(entries))), entries)

    @cached_property
    def position(self) -> dict:
        return {label: k for k, label in enumerate(self.index)}

    def entry(self, label):
        return self.entries[self.position[label]]

    def items(self):
        return zip(self.index, self.entries)

    def __len__(self):
        return len(self.index)


@dataclass(frozen=True)
class FamMorphism:
    """``table[k] = (j, f)`` for the k-th source index, ``f: C_i -> C'_j``."""

    src: FamObject
    dst: FamObject
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(t) for t in self.table))

    def __call__(self, label):
        return self.table[self.src.position[label]]

    def as_dict(self) -> dict:
        return dict(zip(self.src.index, self.table))


class Fam(Category):
    """Fam(base): objects are finite families, hom-sets Pi_i Sigma_j base(C_i, C'_j)."""

    def __init__(self, base: Category):
        self.base = base

    def dom(self, f: FamMorphism):
        return f.src

    def cod(self, f: FamMorphism):
        return f.dst

    def morphism(self, src: FamObject, dst: FamObject, table) -> FamMorphism:
        if isinstance(table, dict):
            table = [table[i] for i in src.index]
        f = FamMorphism(src, dst, table)
        self.check(f)
        return f

    def check(self, f: FamMorphism) -> None:
        if len(f.table) != len(f.src.index):
            raise TypeMismatch("morphism table is not total on the source index")
        for c_i, (j, c) in zip(f.src.entries, f.table):
            if j not in f.dst.position:
                raise TypeMismatch(f"unknown target index {j!r}")
            target = f.dst.entry(j)
            if self.base.dom(c) != c_i or self.base.cod(c) != target:
                raise TypeMismatch(f"component {c!r} is not a morphism {c_i!r} -> {target!r}")

    def identity(self, x: FamObject) -> FamMorphism:
        return FamMorphism(x, x, [(i, self.base.identity(c)) for i, c in x.items()])

    def compose(self, f: FamMorphism, g: FamMorphism) -> FamMorphism:
        """``f . g``: reindex along ``g`` then ``f``, composing components in the base."""
        if g.dst != f.src:
            raise TypeMismatch("Fam morphisms are not composable")
        table = []
        for i1, g1 in g.table:
            i2, f1 = f(i1)
            table.append((i2, self.base.compose(f1, g1)))
        return FamMorphism(g.src, f.dst, table)

    def count_hom(self, x: FamObject, y: FamObject) -> int:
        return math.prod(
            sum(self.base.count_hom(c, d) for d in y.entries) for c in x.entries
        )

    def iter_hom(self, x: FamObject, y: FamObject):
        choices = [
            [(j, m) for j, d in y.items() for m in self.base.hom(c, d)]
            for c in x.entries
        ]
        for table in itertools.product(*choices):
            yield FamMorphism(x, y, table)

    def hom(self, x: FamObject, y: FamObject) -> list[FamMorphism]:
        return list(self.iter_hom(x, y))

    # pseudomonad structure

    def unit(self, c) -> FamObject:
        return FamObject((STAR,), (c,))

    def unit_mor(self, f) -> FamMorphism:
        return FamMorphism(
            self.unit(self.base.dom(f)), self.unit(self.base.cod(f)), [(STAR, f)]
        )

    def flatten(self, xs: FamObject) -> FamObject:
        """Disjoint union of a family of families; new labels are pairs ``(j, i)``."""
        index, entries = [], []
        for j, inner in xs.items():
            for i, c in inner.items():
                index.append((j, i))
                entries.append(c)
        return FamObject(index, entries)

    def flatten_mor(self, big: FamMorphism) -> FamMorphism:
        """Multiplication on a morphism of Fam(Fam(C))."""
        table = []
        for (j, inner), (j2, g) in zip(big.src.items(), big.table):
            for i in inner.index:
                i2, h = g(i)
                table.append(((j2, i2), h))
        return FamMorphism(self.flatten(big.src), self.flatten(big.dst), table)

    # (co)products

    def coproduct(self, xs: Sequence[FamObject]):
        index, entries = [], []
        for k, x in enumerate(xs):
            for i, c in x.items():
                index.append((k, i))
                entries.append(c)
        total = FamObject(index, entries)
        injections = [
            FamMorphism(x, total, [((k, i), self.base.identity(c)) for i, c in x.items()])
            for k, x in enumerate(xs)
        ]
        return total, injections

    def cotupling(self, legs: Sequence[FamMorphism], summands: Sequence[FamObject], apex):
        total, _ = self.coproduct(summands)
        table = [t for leg in legs for t in leg.table]
        return FamMorphism(total, apex, table)

    def _base_products(self):
        if not hasattr(self.base, "product"):
            raise MissingStructure("base category has no chosen products")
        return self.base

    def product(self, xs: Sequence[FamObject]):
        """Fam-level product: index all choice functions, entries base products."""
        base = self._base_products()
        index, entries, projs = [], [], []
        for choice in itertools.product(*(x.index for x in xs)):
            p, ps = base.product([x.entry(j) for x, j in zip(xs, choice)])
            index.append(choice)
            entries.append(p)
            projs.append(ps)
        total = FamObject(index, entries)
        projections = [
            FamMorphism(total, x, [(choice[k], ps[k]) for choice, ps in zip(index, projs)])
            for k, x in enumerate(xs)
        ]
        return total, projections

    def tupling(self, legs: Sequence[FamMorphism], apex: FamObject, factors: Sequence[FamObject]):
        base = self._base_products()
        total, _ = self.product(factors)
        table = []
        for y, c in apex.items():
            comps = [leg(y) for leg in legs]
            choice = tuple(j for j, _ in comps)
            factor_objs = [x.entry(j) for x, j in zip(factors, choice)]
            table.append((choice, base.tupling([m for _, m in comps], c, factor_objs)))
        return FamMorphism(apex, total, table)


def coproduct_functor(model, x: FamObject):
    """Send a family over ``model`` to the model's chosen coproduct of its entries."""
    if not hasattr(model, "coproduct"):
        raise MissingStructure("model has no chosen coproducts")
    total, _ = model.coproduct(list(x.entries))
    return total


def coproduct_functor_mor(model, f: FamMorphism):
    if not hasattr(model, "coproduct"):
        raise MissingStructure("model has no chosen coproducts")
    target, injections = model.coproduct(list(f.dst.entries))
    legs = [model.compose(injections[f.dst.position[j]], c) for j, c in f.table]
    return model.cotupling(legs, list(f.src.entries), target)
