"""The distributive law lambda and the canonical distributor of a model."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import Category
from .dist import DistMorphism, DistObject
from .errors import MissingStructure, TypeMismatch


class ProdOfSumsObject(DistObject):
    """An object of Fam(Fam(C)^op)^op: a product over ``outer`` of coproducts
    over ``inner[j]``.  Same data as a :class:`DistObject`, read the other way
    round; the two never compare equal."""


class DistributorFamily(DistObject):
    """A family ``(C_ij)`` of model objects, ``j`` in ``outer`` and ``i`` in ``inner[j]``."""


@dataclass(frozen=True)
class ProdOfSumsMorphism:
    """``table[k] = (j, inner)`` for *target* factor ``dst.outer[k]``; ``inner``
    is aligned with the summands of source factor ``j`` and holds ``(i', c)``."""

    src: ProdOfSumsObject
    dst: ProdOfSumsObject
    table: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "table", tuple((j, tuple(tuple(p) for p in inner)) for j, inner in self.table)
        )


class ProdOfSums(Category):
    """Fam(Fam(C)^op)^op with hom-sets Pi_j' Sigma_j Pi_i Sigma_i' C(C_ij, C'_i'j')."""

    def __init__(self, base: Category):
        self.base = base

    def dom(self, g):
        return g.src

    def cod(self, g):
        return g.dst

    def check(self, g: ProdOfSumsMorphism) -> None:
        src, dst = g.src, g.dst
        if len(g.table) != len(dst.outer):
            raise TypeMismatch("table is not total on the target factors")
        for k2, (j, inner) in enumerate(g.table):
            if j not in src.outer_pos:
                raise TypeMismatch(f"unknown source factor {j!r}")
            k = src.outer_pos[j]
            if len(inner) != len(src.inner[k]):
                raise TypeMismatch("inner table is not total on the source summands")
            for c_src, (i2, c) in zip(src.entries[k], inner):
                if i2 not in dst.inner_pos[k2]:
                    raise TypeMismatch(f"unknown target summand {i2!r}")
                c_dst = dst.entries[k2][dst.inner_pos[k2][i2]]
                if self.base.dom(c) != c_src or self.base.cod(c) != c_dst:
                    raise TypeMismatch(f"component {c!r} is mistyped")

    def identity(self, x: ProdOfSumsObject) -> ProdOfSumsMorphism:
        ident = self.base.identity
        return ProdOfSumsMorphism(
            x, x,
            [(j, [(i, ident(c)) for i, c in zip(ps, es)])
             for j, ps, es in zip(x.outer, x.inner, x.entries)],
        )

    def compose(self, g2: ProdOfSumsMorphism, g1: ProdOfSumsMorphism) -> ProdOfSumsMorphism:
        if g1.dst != g2.src:
            raise TypeMismatch("morphisms are not composable")
        mid = g1.dst
        table = []
        for j1, k2 in g2.table:
            j, k = g1.table[mid.outer_pos[j1]]
            back = mid.inner_pos[mid.outer_pos[j1]]
            inner = []
            for i1, c in k:
                i2, c2 = k2[back[i1]]
                inner.append((i2, self.base.compose(c2, c)))
            table.append((j, inner))
        return ProdOfSumsMorphism(g1.src, g2.dst, table)

    def count_hom(self, x, y) -> int:
        count = self.base.count_hom
        return math.prod(
            sum(math.prod(sum(count(c, d) for d in es2) for c in es) for es in x.entries)
            for es2 in y.entries
        )

    def hom(self, x, y) -> list[ProdOfSumsMorphism]:
        hom = self.base.hom
        rows = []
        for ps2, es2 in zip(y.inner, y.entries):
            opts = []
            for j, es in zip(x.outer, x.entries):
                choices = [[(i2, m) for i2, d in zip(ps2, es2) for m in hom(c, d)] for c in es]
                opts.extend((j, inner) for inner in itertools.product(*choices))
            rows.append(opts)
        return [ProdOfSumsMorphism(x, y, t) for t in itertools.product(*rows)]


def lambda_obj(x: ProdOfSumsObject) -> DistObject:
    """Distribute: one shape per choice function ``f``, positions ``J``, entries ``C_{f(j) j}``."""
    outer, inner, entries = [], [], []
    for choice in itertools.product(*(range(len(ps)) for ps in x.inner)):
        outer.append(tuple(ps[c] for ps, c in zip(x.inner, choice)))
        inner.append(x.outer)
        entries.append([es[c] for es, c in zip(x.entries, choice)])
    return DistObject(outer, inner, entries)


def lambda_mor(g: ProdOfSumsMorphism) -> DistMorphism:
    src, dst = lambda_obj(g.src), lambda_obj(g.dst)
    x = g.src
    table = []
    for f in src.outer:
        f2, inner = [], []
        for j, row in g.table:
            k = x.outer_pos[j]
            i2, c = row[x.inner_pos[k][f[k]]]
            f2.append(i2)
            inner.append((j, c))
        table.append((tuple(f2), inner))
    return DistMorphism(src, dst, table)


def _require_structure(model) -> None:
    for name in ("product", "tupling", "coproduct", "cotupling"):
        if not hasattr(model, name):
            raise MissingStructure(f"model has no chosen {name}")


def distributor_sides(model, fam: DistributorFamily):
    """``(source, target)`` of the canonical distributor."""
    _require_structure(model)
    sums = [model.coproduct(list(es))[0] for es in fam.entries]
    target = model.product(sums)[0]
    summands = [
        model.product([es[c] for es, c in zip(fam.entries, choice)])[0]
        for choice in itertools.product(*(range(len(ps)) for ps in fam.inner))
    ]
    source = model.coproduct(summands)[0]
    return source, target


def canonical_distributor(model, fam: DistributorFamily):
    """The cotuple over choice functions ``f`` of the tuples ``<iota_f(j) . pi_j>_j``."""
    _require_structure(model)
    sums, injections = [], []
    for es in fam.entries:
        s, inj = model.coproduct(list(es))
        sums.append(s)
        injections.append(inj)
    target, _ = model.product(sums)
    summands, legs = [], []
    for choice in itertools.product(*(range(len(ps)) for ps in fam.inner)):
        factors = [es[c] for es, c in zip(fam.entries, choice)]
        p, projections = model.product(factors)
        components = [
            model.compose(injections[k][c], projections[k]) for k, c in enumerate(choice)
        ]
        summands.append(p)
        legs.append(model.tupling(components, p, sums))
    return model.cotupling(legs, summands, target)


def check_distributor_iso(model, fam: DistributorFamily) -> bool:
    return model.find_inverse(canonical_distributor(model, fam)) is not None


def distributor_inverse_finset(fam: DistributorFamily):
    """Elementwise inverse ``<iota_{i_j}(c_j)>_j |-> iota_{j |-> i_j}(<c_j>_j)`` in FinSet."""
    from .models import FinFun, FinSet

    sizes = [list(es) for es in fam.entries]
    sums = [sum(es) for es in sizes]
    target = math.prod(sums)
    choices = list(itertools.product(*(range(len(es)) for es in sizes)))
    summands = [math.prod(es[c] for es, c in zip(sizes, ch)) for ch in choices]
    where = {ch: k for k, ch in enumerate(choices)}
    values = []
    for x in range(target):
        tagged = [FinSet.locate(es, y) for es, y in zip(sizes, FinSet.unpack(sums, x))]
        ch = tuple(i for i, _ in tagged)
        factors = [es[c] for es, c in zip(sizes, ch)]
        inner = FinSet.pack(factors, [c for _, c in tagged])
        values.append(FinSet.inject(summands, where[ch], inner))
    return FinFun(target, sum(summands), values)
