"""Strategies and independent oracles shared by the tests."""
from __future__ import annotations

from hypothesis import strategies as st

from distcat.core import OppositeCategory
from distcat.dist import DistMorphism, DistObject
from distcat.fam import Fam, FamMorphism, FamObject


def dist_objects(base_objects, max_outer=2, max_inner=2):
    shape = st.lists(st.sampled_from(list(base_objects)), max_size=max_inner)
    return st.lists(shape, max_size=max_outer).map(lambda shapes: DistObject.of(*shapes))


def draw_morphism(data, dist, x, y):
    """A morphism x -> y drawn row by row, or None when the hom-set is empty."""
    rows = [dist._shape_homs(ps, es, y) for ps, es in zip(x.inner, x.entries)]
    if any(not r for r in rows):
        return None
    return DistMorphism(x, y, [data.draw(st.sampled_from(r)) for r in rows])


class FamFamOracle:
    """Dist(C) rebuilt literally as Fam(Fam(C^op)^op) from the generic Fam code."""

    def __init__(self, base):
        self.inner = OppositeCategory(Fam(OppositeCategory(base)))
        self.cat = Fam(self.inner)

    @staticmethod
    def obj(x: DistObject) -> FamObject:
        return FamObject(x.outer, [FamObject(ps, es) for ps, es in zip(x.inner, x.entries)])

    def mor(self, h: DistMorphism) -> FamMorphism:
        src, dst = self.obj(h.src), self.obj(h.dst)
        table = []
        for k, (j2, inner) in enumerate(h.table):
            # an arrow X_j -> Y_j' of Fam(C^op)^op is an arrow Y_j' -> X_j of Fam(C^op)
            m = FamMorphism(dst.entry(j2), src.entries[k], list(inner))
            table.append((j2, m))
        return FamMorphism(src, dst, table)

    @staticmethod
    def back(f: FamMorphism) -> DistMorphism:
        src = DistObject(f.src.index, [e.index for e in f.src.entries], [e.entries for e in f.src.entries])
        dst = DistObject(f.dst.index, [e.index for e in f.dst.entries], [e.entries for e in f.dst.entries])
        return DistMorphism(src, dst, [(j2, m.table) for j2, m in f.table])
