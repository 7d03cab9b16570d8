"""Concrete finite categories with chosen finite products and coproducts."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import DEFAULT_BUDGET, Category, PresentedCategory
from .dist import Dist, DistObject
from .errors import EnumerationBudgetExceeded, MalformedInput, NotALattice, TypeMismatch


class ModelCategory(Category):
    """A category with chosen finite products and coproducts and finite hom-sets.

    ``tupling(legs, apex, factors)`` is the mediator ``apex -> product(factors)``
    and ``cotupling(legs, summands, apex)`` the mediator
    ``coproduct(summands) -> apex``.
    """

    budget = DEFAULT_BUDGET

    def objects(self) -> list:
        raise NotImplementedError

    def product(self, objs: Sequence):
        raise NotImplementedError

    def tupling(self, legs: Sequence, apex, factors: Sequence):
        raise NotImplementedError

    def coproduct(self, objs: Sequence):
        raise NotImplementedError

    def cotupling(self, legs: Sequence, summands: Sequence, apex):
        raise NotImplementedError

    def find_inverse(self, f):
        """Search the hom-set back for a two-sided inverse of ``f``."""
        a, b = self.dom(f), self.cod(f)
        n = self.count_hom(b, a)
        if n > self.budget:
            raise EnumerationBudgetExceeded(f"hom-set of size {n} exceeds {self.budget}")
        ida, idb = self.identity(a), self.identity(b)
        for g in self.hom(b, a):
            if self.compose(g, f) == ida and self.compose(f, g) == idb:
                return g
        return None


# FinSet


@dataclass(frozen=True)
class FinFun:
    """A function ``{0..dom-1} -> {0..cod-1}`` given by its value table."""

    dom: int
    cod: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __call__(self, x: int) -> int:
        return self.values[x]


class FinSet(ModelCategory):
    """Finite sets ``{0..n-1}``; products pair lexicographically, coproducts tag by offset."""

    def __init__(self, max_size: int = 3, budget: int = DEFAULT_BUDGET):
        self.max_size = max_size
        self.budget = budget

    def objects(self) -> list[int]:
        return list(range(self.max_size + 1))

    def hom(self, m: int, n: int) -> list[FinFun]:
        return [FinFun(m, n, v) for v in itertools.product(range(n), repeat=m)]

    def count_hom(self, m: int, n: int) -> int:
        return n**m

    def identity(self, n: int) -> FinFun:
        return FinFun(n, n, range(n))

    def compose(self, g: FinFun, f: FinFun) -> FinFun:
        if f.cod != g.dom:
            raise TypeMismatch("functions are not composable")
        return FinFun(f.dom, g.cod, [g.values[y] for y in f.values])

    def dom(self, f: FinFun) -> int:
        return f.dom

    def cod(self, f: FinFun) -> int:
        return f.cod

    # element encodings

    @staticmethod
    def pack(sizes: Sequence[int], coords: Sequence[int]) -> int:
        x = 0
        for n, c in zip(sizes, coords):
            x = x * n + c
        return x

    @staticmethod
    def unpack(sizes: Sequence[int], x: int) -> tuple[int, ...]:
        coords = []
        for n in reversed(sizes):
            x, c = divmod(x, n)
            coords.append(c)
        return tuple(reversed(coords))

    @staticmethod
    def inject(sizes: Sequence[int], k: int, x: int) -> int:
        return sum(sizes[:k]) + x

    @staticmethod
    def locate(sizes: Sequence[int], x: int) -> tuple[int, int]:
        for k, n in enumerate(sizes):
            if x < n:
                return k, x
            x -= n
        raise ValueError("element out of range")

    # chosen structure

    def product(self, sizes: Sequence[int]):
        sizes = list(sizes)
        total = math.prod(sizes)
        elements = [self.unpack(sizes, x) for x in range(total)]
        projections = [FinFun(total, n, [e[k] for e in elements]) for k, n in enumerate(sizes)]
        return total, projections

    def tupling(self, legs: Sequence[FinFun], apex: int, factors: Sequence[int]) -> FinFun:
        factors = list(factors)
        total = math.prod(factors)
        return FinFun(apex, total, [self.pack(factors, [leg(x) for leg in legs]) for x in range(apex)])

    def coproduct(self, sizes: Sequence[int]):
        sizes = list(sizes)
        total = sum(sizes)
        injections = [
            FinFun(n, total, [self.inject(sizes, k, x) for x in range(n)])
            for k, n in enumerate(sizes)
        ]
        return total, injections

    def cotupling(self, legs: Sequence[FinFun], summands: Sequence[int], apex: int) -> FinFun:
        return FinFun(sum(summands), apex, [v for leg in legs for v in leg.values])

    def find_inverse(self, f: FinFun):
        if f.dom != f.cod or len(set(f.values)) != f.dom:
            return None
        inv = [0] * f.dom
        for x, y in enumerate(f.values):
            inv[y] = x
        return FinFun(f.cod, f.dom, inv)


def finset_model(max_size: int = 3) -> FinSet:
    return FinSet(max_size)


# finite lattices


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice given by its elements and (the generators of) its order.

    ``leq`` is closed reflexively and transitively on construction; the result
    must be antisymmetric with all binary meets and joins.
    """

    elements: tuple
    leq: frozenset

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise NotALattice("the empty poset has no top or bottom")
        if len(set(elements)) != len(elements):
            raise MalformedInput("duplicate lattice elements")
        known = set(elements)
        rel = {(a, a) for a in elements}
        for a, b in self.leq:
            if a not in known or b not in known:
                raise MalformedInput(f"order mentions unknown element in {(a, b)!r}")
            rel.add((a, b))
        for k in elements:
            for a in elements:
                if (a, k) in rel:
                    for b in elements:
                        if (k, b) in rel:
                            rel.add((a, b))
        for a in elements:
            for b in elements:
                if a != b and (a, b) in rel and (b, a) in rel:
                    raise NotALattice(f"{a!r} and {b!r} are distinct but mutually below")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "leq", frozenset(rel))
        joins, meets = {}, {}
        for a in elements:
            for b in elements:
                joins[a, b] = self._least([c for c in elements if (a, c) in rel and (b, c) in rel], rel, True)
                meets[a, b] = self._least([c for c in elements if (c, a) in rel and (c, b) in rel], rel, False)
        object.__setattr__(self, "_joins", joins)
        object.__setattr__(self, "_meets", meets)

    @staticmethod
    def _least(cands, rel, upward):
        for c in cands:
            if all(((c, d) in rel) if upward else ((d, c) in rel) for d in cands):
                return c
        raise NotALattice("some pair has no least upper or greatest lower bound")

    @classmethod
    def from_pairs(cls, elements: Iterable, pairs: Iterable) -> "FiniteLattice":
        return cls(tuple(elements), frozenset(tuple(p) for p in pairs))

    def le(self, a, b) -> bool:
        return (a, b) in self.leq

    def join(self, a, b):
        return self._joins[a, b]

    def meet(self, a, b):
        return self._meets[a, b]

    @cached_property
    def bottom(self):
        return self.meet_all(self.elements)

    @cached_property
    def top(self):
        return self.join_all(self.elements)

    def join_all(self, xs: Iterable):
        xs = list(xs)
        if not xs:
            return self.bottom
        out = xs[0]
        for x in xs[1:]:
            out = self._joins[out, x]
        return out

    def meet_all(self, xs: Iterable):
        xs = list(xs)
        if not xs:
            return self.top
        out = xs[0]
        for x in xs[1:]:
            out = self._meets[out, x]
        return out

    def __len__(self):
        return len(self.elements)


def chain(n: int) -> FiniteLattice:
    names = [str(k) for k in range(n)]
    return FiniteLattice.from_pairs(names, zip(names, names[1:]))


def boolean_lattice(k: int) -> FiniteLattice:
    names = ["".join(bits) for bits in itertools.product("01", repeat=k)]
    pairs = [(a, b) for a in names for b in names if all(x <= y for x, y in zip(a, b))]
    return FiniteLattice.from_pairs(names, pairs)


def m3() -> FiniteLattice:
    return FiniteLattice.from_pairs(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def n5() -> FiniteLattice:
    return FiniteLattice.from_pairs(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )


class LatticeModel(ModelCategory):
    """A lattice as a thin category; a morphism ``a -> b`` is the pair ``(a, b)``."""

    def __init__(self, lattice: FiniteLattice):
        self.lattice = lattice

    def objects(self) -> list:
        return list(self.lattice.elements)

    def hom(self, a, b) -> list:
        return [(a, b)] if self.lattice.le(a, b) else []

    def count_hom(self, a, b) -> int:
        return int(self.lattice.le(a, b))

    def identity(self, a):
        return (a, a)

    def compose(self, g, f):
        if f[1] != g[0]:
            raise TypeMismatch("order relations are not composable")
        return (f[0], g[1])

    def dom(self, f):
        return f[0]

    def cod(self, f):
        return f[1]

    def product(self, objs: Sequence):
        m = self.lattice.meet_all(objs)
        return m, [(m, o) for o in objs]

    def tupling(self, legs: Sequence, apex, factors: Sequence):
        m = self.lattice.meet_all(factors)
        if not self.lattice.le(apex, m):
            raise TypeMismatch("legs do not form a cone")
        return (apex, m)

    def coproduct(self, objs: Sequence):
        j = self.lattice.join_all(objs)
        return j, [(o, j) for o in objs]

    def cotupling(self, legs: Sequence, summands: Sequence, apex):
        j = self.lattice.join_all(summands)
        if not self.lattice.le(j, apex):
            raise TypeMismatch("legs do not form a cocone")
        return (j, apex)


def lattice_model(lattice: FiniteLattice) -> LatticeModel:
    return LatticeModel(lattice)


def interior_antichains(lattice: FiniteLattice) -> list[tuple]:
    """Nonempty antichains avoiding top and bottom, in element order."""
    inside = [x for x in lattice.elements if x not in (lattice.bottom, lattice.top)]
    out = []
    for r in range(1, len(inside) + 1):
        for sub in itertools.combinations(inside, r):
            if all(not lattice.le(a, b) for a in sub for b in sub if a != b):
                out.append(sub)
    return out


def lattice_families(lattice: FiniteLattice):
    """Distributor families sufficient to decide distributivity of ``lattice``.

    Each family is a set of at most ``len(lattice)`` interior antichains.
    Replacing a join set by its maximal elements can only shrink the
    distributor's source and leaves its target alone; repeated rows and
    rows equal to ``{top}`` change neither side, and rows that are empty or
    equal to ``{bottom}`` make the target the bottom.  So these families
    decide the question for every family with rows and columns bounded by
    the lattice size.
    """
    from .distlaw import DistributorFamily

    chains = interior_antichains(lattice)
    for r in range(0, min(len(lattice), len(chains)) + 1):
        for rows in itertools.combinations(chains, r):
            yield DistributorFamily.of(*rows)


def is_completely_distributive_finite(lattice: FiniteLattice) -> bool:
    """Every canonical distributor over the lattice is invertible."""
    from .distlaw import check_distributor_iso

    model = LatticeModel(lattice)
    return all(check_distributor_iso(model, fam) for fam in lattice_families(lattice))


def is_distributive_binary(lattice: FiniteLattice) -> bool:
    """Classical oracle: ``a ^ (b v c) == (a ^ b) v (a ^ c)`` for all triples."""
    L = lattice
    return all(
        L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
        for a in L.elements for b in L.elements for c in L.elements
    )


def _is_m3_or_n5(lattice: FiniteLattice, sub: tuple) -> str | None:
    bottom = lattice.meet_all(sub)
    top = lattice.join_all(sub)
    mid = [x for x in sub if x not in (bottom, top)]
    if len(mid) != 3:
        return None
    comparable = [
        (a, b) for a in mid for b in mid if a != b and lattice.le(a, b)
    ]
    if not comparable:
        return "M3"
    if len(comparable) == 1:
        return "N5"
    return None


def forbidden_sublattice(lattice: FiniteLattice) -> tuple | None:
    """A 5-element sublattice isomorphic to M3 or N5, or ``None``."""
    L = lattice
    for sub in itertools.combinations(L.elements, 5):
        s = set(sub)
        if not all(L.join(a, b) in s and L.meet(a, b) in s for a in sub for b in sub):
            continue
        kind = _is_m3_or_n5(L, sub)
        if kind:
            return kind, sub
    return None


def _canonical_order(n: int, rel: frozenset) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[a], perm[b]) for a, b in rel))
        if best is None or key < best:
            best = key
    return best


def all_lattices(max_size: int) -> list[FiniteLattice]:
    """Every lattice with 1..max_size elements, one per isomorphism class.

    Bounded posets are built by adding a bottom and top to each partial order
    on the interior elements; the ones with all binary meets and joins are kept.
    """
    out = [FiniteLattice(("0",), frozenset())]
    for n in range(2, max_size + 1):
        k = n - 2
        seen = set()
        pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
        for bits in itertools.product((0, 1), repeat=len(pairs)):
            rel = frozenset(p for p, bit in zip(pairs, bits) if bit)
            if any((b, a) in rel for a, b in rel):
                continue
            if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2 and a != c):
                continue
            key = _canonical_order(k, rel)
            if key in seen:
                continue
            seen.add(key)
            names = ["bot"] + [f"x{i}" for i in range(k)] + ["top"]
            order = [("bot", x) for x in names[1:]] + [(x, "top") for x in names[1:-1]]
            order += [(f"x{a}", f"x{b}") for a, b in rel]
            try:
                out.append(FiniteLattice.from_pairs(names, order))
            except NotALattice:
                pass
    return out


# Dist(C) as a model


class DistModel(Dist, ModelCategory):
    """Dist(base) restricted, for object enumeration, to the given size caps."""

    def __init__(self, base: Category, max_outer: int = 2, max_inner: int = 2,
                 budget: int = DEFAULT_BUDGET):
        Dist.__init__(self, base, budget)
        self.max_outer = max_outer
        self.max_inner = max_inner

    def objects(self) -> list[DistObject]:
        return enumerate_objects(base_objects(self.base), self.max_outer, self.max_inner)


def base_objects(base: Category) -> list:
    if isinstance(base, PresentedCategory):
        return list(base.objects)
    return list(base.objects())


def enumerate_objects(objects: Sequence, max_outer: int, max_inner: int) -> list[DistObject]:
    """All objects with at most ``max_outer`` shapes of at most ``max_inner``
    positions, one per relabelling class, in a fixed order."""
    shapes = [
        combo
        for n in range(max_inner + 1)
        for combo in itertools.combinations_with_replacement(objects, n)
    ]
    return [
        DistObject.of(*combo)
        for n in range(max_outer + 1)
        for combo in itertools.combinations_with_replacement(shapes, n)
    ]


def dist_as_model(base: PresentedCategory, max_outer: int = 2, max_inner: int = 2,
                  budget: int = DEFAULT_BUDGET) -> DistModel:
    return DistModel(base, max_outer, max_inner, budget)
