"""The free doubly-infinitary distributive category Dist(C) = Fam(Fam(C^op)^op).

An object is a finite family of *shapes*; shape ``j`` carries a finite list of
*positions* ``I_j`` with a base object at each position.  A morphism
``h: X -> Y`` sends each source shape ``j`` to a target shape ``j'`` and, going
backwards, each target position ``i'`` to a source position ``i`` together with
a base morphism ``C_ji -> C'_j'i'``.

Tables are stored aligned with the declaration order of the source shapes and of
the target positions, so structural equality (``==``) is equality of normalized
tables.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .core import DEFAULT_BUDGET, Category
from .errors import (
    EnumerationBudgetExceeded,
    MalformedInput,
    ShapeRestriction,
    TypeMismatch,
)


class _Bottom:
    """The reserved label marking exponent positions that consume no source component."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOT"

    def __reduce__(self):
        return (_Bottom, ())


BOT = _Bottom()


@dataclass(frozen=True)
class DistObject:
    """``<[C_ji]_{i in I_j}>_{j in J}``.

    ``inner[k]`` lists the position labels of shape ``outer[k]`` and
    ``entries[k]`` the base objects sitting at those positions.
    """

    outer: tuple
    inner: tuple
    entries: tuple

    def __post_init__(self):
        outer = tuple(self.outer)
        inner = tuple(tuple(ps) for ps in self.inner)
        entries = tuple(tuple(es) for es in self.entries)
        if not (len(outer) == len(inner) == len(entries)):
            raise MalformedInput("outer, inner and entries are not aligned")
        if len(set(outer)) != len(outer):
            raise MalformedInput("duplicate shape labels")
        for ps, es in zip(inner, entries):
            if len(ps) != len(es):
                raise MalformedInput("entries are not total on a position set")
            if len(set(ps)) != len(ps):
                raise MalformedInput("duplicate position labels")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def build(cls, outer, inner: Mapping, entries: Mapping) -> "DistObject":
        """From the mapping form: ``inner[j]`` labels, ``entries[(j, i)]`` objects."""
        outer = tuple(outer)
        try:
            return cls(
                outer,
                [inner[j] for j in outer],
                [[entries[(j, i)] for i in inner[j]] for j in outer],
            )
        except KeyError as exc:
            raise MalformedInput(f"missing data for {exc.args[0]!r}") from None

    @classmethod
    def of(cls, *shapes: Sequence) -> "DistObject":
        """Anonymous labels: shape k is ``str(k)``, its positions ``"0", "1", ...``."""
        return cls(
            [str(k) for k in range(len(shapes))],
            [[str(i) for i in range(len(s))] for s in shapes],
            shapes,
        )

    @classmethod
    def container(cls, *counts: int, obj="*") -> "DistObject":
        """An object over the terminal base: one shape per count, that many positions."""
        return cls.of(*([obj] * n for n in counts))

    @cached_property
    def outer_pos(self) -> dict:
        return {j: k for k, j in enumerate(self.outer)}

    @cached_property
    def inner_pos(self) -> tuple:
        return tuple({i: k for k, i in enumerate(ps)} for ps in self.inner)

    def positions(self, j) -> tuple:
        return self.inner[self.outer_pos[j]]

    def entry(self, j, i):
        k = self.outer_pos[j]
        return self.entries[k][self.inner_pos[k][i]]

    def shape(self, k: int) -> "DistObject":
        """The single-shape object made of the k-th shape."""
        return DistObject((self.outer[k],), (self.inner[k],), (self.entries[k],))

    def profile(self) -> list[int]:
        return [len(ps) for ps in self.inner]

    def __len__(self):
        return len(self.outer)


@dataclass(frozen=True)
class DistMorphism:
    """``table[k] = (j', inner)`` for source shape ``src.outer[k]``;
    ``inner`` is aligned with the positions of ``j'`` and holds ``(i, c)``."""

    src: DistObject
    dst: DistObject
    table: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "table", tuple((j, tuple(tuple(p) for p in inner)) for j, inner in self.table)
        )

    def __call__(self, j):
        return self.table[self.src.outer_pos[j]]

    def as_dict(self) -> dict:
        out = {}
        for j, (j2, inner) in zip(self.src.outer, self.table):
            out[j] = (j2, dict(zip(self.dst.positions(j2), inner)))
        return out


class Dist(Category):
    """Dist(base) with its chosen products, coproducts and exponentials."""

    def __init__(self, base: Category, budget: int = DEFAULT_BUDGET):
        self.base = base
        self.budget = budget
        self._exp_cache: dict = {}

    def dom(self, h):
        return h.src

    def cod(self, h):
        return h.dst

    def unit(self, c) -> DistObject:
        """The image of a base object: one shape with one position."""
        return DistObject(("*",), (("*",),), ((c,),))

    def unit_mor(self, c) -> DistMorphism:
        a, b = self.unit(self.base.dom(c)), self.unit(self.base.cod(c))
        return DistMorphism(a, b, [("*", [("*", c)])])

    def terminal(self) -> DistObject:
        return DistObject(("*",), ((),), ((),))

    def initial(self) -> DistObject:
        return DistObject((), (), ())

    # morphisms

    def morphism(self, src: DistObject, dst: DistObject, table) -> DistMorphism:
        """Build and type-check a morphism.

        ``table`` is either aligned (a sequence) or a mapping
        ``j -> (j', {i': (i, c)})``.
        """
        if isinstance(table, Mapping):
            rows = []
            for j in src.outer:
                j2, inner = table[j]
                if isinstance(inner, Mapping):
                    inner = [inner[i2] for i2 in dst.positions(j2)]
                rows.append((j2, inner))
            table = rows
        h = DistMorphism(src, dst, table)
        self.check(h)
        return h

    def check(self, h: DistMorphism) -> None:
        src, dst = h.src, h.dst
        if len(h.table) != len(src.outer):
            raise TypeMismatch("outer table is not total on the source shapes")
        for k, (j2, inner) in enumerate(h.table):
            if j2 not in dst.outer_pos:
                raise TypeMismatch(f"unknown target shape {j2!r}")
            k2 = dst.outer_pos[j2]
            if len(inner) != len(dst.inner[k2]):
                raise TypeMismatch(f"inner table for {src.outer[k]!r} is not total")
            for target, (i, c) in zip(dst.entries[k2], inner):
                if i not in src.inner_pos[k]:
                    raise TypeMismatch(f"unknown source position {i!r}")
                source = src.entries[k][src.inner_pos[k][i]]
                if self.base.dom(c) != source or self.base.cod(c) != target:
                    raise TypeMismatch(f"component {c!r} is not {source!r} -> {target!r}")

    def identity(self, x: DistObject) -> DistMorphism:
        ident = self.base.identity
        return DistMorphism(
            x, x,
            [(j, [(i, ident(c)) for i, c in zip(ps, es)])
             for j, ps, es in zip(x.outer, x.inner, x.entries)],
        )

    def compose(self, h2: DistMorphism, h1: DistMorphism) -> DistMorphism:
        """``h2 . h1``: shapes go forward through h1 then h2, positions come back."""
        if h1.dst != h2.src:
            raise TypeMismatch("Dist morphisms are not composable")
        mid = h1.dst
        bcompose = self.base.compose
        table = []
        for j1, f in h1.table:
            k = mid.outer_pos[j1]
            j2, f2 = h2.table[k]
            back = mid.inner_pos[k]
            inner = []
            for i1, c2 in f2:
                i, c = f[back[i1]]
                inner.append((i, bcompose(c2, c)))
            table.append((j2, inner))
        return DistMorphism(h1.src, h2.dst, table)

    # hom-sets

    def count_hom(self, x: DistObject, y: DistObject) -> int:
        count = self.base.count_hom
        return math.prod(
            sum(
                math.prod(sum(count(c, d) for c in es) for d in es2)
                for es2 in y.entries
            )
            for es in x.entries
        )

    def _shape_homs(self, ps, es, y: DistObject):
        """All ``(j', inner)`` out of one source shape."""
        hom = self.base.hom
        out = []
        for j2, es2 in zip(y.outer, y.entries):
            options = [[(i, m) for i, c in zip(ps, es) for m in hom(c, d)] for d in es2]
            out.extend((j2, inner) for inner in itertools.product(*options))
        return out

    def iter_hom(self, x: DistObject, y: DistObject) -> Iterator[DistMorphism]:
        rows = [self._shape_homs(ps, es, y) for ps, es in zip(x.inner, x.entries)]
        for table in itertools.product(*rows):
            yield DistMorphism(x, y, table)

    def hom(self, x: DistObject, y: DistObject, budget: int | None = None) -> list[DistMorphism]:
        budget = self.budget if budget is None else budget
        n = self.count_hom(x, y)
        if n > budget:
            raise EnumerationBudgetExceeded(f"hom-set of size {n} exceeds the budget {budget}")
        return list(self.iter_hom(x, y))

    # coproducts

    def coproduct(self, xs: Sequence[DistObject]):
        outer, inner, entries = [], [], []
        for k, x in enumerate(xs):
            outer.extend((k, j) for j in x.outer)
            inner.extend(x.inner)
            entries.extend(x.entries)
        total = DistObject(outer, inner, entries)
        injections = []
        for k, x in enumerate(xs):
            ident = self.identity(x)
            injections.append(
                DistMorphism(x, total, [((k, j), inner) for j, (_, inner) in zip(x.outer, ident.table)])
            )
        return total, injections

    def cotupling(self, legs: Sequence[DistMorphism], summands: Sequence[DistObject], apex: DistObject):
        total, _ = self.coproduct(summands)
        for leg, x in zip(legs, summands):
            if leg.src != x or leg.dst != apex:
                raise TypeMismatch("cotupling leg does not match its summand")
        return DistMorphism(total, apex, [row for leg in legs for row in leg.table])

    # products

    def product(self, xs: Sequence[DistObject]):
        """Shapes are choice tuples (lexicographic); positions are tagged ``(k, i)``."""
        outer, inner, entries = [], [], []
        for choice in itertools.product(*(range(len(x.outer)) for x in xs)):
            outer.append(tuple(x.outer[c] for x, c in zip(xs, choice)))
            inner.append([(k, i) for k, (x, c) in enumerate(zip(xs, choice)) for i in x.inner[c]])
            entries.append([e for x, c in zip(xs, choice) for e in x.entries[c]])
        total = DistObject(outer, inner, entries)
        ident = self.base.identity
        projections = []
        for k, x in enumerate(xs):
            table = []
            for f, ps in zip(total.outer, total.inner):
                jk = f[k]
                kk = x.outer_pos[jk]
                table.append((jk, [((k, i), ident(c)) for i, c in zip(x.inner[kk], x.entries[kk])]))
            projections.append(DistMorphism(total, x, table))
        return total, projections

    def tupling(self, legs: Sequence[DistMorphism], apex: DistObject, factors: Sequence[DistObject]):
        total, _ = self.product(factors)
        for leg, x in zip(legs, factors):
            if leg.src != apex or leg.dst != x:
                raise TypeMismatch("tupling leg does not match its factor")
        table = []
        for k in range(len(apex.outer)):
            rows = [leg.table[k] for leg in legs]
            f = tuple(j2 for j2, _ in rows)
            table.append((f, [p for _, inner in rows for p in inner]))
        return DistMorphism(apex, total, table)

    def product_mor(self, fs: Sequence[DistMorphism]) -> DistMorphism:
        """``f_0 x ... x f_n`` between the chosen products."""
        srcs = [f.src for f in fs]
        dsts = [f.dst for f in fs]
        p, projs = self.product(srcs)
        legs = [self.compose(f, pi) for f, pi in zip(fs, projs)]
        return self.tupling(legs, p, dsts)

    # exponentials

    def count_exponential_shapes(self, a: DistObject, b: DistObject) -> int:
        count = self.base.count_hom
        return math.prod(
            sum(math.prod(sum(count(c, d) for c in es) + 1 for d in es2) for es2 in b.entries)
            for es in a.entries
        )

    def exponential(self, a: DistObject, b: DistObject) -> DistObject:
        """Closed-form ``a => b``.

        A shape chooses, for every shape ``j`` of ``a``, a shape ``j'`` of ``b``
        and for every position ``i'`` of ``j'`` either a component ``(i, c)``
        drawn from ``a`` or ``BOT``.  The positions of the shape are the pairs
        ``(j, i')`` marked ``BOT``.
        """
        key = (a, b)
        if key in self._exp_cache:
            return self._exp_cache[key]
        n = self.count_exponential_shapes(a, b)
        if n > self.budget:
            raise EnumerationBudgetExceeded(f"{n} exponential shapes exceed the budget {self.budget}")
        hom = self.base.hom
        per_shape = []
        for ps, es in zip(a.inner, a.entries):
            opts = []
            for j2, es2 in zip(b.outer, b.entries):
                choices = [
                    [(i, m) for i, c in zip(ps, es) for m in hom(c, d)] + [BOT] for d in es2
                ]
                opts.extend((j2, g) for g in itertools.product(*choices))
            per_shape.append(opts)
        outer, inner, entries = [], [], []
        for f in itertools.product(*per_shape):
            ps, es = [], []
            for j, (j2, g) in zip(a.outer, f):
                k2 = b.outer_pos[j2]
                for i2, d, tag in zip(b.inner[k2], b.entries[k2], g):
                    if tag is BOT:
                        ps.append((j, i2))
                        es.append(d)
            outer.append(f)
            inner.append(ps)
            entries.append(es)
        result = DistObject(outer, inner, entries)
        self._exp_cache[key] = result
        return result

    def exponential_inductive(self, a: DistObject, b: DistObject, general: bool = False) -> DistObject:
        """``a => b`` by recursion on the coproduct-of-products structure of ``b``.

        ``a`` must have exactly one shape unless ``general`` is set, in which case
        ``(+_j a_j) => b`` is computed as the product of the ``a_j => b``.
        """
        if len(a.outer) != 1:
            if not general:
                raise ShapeRestriction("the inductive exponential needs a single-shape source")
            parts = [self.exponential_inductive(a.shape(k), b) for k in range(len(a.outer))]
            return self.product(parts)[0]
        summands = []
        for es2 in b.entries:
            factors = [self._exponential_generator(a, d) for d in es2]
            summands.append(self.product(factors)[0])
        return self.coproduct(summands)[0]

    def _exponential_generator(self, a: DistObject, d) -> DistObject:
        # a => [d]  =  (coproduct of |hom(a, [d])| terminals) + [d]
        gen = self.unit(d)
        n = len(self.hom(a, gen))
        return self.coproduct([self.terminal()] * n + [gen])[0]

    def _product_of(self, x: DistObject, a: DistObject) -> DistObject:
        return self.product([x, a])[0]

    def curry(self, h: DistMorphism, x: DistObject, a: DistObject) -> DistMorphism:
        """Transpose ``h: x * a -> b`` to ``x -> (a => b)``.

        At each position of the target shape, the component of ``h`` either
        comes from ``a`` (recorded in the exponent shape) or from ``x``
        (the exponent position is ``BOT`` and ``x`` supplies it).
        """
        if h.src != self._product_of(x, a):
            raise TypeMismatch("curry expects a morphism out of the chosen product x * a")
        b = h.dst
        e = self.exponential(a, b)
        na = len(a.outer)
        table = []
        for kx in range(len(x.outer)):
            shape, from_x = [], []
            for ka, j in enumerate(a.outer):
                j2, inner = h.table[kx * na + ka]
                g = []
                for i2, ((side, i), c) in zip(b.positions(j2), inner):
                    if side == 1:
                        g.append((i, c))
                    else:
                        g.append(BOT)
                        from_x.append(((j, i2), (i, c)))
                shape.append((j2, tuple(g)))
            f = tuple(shape)
            lookup = dict(from_x)
            table.append((f, [lookup[p] for p in e.positions(f)]))
        return DistMorphism(x, e, table)

    def uncurry(self, k: DistMorphism, x: DistObject, a: DistObject, b: DistObject) -> DistMorphism:
        """Inverse of :meth:`curry`: ``x -> (a => b)`` back to ``x * a -> b``."""
        e = self.exponential(a, b)
        if k.src != x or k.dst != e:
            raise TypeMismatch("uncurry expects a morphism x -> (a => b)")
        p = self._product_of(x, a)
        table = []
        for kx in range(len(x.outer)):
            f, inner = k.table[kx]
            given = dict(zip(e.positions(f), inner))
            for j, (j2, g) in zip(a.outer, f):
                row = []
                for i2, tag in zip(b.positions(j2), g):
                    if tag is BOT:
                        i, c = given[(j, i2)]
                        row.append(((0, i), c))
                    else:
                        i, c = tag
                        row.append(((1, i), c))
                table.append((j2, row))
        return DistMorphism(p, b, table)

    def eval(self, a: DistObject, b: DistObject) -> DistMorphism:
        """Counit ``(a => b) * a -> b``, the uncurrying of the identity."""
        e = self.exponential(a, b)
        return self.uncurry(self.identity(e), e, a, b)

    # isomorphisms

    def _base_inverse(self, c):
        for d in self.base.hom(self.base.cod(c), self.base.dom(c)):
            if (self.base.compose(d, c) == self.base.identity(self.base.dom(c))
                    and self.base.compose(c, d) == self.base.identity(self.base.cod(c))):
                return d
        return None

    def _shape_isos(self, ps, es, ps2, es2):
        """Invertible inner tables between two shapes, in enumeration order."""
        if len(ps) != len(ps2):
            return
        hom = self.base.hom
        options = []
        for d in es2:
            opts = []
            for i, c in zip(ps, es):
                for m in hom(c, d):
                    if self._base_inverse(m) is not None:
                        opts.append((i, m))
            options.append(opts)

        chosen: list = []
        used: set = set()

        def extend(depth):
            if depth == len(options):
                yield tuple(chosen)
                return
            for i, m in options[depth]:
                if i in used:
                    continue
                used.add(i)
                chosen.append((i, m))
                yield from extend(depth + 1)
                chosen.pop()
                used.discard(i)

        yield from extend(0)

    def _iso_class(self, c, reps: list, memo: dict):
        """Index of the first representative in ``reps`` isomorphic to ``c``."""
        if c not in memo:
            for n, r in enumerate(reps):
                if any(self._base_inverse(m) is not None for m in self.base.hom(c, r)):
                    memo[c] = n
                    break
            else:
                reps.append(c)
                memo[c] = len(reps) - 1
        return memo[c]

    def iso(self, a: DistObject, b: DistObject):
        """First invertible ``a -> b`` in hom enumeration order, with its inverse.

        Only bijections on shapes whose inner tables are bijections with
        invertible components can be isomorphisms.  Two shapes admit such an
        inner table iff their multisets of base iso-classes agree, so source
        shapes are matched greedily to the first unused target shape with the
        same multiset.  Returns ``None`` when no isomorphism exists.
        """
        if len(a.outer) != len(b.outer):
            return None
        reps: list = []
        memo: dict = {}

        def key(es):
            return tuple(sorted(self._iso_class(c, reps, memo) for c in es))

        buckets: dict = {}
        for k2, es2 in enumerate(b.entries):
            buckets.setdefault(key(es2), []).append(k2)
        for v in buckets.values():
            v.reverse()
        assignment = []
        for k, es in enumerate(a.entries):
            free = buckets.get(key(es))
            if not free:
                return None
            k2 = free.pop()
            inner = next(self._shape_isos(a.inner[k], es, b.inner[k2], b.entries[k2]), None)
            if inner is None:
                return None
            assignment.append((b.outer[k2], inner))
        fwd = DistMorphism(a, b, assignment)
        back_rows: dict = {}
        for j, (j2, inner) in zip(a.outer, assignment):
            k2 = b.outer_pos[j2]
            inv = {i: (i2, self._base_inverse(m)) for i2, (i, m) in zip(b.inner[k2], inner)}
            back_rows[j2] = (j, [inv[i] for i in a.positions(j)])
        bwd = DistMorphism(b, a, [back_rows[j2] for j2 in b.outer])
        if (self.compose(bwd, fwd) != self.identity(a)
                or self.compose(fwd, bwd) != self.identity(b)):
            return None
        return fwd, bwd

    def find_inverse(self, h: DistMorphism):
        """Two-sided inverse of ``h`` or ``None``."""
        a, b = h.src, h.dst
        if len(a.outer) != len(b.outer) or len({j2 for j2, _ in h.table}) != len(b.outer):
            return None
        rows: dict = {}
        for j, (j2, inner) in zip(a.outer, h.table):
            k2 = b.outer_pos[j2]
            if len(inner) != len(a.positions(j)) or len({i for i, _ in inner}) != len(inner):
                return None
            inv = {}
            for i2, (i, m) in zip(b.inner[k2], inner):
                d = self._base_inverse(m)
                if d is None:
                    return None
                inv[i] = (i2, d)
            rows[j2] = (j, [inv[i] for i in a.positions(j)])
        g = DistMorphism(b, a, [rows[j2] for j2 in b.outer])
        if self.compose(g, h) == self.identity(a) and self.compose(h, g) == self.identity(b):
            return g
        return None
