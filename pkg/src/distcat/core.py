"""Finitely presented categories, law checking and brute-force universal properties.

Every category-like value in this package (presented categories, Fam and Dist
categories, the finite models) exposes the small interface of :class:`Category`:
``hom``, ``identity``, ``compose``, ``dom`` and ``cod``.  ``compose(g, f)`` is
always ``g . f`` (``f`` applied first).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator, Mapping

from .errors import (
    CategoryError,
    EnumerationBudgetExceeded,
    MalformedInput,
    TypeMismatch,
    UnknownObject,
)

DEFAULT_BUDGET = 10**6


class Category:
    """Minimal interface shared by every category in the package."""

    def hom(self, a, b) -> list:
        raise NotImplementedError

    def count_hom(self, a, b) -> int:
        return len(self.hom(a, b))

    def identity(self, a):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def dom(self, f):
        raise NotImplementedError

    def cod(self, f):
        raise NotImplementedError


@dataclass(frozen=True)
class LawReport:
    violations: tuple[tuple[str, tuple], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def laws(self) -> set[str]:
        return {name for name, _ in self.violations}


@dataclass(frozen=True)
class ConeData:
    apex: Any
    legs: Mapping[Hashable, Any]
    direction: str = "limit"

    def __post_init__(self):
        if self.direction not in ("limit", "colimit"):
            raise ValueError(f"unknown cone direction {self.direction!r}")


@dataclass(frozen=True, eq=False)
class PresentedCategory(Category):
    """A finite category given by explicit tables.

    ``morphisms`` lists ``(id, src, dst)`` triples in declaration order, which
    is also the order hom-sets are enumerated in.  ``compose`` maps ``(g, f)``
    to the id of ``g . f``.  Construction only rejects duplicated or dangling
    ids; the category laws are checked by :func:`validate_category`.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]
    identities: Mapping[str, str]
    compose_table: Mapping[tuple[str, str], str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", tuple(tuple(m) for m in self.morphisms))
        object.__setattr__(self, "identities", dict(self.identities))
        object.__setattr__(self, "compose_table", dict(self.compose_table))
        if len(set(self.objects)) != len(self.objects):
            raise MalformedInput("duplicate object ids")
        obs = set(self.objects)
        ends = {}
        for mid, src, dst in self.morphisms:
            if mid in ends:
                raise MalformedInput(f"duplicate morphism id {mid!r}")
            if src not in obs or dst not in obs:
                raise MalformedInput(f"morphism {mid!r} has a dangling endpoint")
            ends[mid] = (src, dst)
        for ob, mid in self.identities.items():
            if ob not in obs:
                raise MalformedInput(f"identity declared for unknown object {ob!r}")
            if mid not in ends:
                raise MalformedInput(f"identity {mid!r} is not a declared morphism")
        for (g, f), r in self.compose_table.items():
            for m in (g, f, r):
                if m not in ends:
                    raise MalformedInput(f"compose table mentions unknown morphism {m!r}")
        object.__setattr__(self, "_ends", ends)
        homs: dict[tuple[str, str], list[str]] = {}
        for mid, src, dst in self.morphisms:
            homs.setdefault((src, dst), []).append(mid)
        object.__setattr__(self, "_homs", homs)

    def __eq__(self, other):
        if not isinstance(other, PresentedCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identities == other.identities
            and self.compose_table == other.compose_table
        )

    __hash__ = None

    def _check_object(self, a):
        if a not in self.identities and a not in self.objects:
            raise UnknownObject(a)

    def hom(self, a, b) -> list[str]:
        self._check_object(a)
        self._check_object(b)
        return list(self._homs.get((a, b), ()))

    def identity(self, a):
        self._check_object(a)
        try:
            return self.identities[a]
        except KeyError:
            raise CategoryError(f"no identity declared on {a!r}") from None

    def dom(self, f):
        return self._ends[f][0]

    def cod(self, f):
        return self._ends[f][1]

    def compose(self, g, f):
        if self.cod(f) != self.dom(g):
            raise TypeMismatch(f"{g!r} . {f!r} is not composable")
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise CategoryError(f"composite {g!r} . {f!r} is not tabulated") from None

    def morphism_ids(self) -> list[str]:
        return [m[0] for m in self.morphisms]


def enumerate_hom(cat: Category, a, b) -> list:
    return list(cat.hom(a, b))


def validate_category(cat: PresentedCategory) -> LawReport:
    """Check every category law exhaustively and return all violations."""
    viol: list[tuple[str, tuple]] = []
    ends = cat._ends
    table = cat.compose_table
    for ob in cat.objects:
        mid = cat.identities.get(ob)
        if mid is None:
            viol.append(("identity-totality", (ob,)))
        elif ends[mid] != (ob, ob):
            viol.append(("identity-typing", (mid,)))
    for (g, f), r in table.items():
        if ends[f][1] != ends[g][0]:
            viol.append(("compose-domain", (g, f)))
        elif ends[r] != (ends[f][0], ends[g][1]):
            viol.append(("compose-typing", (g, f)))
    ids = cat.morphism_ids()
    for f in ids:
        for g in ids:
            if ends[f][1] == ends[g][0] and (g, f) not in table:
                viol.append(("compose-closure", (g, f)))
    for f in ids:
        src, dst = ends[f]
        left = cat.identities.get(dst)
        right = cat.identities.get(src)
        if left is not None and table.get((left, f), f) != f:
            viol.append(("left-unit", (f,)))
        if right is not None and table.get((f, right), f) != f:
            viol.append(("right-unit", (f,)))
    for f in ids:
        for g in ids:
            if ends[g][0] != ends[f][1]:
                continue
            gf = table.get((g, f))
            for h in ids:
                if ends[h][0] != ends[g][1]:
                    continue
                hg = table.get((h, g))
                if gf is None or hg is None:
                    continue
                left = table.get((h, gf))
                right = table.get((hg, f))
                if left is not None and right is not None and left != right:
                    viol.append(("associativity", (h, g, f)))
    return LawReport(tuple(viol))


def opposite(cat: PresentedCategory) -> PresentedCategory:
    return PresentedCategory(
        objects=cat.objects,
        morphisms=tuple((m, dst, src) for m, src, dst in cat.morphisms),
        identities=cat.identities,
        compose_table={(f, g): r for (g, f), r in cat.compose_table.items()},
    )


def _bounded(it: Iterable, budget: int, what: str) -> list:
    out = list(itertools.islice(it, budget + 1))
    if len(out) > budget:
        raise EnumerationBudgetExceeded(f"{what} exceeds the budget of {budget}")
    return out


def count_mediators(cat: Category, cone: ConeData, candidate: ConeData,
                    budget: int = DEFAULT_BUDGET) -> int:
    if set(cone.legs) != set(candidate.legs):
        raise TypeMismatch("cones are over different diagrams")
    if cone.direction == "limit":
        a, b = candidate.apex, cone.apex
    else:
        a, b = cone.apex, candidate.apex
    count = getattr(cat, "count_hom", None)
    if count is not None and count(a, b) > budget:
        raise EnumerationBudgetExceeded(f"hom-set of size {count(a, b)} exceeds {budget}")
    mediators = _bounded(cat.hom(a, b), budget, "mediator search")
    n = 0
    for m in mediators:
        if cone.direction == "limit":
            ok = all(cat.compose(cone.legs[k], m) == candidate.legs[k] for k in cone.legs)
        else:
            ok = all(cat.compose(m, cone.legs[k]) == candidate.legs[k] for k in cone.legs)
        n += ok
    return n


def verify_universal(cat: Category, cone: ConeData, candidates: Iterable[ConeData],
                     budget: int = DEFAULT_BUDGET) -> bool:
    """True iff every candidate cone factors through ``cone`` in exactly one way."""
    return all(count_mediators(cat, cone, c, budget) == 1 for c in candidates)


def mediators_unique(cat: Category, cone: ConeData, apex, budget: int = DEFAULT_BUDGET) -> bool:
    """``verify_universal`` against every cone with the given apex, in one pass.

    Each mediator determines the cone it factors, so every cone has exactly one
    mediator iff that assignment is injective and hits as many cones as there
    are.  Linear in the hom-set instead of quadratic.
    """
    keys = list(cone.legs)
    if cone.direction == "limit":
        a, b = apex, cone.apex
        n_cones = math.prod(cat.count_hom(apex, cat.cod(cone.legs[k])) for k in keys)
    else:
        a, b = cone.apex, apex
        n_cones = math.prod(cat.count_hom(cat.dom(cone.legs[k]), apex) for k in keys)
    if cat.count_hom(a, b) > budget:
        raise EnumerationBudgetExceeded(f"hom-set of size {cat.count_hom(a, b)} exceeds {budget}")
    seen = set()
    for m in cat.hom(a, b):
        if cone.direction == "limit":
            key = tuple(cat.compose(cone.legs[k], m) for k in keys)
        else:
            key = tuple(cat.compose(m, cone.legs[k]) for k in keys)
        if key in seen:
            return False
        seen.add(key)
    return len(seen) == n_cones


def cones_over(cat: Category, diagram: Mapping[Hashable, Any], apexes: Iterable,
               direction: str = "limit") -> Iterator[ConeData]:
    """All cones over a discrete diagram with apex drawn from ``apexes``."""
    keys = list(diagram)
    for apex in apexes:
        if direction == "limit":
            choices = [cat.hom(apex, diagram[k]) for k in keys]
        else:
            choices = [cat.hom(diagram[k], apex) for k in keys]
        for legs in itertools.product(*choices):
            yield ConeData(apex, dict(zip(keys, legs)), direction)


class OppositeCategory(Category):
    def __init__(self, cat: Category):
        self.cat = cat

    def hom(self, a, b):
        return self.cat.hom(b, a)

    def count_hom(self, a, b):
        return self.cat.count_hom(b, a)

    def identity(self, a):
        return self.cat.identity(a)

    def compose(self, g, f):
        return self.cat.compose(f, g)

    def dom(self, f):
        return self.cat.cod(f)

    def cod(self, f):
        return self.cat.dom(f)


class ProductCategory(Category):
    """Binary product of categories; objects and morphisms are pairs."""

    def __init__(self, left: Category, right: Category):
        self.left = left
        self.right = right

    def hom(self, a, b):
        return list(itertools.product(self.left.hom(a[0], b[0]), self.right.hom(a[1], b[1])))

    def count_hom(self, a, b):
        return self.left.count_hom(a[0], b[0]) * self.right.count_hom(a[1], b[1])

    def identity(self, a):
        return (self.left.identity(a[0]), self.right.identity(a[1]))

    def compose(self, g, f):
        return (self.left.compose(g[0], f[0]), self.right.compose(g[1], f[1]))

    def dom(self, f):
        return (self.left.dom(f[0]), self.right.dom(f[1]))

    def cod(self, f):
        return (self.left.cod(f[0]), self.right.cod(f[1]))


def presented(objects: Iterable[str], morphisms: Iterable[tuple[str, str, str]] = (),
              compose: Mapping[tuple[str, str], str] | None = None,
              identities: Mapping[str, str] | None = None) -> PresentedCategory:
    """Build a presented category, synthesizing what the presentation leaves out.

    Objects without a declared identity get ``id_<object>``; identities absent
    from ``morphisms`` are added; composites with an identity that are not in
    ``compose`` are filled in.
    """
    objects = list(objects)
    morphisms = [tuple(m) for m in morphisms]
    identities = dict(identities or {})
    table = dict(compose or {})
    declared = {m[0] for m in morphisms}
    for ob in objects:
        mid = identities.setdefault(ob, f"id_{ob}")
        if mid not in declared:
            morphisms.append((mid, ob, ob))
            declared.add(mid)
    ends = {m: (s, t) for m, s, t in morphisms}
    for ob, mid in identities.items():
        if ends.get(mid) != (ob, ob):
            continue
        for m, (s, t) in ends.items():
            if t == ob:
                table.setdefault((mid, m), m)
            if s == ob:
                table.setdefault((m, mid), m)
    return PresentedCategory(tuple(objects), tuple(morphisms), identities, table)
