"""Generated law suites over Dist(base): exhaustive within size caps, plus seeded samples.

Every law is a plain function ``law(dist, **args) -> bool``.  A failing
instance is recorded as a *witness*: the law name, the base category and the
serialized arguments, which :func:`replay_witness` re-checks in isolation.

Instances whose enumeration cost exceeds ``SuiteConfig.instance_cap`` are not
checked; they are counted as skipped in the report.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from . import containers
from .core import DEFAULT_BUDGET, ConeData, PresentedCategory, mediators_unique
from .dist import Dist, DistMorphism, DistObject
from .distlaw import (
    DistributorFamily,
    ProdOfSums,
    ProdOfSumsMorphism,
    ProdOfSumsObject,
    canonical_distributor,
    distributor_inverse_finset,
    lambda_mor,
    lambda_obj,
)
from .errors import MalformedInput
from .fam import Fam, FamObject
from .models import FinSet, enumerate_objects
from .serialize import (
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
    pos_morphism_from_dict,
    pos_morphism_to_dict,
)

SUITES = (
    "category-laws",
    "universal",
    "exponential",
    "adjunction",
    "lambda",
    "distributor",
    "containers",
)
MUTATIONS = ("compose",)


@dataclass
class SuiteConfig:
    base: PresentedCategory
    max_outer: int = 2
    max_inner: int = 2
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    suites: tuple = SUITES
    samples: int = 200          # adjunction triples and sampled associativity quadruples
    finset_families: int = 100
    dist_families: int = 20
    container_instances: int = 100
    instance_cap: int = 2000    # largest enumeration a single instance may need
    mutate: str | None = None   # test mode only

    def __post_init__(self):
        if self.max_outer < 0 or self.max_inner < 0:
            raise MalformedInput("size caps must be non-negative")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise MalformedInput(f"unknown suites: {', '.join(sorted(unknown))}")
        if self.mutate is not None and self.mutate not in MUTATIONS:
            raise MalformedInput(f"unknown mutation {self.mutate!r}")

    @property
    def empty(self) -> bool:
        return self.max_outer == 0 or self.max_inner == 0


@dataclass
class PropertyResult:
    suite: str
    property: str
    mode: str
    instances: int = 0
    skipped: int = 0
    failures: int = 0
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    def record(self, ok: bool, witness) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness()

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "property": self.property,
            "mode": self.mode,
            "instances": self.instances,
            "skipped": self.skipped,
            "failures": self.failures,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class Report:
    results: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.results)

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.results)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def get(self, suite: str, prop: str) -> PropertyResult:
        for r in self.results:
            if r.suite == suite and r.property == prop:
                return r
        raise KeyError((suite, prop))

    def records(self) -> list[dict]:
        rows = [r.as_dict() for r in sorted(self.results, key=lambda r: (r.suite, r.property))]
        rows.append({
            "summary": "laws",
            "properties": len(self.results),
            "instances": self.instances,
            "failures": self.failures,
            "status": "pass" if self.passed else "fail",
            "warnings": list(self.warnings),
        })
        return rows


# the mutant used to test the suite itself


class MutantDist(Dist):
    """Dist with a deliberately wrong composition.

    Composites with an identity are left alone, so the unit laws still hold;
    any other composite has its chosen source positions rotated among
    positions carrying the same base object.
    """

    def compose(self, h2, h1):
        out = super().compose(h2, h1)
        if h1 == self.identity(h1.src) or h2 == self.identity(h2.src):
            return out
        rows = []
        for ps, es, (j2, inner) in zip(out.src.inner, out.src.entries, out.table):
            rot = {}
            for c in set(es):
                same = [p for p, e in zip(ps, es) if e == c]
                rot.update({p: same[(n + 1) % len(same)] for n, p in enumerate(same)})
            rows.append((j2, [(rot[i], c) for i, c in inner]))
        return DistMorphism(out.src, out.dst, rows)


def make_dist(base, budget: int = DEFAULT_BUDGET, mutate: str | None = None) -> Dist:
    if mutate == "compose":
        return MutantDist(base, budget)
    return Dist(base, budget)


# laws


def law_left_unit(dist, f):
    return dist.compose(dist.identity(f.dst), f) == f


def law_right_unit(dist, f):
    return dist.compose(f, dist.identity(f.src)) == f


def law_associativity(dist, f, g, h):
    return dist.compose(h, dist.compose(g, f)) == dist.compose(dist.compose(h, g), f)


def law_product_universal(dist, factors, apex):
    p, projections = dist.product(factors)
    return mediators_unique(dist, ConeData(p, dict(enumerate(projections))), apex, dist.budget)


def law_coproduct_universal(dist, summands, apex):
    s, injections = dist.coproduct(summands)
    cone = ConeData(s, dict(enumerate(injections)), "colimit")
    return mediators_unique(dist, cone, apex, dist.budget)


def law_fam_product_universal(dist, factors, apex):
    fam = Fam(FinSet())
    p, projections = fam.product(factors)
    return mediators_unique(fam, ConeData(p, dict(enumerate(projections))), apex, dist.budget)


def law_fam_coproduct_universal(dist, summands, apex):
    fam = Fam(dist.base)
    s, injections = fam.coproduct(summands)
    cone = ConeData(s, dict(enumerate(injections)), "colimit")
    return mediators_unique(fam, cone, apex, dist.budget)


def law_exponential_agreement(dist, a, b, general):
    closed = dist.exponential(a, b)
    inductive = dist.exponential_inductive(a, b, general=general)
    return dist.iso(closed, inductive) is not None


def law_exponential_terminal_source(dist, b):
    return dist.iso(dist.exponential(dist.terminal(), b), b) is not None


def law_exponential_initial_target(dist, a):
    e = dist.exponential(a, dist.initial())
    expected = dist.initial() if len(a.outer) else dist.terminal()
    return dist.iso(e, expected) is not None


def law_adjunction(dist, x, a, b):
    """Counts agree and curry/uncurry are mutually inverse bijections, elementwise."""
    p = dist.product([x, a])[0]
    e = dist.exponential(a, b)
    images = set()
    n_left = 0
    for h in dist.iter_hom(p, b):
        n_left += 1
        k = dist.curry(h, x, a)
        if dist.uncurry(k, x, a, b) != h:
            return False
        images.add(k)
    n_right = 0
    for k in dist.iter_hom(x, e):
        n_right += 1
        if k not in images or dist.curry(dist.uncurry(k, x, a, b), x, a) != k:
            return False
    return (n_left == n_right == len(images)
            == dist.count_hom(p, b) == dist.count_hom(x, e))


def _nth_hom(dist, x, y, n):
    return next(itertools.islice(dist.iter_hom(x, y), n, None))


def law_eval_triangle(dist, x, a, b, n):
    p = dist.product([x, a])[0]
    h = _nth_hom(dist, p, b, n)
    k = dist.curry(h, x, a)
    return dist.compose(dist.eval(a, b), dist.product_mor([k, dist.identity(a)])) == h


def law_curry_naturality(dist, u, a, b, n):
    x2, x = u.src, u.dst
    h = _nth_hom(dist, dist.product([x, a])[0], b, n)
    lhs = dist.curry(dist.compose(h, dist.product_mor([u, dist.identity(a)])), x2, a)
    return lhs == dist.compose(dist.curry(h, x, a), u)


def law_lambda_identity(dist, x):
    return lambda_mor(ProdOfSums(dist.base).identity(x)) == dist.identity(lambda_obj(x))


def law_lambda_composition(dist, g1, g2):
    pos = ProdOfSums(dist.base)
    return lambda_mor(pos.compose(g2, g1)) == dist.compose(lambda_mor(g2), lambda_mor(g1))


def law_lambda_shapes(dist, x):
    d = lambda_obj(x)
    return len(d.outer) == math.prod(len(ps) for ps in x.inner) and all(
        len(ps) == len(x.outer) for ps in d.inner
    )


def law_distributor_finset(dist, family):
    model = FinSet()
    d = canonical_distributor(model, family)
    inv = distributor_inverse_finset(family)
    arithmetic = math.prod(sum(es) for es in family.entries) == sum(
        math.prod(c) for c in itertools.product(*family.entries)
    )
    return (
        arithmetic
        and model.find_inverse(d) is not None
        and model.compose(inv, d) == model.identity(d.dom)
        and model.compose(d, inv) == model.identity(d.cod)
    )


def law_distributor_dist(dist, family):
    return dist.find_inverse(canonical_distributor(dist, family)) is not None


def law_container_count(dist, a, b):
    formula = math.prod(
        sum(len(ps) ** len(qs) for qs in b.inner) for ps in a.inner
    )
    n = dist.count_hom(a, b)
    ok = formula == n == containers.count_morphisms(
        containers.from_dist_object(a), containers.from_dist_object(b)
    )
    if ok and n <= 5000:
        ok = sum(1 for _ in dist.iter_hom(a, b)) == n
    return ok


def law_container_compose(dist, h1, h2):
    expected = containers.compose(containers.from_dist_morphism(h2), containers.from_dist_morphism(h1))
    return containers.from_dist_morphism(dist.compose(h2, h1)) == expected


LAWS = {
    "left-unit": law_left_unit,
    "right-unit": law_right_unit,
    "associativity": law_associativity,
    "product-universal": law_product_universal,
    "coproduct-universal": law_coproduct_universal,
    "fam-product-universal": law_fam_product_universal,
    "fam-coproduct-universal": law_fam_coproduct_universal,
    "exponential-agreement": law_exponential_agreement,
    "exponential-terminal-source": law_exponential_terminal_source,
    "exponential-initial-target": law_exponential_initial_target,
    "adjunction": law_adjunction,
    "eval-triangle": law_eval_triangle,
    "curry-naturality": law_curry_naturality,
    "lambda-identity": law_lambda_identity,
    "lambda-composition": law_lambda_composition,
    "lambda-shapes": law_lambda_shapes,
    "distributor-finset": law_distributor_finset,
    "distributor-dist": law_distributor_dist,
    "container-count": law_container_count,
    "container-compose": law_container_compose,
}


# witnesses


def encode_arg(v):
    if v is None or isinstance(v, (bool, int, str)):
        return {"value": v}
    if isinstance(v, DistributorFamily):
        if v.entries and any(isinstance(c, DistObject) for es in v.entries for c in es):
            return {"dist-family": family_to_dict(v, dist_object_to_dict)}
        return {"family": family_to_dict(v)}
    if isinstance(v, ProdOfSumsObject):
        return {"pos-object": dist_object_to_dict(v)}
    if isinstance(v, DistObject):
        return {"dist-object": dist_object_to_dict(v)}
    if isinstance(v, DistMorphism):
        return {"dist-morphism": dist_morphism_to_dict(v)}
    if isinstance(v, ProdOfSumsMorphism):
        return {"pos-morphism": pos_morphism_to_dict(v)}
    if isinstance(v, FamObject):
        return {"fam-object": fam_object_to_dict(v)}
    if isinstance(v, (list, tuple)):
        return {"list": [encode_arg(x) for x in v]}
    raise TypeError(f"cannot encode {type(v).__name__}")


_DECODERS = {
    "value": lambda d: d,
    "family": family_from_dict,
    "dist-family": lambda d: family_from_dict(d, dist_object_from_dict),
    "pos-object": lambda d: dist_object_from_dict(d, ProdOfSumsObject),
    "dist-object": dist_object_from_dict,
    "dist-morphism": dist_morphism_from_dict,
    "pos-morphism": pos_morphism_from_dict,
    "fam-object": fam_object_from_dict,
    "list": lambda d: [decode_arg(x) for x in d],
}


def decode_arg(d):
    if not isinstance(d, dict) or len(d) != 1:
        raise MalformedInput("witness arguments must be single-key objects")
    (tag, payload), = d.items()
    if tag not in _DECODERS:
        raise MalformedInput(f"unknown witness argument tag {tag!r}")
    return _DECODERS[tag](payload)


def make_witness(cfg: SuiteConfig, suite: str, law: str, **args) -> dict:
    return {
        "kind": "witness",
        "suite": suite,
        "law": law,
        "mutate": cfg.mutate,
        "budget": cfg.budget,
        "base": category_to_dict(cfg.base),
        "args": {k: encode_arg(v) for k, v in args.items()},
    }


def is_witness(d) -> bool:
    return isinstance(d, dict) and d.get("kind") == "witness"


def replay_witness(d: dict) -> bool:
    """Re-check a witness; True means the law now holds on it."""
    if not is_witness(d) or d.get("law") not in LAWS:
        raise MalformedInput("not a witness file")
    if d.get("mutate") not in (None, *MUTATIONS):
        raise MalformedInput(f"unknown mutation {d.get('mutate')!r}")
    try:
        base = category_from_dict(d["base"])
        args = {k: decode_arg(v) for k, v in d["args"].items()}
    except (KeyError, AttributeError, TypeError) as exc:
        raise MalformedInput(f"bad witness: {exc!r}") from None
    dist = make_dist(base, d.get("budget", DEFAULT_BUDGET), d.get("mutate"))
    return bool(LAWS[d["law"]](dist, **args))


# suites


class _Run:
    def __init__(self, cfg: SuiteConfig, suite: str):
        self.cfg = cfg
        self.suite = suite
        self.dist = make_dist(cfg.base, cfg.budget, cfg.mutate)
        self.rng = random.Random(f"{cfg.seed}:{suite}")
        self.results: dict[str, PropertyResult] = {}

    def prop(self, name: str, mode: str) -> PropertyResult:
        if name not in self.results:
            self.results[name] = PropertyResult(self.suite, name, mode)
        return self.results[name]

    def check(self, prop: str, mode: str, law: str, **args) -> bool:
        ok = bool(LAWS[law](self.dist, **args))
        self.prop(prop, mode).record(ok, lambda: make_witness(self.cfg, self.suite, law, **args))
        return ok

    def skip(self, prop: str, mode: str, n: int = 1) -> None:
        self.prop(prop, mode).skipped += n

    @property
    def cap(self) -> int:
        return min(self.cfg.instance_cap, self.cfg.budget)

    def objects(self, cls=DistObject) -> list:
        objs = enumerate_objects(list(self.cfg.base.objects), self.cfg.max_outer, self.cfg.max_inner)
        if cls is DistObject:
            return objs
        return [cls(o.outer, o.inner, o.entries) for o in objs]

    def random_morphism(self, x, y):
        rows = [self.dist._shape_homs(ps, es, y) for ps, es in zip(x.inner, x.entries)]
        if any(not r for r in rows):
            return None
        return DistMorphism(x, y, [self.rng.choice(r) for r in rows])


def _category_laws(run: _Run) -> None:
    d = run.dist
    objs = run.objects()
    for a in objs:
        for b in objs:
            if d.count_hom(a, b) > run.cap:
                run.skip("left-unit", "exhaustive")
                run.skip("right-unit", "exhaustive")
                continue
            for f in d.iter_hom(a, b):
                run.check("left-unit", "exhaustive", "left-unit", f=f)
                run.check("right-unit", "exhaustive", "right-unit", f=f)

    # A composite's row at a source shape only involves the rows of its factors
    # along that shape's path, so triples of single-shape objects cover every
    # row of every composable triple.
    singles = [o for o in objs if len(o.outer) == 1]
    homs = {(a, b): list(d.iter_hom(a, b)) for a in singles for b in singles
            if d.count_hom(a, b) <= run.cap}
    prop = "associativity-shapewise"
    for a, b, c, e in itertools.product(singles, repeat=4):
        if (a, b) not in homs or (b, c) not in homs or (c, e) not in homs:
            run.skip(prop, "exhaustive")
            continue
        if len(homs[a, b]) * len(homs[b, c]) * len(homs[c, e]) > 50 * run.cap:
            run.skip(prop, "exhaustive")
            continue
        for f in homs[a, b]:
            for g in homs[b, c]:
                for h in homs[c, e]:
                    run.check(prop, "exhaustive", "associativity", f=f, g=g, h=h)

    prop = "associativity-sampled"
    run.prop(prop, "sampled")
    if not objs:
        return
    for _ in range(run.cfg.samples):
        a, b, c, e = (run.rng.choice(objs) for _ in range(4))
        for _ in range(5):
            f, g, h = run.random_morphism(a, b), run.random_morphism(b, c), run.random_morphism(c, e)
            if f is None or g is None or h is None:
                run.skip(prop, "sampled")
                break
            run.check(prop, "sampled", "associativity", f=f, g=g, h=h)


def _universal(run: _Run) -> None:
    d = run.dist
    objs = run.objects()
    pairs = list(itertools.combinations_with_replacement(objs, 2))
    for a, b in pairs:
        p = d.product([a, b])[0]
        s = d.coproduct([a, b])[0]
        for x in objs:
            if d.count_hom(x, p) <= run.cap:
                run.check("dist-product", "exhaustive", "product-universal", factors=[a, b], apex=x)
            else:
                run.skip("dist-product", "exhaustive")
            if d.count_hom(s, x) <= run.cap:
                run.check("dist-coproduct", "exhaustive", "coproduct-universal", summands=[a, b], apex=x)
            else:
                run.skip("dist-coproduct", "exhaustive")
    for x in objs:
        run.check("dist-terminal", "exhaustive", "product-universal", factors=[], apex=x)
        run.check("dist-initial", "exhaustive", "coproduct-universal", summands=[], apex=x)
        run.check("dist-product-unary", "exhaustive", "product-universal", factors=[x], apex=x)

    fam_finset = [
        FamObject.of(*combo)
        for n in range(run.cfg.max_outer + 1)
        for combo in itertools.combinations_with_replacement(range(run.cfg.max_inner + 1), n)
    ]
    fam = Fam(FinSet())
    for a, b in itertools.combinations_with_replacement(fam_finset, 2):
        p = fam.product([a, b])[0]
        for x in fam_finset:
            if fam.count_hom(x, p) <= run.cap:
                run.check("fam-product", "exhaustive", "fam-product-universal", factors=[a, b], apex=x)
            else:
                run.skip("fam-product", "exhaustive")

    fam_base = [
        FamObject.of(*combo)
        for n in range(run.cfg.max_outer + 1)
        for combo in itertools.combinations_with_replacement(run.cfg.base.objects, n)
    ]
    fam = Fam(run.cfg.base)
    for a, b in itertools.combinations_with_replacement(fam_base, 2):
        s = fam.coproduct([a, b])[0]
        for x in fam_base:
            if fam.count_hom(s, x) <= run.cap:
                run.check("fam-coproduct", "exhaustive", "fam-coproduct-universal", summands=[a, b], apex=x)
            else:
                run.skip("fam-coproduct", "exhaustive")


def _exponential(run: _Run) -> None:
    d = run.dist
    objs = run.objects()
    for a in objs:
        for b in objs:
            if d.count_exponential_shapes(a, b) > run.cap:
                run.skip("closed-vs-inductive", "exhaustive")
                continue
            run.check("closed-vs-inductive", "exhaustive", "exponential-agreement",
                      a=a, b=b, general=len(a.outer) != 1)
    for b in objs:
        if d.count_exponential_shapes(d.terminal(), b) <= run.cap:
            run.check("terminal-source", "exhaustive", "exponential-terminal-source", b=b)
        else:
            run.skip("terminal-source", "exhaustive")
    for a in objs:
        run.check("initial-target", "exhaustive", "exponential-initial-target", a=a)


def _adjunction_cost(d: Dist, x, a, b) -> int:
    # |hom(x * a, b)| without building the product
    count = d.base.count_hom
    return math.prod(
        sum(math.prod(sum(count(c, t) for c in ex + ea) for t in eb) for eb in b.entries)
        for ex in x.entries for ea in a.entries
    )


def _adjunction(run: _Run) -> None:
    d = run.dist
    objs = run.objects()
    admissible = [
        (x, a, b) for x, a, b in itertools.product(objs, repeat=3)
        if _adjunction_cost(d, x, a, b) <= run.cap
        and d.count_exponential_shapes(a, b) <= run.cap
    ]
    run.skip("curry-bijection", "sampled", len(objs) ** 3 - len(admissible))
    chosen = run.rng.sample(admissible, min(run.cfg.samples, len(admissible)))
    run.prop("curry-bijection", "sampled")
    for x, a, b in chosen:
        run.check("curry-bijection", "sampled", "adjunction", x=x, a=a, b=b)
        n = _adjunction_cost(d, x, a, b)
        if n == 0:
            continue
        for _ in range(3):
            run.check("eval-triangle", "sampled", "eval-triangle", x=x, a=a, b=b, n=run.rng.randrange(n))
            x2 = run.rng.choice(objs)
            u = run.random_morphism(x2, x)
            if u is None:
                continue
            run.check("curry-naturality", "sampled", "curry-naturality",
                      u=u, a=a, b=b, n=run.rng.randrange(n))


def _lambda(run: _Run) -> None:
    pos = ProdOfSums(run.cfg.base)
    objs = run.objects(ProdOfSumsObject)
    for x in objs:
        run.check("identity", "exhaustive", "lambda-identity", x=x)
        run.check("shape-count", "exhaustive", "lambda-shapes", x=x)
    homs = {}
    for x in objs:
        for y in objs:
            if pos.count_hom(x, y) <= run.cap:
                homs[x, y] = pos.hom(x, y)
    for x, y, z in itertools.product(objs, repeat=3):
        if (x, y) not in homs or (y, z) not in homs or len(homs[x, y]) * len(homs[y, z]) > run.cap:
            run.skip("composition", "exhaustive")
            continue
        for g1 in homs[x, y]:
            for g2 in homs[y, z]:
                run.check("composition", "exhaustive", "lambda-composition", g1=g1, g2=g2)


def random_finset_family(rng: random.Random, max_outer=3, max_inner=3, max_size=2) -> DistributorFamily:
    rows = [
        [rng.randint(0, max_size) for _ in range(rng.randint(0, max_inner))]
        for _ in range(rng.randint(0, max_outer))
    ]
    return DistributorFamily.of(*rows)


def _distributor(run: _Run) -> None:
    run.prop("finset", "sampled")
    for _ in range(run.cfg.finset_families):
        run.check("finset", "sampled", "distributor-finset", family=random_finset_family(run.rng))
    d = run.dist
    objs = run.objects()
    small = [o for o in objs if sum(o.profile()) <= 2 and len(o.outer) <= 2]
    run.prop("dist", "sampled")
    if not small:
        return
    attempts = 0
    checked = 0
    while checked < run.cfg.dist_families and attempts < 50 * run.cfg.dist_families:
        attempts += 1
        rows = [
            [run.rng.choice(small) for _ in range(run.rng.randint(0, 2))]
            for _ in range(run.rng.randint(0, 2))
        ]
        fam = DistributorFamily.of(*rows)
        sums = [d.coproduct(list(es))[0] for es in fam.entries]
        target = d.product(sums)[0]
        if len(target.outer) > 64 or sum(target.profile()) > 256:
            continue
        checked += 1
        run.check("dist", "sampled", "distributor-dist", family=fam)


def _is_terminal_base(base: PresentedCategory) -> bool:
    return len(base.objects) == 1 and len(base.morphisms) == 1


def _random_container(rng, obj, max_shapes=3, max_positions=3) -> DistObject:
    return DistObject.container(
        *(rng.randint(0, max_positions) for _ in range(rng.randint(0, max_shapes))), obj=obj
    )


def _containers(run: _Run) -> None:
    run.prop("hom-count", "sampled")
    run.prop("compose-oracle", "sampled")
    if not _is_terminal_base(run.cfg.base):
        return
    obj = run.cfg.base.objects[0]
    rng = run.rng
    for _ in range(run.cfg.container_instances):
        a, b = _random_container(rng, obj), _random_container(rng, obj)
        run.check("hom-count", "sampled", "container-count", a=a, b=b)
    done = 0
    while done < run.cfg.container_instances:
        a, b, c = (_random_container(rng, obj, 2, 2) for _ in range(3))
        h1, h2 = run.random_morphism(a, b), run.random_morphism(b, c)
        if h1 is None or h2 is None:
            continue
        done += 1
        run.check("compose-oracle", "sampled", "container-compose", h1=h1, h2=h2)


_RUNNERS = {
    "category-laws": _category_laws,
    "universal": _universal,
    "exponential": _exponential,
    "adjunction": _adjunction,
    "lambda": _lambda,
    "distributor": _distributor,
    "containers": _containers,
}


def run_suite(cfg: SuiteConfig, suite: str) -> list[PropertyResult]:
    run = _Run(cfg, suite)
    _RUNNERS[suite](run)
    return list(run.results.values())


def run_laws(cfg: SuiteConfig) -> Report:
    report = Report()
    if cfg.empty:
        report.warnings.append("0 instances: a size cap is 0, the suite is empty")
        return report
    for suite in SUITES:
        if suite in cfg.suites:
            report.results.extend(run_suite(cfg, suite))
    if report.instances == 0:
        report.warnings.append("0 instances")
    return report
