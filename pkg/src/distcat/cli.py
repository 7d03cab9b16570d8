"""Command-line front end.

Reports go to standard output as JSON lines with a fixed key order; a short
human summary (including wall time) goes to standard error.

Exit codes: 0 pass, 1 property failure, 2 malformed input, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bases import BUILTIN_BASES, builtin_base
from .core import DEFAULT_BUDGET, validate_category
from .dist import Dist
from .distlaw import canonical_distributor, distributor_inverse_finset, distributor_sides
from .errors import (
    CategoryError,
    EnumerationBudgetExceeded,
    MalformedInput,
    NotALattice,
    ShapeRestriction,
    TypeMismatch,
    UnknownObject,
)
from .models import FinSet, LatticeModel, is_completely_distributive_finite
from .serialize import (
    category_from_dict,
    dist_object_from_dict,
    dist_object_to_dict,
    family_from_dict,
    family_to_dict,
    lattice_from_dict,
    load_json,
    render_label,
)
from .suite import SUITES, SuiteConfig, is_witness, replay_witness, run_laws

EXIT_PASS, EXIT_FAIL, EXIT_MALFORMED, EXIT_BUDGET = 0, 1, 2, 3


def emit(record: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(record, ensure_ascii=False) + "\n")


def note(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def load_base(spec: str | None):
    """A base category from a file, or one of the builtin names (default: terminal)."""
    if spec is None:
        return builtin_base("terminal")
    if Path(spec).exists():
        return category_from_dict(load_json(spec))
    if spec in BUILTIN_BASES:
        return builtin_base(spec)
    raise MalformedInput(f"{spec}: no such file or builtin base")


# validate


def cmd_validate(args) -> int:
    data = load_json(args.path)
    if is_witness(data):
        holds = replay_witness(data)
        emit({"kind": "witness", "law": data["law"], "holds": holds,
              "status": "pass" if holds else "fail"})
        return EXIT_PASS if holds else EXIT_FAIL
    if isinstance(data, dict) and "elements" in data:
        lattice = lattice_from_dict(data)
        cd = is_completely_distributive_finite(lattice)
        emit({"kind": "lattice", "elements": len(lattice), "completely_distributive": cd,
              "status": "pass"})
        return EXIT_PASS
    if isinstance(data, dict) and "objects" in data:
        cat = category_from_dict(data)
        report = validate_category(cat)
        for law, witness in report.violations:
            emit({"kind": "violation", "law": law, "witness": list(witness)})
        emit({"kind": "category", "objects": len(cat.objects), "morphisms": len(cat.morphisms),
              "violations": len(report.violations),
              "status": "pass" if report.passed else "fail"})
        return EXIT_PASS if report.passed else EXIT_FAIL
    raise MalformedInput(f"{args.path}: not a category, lattice or witness file")


# exp


def cmd_exp(args) -> int:
    base = load_base(args.base)
    dist = Dist(base, args.budget)
    a = dist_object_from_dict(load_json(args.a))
    b = dist_object_from_dict(load_json(args.b))
    for x in (a, b):
        for es in x.entries:
            for c in es:
                if c not in base.objects:
                    raise UnknownObject(c)
    results = {}
    if args.method in ("closed", "both"):
        results["closed"] = dist.exponential(a, b)
    if args.method in ("inductive", "both"):
        results["inductive"] = dist.exponential_inductive(a, b, general=args.general)
    status = "pass"
    record = {"kind": "exponential", "method": args.method}
    if args.method == "both":
        agree = dist.iso(results["closed"], results["inductive"]) is not None
        record["agree"] = agree
        status = "pass" if agree else "fail"
    e = results.get("closed", results.get("inductive"))
    record["shapes"] = len(e.outer)
    record["profile"] = _profile_counts(e)
    record["status"] = status
    emit(record)
    for name, obj in results.items():
        emit({"kind": "object", "method": name, "object": dist_object_to_dict(obj)})
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def _profile_counts(x) -> dict:
    counts: dict = {}
    for n in sorted(x.profile()):
        counts[str(n)] = counts.get(str(n), 0) + 1
    return counts


# laws


def cmd_laws(args) -> int:
    cfg = SuiteConfig(
        base=load_base(args.base),
        max_outer=args.max_outer,
        max_inner=args.max_inner,
        budget=args.budget,
        seed=args.seed,
        suites=tuple(args.suite) if args.suite else SUITES,
        samples=args.samples,
        mutate=args.mutate,
    )
    started = time.perf_counter()
    report = run_laws(cfg)
    elapsed = time.perf_counter() - started
    for rec in report.records():
        emit(rec)
    if args.witness_dir:
        out = Path(args.witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in report.results:
            if r.witness is not None:
                path = out / f"{r.suite}--{r.property}.json"
                path.write_text(json.dumps(r.witness, indent=1) + "\n", encoding="utf-8")
    for w in report.warnings:
        note(f"warning: {w}")
    note(f"{len(report.results)} properties, {report.instances} instances, "
         f"{report.failures} failures in {elapsed:.2f}s")
    return EXIT_PASS if report.passed else EXIT_FAIL


# distributor


def _load_model(spec: str, budget: int):
    if spec == "finset":
        return "finset", FinSet(budget=budget), lambda c: _as_size(c)
    kind, _, path = spec.partition(":")
    if kind == "lattice" and path:
        lattice = lattice_from_dict(load_json(path))

        def elem(c):
            if c not in lattice.elements:
                raise UnknownObject(c)
            return c
        return "lattice", LatticeModel(lattice), elem
    if kind == "dist" and path:
        base = load_base(path)

        def obj(c):
            x = dist_object_from_dict(c)
            for es in x.entries:
                for e in es:
                    if e not in base.objects:
                        raise UnknownObject(e)
            return x
        return "dist", Dist(base, budget), obj
    raise MalformedInput(f"unknown model {spec!r}; use finset, lattice:<file> or dist:<file>")


def _as_size(c):
    if not isinstance(c, int) or isinstance(c, bool) or c < 0:
        raise MalformedInput(f"FinSet entries are sizes, got {c!r}")
    return c


def _encode_entry(kind):
    if kind == "dist":
        return dist_object_to_dict
    return lambda c: c


def cmd_distributor(args) -> int:
    kind, model, decode = _load_model(args.model, args.budget)
    fam = family_from_dict(load_json(args.family), decode)
    d = canonical_distributor(model, fam)
    inverse = model.find_inverse(d)
    record = {"kind": "distributor", "model": kind, "J": len(fam.outer),
              "invertible": inverse is not None}
    if kind == "finset":
        inv = distributor_inverse_finset(fam)
        record["size"] = d.dom
        record["inverse_verified"] = (
            model.compose(inv, d) == model.identity(d.dom)
            and model.compose(d, inv) == model.identity(d.cod)
        )
    ok = inverse is not None and record.get("inverse_verified", True)
    record["status"] = "pass" if ok else "fail"
    emit(record)
    if not ok:
        source, target = distributor_sides(model, fam)
        enc = _encode_entry(kind)
        emit({"kind": "witness", "model": args.model,
              "family": family_to_dict(fam, enc),
              "source": _render_side(kind, source),
              "target": _render_side(kind, target)})
    return EXIT_PASS if ok else EXIT_FAIL


def _render_side(kind, x):
    if kind == "dist":
        return dist_object_to_dict(x)
    return render_label(x) if kind == "lattice" else x


# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="largest hom-set or exponential the tool may enumerate")

    p = sub.add_parser("validate", help="validate a category, lattice or witness file")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("exp", help="compute an exponential A => B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--base", help=f"base category file or builtin ({', '.join(BUILTIN_BASES)})")
    p.add_argument("--method", choices=("closed", "inductive", "both"), default="closed")
    p.add_argument("--general", action="store_true",
                   help="let the inductive method accept sources with several shapes")
    common(p)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("laws", help="run the generated law suites")
    p.add_argument("--base", help=f"base category file or builtin ({', '.join(BUILTIN_BASES)})")
    p.add_argument("--max-outer", type=int, default=2)
    p.add_argument("--max-inner", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--suite", action="append", choices=SUITES,
                   help="run only this suite (repeatable)")
    p.add_argument("--witness-dir", help="write a replayable file per failing property")
    p.add_argument("--mutate", choices=("compose",), help=argparse.SUPPRESS)
    common(p)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("distributor", help="check the canonical distributor of a family")
    p.add_argument("family")
    p.add_argument("--model", default="finset", help="finset, lattice:<file> or dist:<base>")
    common(p)
    p.set_defaults(func=cmd_distributor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationBudgetExceeded as exc:
        note(f"budget exceeded: {exc}")
        return EXIT_BUDGET
    except (MalformedInput, UnknownObject, TypeMismatch, NotALattice, ShapeRestriction) as exc:
        note(f"malformed input: {type(exc).__name__}: {exc}")
        return EXIT_MALFORMED
    except CategoryError as exc:
        note(f"error: {type(exc).__name__}: {exc}")
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
