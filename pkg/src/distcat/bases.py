"""A handful of small named base categories, usable wherever a base file is expected."""
from __future__ import annotations

from .core import PresentedCategory, presented


def _builtins() -> dict:
    return {
        "terminal": presented(["*"]),
        "discrete2": presented(["a", "b"]),
        "arrow": presented(["a", "b"], [("f", "a", "b")]),
        "parallel": presented(["a", "b"], [("f", "a", "b"), ("g", "a", "b")]),
        # one object, two idempotents with x.y = x and y.x = y
        "leftzero": presented(
            ["*"], [("x", "*", "*"), ("y", "*", "*")],
            {("x", "x"): "x", ("x", "y"): "x", ("y", "x"): "y", ("y", "y"): "y"},
        ),
        "idem_arrow": presented(
            ["a", "b"], [("e", "a", "a"), ("f", "a", "b")], {("e", "e"): "e", ("f", "e"): "f"},
        ),
        # two isomorphic objects, for exercising iso search
        "iso2": presented(
            ["a", "b"], [("u", "a", "b"), ("v", "b", "a")],
            {("v", "u"): "id_a", ("u", "v"): "id_b"},
        ),
    }


BUILTIN_BASES = tuple(_builtins())


def builtin_base(name: str) -> PresentedCategory:
    try:
        return _builtins()[name]
    except KeyError:
        raise KeyError(f"unknown builtin base {name!r}; choose from {', '.join(BUILTIN_BASES)}") from None


def small_bases() -> dict[str, PresentedCategory]:
    """The bases with at most two objects and two non-identity morphisms."""
    return {k: v for k, v in _builtins().items() if k != "iso2"}
