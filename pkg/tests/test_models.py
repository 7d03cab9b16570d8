import itertools

import pytest
from hypothesis import given, strategies as st

from distcat.bases import builtin_base
from distcat.core import ConeData, cones_over, verify_universal
from distcat.dist import DistObject
from distcat.distlaw import DistributorFamily, check_distributor_iso
from distcat.errors import EnumerationBudgetExceeded, MalformedInput, NotALattice
from distcat.models import (
    FiniteLattice,
    FinSet,
    ModelCategory,
    all_lattices,
    boolean_lattice,
    chain,
    dist_as_model,
    enumerate_objects,
    finset_model,
    forbidden_sublattice,
    interior_antichains,
    is_completely_distributive_finite,
    is_distributive_binary,
    lattice_model,
    m3,
    n5,
)


def test_finset_examples():
    fs = finset_model(3)
    assert len(fs.hom(2, 3)) == 9
    assert fs.product([2, 3])[0] == 6
    assert fs.coproduct([2, 3])[0] == 5
    assert fs.objects() == [0, 1, 2, 3]
    # lexicographic pairing: first factor most significant
    _, (p0, p1) = fs.product([2, 3])
    assert p0.values == (0, 0, 0, 1, 1, 1) and p1.values == (0, 1, 2, 0, 1, 2)
    _, (i0, i1) = fs.coproduct([2, 3])
    assert i0.values == (0, 1) and i1.values == (2, 3, 4)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.data())
def test_pack_unpack(sizes, data):
    coords = tuple(data.draw(st.integers(0, n - 1)) for n in sizes)
    assert FinSet.unpack(sizes, FinSet.pack(sizes, coords)) == coords
    k = data.draw(st.integers(0, len(sizes) - 1))
    x = data.draw(st.integers(0, sizes[k] - 1))
    assert FinSet.locate(sizes, FinSet.inject(sizes, k, x)) == (k, x)


def test_locate_out_of_range():
    with pytest.raises(ValueError):
        FinSet.locate([1, 2], 3)


@pytest.mark.parametrize("sizes", [[], [2], [2, 1], [0, 2], [1, 2, 2]])
def test_finset_structure_is_universal(sizes):
    fs = FinSet()
    diagram = dict(enumerate(sizes))
    p, proj = fs.product(sizes)
    assert verify_universal(fs, ConeData(p, dict(enumerate(proj))), cones_over(fs, diagram, range(3)))
    s, inj = fs.coproduct(sizes)
    cocone = ConeData(s, dict(enumerate(inj)), "colimit")
    assert verify_universal(fs, cocone, cones_over(fs, diagram, range(3), "colimit"))
    for c in cones_over(fs, diagram, range(3)):
        m = fs.tupling([c.legs[k] for k in diagram], c.apex, sizes)
        assert all(fs.compose(proj[k], m) == c.legs[k] for k in diagram)
    for c in cones_over(fs, diagram, range(3), "colimit"):
        m = fs.cotupling([c.legs[k] for k in diagram], sizes, c.apex)
        assert all(fs.compose(m, inj[k]) == c.legs[k] for k in diagram)


def test_finset_inverse_matches_search():
    fs = FinSet()
    for n in range(4):
        for f in fs.hom(n, n):
            assert fs.find_inverse(f) == ModelCategory.find_inverse(fs, f)
    assert fs.find_inverse(fs.hom(1, 2)[0]) is None


def test_model_inverse_budget():
    fs = FinSet(budget=5)
    with pytest.raises(EnumerationBudgetExceeded):
        ModelCategory.find_inverse(fs, fs.identity(3))


def test_lattice_construction():
    L = FiniteLattice.from_pairs("abc", [("a", "b"), ("b", "c")])
    assert L.le("a", "c") and L.bottom == "a" and L.top == "c"
    assert L.join("a", "b") == "b" and L.meet("c", "b") == "b"
    assert L.join_all([]) == "a" and L.meet_all([]) == "c"
    with pytest.raises(NotALattice):
        FiniteLattice.from_pairs("ab", [])
    with pytest.raises(NotALattice):
        FiniteLattice.from_pairs("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(NotALattice):
        FiniteLattice.from_pairs([], [])
    with pytest.raises(NotALattice):
        # two incomparable upper bounds of {a, b}, with no least one
        FiniteLattice.from_pairs("0abcd1", [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"),
                                            ("a", "d"), ("b", "d"), ("c", "1"), ("d", "1")])
    with pytest.raises(MalformedInput):
        FiniteLattice.from_pairs("ab", [("a", "z")])
    with pytest.raises(MalformedInput):
        FiniteLattice.from_pairs("aa", [])


@pytest.mark.parametrize("lattice,expected", [
    (chain(1), True), (chain(2), True), (chain(4), True), (boolean_lattice(2), True),
    (m3(), False), (n5(), False),
])
def test_named_lattices(lattice, expected):
    assert is_completely_distributive_finite(lattice) is expected
    assert is_distributive_binary(lattice) is expected
    assert (forbidden_sublattice(lattice) is None) is expected


def test_forbidden_sublattice_kinds():
    assert forbidden_sublattice(m3())[0] == "M3"
    assert forbidden_sublattice(n5())[0] == "N5"


def test_lattice_model_is_thin():
    model = lattice_model(boolean_lattice(2))
    assert model.hom("01", "11") == [("01", "11")]
    assert model.hom("01", "10") == []
    assert model.product(["01", "10"]) == ("00", [("00", "01"), ("00", "10")])
    assert model.coproduct([])[0] == "00"
    assert model.find_inverse(model.identity("01")) == ("01", "01")
    assert model.find_inverse(("00", "11")) is None


def test_lattice_model_structure_is_universal():
    model = lattice_model(n5())
    objs = model.objects()
    for a, b in itertools.product(objs, repeat=2):
        p, proj = model.product([a, b])
        assert verify_universal(model, ConeData(p, dict(enumerate(proj))),
                                cones_over(model, {0: a, 1: b}, objs))
        s, inj = model.coproduct([a, b])
        assert verify_universal(model, ConeData(s, dict(enumerate(inj)), "colimit"),
                                cones_over(model, {0: a, 1: b}, objs, "colimit"))


def test_interior_antichains():
    assert interior_antichains(m3()) == [("a",), ("b",), ("c",), ("a", "b"), ("a", "c"),
                                         ("b", "c"), ("a", "b", "c")]
    assert interior_antichains(chain(2)) == []


def test_antichain_families_decide_small_families():
    # on 4- and 5-element lattices, compare against all families of small
    # arbitrary subsets (repeats, top and bottom allowed)
    for L in all_lattices(5):
        model = lattice_model(L)
        expected = is_completely_distributive_finite(L)
        subsets = [s for r in range(0, 3) for s in itertools.combinations(L.elements, r)]
        brute = all(
            check_distributor_iso(model, DistributorFamily.of(*rows))
            for n in range(3) for rows in itertools.product(subsets, repeat=n)
        )
        assert brute is expected


def test_lattice_counts():
    counts = [sum(1 for L in all_lattices(6) if len(L) == n) for n in range(1, 7)]
    assert counts == [1, 1, 1, 2, 5, 15]


def test_dist_as_model():
    model = dist_as_model(builtin_base("terminal"), 1, 2)
    objs = model.objects()
    assert objs[0] == DistObject((), (), ())
    assert DistObject.container(0) in objs and DistObject.container(2) in objs
    assert len(objs) == 4
    fam = DistributorFamily.of([DistObject.container(1), DistObject.container(2)],
                               [DistObject.container(0), DistObject.container(1)])
    assert check_distributor_iso(model, fam)


def test_enumerate_objects_counts():
    # shapes are multisets of base objects; objects are multisets of shapes
    assert len(enumerate_objects(["*"], 2, 2)) == 10
    assert len(enumerate_objects(["a", "b"], 2, 2)) == 28
    assert enumerate_objects(["a"], 0, 5) == [DistObject((), (), ())]
