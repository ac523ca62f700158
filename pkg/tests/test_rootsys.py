import pytest
from hypothesis import given
from hypothesis import strategies as st

from dpzoo.lattice import blowup_of_p2, hirzebruch
from dpzoo.rootsys import (
    AdeType,
    NonSimpleCrossingError,
    NotNegativeDefiniteError,
    ade_type,
    enumerate_minus_one_classes,
    enumerate_roots,
    reflect,
)

# Both enumerations run internally and must agree; the counts below are the
# orders of the root systems E8, E7, E6, D5, A4, A2+A1, A1 and the empty one.
ROOT_COUNTS = {1: 240, 2: 126, 3: 72, 4: 40, 5: 20, 6: 8, 7: 2, 8: 0}
LINE_CLASS_COUNTS = {1: 240, 2: 56, 3: 27, 4: 16, 5: 10, 6: 6, 7: 3, 8: 1}


@pytest.mark.parametrize("degree", sorted(ROOT_COUNTS))
def test_root_counts(degree):
    lat = blowup_of_p2(9 - degree)
    assert len(enumerate_roots(lat)) == ROOT_COUNTS[degree]


@pytest.mark.parametrize("degree", sorted(LINE_CLASS_COUNTS))
def test_minus_one_counts(degree):
    lat = blowup_of_p2(9 - degree)
    assert len(enumerate_minus_one_classes(lat)) == LINE_CLASS_COUNTS[degree]


def test_degree7_roots_explicit():
    lat = blowup_of_p2(2)
    got = {r.coords for r in enumerate_roots(lat)}
    assert got == {(0, 1, -1), (0, -1, 1)}


def test_f1_lattice_has_no_roots():
    # 3a = b and a^2 - b^2 = -2 forces -8a^2 = -2, impossible over Z.
    assert len(enumerate_roots(blowup_of_p2(1))) == 0


def test_hirzebruch_roots():
    assert {r.coords for r in enumerate_roots(hirzebruch(2))} == {(0, 1), (0, -1)}
    assert {r.coords for r in enumerate_roots(hirzebruch(0))} == {(1, -1), (-1, 1)}
    assert enumerate_minus_one_classes(hirzebruch(2)) == ()
    assert enumerate_minus_one_classes(hirzebruch(0)) == ()


def test_minus_one_classes_degree7():
    lat = blowup_of_p2(2)
    got = {e.coords for e in enumerate_minus_one_classes(lat)}
    assert got == {(0, 1, 0), (0, 0, 1), (1, -1, -1)}


def test_minus_one_classes_f1_lattice():
    assert [e.coords for e in enumerate_minus_one_classes(blowup_of_p2(1))] == [
        (0, 1)
    ]


@pytest.mark.parametrize("degree", [3, 5, 7])
def test_roots_closed_under_negation(degree):
    lat = blowup_of_p2(9 - degree)
    roots = set(enumerate_roots(lat))
    assert all(-r in roots for r in roots)


def test_reflect_transposition():
    lat = blowup_of_p2(2)
    r = lat.cls(0, 1, -1)  # e1 - e2
    e2 = lat.cls(0, 0, 1)
    assert reflect(r, e2, lat).coords == (0, 1, 0)


def test_reflect_fixes_orthogonal():
    lat = blowup_of_p2(2)
    r = lat.cls(0, 1, -1)
    c = lat.cls(1, -1, -1)  # pairs 0 with r
    assert reflect(r, c, lat) == c


def test_reflect_rejects_non_root():
    lat = blowup_of_p2(2)
    with pytest.raises(ValueError):
        reflect(lat.cls(0, 1, 0), lat.cls(0, 0, 1), lat)


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_reflect_involution_and_invariants(coords):
    lat = blowup_of_p2(3)
    c = lat.cls(*coords)
    for r in enumerate_roots(lat):
        image = reflect(r, c, lat)
        assert reflect(r, image, lat) == c
        assert lat.pair(image, image) == lat.pair(c, c)
        assert lat.pair(lat.canonical, image) == lat.pair(lat.canonical, c)


# -- ADE recognition ---------------------------------------------------------


def test_single_root_is_a1():
    lat = blowup_of_p2(2)
    assert ade_type(lat, [lat.cls(0, 1, -1)]).render() == "A1"


def test_d5_diagram_recognized():
    lat = blowup_of_p2(5)
    roots = [
        lat.cls(0, 1, -1, 0, 0, 0),
        lat.cls(0, 0, 1, -1, 0, 0),
        lat.cls(0, 0, 0, 1, -1, 0),
        lat.cls(0, 0, 0, 0, 1, -1),
        lat.cls(1, -1, -1, -1, 0, 0),
    ]
    assert ade_type(lat, roots).render() == "D5"


def test_catalog_2a3_a1_configuration(catalog):
    entry = catalog.entry("d2-2A3-A1")
    cfg = entry.config()
    assert ade_type(cfg.lattice, list(cfg.simple_roots)).render() == "2A3+A1"


def test_duplicates_rejected():
    lat = blowup_of_p2(2)
    r = lat.cls(0, 1, -1)
    with pytest.raises(ValueError):
        ade_type(lat, [r, r])


def test_non_simple_crossing_rejected():
    lat = blowup_of_p2(2)
    r = lat.cls(0, 1, -1)
    with pytest.raises(NonSimpleCrossingError):
        ade_type(lat, [r, -r])  # pairing +2


def test_cycle_rejected():
    # e1-e2, e2-e3, e3-e4, and the A3-lowest-root partner close a cycle.
    lat = blowup_of_p2(4)
    roots = [
        lat.cls(0, 1, -1, 0, 0),
        lat.cls(0, 0, 1, -1, 0),
        lat.cls(0, 0, 0, 1, -1),
        lat.cls(0, -1, 0, 0, 1),
    ]
    with pytest.raises(NotNegativeDefiniteError):
        ade_type(lat, roots)


def test_ade_permutation_invariance():
    lat = blowup_of_p2(5)
    roots = [
        lat.cls(0, 1, -1, 0, 0, 0),
        lat.cls(0, 0, 1, -1, 0, 0),
        lat.cls(1, -1, -1, -1, 0, 0),
        lat.cls(0, 0, 0, 0, 1, -1),
    ]
    base = ade_type(lat, roots)
    assert ade_type(lat, roots[::-1]) == base
    assert ade_type(lat, [roots[2], roots[0], roots[3], roots[1]]) == base


@given(st.integers(0, 19))
def test_ade_weyl_invariance(k):
    lat = blowup_of_p2(4)
    roots = [lat.cls(0, 1, -1, 0, 0), lat.cls(0, 0, 1, -1, 0)]
    mirror = list(enumerate_roots(lat))[k]
    moved = [reflect(mirror, r, lat) for r in roots]
    assert ade_type(lat, moved) == ade_type(lat, roots)


def test_adetype_render_and_parse_roundtrip():
    for text in ("smooth", "A1", "2A3+A1", "D4+3A1", "E7+A1", "2D4", "3A2"):
        assert AdeType.parse(text).render() == text


def test_adetype_rank_constraints():
    with pytest.raises(ValueError):
        AdeType.of(("D", 3))
    with pytest.raises(ValueError):
        AdeType.of(("E", 5))
