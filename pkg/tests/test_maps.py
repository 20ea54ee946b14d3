import pytest
from hypothesis import assume, given, strategies as st

from kleinzip.graph import complete_graph, girth
from kleinzip.maps import (
    DartMap,
    MapError,
    compose,
    dual_graph,
    inverse,
    map_summary,
    perm_orbits,
    petrie_polygons,
    underlying_graph,
    zip_cycles,
    zip_ooa,
)
from kleinzip.ooa import OrientedCycleSet, paper_ooa_fixture
from kleinzip.search import find_isomorphism

TETRAHEDRON = OrientedCycleSet(((0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)))


@st.composite
def random_maps(draw, max_edges=6):
    e = draw(st.integers(1, max_edges))
    darts = draw(st.permutations(range(2 * e)))
    alpha = [0] * (2 * e)
    for a, b in zip(darts[::2], darts[1::2]):
        alpha[a], alpha[b] = b, a
    phi = draw(st.permutations(range(2 * e)))
    return DartMap(tuple(alpha), tuple(phi))


def edge_pair(m, d):
    return frozenset((m.heads[d], m.heads[m.alpha[d]]))


def test_tetrahedron():
    m = zip_cycles(TETRAHEDRON, squared=False)
    s = map_summary(m)
    assert (s.V, s.E, s.F, s.genus) == (4, 6, 4, 0)
    assert find_isomorphism(underlying_graph(m), complete_graph(4)) is not None
    assert find_isomorphism(dual_graph(m), complete_graph(4)) is not None


def test_single_edge_on_sphere():
    s = map_summary(DartMap((1, 0), (1, 0)))
    assert (s.V, s.E, s.F, s.genus) == (2, 1, 1, 0)


def test_tetrahedron_petrie_polygons():
    # each zigzag of the tetrahedron is a 4-cycle missing one pair of opposite edges
    m = zip_cycles(TETRAHEDRON, squared=False)
    polys = petrie_polygons(m)
    assert sorted(len(p) for p in polys) == [4, 4, 4]
    all_edges = {frozenset(e) for e in complete_graph(4).edges}
    missing = []
    for p in polys:
        used = {edge_pair(m, d) for d in p}
        assert len(used) == 4
        rest = all_edges - used
        a, b = rest
        assert not a & b
        missing.append(frozenset(rest))
    assert len(set(missing)) == 3


def test_invalid_alpha():
    with pytest.raises(MapError):
        DartMap((0, 1), (1, 0))
    with pytest.raises(MapError):
        DartMap((1, 2, 0), (0, 1, 2))


def test_pairing_failure():
    with pytest.raises(MapError):
        zip_cycles(OrientedCycleSet(((0, 1, 2),)), squared=False)


def test_corrupt_fixture_fails_to_zip():
    with pytest.raises(MapError):
        zip_ooa(paper_ooa_fixture().reversed_at(3))


def test_klein_map_counts():
    m = zip_ooa(paper_ooa_fixture())
    s = map_summary(m)
    assert (s.V, s.E, s.F, s.genus) == (56, 84, 24, 3)
    assert set(s.face_sizes) == {7} and set(s.vertex_orbit_sizes) == {3}
    assert girth(underlying_graph(m)) == 7
    assert {len(p) for p in petrie_polygons(m)} == {8}
    assert len(petrie_polygons(m)) == 21


@given(st.permutations(range(8)), st.permutations(range(8)))
def test_compose_and_inverse(p, q):
    pq = compose(p, q)
    assert all(pq[i] == p[q[i]] for i in range(8))
    assert compose(p, inverse(p)) == tuple(range(8))
    assert sorted(d for orb in perm_orbits(p) for d in orb) == list(range(8))


@given(random_maps())
def test_random_maps_have_integral_genus(m):
    assume(m.is_connected())
    s = map_summary(m)
    assert s.euler_characteristic == 2 - 2 * s.genus
    d = map_summary(m.dual())
    assert (d.V, d.E, d.F, d.genus) == (s.F, s.E, s.V, s.genus)
    assert all(m.alpha[m.alpha[x]] == x != m.alpha[x] for x in range(m.n_darts))


@given(random_maps())
def test_petrie_lengths_cover_each_edge_twice(m):
    assume(m.is_connected())
    total = sum(len(p) for p in petrie_polygons(m))
    assert total == 2 * len(m.edges)
