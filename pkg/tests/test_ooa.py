import pytest
from hypothesis import given, strategies as st

from kleinzip import census
from kleinzip.graph import Graph, canonical_cycle, complete_graph, cycle_graph, enumerate_cycles
from kleinzip.ooa import (
    OOAError,
    OrientedCycleSet,
    paper_ooa_fixture,
    paper_vertex_coloring,
    parity_system,
    path_incidence,
    same_up_to_component_flips,
    solve_ooa,
    ooa_violations,
    square_color_table,
    square_cycle,
)


def names(cycle):
    return " ".join(census.vertex_name(v) for v in cycle)


def test_fixture_entries():
    fx = paper_ooa_fixture()
    assert len(fx) == 24
    assert fx.label_of(0) == "0^1"
    # the u heptagon read off the first census row is one of the entries
    u = tuple(census.vertex(f"u{i}") for i in (1, 2, 3, 4, 5, 6, 0))
    assert canonical_cycle(u) in fx.undirected()
    assert len(set(fx.undirected())) == 24


def test_fixture_has_no_violations():
    fx = paper_ooa_fixture()
    assert ooa_violations(fx, 3) == []
    assert ooa_violations(fx.reversed_at(0), 3) != []


def test_square_examples():
    assert square_cycle((0, 1, 2)) == ((0, 2, 1), (1, 0, 2))
    assert square_cycle((0, 1, 2, 3, 4))[0] == (0, 2, 4, 1, 3)
    u = tuple(range(7))
    sq, mids = square_cycle(u)
    assert sq == (0, 2, 4, 6, 1, 3, 5)
    assert all(mids[p] == (sq[p] + 1) % 7 for p in range(7))
    with pytest.raises(ValueError):
        square_cycle((0, 1, 2, 3))


@given(st.integers(1, 12))
def test_square_visits_every_vertex_once(half):
    n = 2 * half + 1
    sq, mids = square_cycle(tuple(range(n)))
    assert sorted(sq) == sorted(mids) == list(range(n))


def test_two_triangles_sharing_an_edge():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)])
    res = solve_ooa(g, [(0, 1, 2), (1, 2, 3)], 2)
    assert res is not None
    assert ooa_violations(res, 2) == []
    # first cycle keeps its direction; the second must run 1-2 backwards
    assert res.cycles[0] == (0, 1, 2)
    assert res.cycles[1] == (1, 3, 2)


def test_odd_inconsistency_is_unsat():
    # the three 4-cycles of K4 cover each edge twice and form a projective
    # plane, which cannot be oriented
    k4 = complete_graph(4)
    assert solve_ooa(k4, enumerate_cycles(k4, 4), 2) is None
    assert solve_ooa(k4, enumerate_cycles(k4, 3), 2) is not None


def test_path_in_three_cycles_rejected():
    k4 = complete_graph(4)
    with pytest.raises(OOAError):
        solve_ooa(k4, enumerate_cycles(k4, 4) + enumerate_cycles(k4, 3), 2)


def test_non_cycle_rejected():
    with pytest.raises(OOAError):
        solve_ooa(cycle_graph(5), [(0, 2, 4, 1, 3)], 3)


def test_solver_matches_fixture_on_coxeter():
    g = census.build_coxeter()
    hept = enumerate_cycles(g, 7)
    system = parity_system(hept, 3)
    assert len(system.components()) == 1
    solved = solve_ooa(g, hept, 3)
    assert ooa_violations(solved, 3) == []
    assert same_up_to_component_flips(paper_ooa_fixture(), solved, 3)
    assert {len(v) for v in path_incidence(hept, 3).values()} == {2}


def test_color_table_decoding():
    table = square_color_table()
    assert len(table) == 24
    assert table[(0, 1)][0] == (1, 2)
    vc = paper_vertex_coloring()
    assert len(vc) == 28
    assert set(vc.values()) == set(range(1, 8))
    assert all(vc[census.vertex(f"u{i}")] == (i or 7) for i in range(7))


def test_label_round_trip():
    oc = OrientedCycleSet(((0, 1, 2),), ((3, 4),))
    assert oc.label_of(0) == "3^4"
    assert oc.reversed_at(0).cycles == ((0, 2, 1),)
    with pytest.raises(ValueError):
        OrientedCycleSet(((0, 1, 2),), ((1, 2), (2, 3)))
