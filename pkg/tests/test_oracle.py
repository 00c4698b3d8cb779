import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from outerplanar.errors import UsageError
from outerplanar.oracle import (SmallGraph, canonical_form, census, census_csv_rows,
                                is_outerplanar, outerplanar_classes, vertex_orbits)


def apex_planar(g):
    """Outerplanar iff planar after adding a vertex joined to every vertex."""
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def test_forbidden_minors():
    k4 = SmallGraph.from_edges(4, itertools.combinations(range(4), 2))
    k23 = SmallGraph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert not is_outerplanar(k4) and not is_outerplanar(k23)
    assert is_outerplanar(SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))


def test_exhaustive_agreement_with_apex_planarity_up_to_five():
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = SmallGraph.from_mask(n, mask)
            assert is_outerplanar(g) == apex_planar(g)


@given(st.integers(0, (1 << 15) - 1))
@settings(max_examples=300, deadline=None)
def test_six_vertex_agreement_with_apex_planarity(mask):
    g = SmallGraph.from_mask(6, mask)
    assert is_outerplanar(g) == apex_planar(g)


@given(st.integers(0, (1 << 15) - 1), st.permutations(range(6)))
@settings(max_examples=150, deadline=None)
def test_canonical_form_is_relabeling_invariant(mask, perm):
    g = SmallGraph.from_mask(6, mask)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_non_isomorphic():
    path = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path) != canonical_form(star)


def test_vertex_orbits():
    path = SmallGraph.from_edges(3, [(0, 1), (1, 2)])
    triangle = SmallGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert vertex_orbits(path) == 2 and vertex_orbits(triangle) == 1


def test_small_census(oracle_census):
    assert [c.total() for c in oracle_census.values()] == [1, 1, 2, 4, 10, 25, 80]
    assert oracle_census[4].total() == 10


def test_methods_agree():
    for n in range(7):
        a = sorted(canonical_form(g) for g in outerplanar_classes(n, method="exhaustive"))
        b = sorted(canonical_form(g) for g in outerplanar_classes(n, method="extension"))
        assert a == b


def test_parallel_scan_is_deterministic(oracle_census):
    assert census(5, workers=2) == oracle_census[5]


def test_csv_rows(oracle_census):
    rows = census_csv_rows(oracle_census[1])
    assert rows == [("n", "m", "connected", "two_connected", "bipartite", "count"),
                    ("1", "0", "1", "0", "1", "1")]


def test_limits():
    with pytest.raises(UsageError):
        census(9)
    with pytest.raises(UsageError):
        census(8)
    with pytest.raises(UsageError):
        outerplanar_classes(3, method="magic")
