import pytest

from outerplanar.composition import (build_tables, components_distribution_exact, counts,
                                     edge_counts, expected_components_exact, solve_chat,
                                     _rhs, _kernels)
from outerplanar.dissections import Faces
from outerplanar.errors import SeriesDomainError, UsageError
from outerplanar.oracle import component_counts, is_two_connected_or_edge, rooted_census
from outerplanar.series import PowerSeries, Rational

N = 30


@pytest.fixture(scope="module")
def tables():
    return build_tables(N)


@pytest.fixture(scope="module")
def edge_tables():
    return build_tables(20, edge_marked=True)


def test_initial_terms(tables):
    assert counts(tables.chat)[1:8] == [1, 1, 3, 10, 40, 181, 918]
    assert counts(tables.c)[1:8] == [1, 1, 2, 5, 13, 46, 172]
    assert counts(tables.g)[:8] == [1, 1, 2, 4, 10, 25, 80, 277]


def test_rooted_fixed_point_residual_is_zero():
    chat = solve_chat(15)
    assert _rhs(chat, _kernels(15, False, Faces.ALL)) - chat == PowerSeries.zero(15)


def test_rooted_counts_match_oracle(tables):
    for n in range(1, 7):
        assert tables.chat[n] == rooted_census(n).total(connected=True)


def test_counts_match_oracle(tables, oracle_census):
    for n, cen in oracle_census.items():
        assert tables.g[n] == cen.total()
        assert tables.c[n] == cen.total(connected=True)


def test_edge_cells_match_oracle(edge_tables, oracle_census):
    g_rows = edge_counts(edge_tables.g_xy)
    c_rows = edge_counts(edge_tables.c_xy)
    for n, cen in oracle_census.items():
        for m in range(2 * n + 1):
            g_nm = g_rows[n][m] if m < len(g_rows[n]) else 0
            c_nm = c_rows[n][m] if m < len(c_rows[n]) else 0
            assert g_nm == cen.total(m=m)
            assert c_nm == cen.total(m=m, connected=True)


def test_edge_marginal_equals_plain(edge_tables):
    plain = counts(build_tables(20).g)
    assert [sum(row) for row in edge_counts(edge_tables.g_xy)] == plain


def test_expected_components(tables):
    # graphs on 3 vertices: empty, one edge, path, triangle
    assert expected_components_exact(3, tables) == Rational(7, 4)
    assert 1 < expected_components_exact(10, tables) < 2


def test_isolated_vertex_distribution(tables):
    x = PowerSeries.x(N)
    assert components_distribution_exact(x, 2, tables) == [1, 0, 1]


def test_two_connected_components_match_oracle(tables):
    d = tables.d
    for n in range(1, 7):
        assert components_distribution_exact(d, n, tables) == \
            component_counts(n, is_two_connected_or_edge)


def test_distribution_sums_to_total(tables):
    dist = components_distribution_exact(tables.c, 6, tables)
    assert dist == [0, 46, 21, 8, 3, 1, 1]
    assert sum(dist) == tables.g[6]


def test_bad_arguments(tables):
    with pytest.raises(UsageError):
        expected_components_exact(N + 1, tables)
    with pytest.raises(SeriesDomainError):
        components_distribution_exact(1 + PowerSeries.x(N), 3, tables)
    with pytest.raises(UsageError):
        build_tables(0)
    with pytest.raises(UsageError):
        build_tables(5, edge_marked=True, faces=Faces.EVEN)
