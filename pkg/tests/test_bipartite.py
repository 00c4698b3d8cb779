import pytest

from outerplanar.bipartite import bipartite_dissection_series, bipartite_tables
from outerplanar.composition import counts
from outerplanar.oracle import census

# initial terms printed alongside the bipartite series (x^2 and x^3 of G_b excluded, see below)
PRINTED_D_B = [0, 0, 1, 0, 1, 0, 2, 0, 4, 0, 13, 0, 48]
PRINTED_C_B = [0, 1, 1, 1, 3, 4, 12, 24, 74, 193]
PRINTED_G_B_FROM_4 = [7, 12, 29, 61, 162, 412]


@pytest.fixture(scope="module")
def tb():
    return bipartite_tables(30)


def test_initial_terms(tb):
    assert counts(tb.d_b)[:13] == PRINTED_D_B
    assert counts(tb.c_b)[:10] == PRINTED_C_B
    assert counts(tb.g_b)[4:10] == PRINTED_G_B_FROM_4
    assert counts(tb.chat_b)[1:8] == [1, 1, 2, 5, 13, 38, 118]


def test_quadrilateral_is_the_only_bipartite_block_on_four_vertices():
    assert bipartite_dissection_series(8)[4] == 1


def test_small_coefficients_match_oracle(tb, oracle_census):
    # on 3 vertices the bipartite graphs are the empty graph, one edge and the path
    assert tb.g_b[2] == 2 and tb.g_b[3] == 3
    for n, cen in oracle_census.items():
        assert tb.g_b[n] == cen.total(bipartite=True)
        assert tb.c_b[n] == cen.total(bipartite=True, connected=True)
        assert tb.d_b[n] == cen.total(bipartite=True, two_connected=True)


@pytest.mark.slow
def test_seven_and_eight_vertices_match_oracle(tb):
    for n in (7, 8):
        cen = census(n, allow_slow=True)
        assert tb.g_b[n] == cen.total(bipartite=True)
        assert tb.d_b[n] == cen.total(bipartite=True, two_connected=True)
