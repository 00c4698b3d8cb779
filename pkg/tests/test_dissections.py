import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from orbit_counts import dissection_orbits
from outerplanar.dissections import (CLOSED, CisArgs, Faces, assemble_dissection_via_dissimilarity,
                                     construction, dissection_cis, face, face_oriented,
                                     inner_edge, oed_oriented, oed_reflective, symmetry_edge,
                                     utilde, vertex_rooted_cis)
from outerplanar.asymptotics import (dissection_singularity, dissection_singularity_numeric,
                                     eval_series, eval_series_with_tail)
from outerplanar.errors import SeriesDomainError
from outerplanar.series import PowerSeries, substitute_power

ORDER = 12
ORACLE_N = 6


def ints(s, upto=None):
    return [int(c) for c in s.coeffs[: None if upto is None else upto + 1]]


@pytest.fixture(scope="module")
def mono():
    return CisArgs.monomials(ORDER)


@pytest.fixture(scope="module")
def orbits():
    return dissection_orbits(ORACLE_N)


def test_dissection_counts(mono):
    assert ints(dissection_cis(mono)) == [0, 0, 1, 1, 2, 3, 9, 20, 75, 262, 1117, 4783, 21971]


@pytest.mark.parametrize("name", sorted(CLOSED))
def test_closed_forms_equal_constructions(mono, name):
    assert CLOSED[name](mono) == construction(name, mono)


def test_dissimilarity_assembly(mono):
    assert assemble_dissection_via_dissimilarity(mono) == dissection_cis(mono)


def test_vertex_rooted_matches_vertex_orbits(mono, orbits):
    v = vertex_rooted_cis(mono.s1, mono.s2)
    assert ints(v, ORACLE_N) == orbits["vertex"]
    assert ints(v, 7) == [0, 0, 1, 1, 3, 7, 28, 104]


def test_outer_edge_rootings_match_oracle(mono, orbits):
    assert ints(oed_oriented(mono), ORACLE_N) == orbits["oriented"]
    plus, minus, total = oed_reflective(mono)
    assert ints(total, ORACLE_N) == orbits["reflective"]
    assert total.valuation() == 2
    assert plus[2] == minus[2]


def test_oriented_square_convolution(mono):
    e = oed_oriented(mono).truncate(6)
    assert ints(e * e) == [0, 0, 0, 0, 1, 2, 7]


def test_inner_edges_and_faces_match_oracle(mono, orbits):
    assert ints(inner_edge(mono), ORACLE_N) == orbits["inner"]
    assert inner_edge(mono).valuation() == 4
    assert ints(face(mono), ORACLE_N) == orbits["face"]
    assert face(mono).valuation() == 3


def test_termwise_orderings(mono):
    sym, inner = symmetry_edge(mono), inner_edge(mono)
    assert all(a <= b for a, b in zip(sym.coeffs, inner.coeffs))
    fo, f = face_oriented(mono), face(mono)
    assert all(a >= b for a, b in zip(fo.coeffs, f.coeffs))


def test_edge_marked_rows_marginalize():
    xy = CisArgs.monomials(ORDER, edge_marked=True)
    d_xy = dissection_cis(xy)
    assert d_xy.eval_y1() == dissection_cis(CisArgs.monomials(ORDER))
    assert d_xy.rows()[4] == [0, 0, 0, 0, 1, 1]
    d_xy.check_degree_cap()


def test_even_faces():
    d_b = dissection_cis(CisArgs.monomials(ORDER, faces=Faces.EVEN))
    assert ints(d_b) == [0, 0, 1, 0, 1, 0, 2, 0, 4, 0, 13, 0, 48]


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
@settings(max_examples=15, deadline=None)
def test_routes_agree_on_random_arguments(extra):
    x = PowerSeries.x(8)
    s1 = x + extra[0] * x ** 3
    s2 = substitute_power(x, 2) + extra[1] * x ** 4
    fam = lambda d: substitute_power(x, d)  # noqa: E731
    args = CisArgs(s1, s2, fam)
    assert dissection_cis(args, route="closed") == dissection_cis(args, route="construction")
    assert assemble_dissection_via_dissimilarity(args) == dissection_cis(args)


def test_numeric_routes_agree():
    with mpmath.workdps(40):
        t = mpmath.mpf("0.1")
        args = CisArgs(t, t * t, lambda d: t ** d)
        a = dissection_cis(args, route="closed")
        b = dissection_cis(args, route="construction")
        assert abs(a - b) < mpmath.mpf(10) ** -25
        value, tail = eval_series_with_tail(dissection_cis(CisArgs.monomials(40)), t)
        assert abs(a - value) < 2 * tail


def test_utilde_domain():
    with pytest.raises(SeriesDomainError):
        utilde(mpmath.mpf("0.2"))
    assert utilde(mpmath.mpf(0)) == 1


def test_dissection_singularity():
    with mpmath.workdps(30):
        for y in ("0.5", "1", "2.5"):
            assert mpmath.almosteq(dissection_singularity(y), dissection_singularity_numeric(y))
        assert mpmath.almosteq(dissection_singularity(1), 3 - 2 * mpmath.sqrt(2))


def test_series_below_singularity_is_finite():
    with mpmath.workdps(30):
        v = eval_series(dissection_cis(CisArgs.monomials(60)),
                        dissection_singularity(1) * mpmath.mpf("0.9"))
        assert 0 < v < 1
