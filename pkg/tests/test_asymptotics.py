import mpmath
import pytest

from outerplanar.asymptotics import (EdgeLaw, HFunction, _newton, asymptotic_constants,
                                     bipartite_c_at, bipartite_growth, dissection_edge_law,
                                     eval_series, eval_series_with_tail, isolated_vertex_law,
                                     singular_data, solve_rho_tau, statistics)
from outerplanar.bipartite import bipartite_tables
from outerplanar.composition import build_tables
from outerplanar.errors import SeriesDomainError, SolverError, UsageError
from outerplanar.series import PowerSeries

DIGITS = 40
mp = mpmath.mpf


@pytest.fixture(scope="module")
def sd():
    return singular_data(25, DIGITS)


def close(a, b, tol):
    return abs(mp(a) - mp(b)) <= mp(tol)


def test_eval_series():
    assert eval_series(PowerSeries.x(3), mp("0.5")) == mp("0.5")
    with mpmath.workdps(30):
        value, tail = eval_series_with_tail(build_tables(30).chat, mp("0.1"))
        better = eval_series(build_tables(60).chat, mp("0.1"))
        # the geometric tail heuristic should have the size of the true truncation error
        assert tail / 3 < better - value < 3 * tail
    with pytest.raises(SeriesDomainError):
        eval_series(PowerSeries.x(3), 1)
    with pytest.raises(SeriesDomainError):
        eval_series(PowerSeries.x(3), -mp("0.1"))


@pytest.mark.parametrize("m, rho", [(1, "0.13461876886110181369"),
                                    (8, "0.13326943288029243729")])
def test_truncated_growth_constants(m, rho):
    got = solve_rho_tau(m, DIGITS)
    assert close(got.rho, rho, "1e-19")
    assert got.residual < mp(10) ** -(DIGITS - 20)


def test_derivative_cross_checks(sd):
    tiny = mp(10) ** -(DIGITS - 10)
    assert abs(sd.hdy_closed) < tiny and abs(sd.hdy_simple) < tiny
    with mpmath.workdps(DIGITS):
        tau = sd.tau
        expected = 1 / tau + tau / (tau * tau - 6 * tau + 1) ** mp(1.5)
        assert close(sd.hyy, expected, mp(10) ** -(DIGITS - 10))
    assert sd.tau < 3 - 2 * mpmath.sqrt(2)


def test_singular_expansion_signs(sd):
    assert sd.chat1 < 0 and sd.c3 > 0 and sd.g3 > 0
    assert abs(sd.c1) < mp(10) ** -20
    assert close(sd.g3, sd.g_at_rho * sd.c3, mp(10) ** -(DIGITS - 5))
    assert close(sd.chat1, "-0.0255905", "5e-8")
    assert close(sd.c3, "0.0179720", "5e-8")


def test_constants_predict_exact_counts(sd):
    k = asymptotic_constants(sd)
    t = build_tables(30)
    n = 30
    for const, seq, radius in ((k.c, t.c, sd.rho), (k.g, t.g, sd.rho), (k.d, t.d, k.delta)):
        ratio = mp(int(seq[n])) / (const * mp(n) ** mp(-2.5) * radius ** -n)
        assert 0.75 <= ratio <= 1.25


def test_g_at_rho_matches_exact_ratio_extrapolation(sd):
    t = build_tables(60)
    ns = (45, 50, 55, 60)
    with mpmath.workdps(30):
        rows = mpmath.matrix([[mp(1) / n ** j for j in range(len(ns))] for n in ns])
        vals = mpmath.matrix([mp(int(t.g[n])) / int(t.c[n]) for n in ns])
        limit = mpmath.lu_solve(rows, vals)[0]
    assert close(limit, sd.g_at_rho, "1e-4")


def test_precision_stability():
    a = asymptotic_constants(singular_data(8, 40))
    b = asymptotic_constants(singular_data(8, 60))
    for name in ("c", "g", "rho_inv"):
        assert abs(getattr(a, name) - getattr(b, name)) < mp(10) ** -30


def test_statistics(sd):
    st = statistics(sd)
    assert close(st.isolated_mean, sd.rho / (1 - sd.rho), mp(10) ** -30)
    assert close(st.prob_connected, 1 / sd.g_at_rho, mp(10) ** -30)
    assert close(st.two_connected_components - st.two_connected_nontrivial, st.isolated_mean,
                 mp(10) ** -30)
    assert 1 < st.expected_components < 2


def test_isolated_vertex_law_is_a_distribution():
    rho = mp("0.1332694")
    with mpmath.workdps(30):
        total = mpmath.nsum(lambda k: isolated_vertex_law(rho, int(k)), [0, mpmath.inf])
        mean = mpmath.nsum(lambda k: k * isolated_vertex_law(rho, int(k)), [0, mpmath.inf])
    assert close(total, 1, "1e-25") and close(mean, rho / (1 - rho), "1e-25")
    with pytest.raises(UsageError):
        isolated_vertex_law(rho, -1)


def test_bipartite_connected_value_matches_series():
    with mpmath.workdps(30):
        t = mp("0.1")
        value, tail = eval_series_with_tail(bipartite_tables(60).c_b, t)
        assert abs(bipartite_c_at(t, 30) - value) < 2 * tail + mp(10) ** -25


def test_bipartite_growth():
    rho_b, tau_b, res = bipartite_growth(25, DIGITS)
    assert close(rho_b, "0.218475", "5e-7")
    assert res < mp(10) ** -(DIGITS - 20)


def test_dissection_edge_law_exact_values():
    law = dissection_edge_law(DIGITS)
    assert close(law.mu, 1 + mpmath.sqrt(2) / 2, "1e-12")
    assert close(law.sigma2, mpmath.sqrt(2) / 8, "1e-12")


def test_edge_law_recomputes_from_fields():
    law = EdgeLaw.from_derivatives(mp("0.13"), mp("-0.2"), mp("0.5"), mp("1e-6"))
    r = law.x0_prime_1 / law.x0_at_1
    assert law.mu == -r
    assert law.sigma2 == -law.x0_doubleprime_1 / law.x0_at_1 - r + r * r


def test_solver_failure_reports_trace():
    def broken(a, b, k):
        raise SeriesDomainError("always outside")

    hf = HFunction(lambda k: [mp(0), mp(1)], 1, broken)
    with pytest.raises(SeriesDomainError):
        _newton(hf, ("0.134", "0.17"), mp(10) ** -30)

    hf = HFunction(lambda k: [mp(0), mp(1)], 1, lambda a, b, k: a * 0 + 5)
    with pytest.raises(SolverError) as err:
        _newton(hf, ("0.134", "0.17"), mp(10) ** -30)
    assert err.value.trace


def test_usage_errors():
    with pytest.raises(UsageError):
        solve_rho_tau(0, 40)
    with pytest.raises(UsageError):
        solve_rho_tau(5, 20)
