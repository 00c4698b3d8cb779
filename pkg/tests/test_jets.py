import mpmath
import pytest

from outerplanar.errors import SeriesDomainError
from outerplanar.jets import Jet, exp, inv, log, sqrt
from outerplanar.series import PowerSeries


def test_bivariate_derivatives():
    with mpmath.workdps(30):
        x = Jet.variable(0, mpmath.mpf(2), 2, 3)
        y = Jet.variable(1, mpmath.mpf(3), 2, 3)
        f = x * x * y + exp(x * y)
        e6 = mpmath.exp(6)
        assert mpmath.almosteq(f.derivative_value((1, 0)), 12 + 3 * e6)
        assert mpmath.almosteq(f.derivative_value((1, 1)), 4 + e6 + 6 * e6)
        assert mpmath.almosteq(f.derivative_value((0, 2)), 4 * e6)


def test_elementary_inverses():
    with mpmath.workdps(30):
        x = Jet.variable(0, mpmath.mpf("0.3"), 1, 5)
        for got, want in ((exp(log(x)), x), (sqrt(x) * sqrt(x), x), (x * inv(x), 1 + 0 * x)):
            assert all(abs(a - b) < mpmath.mpf(10) ** -25 for a, b in zip(got.c, want.c))


def test_jets_over_series():
    s = PowerSeries.x(4)
    e = Jet.variable(0, s, 1, 2, zero=s * 0)
    sq = (e * e).coeff((1,))
    assert sq == 2 * s


def test_numeric_domain():
    with pytest.raises(SeriesDomainError):
        sqrt(mpmath.mpf(-1))
    with pytest.raises(SeriesDomainError):
        log(mpmath.mpf(0))
