"""Truncated multivariate Taylor jets and value-generic elementary functions.

A :class:`Jet` is a polynomial in small increments ``e_1..e_k`` truncated at
a total degree.  Its coefficients may be multiprecision floats or exact power
series, so the same formula code computes numerical derivatives (Newton
Jacobians, singular expansions) and formal partial derivatives (the ``s1``
derivatives of a cycle index sum).

The functions :func:`sqrt`, :func:`log`, :func:`exp` and :func:`inv` dispatch
on the argument type so formula code never needs to know what it is handed.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial

import mpmath

from .errors import SeriesDomainError
from .series import PowerSeries, Rational


@lru_cache(maxsize=None)
def _monomials(nvars, order):
    mons = [e for e in product(range(order + 1), repeat=nvars) if sum(e) <= order]
    mons.sort(key=lambda e: (sum(e), tuple(-v for v in e)))
    return tuple(mons)


@lru_cache(maxsize=None)
def _mul_table(nvars, order):
    mons = _monomials(nvars, order)
    index = {e: i for i, e in enumerate(mons)}
    table = []
    for i, a in enumerate(mons):
        row = []
        for j, b in enumerate(mons):
            e = tuple(p + q for p, q in zip(a, b))
            if sum(e) <= order:
                row.append((j, index[e]))
        table.append(tuple(row))
    return tuple(table)


class Jet:
    """``f(a + e) = sum_alpha c_alpha e^alpha`` truncated at total degree ``order``."""

    __slots__ = ("nvars", "order", "c")
    _wraps_series = True

    def __init__(self, nvars, order, coeffs):
        self.nvars = nvars
        self.order = order
        self.c = list(coeffs)

    # -- construction --------------------------------------------------
    @classmethod
    def constant(cls, value, nvars, order, zero=None):
        if zero is None:
            zero = value - value
        n = len(_monomials(nvars, order))
        return cls(nvars, order, [value] + [zero] * (n - 1))

    @classmethod
    def variable(cls, index, base, nvars, order, zero=None, one=1):
        j = cls.constant(base, nvars, order, zero)
        if order >= 1:
            # degree-one monomials follow the constant in variable order
            j.c[1 + index] = j.c[1 + index] + one
        return j

    def _new(self, coeffs):
        return Jet(self.nvars, self.order, coeffs)

    @property
    def const(self):
        return self.c[0]

    def coeff(self, exps):
        return self.c[_monomials(self.nvars, self.order).index(tuple(exps))]

    def derivative_value(self, exps):
        """Partial derivative ``d^alpha f`` at the base point."""
        v = self.coeff(exps)
        for e in exps:
            v = v * factorial(e)
        return v

    def derivative(self, var):
        """Jet of ``df/de_var`` (order drops by one)."""
        mons = _monomials(self.nvars, self.order)
        lower = _monomials(self.nvars, self.order - 1)
        index = {e: i for i, e in enumerate(mons)}
        out = []
        for e in lower:
            up = list(e)
            up[var] += 1
            out.append(self.c[index[tuple(up)]] * up[var])
        return Jet(self.nvars, self.order - 1, out)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.nvars != self.nvars or other.order != self.order:
                raise ValueError("jets of different shapes")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            c = list(self.c)
            c[0] = c[0] + other
            return self._new(c)
        return self._new([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            c = list(self.c)
            c[0] = c[0] - other
            return self._new(c)
        return self._new([a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return self._new([a * other for a in self.c])
        table = _mul_table(self.nvars, self.order)
        a, b = self.c, o.c
        out = [None] * len(a)
        for i, row in enumerate(table):
            ai = a[i]
            if _is_zero(ai):
                continue
            for j, k in row:
                t = ai * b[j]
                out[k] = t if out[k] is None else out[k] + t
        zero = a[0] - a[0]
        return self._new([zero if v is None else v for v in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inv()
        return self._new([a / other for a in self.c])

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k):
        result = Jet.constant(self.c[0] - self.c[0] + 1, self.nvars, self.order)
        for _ in range(k):
            result = result * self
        return result

    # -- elementary functions via Taylor coefficients ------------------
    def _nilpotent(self):
        c = list(self.c)
        c[0] = c[0] - c[0]
        return self._new(c)

    def _apply(self, taylor):
        """``sum_k taylor[k] * (self - base)^k``, ``taylor`` of length order+1."""
        e = self._nilpotent()
        acc = Jet.constant(taylor[-1], self.nvars, self.order, self.c[0] - self.c[0])
        for t in reversed(taylor[:-1]):
            acc = acc * e + t
        return acc

    def inv(self):
        a = self.c[0]
        ia = inv(a)
        ts, p = [], ia
        for k in range(self.order + 1):
            ts.append(p if k % 2 == 0 else -p)
            p = p * ia
        return self._apply(ts)

    def sqrt(self):
        a = self.c[0]
        r, ia = sqrt(a), inv(a)
        ts, p = [], r
        for k in range(self.order + 1):
            ts.append(p * _half_binomial(k))
            p = p * ia
        return self._apply(ts)

    def log(self):
        a = self.c[0]
        ia = inv(a)
        ts, p = [log(a)], ia
        for k in range(1, self.order + 1):
            ts.append(p * Rational((-1) ** (k + 1), k))
            p = p * ia
        return self._apply(ts)

    def exp(self):
        ea = exp(self.c[0])
        return self._apply([ea * Rational(1, factorial(k)) for k in range(self.order + 1)])


@lru_cache(maxsize=None)
def _half_binomial(k):
    out = Rational(1)
    for i in range(k):
        out = out * (Rational(1, 2) - i) / (i + 1)
    return out


def _is_zero(v):
    if isinstance(v, PowerSeries):
        return False
    return v == 0


# -- dispatch ----------------------------------------------------------

def sqrt(v):
    if isinstance(v, (Jet, PowerSeries)):
        return v.sqrt()
    if v < 0:
        raise SeriesDomainError("square root of a negative number")
    return mpmath.sqrt(mpmath.mpf(v))


def log(v):
    if isinstance(v, (Jet, PowerSeries)):
        return v.log()
    if v <= 0:
        raise SeriesDomainError("logarithm of a non-positive number")
    return mpmath.log(mpmath.mpf(v))


def exp(v):
    if isinstance(v, (Jet, PowerSeries)):
        return v.exp()
    return mpmath.exp(mpmath.mpf(v))


def inv(v):
    if isinstance(v, (Jet, PowerSeries)):
        return v.inverse() if isinstance(v, PowerSeries) else v.inv()
    if isinstance(v, Rational):
        return 1 / v
    return 1 / mpmath.mpf(v) if not isinstance(v, mpmath.mpf) else 1 / v


def is_exact_zero(v):
    """True for the zero number or an all-zero series (not for jets)."""
    if isinstance(v, PowerSeries):
        return v.is_zero()
    if isinstance(v, Jet):
        return False
    return v == 0
