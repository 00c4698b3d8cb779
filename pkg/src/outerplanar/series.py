"""Truncated formal power series with exact coefficients.

A :class:`PowerSeries` stores the coefficients ``c[0..N]`` of a series known
modulo ``x^(N+1)``.  Coefficients live in any commutative ring that supports
``+ - *`` and division by integers: :data:`Rational` (``gmpy2.mpq``),
:class:`YPoly` (polynomials in the edge variable ``y``) and ``mpmath.mpf`` are
the three used in the package.

Two layers are provided:

* strict module functions (:func:`add`, :func:`mul`, :func:`div_exact`, ...)
  that insist on equal truncation orders and raise :class:`UsageError`
  otherwise;
* operator overloads that track precision the lenient way (the product of two
  series with positive valuation is known further than either factor), which
  is what long formulas need.
"""

from __future__ import annotations

import flint
import gmpy2

from .errors import SeriesDomainError, UsageError

Rational = gmpy2.mpq

_MPQ_ZERO = Rational(0)
_MPQ_ONE = Rational(1)


def _is_scalar(v):
    return not isinstance(v, PowerSeries)


def _defers(v):
    # jets wrap series values and must handle mixed arithmetic themselves
    return getattr(v, "_wraps_series", False)


def _to_fmpq(v):
    if isinstance(v, flint.fmpq):
        return v
    if isinstance(v, int):
        return flint.fmpq(v)
    v = Rational(v)
    return flint.fmpq(int(v.numerator), int(v.denominator))


def _to_mpq(v):
    return Rational(int(v.p), int(v.q))


class YPoly:
    """Polynomial in ``y`` with rational coefficients, backed by ``flint.fmpq_poly``."""

    __slots__ = ("_p",)

    def __init__(self, coeffs=()):
        self._p = flint.fmpq_poly([_to_fmpq(v) for v in coeffs])

    @classmethod
    def _wrap(cls, p):
        out = cls.__new__(cls)
        out._p = p
        return out

    @classmethod
    def y(cls, power=1):
        return cls._wrap(flint.fmpq_poly([0] * power + [1]))

    @property
    def coeffs(self):
        return tuple(_to_mpq(v) for v in self._p.coeffs())

    @property
    def degree(self):
        return self._p.degree()

    def __getitem__(self, k):
        return _to_mpq(self._p[k]) if 0 <= k <= self._p.degree() else _MPQ_ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return self._p.degree() + 1

    def __bool__(self):
        return not self._p.is_zero()

    @staticmethod
    def _other(other):
        if isinstance(other, YPoly):
            return other._p
        if isinstance(other, int):
            return other
        if isinstance(other, type(_MPQ_ONE)) or hasattr(other, "denominator"):
            return _to_fmpq(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return YPoly._wrap(self._p + o)

    __radd__ = __add__

    def __neg__(self):
        return YPoly._wrap(-self._p)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return YPoly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return YPoly._wrap(o - self._p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return YPoly._wrap(self._p * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, YPoly):
            q, r = divmod(self._p, other._p)
            if not r.is_zero():
                raise SeriesDomainError("polynomial division in y is not exact")
            return YPoly._wrap(q)
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError("division of a y-polynomial by zero")
        return YPoly._wrap(self._p / o)

    def __rtruediv__(self, other):
        return YPoly([other]) / self

    def divmod(self, other):
        q, r = divmod(self._p, other._p)
        return YPoly._wrap(q), YPoly._wrap(r)

    def inv(self):
        if self._p.degree() != 0:
            raise SeriesDomainError("only nonzero constant y-polynomials are units")
        return YPoly._wrap(flint.fmpq_poly([1 / self._p[0]]))

    def __pow__(self, k):
        return YPoly._wrap(self._p ** k)

    def __eq__(self, other):
        if isinstance(other, YPoly):
            return self._p == other._p
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._p == flint.fmpq_poly([o])

    def __hash__(self):
        return hash(tuple(str(v) for v in self._p.coeffs()))

    def subs_pow(self, k):
        """Return ``p(y^k)``."""
        if k == 1 or self._p.degree() <= 0:
            return self
        c = self._p.coeffs()
        out = [0] * (k * (len(c) - 1) + 1)
        for i, v in enumerate(c):
            out[k * i] = v
        return YPoly._wrap(flint.fmpq_poly(out))

    def monomial_degree(self):
        """``d`` if the polynomial is exactly ``y^d``, else ``None``."""
        c = self._p.coeffs()
        if c and c[-1] == 1 and all(v == 0 for v in c[:-1]):
            return len(c) - 1
        return None

    def __call__(self, value):
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * value + v
        return acc

    def __repr__(self):
        return f"YPoly({self._p})"


def _scalar_inverse(c):
    if isinstance(c, YPoly):
        return c.inv()
    if c == 0:
        raise SeriesDomainError("constant term is not invertible")
    return 1 / c


class PowerSeries:
    """Series ``c[0] + c[1] x + ... + c[N] x^N + O(x^(N+1))``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = tuple(coeffs)
        if not c:
            raise UsageError("a truncated series needs at least one coefficient")
        self._c = c

    # -- construction --------------------------------------------------
    @classmethod
    def _make(cls, coeffs):
        s = cls.__new__(cls)
        s._c = tuple(coeffs)
        return s

    @classmethod
    def constant(cls, value, order, zero=_MPQ_ZERO):
        return cls._make([value] + [zero] * order)

    @classmethod
    def zero(cls, order, zero=_MPQ_ZERO):
        return cls._make([zero] * (order + 1))

    @classmethod
    def monomial(cls, power, order, coeff=_MPQ_ONE, zero=_MPQ_ZERO):
        c = [zero] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls._make(c)

    @classmethod
    def x(cls, order, one=_MPQ_ONE, zero=_MPQ_ZERO):
        return cls.monomial(1, order, one, zero)

    @classmethod
    def from_rationals(cls, values, order=None):
        vals = [Rational(v) for v in values]
        if order is None:
            order = len(vals) - 1
        vals = vals[: order + 1] + [_MPQ_ZERO] * (order + 1 - len(vals))
        return cls._make(vals)

    # -- basic access --------------------------------------------------
    @property
    def order(self):
        return len(self._c) - 1

    @property
    def coeffs(self):
        return self._c

    def _zero(self):
        c0 = self._c[0]
        return c0 - c0

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self._c[k]
        if k < 0:
            raise IndexError(k)
        return self._c[k] if k < len(self._c) else self._unknown(k)

    def _unknown(self, k):
        raise IndexError(f"coefficient {k} lies beyond truncation order {self.order}")

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def valuation(self):
        """Index of the first nonzero coefficient, or ``order + 1`` if none."""
        for i, v in enumerate(self._c):
            if v != 0:
                return i
        return len(self._c)

    def is_zero(self):
        return all(v == 0 for v in self._c)

    def truncate(self, order):
        if order > self.order:
            raise UsageError(f"cannot extend a series of order {self.order} to {order}")
        return type(self)._make(self._c[: order + 1])

    def pad(self, order):
        """Extend by zero coefficients; only sound for genuine polynomials."""
        if order <= self.order:
            return self.truncate(order)
        z = self._zero()
        return type(self)._make(self._c + (z,) * (order - self.order))

    def map(self, fn):
        return type(self)._make(fn(v) for v in self._c)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        body = ", ".join(str(v) for v in self._c)
        return f"{type(self).__name__}([{body}])"

    # -- arithmetic (lenient precision) --------------------------------
    def _like(self, coeffs):
        return type(self)._make(coeffs)

    def __add__(self, other):
        if _defers(other):
            return NotImplemented
        if _is_scalar(other):
            c = list(self._c)
            c[0] = c[0] + other
            return self._like(c)
        n = min(len(self._c), len(other._c))
        return self._like(a + b for a, b in zip(self._c[:n], other._c[:n]))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self._c)

    def __sub__(self, other):
        if _defers(other):
            return NotImplemented
        if _is_scalar(other):
            c = list(self._c)
            c[0] = c[0] - other
            return self._like(c)
        n = min(len(self._c), len(other._c))
        return self._like(a - b for a, b in zip(self._c[:n], other._c[:n]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _defers(other):
            return NotImplemented
        if _is_scalar(other):
            return self._like(a * other for a in self._c)
        a, b = self._c, other._c
        va, vb = self.valuation(), other.valuation()
        # known further than either factor when valuations are positive,
        # but never reported beyond the longer operand
        order = min(len(a) - 1 + vb, len(b) - 1 + va, max(len(a), len(b)) - 1)
        return self._like(_convolve(a, b, order, va, vb, self._zero()))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _defers(other):
            return NotImplemented
        if _is_scalar(other):
            if isinstance(other, YPoly):
                return self._like(a / other for a in self._c)
            if other == 0:
                raise ZeroDivisionError("series divided by zero")
            return self._like(a / other for a in self._c)
        return _divide(self, other)

    def __rtruediv__(self, other):
        return _divide(self.constant(other, self.order, self._zero()), self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise UsageError("series powers must be non-negative integers")
        result = self.constant(self._zero() + 1, self.order, self._zero())
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- analytic helpers ----------------------------------------------
    def derivative(self):
        c = self._c
        if len(c) == 1:
            return self._like([self._zero()])
        return self._like(c[k] * k for k in range(1, len(c)))

    def integral(self):
        return self._like([self._zero()] + [v / (k + 1) for k, v in enumerate(self._c)])

    def substitute_power(self, k):
        return substitute_power(self, k)

    def sqrt(self):
        return sqrt1(self)

    def log(self):
        return log1(self)

    def exp(self):
        return exp0(self)

    def inverse(self):
        return inverse(self)

    def __call__(self, value):
        """Horner evaluation of the truncated polynomial."""
        acc = self._zero()
        for v in reversed(self._c):
            acc = acc * value + v
        return acc


class EdgeSeries(PowerSeries):
    """Series in ``x`` whose coefficients are :class:`YPoly` in the edge variable ``y``.

    The counting tables carry the cap ``deg_y [x^n] <= 2n``; it is checked by
    :meth:`check_degree_cap` rather than on every intermediate, because
    intermediate quantities of the constructions may exceed it.
    """

    __slots__ = ()

    @classmethod
    def from_rows(cls, rows, order=None):
        polys = [r if isinstance(r, YPoly) else YPoly(r) for r in rows]
        if order is None:
            order = len(polys) - 1
        polys = polys[: order + 1] + [YPoly()] * (order + 1 - len(polys))
        return cls._make(polys)

    @classmethod
    def zero(cls, order, zero=None):
        return cls._make([YPoly()] * (order + 1))

    @classmethod
    def constant(cls, value, order, zero=None):
        v = value if isinstance(value, YPoly) else YPoly([value])
        return cls._make([v] + [YPoly()] * order)

    @classmethod
    def x(cls, order, one=None, zero=None):
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, power, order, coeff=None, zero=None):
        c = [YPoly()] * (order + 1)
        if power <= order:
            c[power] = coeff if isinstance(coeff, YPoly) else YPoly([1 if coeff is None else coeff])
        return cls._make(c)

    def _zero(self):
        return YPoly()

    def eval_y1(self):
        """Specialise ``y = 1``: the plain counting series."""
        return PowerSeries._make(Rational(sum(p.coeffs, _MPQ_ZERO)) for p in self._c)

    def eval_y(self, value):
        return PowerSeries._make(p(value) for p in self._c)

    def subs_y_pow(self, k):
        return self._like(p.subs_pow(k) for p in self._c)

    def rows(self):
        return [list(p.coeffs) for p in self._c]

    def check_degree_cap(self):
        for n, p in enumerate(self._c):
            if p.degree > 2 * n:
                raise SeriesDomainError(f"y-degree {p.degree} exceeds 2n at x^{n}")
        return self


def _convolve(a, b, order, va, vb, zero):
    out = [zero] * (order + 1)
    la, lb = len(a), len(b)
    for i in range(va, min(la, order + 1 - vb)):
        ai = a[i]
        if not ai:
            continue
        hi = min(lb, order + 1 - i)
        for j in range(vb, hi):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _divide(a, b):
    vb = b.valuation()
    if vb > b.order:
        raise SeriesDomainError("division by a zero series")
    va = a.valuation()
    if va < vb and va <= a.order:
        raise SeriesDomainError(
            f"divisor valuation {vb} exceeds dividend valuation {va}")
    # shift both, then multiply by the inverse of the unit part
    order = min(a.order - vb, b.order - vb)
    num = a._like(a._c[vb: vb + order + 1])
    den = b._like(b._c[vb: vb + order + 1])
    return num * inverse(den)


# -- strict module-level API ------------------------------------------

def _same_order(a, b):
    if not isinstance(a, PowerSeries) or not isinstance(b, PowerSeries):
        raise UsageError("both operands must be series")
    if a.order != b.order:
        raise UsageError(f"mismatched truncation orders {a.order} and {b.order}")


def add(a, b):
    """Exact coefficientwise sum of two series of equal order."""
    _same_order(a, b)
    return a + b


def sub(a, b):
    _same_order(a, b)
    return a - b


def mul(a, b):
    """Cauchy product truncated at the common order."""
    _same_order(a, b)
    return a._like(_convolve(a._c, b._c, a.order, a.valuation(), b.valuation(), a._zero()))


def div_exact(a, b):
    """Quotient ``q`` with ``q*b = a``; the order drops by ``val(b)``.

    Raises :class:`SeriesDomainError` when ``b`` is zero or its valuation
    exceeds that of ``a``.
    """
    _same_order(a, b)
    return _divide(a, b)


def inverse(a):
    """Multiplicative inverse of a series whose constant term is a unit."""
    c = a._c
    inv0 = _scalar_inverse(c[0])
    out = [inv0]
    for n in range(1, len(c)):
        acc = c[1] * out[n - 1]
        for k in range(2, n + 1):
            if c[k] != 0:
                acc += c[k] * out[n - k]
        out.append(-acc * inv0)
    return a._like(out)


def _is_one(v):
    return v == 1


def sqrt1(a):
    """Square root with constant term +1, by Newton iteration."""
    if not _is_one(a._c[0]):
        raise SeriesDomainError("sqrt1 needs constant term 1")
    n = a.order
    s = a.constant(a._c[0], 0, a._zero())
    prec = 0
    while prec < n:
        prec = min(2 * prec + 1, n)
        s = s.pad(prec)
        target = a.truncate(prec)
        s = (s + target * inverse(s)) / 2
    return s.pad(n) if s.order < n else s.truncate(n)


def log1(a):
    """Logarithm of a series with constant term 1."""
    if not _is_one(a._c[0]):
        raise SeriesDomainError("log1 needs constant term 1")
    if a.order == 0:
        return a.constant(a._zero(), 0, a._zero())
    q = a.derivative() * inverse(a.truncate(a.order - 1))
    return q.integral()


def exp0(a):
    """Exponential of a series with constant term 0 (power recurrence)."""
    if a._c[0] != 0:
        raise SeriesDomainError("exp0 needs constant term 0")
    c = a._c
    out = [a._zero() + 1]
    ka = [k * c[k] for k in range(len(c))]
    for n in range(1, len(c)):
        acc = ka[1] * out[n - 1]
        for k in range(2, n + 1):
            if ka[k] != 0:
                acc += ka[k] * out[n - k]
        out.append(acc / n)
    return a._like(out)


def substitute_power(a, k):
    """Return ``a(x^k)`` at the same order; edge series also map ``y -> y^k``."""
    if k < 1:
        raise UsageError("substitute_power needs k >= 1")
    if k == 1:
        return a
    z = a._zero()
    out = [z] * (a.order + 1)
    edge = isinstance(a, EdgeSeries)
    for i in range(0, a.order // k + 1):
        v = a._c[i]
        out[i * k] = v.subs_pow(k) if edge else v
    return a._like(out)


def compose(outer, inner):
    """``outer(inner(x))`` by Horner's rule; ``inner`` must have constant term 0.

    The result order is ``min(inner.order, (outer.order + 1) * val(inner) - 1)``
    so that truncation of ``outer`` never leaks into the reported digits.
    """
    if inner._c[0] != 0:
        raise SeriesDomainError("compose needs an inner series with constant term 0")
    v = inner.valuation()
    order = inner.order
    if v <= inner.order:
        order = min(order, (outer.order + 1) * v - 1)
    top = min(outer.order, order // v if v else 0)
    zero = inner._zero()
    if isinstance(outer._c[0], YPoly) and not isinstance(zero, YPoly):
        zero = YPoly()
    res = inner._like([outer._c[top]] + [zero] * order)
    tin = inner.truncate(order) if inner.order > order else inner
    for i in range(top - 1, -1, -1):
        res = (res * tin).truncate(order) + outer._c[i]
    if isinstance(outer, EdgeSeries) and not isinstance(res, EdgeSeries):
        res = EdgeSeries._make(res._c)
    return res


def multiset_exp(f, max_k=None):
    """Unlabelled multiset construction ``exp(sum_k f(x^k)/k)``."""
    if f._c[0] != 0:
        raise SeriesDomainError("multiset_exp needs constant term 0")
    acc = f
    for k in range(2, (max_k or f.order) + 1):
        acc = acc + substitute_power(f, k) / k
    return exp0(acc)
