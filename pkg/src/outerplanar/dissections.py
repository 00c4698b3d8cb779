"""Cycle index sums of polygon dissections (two-connected outerplanar graphs).

Every evaluator takes a :class:`CisArgs` bundle: the values substituted for
``s1``, ``s2`` and, inside the Euler-phi log sums, ``s_d``.  Values can be
exact series (counting), multiprecision numbers (singularity analysis) or
Taylor jets of either.

Two independent routes are implemented:

* ``closed``: the closed formulas in ``s1, s2, sqrt(s^2 - 6 s + 1)``.  They
  contain ``1/s1`` and ``1/s2`` prefactors; each is evaluated as a single
  numerator divided exactly by a monomial denominator so that a transcription
  error shows up as a failed cancellation instead of a wrong number.  They
  only cover the plain case (``y = 1``, all face sizes).
* ``construction``: division-free compositions built from the oriented
  outer-edge rooted dissections ``u = q (t + Phi(u))``, where ``t`` marks
  vertices, ``q`` marks edges and ``Phi`` lists the allowed face sizes.  This
  route handles edge marking and the even-face (bipartite) family.

The public evaluators use the closed route when it applies and the
construction otherwise; tests check the two against each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Callable, Optional

import mpmath

from .errors import ConsistencyError, SeriesDomainError, UsageError
from .jets import Jet, inv, is_exact_zero, log, sqrt
from .series import EdgeSeries, PowerSeries, Rational, YPoly, compose


class Faces(enum.Enum):
    """Allowed inner-face sizes."""

    ALL = "all"  # every polygon with at least 3 sides
    EVEN = "even"  # polygons with an even number of sides (bipartite)


@dataclass(frozen=True)
class CisArgs:
    """Substitution ``s1 -> s1, s2 -> s2, s_d -> family(d)`` plus edge weight ``y``.

    ``family`` defaults to zero for ``d >= 3``.  For numeric arguments the
    log sums run to ``dmax`` (or until ``|s_d|`` drops below the working
    epsilon); for series they run to the truncation order.
    """

    s1: object
    s2: object
    family: Optional[Callable[[int], object]] = None
    y: object = 1
    faces: Faces = Faces.ALL
    dmax: Optional[int] = None

    def s(self, d):
        if d == 1:
            return self.s1
        if d == 2:
            return self.s2
        if self.family is None:
            return _zero_like(self.s1)
        return self.family(d)

    @property
    def plain(self):
        return self.faces is Faces.ALL and _is_one(self.y)

    def indices(self):
        """The ``d`` values whose log terms can contribute."""
        if self.dmax is not None:
            return range(1, self.dmax + 1)
        if isinstance(self.s1, PowerSeries):
            return range(1, self.s1.order + 1)
        if isinstance(self.s1, Jet):
            raise UsageError("jet arguments need an explicit dmax")
        return None

    @classmethod
    def monomials(cls, order, edge_marked=False, faces=Faces.ALL):
        """``s_i = x^i``: turns cycle index sums into ordinary generating functions."""
        kind = EdgeSeries if edge_marked else PowerSeries
        fam = lambda d: kind.monomial(d, order)  # noqa: E731
        y = YPoly.y() if edge_marked else 1
        return cls(fam(1), fam(2), fam, y=y, faces=faces)


def _is_one(v):
    return not isinstance(v, (YPoly, Jet, PowerSeries)) and v == 1


def _zero_like(v):
    return v * 0


def _is_series(v):
    return isinstance(v, PowerSeries)


# -- oriented outer-edge rooted dissections ------------------------------------
#
# ut(t, q) = u / t where u = q (t + Phi(u)):
#   all faces:  (1+q) t U^2 - (1+q t) U + q = 0
#   even faces: -(1+q) t^2 U^3 + q t^2 U^2 + U - q = 0

def _defining(U, t, q, faces):
    if faces is Faces.ALL:
        g = (1 + q) * t * U * U - (1 + q * t) * U + q
        gu = 2 * (1 + q) * t * U - (1 + q * t)
    else:
        t2 = t * t
        g = -(1 + q) * t2 * U * U * U + q * t2 * U * U + U - q
        gu = -3 * (1 + q) * t2 * U * U + 2 * q * t2 * U + 1
    return g, gu


def _series_kind(q):
    if isinstance(q, YPoly):
        return EdgeSeries, YPoly(), YPoly([1])
    if isinstance(q, mpmath.mpf):
        return PowerSeries, mpmath.mpf(0), mpmath.mpf(1)
    return PowerSeries, Rational(0), Rational(1)


def _ut_formal(q, faces, order):
    if isinstance(q, YPoly):
        power = q.monomial_degree()
        if power is not None and power > 1:
            # the series in t has coefficients polynomial in q = y^power
            return _ut_formal(YPoly.y(), faces, order).subs_y_pow(power)
    # numeric coefficients depend on the working precision, so key on it too
    prec = mpmath.mp.prec if isinstance(q, mpmath.mpf) else 0
    return _ut_formal_cached(q, faces, order, prec)


@lru_cache(maxsize=256)
def _ut_formal_cached(q, faces, order, prec):
    kind, zero, one = _series_kind(q)
    t = kind.monomial(1, order, one, zero)
    U = kind.constant(q * one if not isinstance(q, YPoly) else q, order, zero)
    # quadratic convergence: each step doubles the number of correct terms
    for _ in range(order.bit_length() + 2):
        g, gu = _defining(U, t, q, faces)
        U = U - g / gu
    g, _ = _defining(U, t, q, faces)
    if isinstance(zero, mpmath.mpf):
        bad = any(abs(v) > mpmath.eps * 2 ** 20 for v in g.coeffs)
    else:
        bad = not g.is_zero()
    if bad:
        raise ConsistencyError("Newton iteration for the edge-rooted series did not settle")
    return U


def _ut_number(t, q, faces):
    t = mpmath.mpf(t)
    q = mpmath.mpf(q)
    if t == 0:
        return q
    if faces is Faces.ALL:
        b = 1 + q * t
        disc = b * b - 4 * (1 + q) * q * t
        if disc < 0:
            raise SeriesDomainError("argument beyond the dissection singularity")
        return 2 * q / (b + mpmath.sqrt(disc))
    if q * t < mpmath.mpf("0.01"):
        # far from the singularity Newton from the t = 0 value stays on the branch
        return _polish(q, t, q, faces, mpmath.mp.prec)
    # smallest positive root u of -(1+q) u^3 + q t u^2 + u - q t
    roots = mpmath.polyroots([-(1 + q), q * t, 1, -q * t], maxsteps=200, extraprec=40)
    real = sorted(mpmath.re(r) for r in roots
                  if abs(mpmath.im(r)) <= mpmath.eps * 10 ** 10 and mpmath.re(r) > 0)
    if not real:
        raise SeriesDomainError("argument beyond the even-face dissection singularity")
    return _polish(real[0] / t, t, q, faces, 4)


def _polish(U, t, q, faces, steps):
    """Newton in the ``U`` variable until the step stops shrinking (at most ``steps``)."""
    last = None
    for _ in range(steps):
        g, gu = _defining(U, t, q, faces)
        step = g / gu
        U = U - step
        if step == 0 or (last is not None and abs(step) >= last):
            break
        last = abs(step)
    return U


def utilde(t, q=1, faces=Faces.ALL):
    """``u/t`` for oriented outer-edge rooted dissections: ``u = q (t + Phi(u))``."""
    if isinstance(t, Jet):
        base = utilde(t.const, q, faces)
        U = Jet.constant(base, t.nvars, t.order)
        for _ in range(t.order + 1):
            g, gu = _defining(U, t, q, faces)
            U = U - g / gu
        return U
    if _is_series(t):
        if isinstance(t, EdgeSeries) and not isinstance(q, YPoly):
            q = YPoly([q])
        formal = _ut_formal(q, faces, t.order)
        return compose(formal, t)
    return _ut_number(t, q, faces)


def _phi_size(u, faces):
    if faces is Faces.ALL:
        return u * u * inv(1 - u)
    return u * u * u * inv(1 - u * u)


def _ptilde(w, faces):
    """``(P_odd(w)/w, P_even(w))`` for the face-size generating parts."""
    if faces is Faces.ALL:
        p = inv(1 - w)
        return p, w * p
    return None, w * inv(1 - w)


def _N(t, q, faces):
    U = utilde(t, q, faces)
    return _phi_size(t * U, faces)


def _Ntilde(t, q, faces):
    U = utilde(t, q, faces)
    u = t * U
    if faces is Faces.ALL:
        return u * U * inv(1 - u)
    return u * u * U * inv(1 - u * u)


def _x_minus(a, b, q, faces):
    W = utilde(b, q * q, faces)
    w = b * W
    pt, pe = _ptilde(w, faces)
    num = q * pe if pt is None else a * pt * W + q * pe
    return num * inv(1 - q * pe)


def _x_plus(t, q, faces):
    tt = t * t
    V = utilde(tt, q * q, faces)
    v = tt * V
    pt, pe = _ptilde(v, faces)
    num = q * pe if pt is None else t * pt * V + q * pe
    return num * inv(1 - q * pe)


def _log_term(u, d, faces):
    """``sum_j u^j / j`` over the face sizes ``d*j`` allowed by ``faces``."""
    if faces is Faces.ALL:
        out = -log(1 - u)
        if d <= 2:
            out = out - u
        if d == 1:
            out = out - u * u / 2
        return out
    if d == 1:
        return -log(1 - u * u) / 2 - u * u / 2
    if d == 2:
        return -log(1 - u) - u
    if d % 2:
        return -log(1 - u * u) / 2
    return -log(1 - u)


@lru_cache(maxsize=None)
def totient(d):
    result, n, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _phi_log_sum(args, term):
    """``sum_d phi(d)/d * term(s_d, d)`` over the contributing ``d``."""
    total = None
    idx = args.indices()
    for d in (idx if idx is not None else count(1)):
        sd = args.s(d)
        if is_exact_zero(sd):
            if idx is None:
                break
            continue
        if idx is None and abs(sd) < mpmath.eps:
            break
        t = term(sd, d) * Rational(totient(d), d)
        total = t if total is None else total + t
    return _zero_like(args.s1) if total is None else total


# -- construction route --------------------------------------------------------

class _Construction:
    """Division-free component sums for one argument bundle."""

    def __init__(self, args):
        self.a = args
        self.s1, self.s2, self.y, self.f = args.s1, args.s2, args.y, args.faces

    def oed_oriented(self):
        return self.s1 * self.s1 * utilde(self.s1, self.y, self.f)

    def oed_plus(self):
        s1, y = self.s1, self.y
        return y * s1 * s1 * (1 + _x_plus(s1, y, self.f))

    def oed_minus(self):
        s1, s2, y = self.s1, self.s2, self.y
        return y * s2 * (1 + _x_minus(s1, s2, y, self.f))

    def inner_edge(self):
        s1, s2, y, f = self.s1, self.s2, self.y, self.f
        n1 = _N(s1, y, f)
        xm = _x_minus(s1, s2, y, f)
        return y * (n1 * n1 + (s1 * s1 + s2) * _Ntilde(s2, y * y, f) + s2 * xm * xm) / 4

    def _sym_parts(self):
        s1, s2, y, f = self.s1, self.s2, self.y, self.f
        sq1, sq2, yy = s1 * s1, s2 * s2, y * y
        a = 2 * y * _N(sq1, yy, f)
        b = y * sq1 * _x_plus(sq1, yy, f)
        c = y * s2 * _x_minus(sq1, sq2, yy, f)
        return a, b, c

    def symmetry_edge(self):
        s1, s2, y, f = self.s1, self.s2, self.y, self.f
        a, b, c = self._sym_parts()
        yy = y * y
        return (a - b + y * s1 * s1 * _Ntilde(s2, yy, f) + y * _N(s2, yy, f) + c) / 4

    def face_symmetry(self):
        a, b, c = self._sym_parts()
        return (a - b + c) / 2

    def face_oriented(self):
        y, f = self.y, self.f

        def term(sd, d):
            return _log_term(sd * utilde(sd, y ** d, f), d, f)

        return _phi_log_sum(self.a, term)

    def face(self):
        s1, s2, y, f = self.s1, self.s2, self.y, self.f
        W = utilde(s2, y * y, f)
        w = s2 * W
        pt, pe = _ptilde(w, f)
        r = y * (1 + _x_minus(s1, s2, y, f))  # reflective root part divided by s2
        out = self.face_oriented() / 2 + pe * (s1 * s1 * W + s2 * r * r) / 4
        if pt is not None:
            out = out + s1 * pt * w * r / 2
        return out

    def dissection(self):
        s1, s2, y = self.s1, self.s2, self.y
        return ((s1 * s1 + s2) * y / 2 + self.face() - self.face_symmetry()
                - self.inner_edge() + 2 * self.symmetry_edge())


# -- closed-form route (plain case) ------------------------------------------------

def _pad_args(args, extra):
    if not _is_series(args.s1):
        return args, None
    order = args.s1.order
    fam = args.family
    padded_family = None if fam is None else (lambda d: fam(d).pad(order + extra))
    return CisArgs(args.s1.pad(order + extra), args.s2.pad(order + extra), padded_family,
                   args.y, args.faces, args.dmax or order), order


def _exact_quotient(num, den):
    """``num / den`` where ``den`` is a monomial in s1, s2; asserts exact cancellation."""
    if _is_series(num):
        if den.is_zero():
            raise SeriesDomainError("division by a zero argument")
        vn, vd = num.valuation(), den.valuation()
        if vn < vd and vn <= num.order - vd:
            raise ConsistencyError(
                f"closed form does not cancel: numerator valuation {vn} < {vd}")
        return num / den
    return num / den


def _finish(value, order):
    if order is None:
        return value
    if value.order < order:
        raise ConsistencyError(f"closed form lost precision: order {value.order} < {order}")
    return value.truncate(order)


def _closed(fn, pad_factor=(4, 3)):
    def run(args):
        if _is_series(args.s1):
            v1 = args.s1.valuation() if not args.s1.is_zero() else 1
            v2 = args.s2.valuation() if not args.s2.is_zero() else 2
            extra = pad_factor[0] * v1 + pad_factor[1] * v2 + 2
        else:
            extra = 0
        padded, order = _pad_args(args, extra)
        return _finish(fn(padded), order)
    return run


def _roots(s):
    return sqrt(s * s - 6 * s + 1)


def _closed_oed_oriented(a):
    s1 = a.s1
    return s1 * (s1 + 1 - _roots(s1)) / 4


def _closed_oed_plus(a):
    s1 = a.s1
    q1 = sqrt(s1 ** 4 - 6 * s1 * s1 + 1)
    num = 1 + s1 - 3 * s1 * s1 + s1 ** 3 - (1 + s1) * q1
    return _exact_quotient(num, 4 * s1)


def _closed_oed_minus(a):
    s1, s2 = a.s1, a.s2
    num = s2 * s2 - 3 * s1 * s2 + s2 + s1 - (s2 + s1) * _roots(s2)
    return _exact_quotient(num, 4 * s2)


def _closed_inner_edge(a):
    s1, s2 = a.s1, a.s2
    r1, r2 = _roots(s1), _roots(s2)
    w2 = 1 - s2 + r2
    ww = w2 * w2
    first = (3 * s1 - 1 + r1) ** 2 / 64
    t = 1 + s2 - r2
    num = 4 * (s1 + s2) ** 2 * t * t - 4 * (s1 * s1 + s2) * (3 * s2 - 1 + r2) * ww
    return first + _exact_quotient(num, 64 * s2) * inv(ww)


def _closed_symmetry_edge(a):
    s1, s2 = a.s1, a.s2
    p2, p4, p6 = s1 * s1, s1 ** 4, s1 ** 6
    t2, t3 = s2 * s2, s2 ** 3
    q1 = sqrt(p4 - 6 * p2 + 1)
    p1 = sqrt(s1 ** 8 - 6 * p4 + 1)
    q2 = sqrt(s2 ** 4 - 6 * t2 + 1)
    r2 = _roots(s2)
    num = (p6 - 2 * p6 * t2 + p4 * t2 - p2 * t3 - t3
           + 6 * p4 * t3 * (1 - s2 - p2)
           + t3 * (1 + p2) * p1
           - 2 * p4 * t3 * q1
           - p4 * (t2 + p2) * q2
           - p4 * t2 * (s2 + p2) * r2)
    return _exact_quotient(num, 16 * p4 * t3)


def _closed_face_symmetry(a):
    s1, s2 = a.s1, a.s2
    p2, p4, p6 = s1 * s1, s1 ** 4, s1 ** 6
    t2, t3, t4 = s2 * s2, s2 ** 3, s2 ** 4
    q1 = sqrt(p4 - 6 * p2 + 1)
    p1 = sqrt(s1 ** 8 - 6 * p4 + 1)
    q2 = sqrt(t4 - 6 * t2 + 1)
    num = (p6 * (1 - 3 * t2 - 3 * t3) + p4 * (t2 + 5 * t3 - 3 * t4) - t3 - p2 * t3
           - 2 * p4 * t3 * q1 + (t3 + p2 * t3) * p1 - p4 * (p2 + t2) * q2)
    return _exact_quotient(num, 8 * p4 * t3)


def _closed_log_sum(a):
    def term(sd, d):
        return log((3 - sd + _roots(sd)) / 4)

    return -_phi_log_sum(a, term) / 2


def _closed_face_oriented(a):
    # u_d = Z(E_oo; s_d)/s_d = (s_d + 1 - r_d)/4
    s1, s2 = a.s1, a.s2
    u1 = (s1 + 1 - _roots(s1)) / 4
    u2 = (s2 + 1 - _roots(s2)) / 4
    return 2 * _closed_log_sum(a) - u1 - (u1 * u1 + u2) / 2


def _closed_face(a):
    s1, s2 = a.s1, a.s2
    oo2 = s2 * (s2 + 1 - _roots(s2)) / 4
    zm = _closed_oed_minus(a)
    inner = _exact_quotient(s1 * zm + _exact_quotient(s1 * s1 * oo2, 2 * s2) + zm * zm / 2,
                            2 * s2)
    ratio = _exact_quotient(oo2, s2 - oo2) if _is_series(s2) else oo2 / (s2 - oo2)
    return _closed_face_oriented(a) / 2 + inner * ratio


def _closed_dissection(a):
    s1, s2 = a.s1, a.s2
    t2 = s2 * s2
    r1, r2 = _roots(s1), _roots(s2)
    num = (t2 * (s2 + s1 * s1 - 4 * s1 - 2) + s1 * s1 - 3 * s1 * s1 * s2 + 2 * s1 * s2
           + t2 * (3 - s1) * r1 - (t2 + s1 * s1 + 2 * s1 * s2) * r2)
    return _closed_log_sum(a) + _exact_quotient(num, 16 * t2)


def _closed_vertex_rooted(a):
    s1, s2 = a.s1, a.s2
    first = s1 * (1 + s1 - _roots(s1)) / 8
    num = s1 * (s1 + s2) * (1 - 3 * s2 - _roots(s2))
    return first + _exact_quotient(num, 8 * s2 * s2)


CLOSED = {
    "oed_oriented": _closed(_closed_oed_oriented),
    "oed_plus": _closed(_closed_oed_plus),
    "oed_minus": _closed(_closed_oed_minus),
    "inner_edge": _closed(_closed_inner_edge),
    "symmetry_edge": _closed(_closed_symmetry_edge),
    "face_oriented": _closed(_closed_face_oriented),
    "face": _closed(_closed_face),
    "face_symmetry": _closed(_closed_face_symmetry),
    "dissection": _closed(_closed_dissection),
    "vertex_rooted": _closed(_closed_vertex_rooted),
}


def construction(name, args):
    """Evaluate component ``name`` by the division-free construction."""
    c = _Construction(args)
    if name == "vertex_rooted":
        return vertex_rooted_construction(args)
    if name == "oed_plus":
        return c.oed_plus()
    if name == "oed_minus":
        return c.oed_minus()
    return getattr(c, name)()


def _closed_applies(args):
    if not args.plain or isinstance(args.s1, Jet) or isinstance(args.s2, Jet):
        return False
    return not (is_exact_zero(args.s1) or is_exact_zero(args.s2))


def _evaluate(name, args, route=None):
    if route is None:
        route = "closed" if _closed_applies(args) else "construction"
    if route == "closed":
        if not args.plain:
            raise UsageError("closed forms cover only the plain (y = 1, all faces) case")
        return CLOSED[name](args)
    if route == "construction":
        return construction(name, args)
    raise UsageError(f"unknown route {route!r}")


# -- public evaluators ---------------------------------------------------------

def oed_oriented(args, route=None):
    """Oriented outer-edge rooted dissections (the single edge included)."""
    if (route is None and args.faces is Faces.ALL and not _is_one(args.y)
            and not isinstance(args.s1, Jet) and not is_exact_zero(args.s1)):
        return _edge_marked_oed_oriented(args)
    return _evaluate("oed_oriented", args, route)


def _edge_marked_oed_oriented(args):
    s1, y = args.s1, args.y
    disc = (s1 * y - 1) ** 2 - 4 * s1 * y * y
    body = s1 * (s1 * y + 1 - sqrt(disc))
    if isinstance(y, YPoly):
        return body / (2 * (1 + y))
    return body * inv(2 * (1 + y))


def oed_reflective(args, route=None):
    """``(plus, minus, total)``: reflection-invariant outer-edge rooted dissections.

    ``plus`` sums over mappings fixing the root edge pointwise, ``minus`` over
    those swapping its ends; ``total`` is their average.
    """
    plus = _evaluate("oed_plus", args, route)
    minus = _evaluate("oed_minus", args, route)
    return plus, minus, (plus + minus) / 2


def inner_edge(args, route=None):
    return _evaluate("inner_edge", args, route)


def symmetry_edge(args, route=None):
    return _evaluate("symmetry_edge", args, route)


def face_oriented(args, route=None):
    return _evaluate("face_oriented", args, route)


def face(args, route=None):
    return _evaluate("face", args, route)


def face_symmetry(args, route=None):
    return _evaluate("face_symmetry", args, route)


def dissection_cis(args, route=None):
    """Unrooted dissections, ``Z(D)`` evaluated at ``args``."""
    return _evaluate("dissection", args, route)


def assemble_dissection_via_dissimilarity(args, route=None):
    """``Z(D)`` from face, face-symmetry, inner-edge and symmetry-edge sums.

    The dual tree of a dissection turns the dissimilarity identity for trees
    into ``Z(D) = y (s1^2 + s2)/2 + Z(F) - Z(F_s) - Z(E_i) + 2 Z(E_s)``.
    """
    s1, s2 = args.s1, args.s2
    return ((s1 * s1 + s2) * args.y / 2 + face(args, route) - face_symmetry(args, route)
            - inner_edge(args, route) + 2 * symmetry_edge(args, route))


def vertex_rooted_cis(s1, s2, y=1, faces=Faces.ALL, route=None):
    """Vertex-rooted dissections ``Z(V; s1, s2) = s1 dZ(D)/ds1``."""
    return _evaluate("vertex_rooted", CisArgs(s1, s2, y=y, faces=faces), route)


def vertex_rooted_construction(args):
    """``Z(V)`` as ``s1 * K(s1, s2)`` with the kernel from :func:`rooting_kernel`."""
    s1, s2 = args.s1, args.s2
    return s1 * rooted_quotient(s1, s2, args.y, args.faces)


# -- rooting kernel: Z(V)/s1 = d/ds1 Z(D) --------------------------------------
#
# Z(D) only couples s1 and s2 through terms of degree <= 2 in s1, so
#   dZ(D)/ds1 = A'(s1) + (J1(s2) - J1(0)) + s1 (J2(s2) - J2(0))
# with A(t) = Z(D)(t, 0, 0, ...) and J_i the i-th s1-derivative at s1 = 0.

def rooting_kernel(q, faces, order):
    """Formal series ``(A', J1 - J1(0), J2 - J2(0))`` of the rooting kernel at edge weight ``q``."""
    prec = mpmath.mp.prec if isinstance(q, mpmath.mpf) else 0
    return _rooting_kernel(q, faces, order, prec)


@lru_cache(maxsize=256)
def _rooting_kernel(q, faces, order, prec):
    kind, zero, one = _series_kind(q)
    t = kind.monomial(1, order + 1, one, zero)
    zs = kind.zero(order + 1, zero)
    a_series = construction("dissection", CisArgs(t, zs, None, q, faces))
    a_prime = a_series.derivative()

    s2 = kind.monomial(1, order, one, zero)
    z0 = kind.zero(order, zero)
    eps = Jet.variable(0, z0, 1, 2, zero=z0, one=one)
    jet = construction("dissection", CisArgs(eps, Jet.constant(s2, 1, 2, z0), None, q, faces,
                                             dmax=1))
    j1 = jet.coeff((1,))
    j2 = jet.coeff((2,)) * 2
    j1 = j1 - j1[0]
    j2 = j2 - j2[0]
    return a_prime, j1, j2


def rooted_quotient(s1, s2, y=1, faces=Faces.ALL, kernel=None):
    """``Z(V; s1, s2)/s1`` evaluated through the formal rooting kernel.

    ``s1`` and ``s2`` must be series (the kernel is composed with them).
    For numeric or jet arguments use :func:`rooted_quotient_at`.
    """
    if not _is_series(s1):
        return rooted_quotient_at(s1, s2, y, faces)
    order = s1.order
    ap, j1, j2 = kernel or rooting_kernel(y, faces, order)
    return compose(ap, s1) + compose(j1, s2) + s1 * compose(j2, s2)


def rooted_quotient_at(s1, s2, y=1, faces=Faces.ALL, dmax=1):
    """``Z(V; s1, s2)/s1 = dZ(D)/ds1`` at numeric or jet arguments via an extra jet variable."""
    if isinstance(s1, Jet):
        nv, order = s1.nvars, s1.order
        z = s1.const - s1.const
        e1 = _extend(s1, nv + 1, order + 1)
        e2 = _extend(s2, nv + 1, order + 1) if isinstance(s2, Jet) \
            else Jet.constant(s2, nv + 1, order + 1)
        e1 = e1 + Jet.variable(nv, z, nv + 1, order + 1)
        val = construction("dissection", CisArgs(e1, e2, None, y, faces, dmax=dmax))
        return _project_derivative(val, nv)
    z = mpmath.mpf(0)
    e1 = Jet.variable(0, mpmath.mpf(s1), 1, 1, zero=z)
    e2 = Jet.constant(mpmath.mpf(s2), 1, 1, zero=z)
    val = construction("dissection", CisArgs(e1, e2, None, y, faces, dmax=dmax))
    return val.coeff((1,))


def _extend(j, nvars, order):
    """Embed a jet into one more variable and one more order (new terms zero)."""
    from .jets import _monomials
    src = {e: v for e, v in zip(_monomials(j.nvars, j.order), j.c)}
    zero = j.c[0] - j.c[0]
    out = []
    for e in _monomials(nvars, order):
        if e[-1] == 0 and sum(e) <= j.order:
            out.append(src[e[:-1]])
        else:
            out.append(zero)
    return Jet(nvars, order, out)


def _project_derivative(val, var):
    """Derivative in ``var`` at ``e_var = 0``, as a jet in the remaining variables."""
    from .jets import _monomials
    d = val.derivative(var)
    nv = val.nvars - 1
    keep = {e: v for e, v in zip(_monomials(d.nvars, d.order), d.c) if e[var] == 0}
    out = [keep[e[:var] + (0,) + e[var:]] for e in _monomials(nv, d.order)]
    return Jet(nv, d.order, out)
