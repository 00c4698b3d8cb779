"""Singularity analysis of the rooted connected series, at explicit precision.

The rooted series ``Chat`` satisfies ``H(x, Chat(x)) = 0`` with

    H(x, z) = x exp( Z(V; z, Chat(x^2))/z
                     + sum_{k>=2} Z(V; Chat(x^k), Chat(x^2k)) / (k Chat(x^k)) ) - z.

Its dominant singularity ``rho`` and the value ``tau = Chat(rho)`` solve
``H = dH/dz = 0``.  ``Chat`` inside ``H`` is replaced by its degree-``m``
Taylor polynomial and the ``k``-sum stops at ``m``; the system is solved by a damped
two-dimensional Newton iteration whose Jacobian comes from Taylor jets.

Every public routine takes ``digits`` and works at ``digits + GUARD`` decimal
digits inside an :func:`mpmath.workdps` block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import mpmath

from .composition import build_tables
from .dissections import (CisArgs, Faces, construction, dissection_cis,
                          rooted_quotient_at)
from .errors import ConsistencyError, SeriesDomainError, SolverError, UsageError
from .jets import Jet, exp, inv, sqrt
from .jets import _monomials

GUARD = 20
DEFAULT_DIGITS = 80
DEFAULT_M = 25
SEED = ("0.134", "0.17")


# -- helpers -------------------------------------------------------------------

def eval_series_with_tail(f, point):
    """``(sum_n f_n point^n, tail estimate)``; the tail assumes geometric decay."""
    point = mpmath.mpf(point)
    if not 0 <= point < 1:
        raise SeriesDomainError("evaluation point must lie in [0, 1)")
    coeffs = [mpmath.mpf(int(c.numerator)) / int(c.denominator) for c in f.coeffs]
    value = mpmath.polyval(coeffs[::-1], point)
    n = len(coeffs) - 1
    tail = mpmath.mpf(0)
    if n >= 1 and coeffs[n] and coeffs[n - 1]:
        ratio = abs(coeffs[n] / coeffs[n - 1]) * point
        last = abs(coeffs[n]) * point ** n
        tail = last * ratio / (1 - ratio) if ratio < 1 else mpmath.inf
    return value, tail


def eval_series(f, point):
    """Truncated evaluation ``sum_{n<=N} f_n point^n``."""
    return eval_series_with_tail(f, point)[0]


def _horner(coeffs, t):
    acc = coeffs[-1] * 1
    for c in reversed(coeffs[:-1]):
        acc = acc * t + c
    return acc


def _mpf_list(series, m):
    return [mpmath.mpf(int(c.numerator)) / int(c.denominator) for c in series.coeffs[: m + 1]]


def _lift(jet1, nvars, var):
    """View a jet in one variable as a jet in ``nvars`` variables (others absent)."""
    src = dict(zip(_monomials(1, jet1.order), jet1.c))
    zero = jet1.c[0] - jet1.c[0]
    out = []
    for e in _monomials(nvars, jet1.order):
        others = sum(v for i, v in enumerate(e) if i != var)
        out.append(src[(e[var],)] if others == 0 else zero)
    return Jet(nvars, jet1.order, out)


def _roots(s):
    return sqrt(s * s - 6 * s + 1)


def closed_quotient(s1, s2):
    """``Z(V; s1, s2)/s1`` for all faces at ``y = 1``, in cancellation-free form.

    ``(1 + s - r)/8 = s/(1 + s + r)`` and ``(1 - 3s - r)/(8 s^2) = 1/(1 - 3s + r)``
    with ``r = sqrt(s^2 - 6s + 1)`` remove the removable ``1/s2^2``.
    """
    return s1 * inv(1 + s1 + _roots(s1)) + (s1 + s2) * inv(1 - 3 * s2 + _roots(s2))


class HFunction:
    """``H(x, z)`` for one family, edge weight and truncation order ``m``."""

    def __init__(self, coeffs_at: Callable[[int], list], m: int,
                 quotient: Callable[[object, object, int], object]):
        self.coeffs_at = coeffs_at
        self.m = m
        self.quotient = quotient

    def chat(self, k, t):
        """``Chat^[m](t)`` with edge weight ``y^k`` (``t`` already ``x^k``)."""
        return _horner(self.coeffs_at(k), t)

    def rest(self, x):
        """``sum_{k=2}^m Z(V; Chat(x^k), Chat(x^2k)) / (k Chat(x^k))``."""
        acc = None
        xk = x
        for k in range(2, self.m + 1):
            xk = xk * x
            a = self.chat(k, xk)
            b = self.chat(2 * k, xk * xk)
            term = self.quotient(a, b, k) / k
            acc = term if acc is None else acc + term
        return acc

    def jet(self, x0, z0, order):
        """Bivariate Taylor jet of ``H`` at ``(x0, z0)`` (variables ``dx``, ``dz``)."""
        zero = mpmath.mpf(0)
        x1 = Jet.variable(0, x0, 1, order, zero=zero)
        X = Jet.variable(0, x0, 2, order, zero=zero)
        Z = Jet.variable(1, z0, 2, order, zero=zero)
        b = _lift(self.chat(2, x1 * x1), 2, 0)
        s = self.quotient(Z, b, 1)
        rest = self.rest(x1)
        if rest is not None:
            s = s + _lift(rest, 2, 0)
        return X * exp(s) - Z

    def value(self, x, z):
        x, z = mpmath.mpf(x), mpmath.mpf(z)
        s = self.quotient(z, self.chat(2, x * x), 1)
        rest = self.rest(x)
        if rest is not None:
            s = s + rest
        return x * mpmath.exp(s) - z


# -- Newton on (H, H_z) ---------------------------------------------------------

def _newton(hf, seed, tol, zmax=None, max_iter=200):
    x, z = mpmath.mpf(seed[0]), mpmath.mpf(seed[1])
    trace = []

    def system(x, z):
        j = hf.jet(x, z, 2)
        f = (j.const, j.coeff((0, 1)))
        jac = ((j.coeff((1, 0)), j.coeff((0, 1))),
               (j.coeff((1, 1)), 2 * j.coeff((0, 2))))
        return f, jac

    f, jac = system(x, z)
    norm = max(abs(f[0]), abs(f[1]))
    for it in range(max_iter):
        trace.append((it, x, z, norm))
        if norm < tol:
            break
        (a, b), (c, d) = jac
        det = a * d - b * c
        if det == 0:
            raise SolverError("singular Jacobian in the Newton iteration", trace)
        dx = (d * f[0] - b * f[1]) / det
        dz = (a * f[1] - c * f[0]) / det
        step = mpmath.mpf(1)
        for _ in range(60):
            nx, nz = x - step * dx, z - step * dz
            try:
                if not (0 < nx < 1 and 0 < nz < 1) or (zmax is not None and nz >= zmax):
                    raise SeriesDomainError("step left the admissible region")
                nf, njac = system(nx, nz)
                nnorm = max(abs(nf[0]), abs(nf[1]))
                if nnorm < norm or nnorm < tol:
                    break
            except SeriesDomainError:
                pass
            step /= 2
        else:
            raise SolverError("Newton line search failed", trace)
        if abs(step * dx) + abs(step * dz) == 0:
            break
        x, z, f, jac, norm = nx, nz, nf, njac, nnorm
    else:
        raise SolverError("Newton iteration did not converge", trace)
    if not (0 < x < 1 and 0 < z < 1):
        raise SolverError("root outside (0, 1)^2", trace)
    return x, z, norm, trace


def _delta(y=1):
    """Dominant singularity of the edge-marked dissection series at edge weight ``y``."""
    y = mpmath.mpf(y)
    return 2 + 1 / y - 2 * mpmath.sqrt(1 + 1 / y)


# -- plain family ------------------------------------------------------------------

@dataclass
class SingularData:
    """Singular data of the rooted connected series (see module docstring)."""

    rho: mpmath.mpf
    tau: mpmath.mpf
    residual: mpmath.mpf
    m_trunc: int
    digits: int
    chat1: Optional[mpmath.mpf] = None
    chat2: Optional[mpmath.mpf] = None
    chat3: Optional[mpmath.mpf] = None
    c0: Optional[mpmath.mpf] = None
    c1: Optional[mpmath.mpf] = None
    c2: Optional[mpmath.mpf] = None
    c3: Optional[mpmath.mpf] = None
    g_at_rho: Optional[mpmath.mpf] = None
    g2: Optional[mpmath.mpf] = None
    g3: Optional[mpmath.mpf] = None
    hdy_closed: Optional[mpmath.mpf] = None
    hdy_simple: Optional[mpmath.mpf] = None
    hyy: Optional[mpmath.mpf] = None
    hx: Optional[mpmath.mpf] = None
    c_at_powers: list = field(default_factory=list, repr=False)
    trace: list = field(default_factory=list, repr=False)


def _check_args(m, digits):
    if m < 1:
        raise UsageError("truncation m must be at least 1")
    if digits < 30:
        raise UsageError("at least 30 digits are required")


def plain_h(m):
    tables = build_tables(max(m, 30))
    coeffs = _mpf_list(tables.chat, m)
    return HFunction(lambda k: coeffs, m, lambda a, b, k: closed_quotient(a, b))


def solve_rho_tau(m=DEFAULT_M, digits=DEFAULT_DIGITS):
    """Solve ``H = dH/dz = 0`` for the degree-``m`` truncation; returns :class:`SingularData`."""
    _check_args(m, digits)
    with mpmath.workdps(digits + GUARD):
        hf = plain_h(m)
        tol = mpmath.mpf(10) ** (-(digits + GUARD - 8))
        rho, tau, res, trace = _newton(hf, SEED, tol, zmax=_delta())
        if tau >= 3 - 2 * mpmath.sqrt(2):
            raise SolverError("tau must lie below the dissection singularity", trace)
        sd = SingularData(rho, tau, res, m, digits, trace=trace)
        _hdy_checks(hf, sd)
        return sd


def _hdy_checks(hf, sd):
    """Residuals of the two closed forms of ``dH/dz`` at the solution."""
    rho, tau = sd.rho, sd.tau
    b = hf.chat(2, rho * rho)
    zero = mpmath.mpf(0)
    s1 = Jet.variable(0, tau, 1, 1, zero=zero)
    zv = s1 * closed_quotient(s1, b)
    h = hf.value(rho, tau)
    sd.hdy_closed = (h + tau) * (zv.coeff((1,)) / tau - zv.const / tau ** 2) - 1
    r = mpmath.sqrt(tau * tau - 6 * tau + 1)
    sd.hdy_simple = tau * (1 + b * (b - 3) - b * b * (tau - 3) / r
                           - mpmath.sqrt(b * b - 6 * b + 1)) - 8 * b * b
    sd.residual = max(abs(h), abs(sd.hdy_closed), sd.residual)


def _compose2(jet, dx, dz):
    """Substitute univariate jets ``dx, dz`` (constant term 0) into a bivariate jet."""
    order = dx.order
    px = [Jet.constant(mpmath.mpf(1), 1, order)]
    pz = [Jet.constant(mpmath.mpf(1), 1, order)]
    for _ in range(jet.order):
        px.append(px[-1] * dx)
        pz.append(pz[-1] * dz)
    acc = Jet.constant(mpmath.mpf(0), 1, order)
    for e, c in zip(_monomials(2, jet.order), jet.c):
        if c:
            acc = acc + px[e[0]] * pz[e[1]] * c
    return acc


def _xjet(values, order=4):
    zero = mpmath.mpf(0)
    c = list(values) + [zero] * (order + 1 - len(values))
    return Jet(1, order, c[: order + 1])


def singular_expansion_chat(sd, hf=None):
    """``Chat = tau + Chat1 X + Chat2 X^2 + Chat3 X^3 + ...`` with ``X = sqrt(1 - x/rho)``."""
    with mpmath.workdps(sd.digits + GUARD):
        hf = hf or plain_h(sd.m_trunc)
        rho, tau = sd.rho, sd.tau
        j = hf.jet(rho, tau, 4)
        hx, hyy = j.coeff((1, 0)), 2 * j.coeff((0, 2))
        sd.hx, sd.hyy = hx, hyy
        if not (hx > 0 and hyy > 0):
            raise SolverError("degenerate singular point: dH/dx and d2H/dz2 must be positive")
        y1 = -mpmath.sqrt(2 * rho * hx / hyy)
        dx = _xjet([0, 0, -rho])

        def coeff(y2, y3, n):
            return _compose2(j, dx, _xjet([0, y1, y2, y3])).coeff((n,))

        a0 = coeff(0, 0, 3)
        y2 = -a0 / (coeff(1, 0, 3) - a0)
        b0 = coeff(y2, 0, 4)
        y3 = -b0 / (coeff(y2, 1, 4) - b0)
        sd.chat1, sd.chat2, sd.chat3 = y1, y2, y3
        return y1, y2, y3


def _numeric_c(s1, family, dmax):
    """``C = Chat + Z(D; Chat) - Z(V; Chat)`` by the division-free route."""
    s2 = family(2)
    zd = construction("dissection", CisArgs(s1, s2, family, dmax=dmax))
    return s1 + zd - s1 * closed_quotient(s1, s2)


def singular_expansion_c_and_g(sd, hf=None):
    """``C_0..C_3`` by substituting the expansion of ``Chat``; then ``G(rho)``, ``G_2``, ``G_3``."""
    with mpmath.workdps(sd.digits + GUARD):
        hf = hf or plain_h(sd.m_trunc)
        if sd.chat1 is None:
            singular_expansion_chat(sd, hf)
        rho, m = sd.rho, sd.m_trunc
        order = 3
        s1 = _xjet([sd.tau, sd.chat1, sd.chat2, sd.chat3], order)
        x = _xjet([rho, 0, -rho], order)
        powers = {1: x}

        def xpow(d):
            if d not in powers:
                powers[d] = xpow(d - 1) * x
            return powers[d]

        family = lambda d: s1 if d == 1 else hf.chat(d, xpow(d))  # noqa: E731
        args = CisArgs(s1, family(2), family, dmax=m)
        zd = dissection_cis(args, route="closed")
        c = s1 + zd - s1 * closed_quotient(s1, family(2))
        sd.c0, sd.c1, sd.c2, sd.c3 = (c.coeff((i,)) for i in range(4))
        if abs(sd.c1) > mpmath.mpf(10) ** -20:
            raise ConsistencyError(f"C1 = {mpmath.nstr(sd.c1, 5)} should vanish")
        # R(x) = sum_{k>=2} C(x^k)/k is analytic at rho; only R(rho), R'(rho) matter
        rest = Jet.constant(mpmath.mpf(0), 1, 1)
        sd.c_at_powers = []
        xr = Jet.variable(0, rho, 1, 1, zero=mpmath.mpf(0))
        eps = mpmath.mpf(10) ** (-(sd.digits + GUARD))
        k = 2
        while True:
            xk = xr ** k
            if xk.const < eps:
                break
            fam_k = _chat_family(hf, xk)
            dmax = max(2, int(mpmath.log(eps) / mpmath.log(xk.const)) + 1)
            ck = _numeric_c(fam_k(1), fam_k, dmax)
            sd.c_at_powers.append(ck.const)
            rest = rest + ck / k
            k += 1
        r0, r1 = rest.const, rest.coeff((1,))
        sd.g_at_rho = mpmath.exp(sd.c0 + r0)
        sd.g2 = sd.g_at_rho * (sd.c2 - rho * r1)
        sd.g3 = sd.g_at_rho * sd.c3
        return sd


def _chat_family(hf, t):
    cache = {}

    def fam(d):
        if d not in cache:
            cache[d] = hf.chat(d, t ** d)
        return cache[d]

    return fam


def singular_data(m=DEFAULT_M, digits=DEFAULT_DIGITS):
    """Solve the singular system and fill every expansion coefficient."""
    sd = solve_rho_tau(m, digits)
    with mpmath.workdps(digits + GUARD):
        hf = plain_h(m)
    singular_expansion_chat(sd, hf)
    singular_expansion_c_and_g(sd, hf)
    return sd


@dataclass(frozen=True)
class AsymptoticConstants:
    d: mpmath.mpf
    c: mpmath.mpf
    g: mpmath.mpf
    delta: mpmath.mpf
    delta_inv: mpmath.mpf
    rho_inv: mpmath.mpf


def asymptotic_constants(sd):
    """``d_n ~ d n^(-5/2) delta^-n``, ``c_n ~ c n^(-5/2) rho^-n``, ``g_n ~ g n^(-5/2) rho^-n``."""
    with mpmath.workdps(sd.digits + GUARD):
        root2 = mpmath.sqrt(2)
        d = (3 * root2 - 4) ** mpmath.mpf(1.5) / (8 * mpmath.sqrt(2 * mpmath.pi))
        spi = 4 * mpmath.sqrt(mpmath.pi)
        return AsymptoticConstants(d, 3 * sd.c3 / spi, 3 * sd.g3 / spi, 3 - 2 * root2,
                                   3 + 2 * root2, 1 / sd.rho)


# -- limit-law statistics ------------------------------------------------------------

def _powers_until(base, eps):
    k, t = 1, base
    while t >= eps:
        yield k, t
        k += 1
        t = t * base


def _d_at(t, faces=Faces.ALL):
    """``D(t)`` by the division-free route (``s_d = t^d``)."""
    return construction("dissection", CisArgs(t, t * t, lambda d: t ** d, faces=faces))


@dataclass(frozen=True)
class Statistics:
    """Limits of the random-graph statistics evaluated at ``rho``."""

    prob_connected: mpmath.mpf
    expected_components: mpmath.mpf
    isolated_mean: mpmath.mpf
    two_connected_components: mpmath.mpf
    two_connected_nontrivial: mpmath.mpf
    bipartite_components: mpmath.mpf


def isolated_vertex_law(rho, k):
    """Limit of ``P[k isolated vertices]``, normalized as ``rho^k (1 - rho)``."""
    if k < 0:
        raise UsageError("k must be non-negative")
    return rho ** k * (1 - rho)


def bipartite_chat_at(t, digits=DEFAULT_DIGITS, order=60):
    """``Chat_b(t)`` for ``0 < t <= rho``.

    Inner values ``Chat_b(t^k)``, ``k >= 2``, come from the exact series
    (they lie well inside its disc); the outer one solves
    ``z = t exp(Z(V_b; z, Chat_b(t^2))/z + rest)`` by Newton from the partial sum.
    """
    with mpmath.workdps(digits + GUARD):
        t = mpmath.mpf(t)
        series = build_tables(order, faces=Faces.EVEN).chat
        coeffs = _mpf_list(series, order)
        hf = HFunction(lambda k: coeffs, order,
                       lambda a, b, k: rooted_quotient_at(a, b, 1, Faces.EVEN))
        inner = lambda d: hf.chat(d, t ** d)  # noqa: E731
        eps = mpmath.mpf(10) ** (-(digits + GUARD))
        rest = mpmath.mpf(0)
        for k, tk in _powers_until(t, eps):
            if k >= 2:
                rest += rooted_quotient_at(inner(k), inner(2 * k), 1, Faces.EVEN) / k
        b = inner(2)
        z = hf.chat(1, t)
        for _ in range(200):
            zj = Jet.variable(0, z, 1, 1, zero=mpmath.mpf(0))
            f = t * exp(rooted_quotient_at(zj, b, 1, Faces.EVEN) + rest) - zj
            step = f.const / f.coeff((1,))
            z -= step
            if abs(step) < eps * 10 ** 8:
                break
        else:
            raise SolverError("bipartite rooted value did not converge")
        return z, inner


def bipartite_c_at(t, digits=DEFAULT_DIGITS):
    """``C_b(t) = Chat_b + Z(D_b; Chat_b) - Z(V_b; Chat_b)`` at ``0 < t <= rho``."""
    z, inner = bipartite_chat_at(t, digits)
    with mpmath.workdps(digits + GUARD):
        fam = lambda d: z if d == 1 else inner(d)  # noqa: E731
        zd = construction("dissection", CisArgs(z, fam(2), fam, faces=Faces.EVEN))
        zv = z * rooted_quotient_at(z, fam(2), 1, Faces.EVEN)
        return z + zd - zv


def statistics(sd):
    """Connectedness, component and isolated-vertex limits (needs a full :func:`singular_data`)."""
    if sd.g3 is None:
        raise UsageError("singular data lacks the G expansion")
    with mpmath.workdps(sd.digits + GUARD):
        rho = sd.rho
        eps = mpmath.mpf(10) ** (-(sd.digits + GUARD))
        comps = 1 + sd.c0 + mpmath.fsum(sd.c_at_powers)
        # a lone vertex is a trivial two-connected component: A(x) = x + D(x)
        blocks = mpmath.fsum(_d_at(t) for _, t in _powers_until(rho, eps))
        two_conn = rho / (1 - rho) + blocks
        bip = mpmath.mpf(0)
        for k, t in _powers_until(rho, eps):
            if k == 1 or t > mpmath.mpf(10) ** (-(sd.digits + GUARD) // 2):
                bip += bipartite_c_at(t, sd.digits)
            else:
                bip += t  # C_b(t) = t + O(t^2)
        return Statistics(sd.c3 / sd.g3, comps, rho / (1 - rho), two_conn, blocks, bip)


# -- bipartite growth ------------------------------------------------------------------

BIPARTITE_SEED = "0.2185"


def bipartite_h(m):
    series = build_tables(max(m, 30), faces=Faces.EVEN).chat
    coeffs = _mpf_list(series, m)
    return HFunction(lambda k: coeffs, m,
                     lambda a, b, k: rooted_quotient_at(a, b, 1, Faces.EVEN))


def bipartite_growth(m=DEFAULT_M, digits=DEFAULT_DIGITS):
    """``(rho_b, tau_b, residual)`` for bipartite outerplanar graphs, same scheme as the general case."""
    _check_args(m, digits)
    with mpmath.workdps(digits + GUARD):
        hf = bipartite_h(m)
        x0 = mpmath.mpf(BIPARTITE_SEED)
        tol = mpmath.mpf(10) ** (-(digits + GUARD - 8))
        rho_b, tau_b, res, _ = _newton(hf, (x0, hf.chat(1, x0)), tol)
        return rho_b, tau_b, res


# -- edge law ------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeLaw:
    """Gaussian edge law: ``E[edges] ~ mu n``, ``Var[edges] ~ sigma2 n``."""

    mu: mpmath.mpf
    sigma2: mpmath.mpf
    x0_at_1: mpmath.mpf
    x0_prime_1: mpmath.mpf
    x0_doubleprime_1: mpmath.mpf
    h: mpmath.mpf

    @classmethod
    def from_derivatives(cls, x0, d1, d2, h):
        r = d1 / x0
        return cls(-r, -d2 / x0 - r + r * r, x0, d1, d2, h)


def _differences(f, h):
    """Five-point central differences ``(f(1), f'(1), f''(1))``."""
    v = {j: f(1 + j * h) for j in (-2, -1, 0, 1, 2)}
    d1 = (8 * (v[1] - v[-1]) - (v[2] - v[-2])) / (12 * h)
    d2 = (-v[2] + 16 * v[1] - 30 * v[0] + 16 * v[-1] - v[-2]) / (12 * h * h)
    return v[0], d1, d2


def dissection_singularity(y):
    """``delta(y) = 2 + 1/y - 2 sqrt(1 + 1/y)``, the singularity of the edge-marked dissections."""
    return _delta(y)


def dissection_singularity_numeric(y):
    """Smallest positive zero of the discriminant ``(1 + y t)^2 - 4 y (1 + y) t``."""
    y = mpmath.mpf(y)
    roots = mpmath.polyroots([y * y, 2 * y - 4 * y * (1 + y), 1])
    return min(mpmath.re(r) for r in roots if mpmath.re(r) > 0)


def dissection_edge_law(digits=DEFAULT_DIGITS, h="1e-6"):
    with mpmath.workdps(digits + GUARD):
        h = mpmath.mpf(h)
        return EdgeLaw.from_derivatives(*_differences(_delta, h), h)


def edge_h(m, y):
    rows = build_tables(max(m, 30), edge_marked=True).chat_xy.coeffs[: m + 1]
    y = mpmath.mpf(y)
    cache = {}

    def coeffs_at(k):
        if k not in cache:
            yk = y ** k
            cache[k] = [mpmath.polyval([mpmath.mpf(int(c.numerator)) / int(c.denominator)
                                        for c in reversed(p.coeffs)], yk) if p.coeffs
                        else mpmath.mpf(0) for p in rows]
        return cache[k]

    return HFunction(coeffs_at, m, lambda a, b, k: rooted_quotient_at(a, b, y ** k, Faces.ALL))


def growth_at(y, m=DEFAULT_M, digits=DEFAULT_DIGITS, seed=SEED):
    """``(rho(y), tau(y))`` for edge weight ``y`` (construction route)."""
    with mpmath.workdps(digits + GUARD):
        hf = edge_h(m, y)
        tol = mpmath.mpf(10) ** (-(digits + GUARD - 8))
        rho, tau, _, trace = _newton(hf, seed, tol, zmax=_delta(y))
        return rho, tau


def outerplanar_edge_law(m=DEFAULT_M, digits=DEFAULT_DIGITS, h="1e-6"):
    """Edge law of outerplanar graphs from ``rho(y)`` near ``y = 1``."""
    _check_args(m, digits)
    with mpmath.workdps(digits + GUARD):
        h = mpmath.mpf(h)
        sd = solve_rho_tau(m, digits)
        seed = (sd.rho, sd.tau)
        law = EdgeLaw.from_derivatives(
            *_differences(lambda y: sd.rho if y == 1 else growth_at(y, m, digits, seed)[0], h), h)
        if not law.sigma2 > 0:
            raise ConsistencyError("edge variance must be positive")
        return law


# -- report --------------------------------------------------------------------------

SCHEMA_VERSION = 1


def _truncation_digits(rho, m):
    """Digits not disturbed by dropping ``Chat`` terms past ``x^m`` (heuristic ``rho^(m+1)``)."""
    return int(-(m + 1) * mpmath.log10(rho))


def _entry(value, claimed, **method):
    """Value printed at full working precision; ``claimed_digits`` is the trusted part."""
    shown = method.get("digits", DEFAULT_DIGITS)
    return {"value": mpmath.nstr(value, shown, strip_zeros=False),
            "claimed_digits": claimed, "method": method}


def constants_report(m=DEFAULT_M, digits=DEFAULT_DIGITS, h="1e-6", edge_law=True):
    """Every growth constant, expansion coefficient and limit statistic as a JSON-ready dict."""
    _check_args(m, digits)
    sd = singular_data(m, digits)
    const = asymptotic_constants(sd)
    stats = statistics(sd)
    rho_b, _, _ = bipartite_growth(m, digits)
    with mpmath.workdps(digits + GUARD):
        trunc = min(digits, _truncation_digits(sd.rho, m))
        trunc_b = min(digits, _truncation_digits(rho_b, m))
        meta = {"m": m, "digits": digits}
        out = {
            "rho": _entry(sd.rho, trunc, solver="newton", **meta),
            "rho_inverse": _entry(const.rho_inv, trunc, solver="newton", **meta),
            "tau": _entry(sd.tau, trunc, solver="newton", **meta),
            "residual": _entry(sd.residual, 3, solver="newton", **meta),
            "delta": _entry(const.delta, digits, formula="3-2*sqrt(2)", digits=digits),
            "delta_inverse": _entry(const.delta_inv, digits, formula="3+2*sqrt(2)", digits=digits),
            "rho_b": _entry(rho_b, trunc_b, solver="newton", **meta),
            "rho_b_inverse": _entry(1 / rho_b, trunc_b, solver="newton", **meta),
            "rho_over_rho_b": _entry(sd.rho / rho_b, min(trunc, trunc_b), solver="newton",
                                     **meta),
            "d": _entry(const.d, digits, formula="closed", digits=digits),
            "c": _entry(const.c, trunc, solver="singular expansion", **meta),
            "g": _entry(const.g, trunc, solver="singular expansion", **meta),
            "chat1": _entry(sd.chat1, trunc, solver="singular expansion", **meta),
            "chat2": _entry(sd.chat2, trunc, solver="singular expansion", **meta),
            "chat3": _entry(sd.chat3, trunc, solver="singular expansion", **meta),
            "c1": _entry(sd.c1, 3, solver="singular expansion", **meta),
            "c2": _entry(sd.c2, trunc, solver="singular expansion", **meta),
            "c3": _entry(sd.c3, trunc, solver="singular expansion", **meta),
            "g_at_rho": _entry(sd.g_at_rho, trunc, solver="singular expansion", **meta),
            "g2": _entry(sd.g2, trunc, solver="singular expansion", **meta),
            "g3": _entry(sd.g3, trunc, solver="singular expansion", **meta),
            "prob_connected": _entry(stats.prob_connected, trunc, statistic="C3/G3", **meta),
            "expected_components": _entry(stats.expected_components, trunc,
                                          statistic="1+sum C(rho^r)", **meta),
            "isolated_vertices_mean": _entry(stats.isolated_mean, trunc,
                                             statistic="rho/(1-rho)", **meta),
            "two_connected_components": _entry(stats.two_connected_components, trunc,
                                               statistic="sum rho^k + D(rho^k)", **meta),
            "two_connected_components_nontrivial": _entry(
                stats.two_connected_nontrivial, trunc, statistic="sum D(rho^k)", **meta),
            "bipartite_components": _entry(stats.bipartite_components, min(trunc, trunc_b),
                                           statistic="sum C_b(rho^k)", **meta),
        }
        dlaw = dissection_edge_law(digits, h)
        fd = 10  # five-point differences at h = 1e-6
        out["dissection_edge_mu"] = _entry(dlaw.mu, fd, finite_difference=True, h=h, digits=digits)
        out["dissection_edge_sigma2"] = _entry(dlaw.sigma2, fd, finite_difference=True, h=h,
                                               digits=digits)
        if edge_law:
            law = outerplanar_edge_law(m, digits, h)
            claim = min(fd, trunc)
            for name in ("x0_prime_1", "x0_doubleprime_1", "mu", "sigma2"):
                out[f"edge_{name}"] = _entry(getattr(law, name), claim, finite_difference=True,
                                             h=h, **meta)
        return out
