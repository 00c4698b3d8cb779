"""Connected and general outerplanar graphs from their blocks.

A vertex-rooted connected outerplanar graph is its root together with a
multiset of vertex-rooted dissections glued at the root, each carrying
further rooted connected graphs at its other vertices:

    Chat = x * exp( sum_k Z(V; Chat(x^k), Chat(x^2k)) / (k Chat(x^k)) )

Unrooting uses the dissimilarity identity for the block tree,
``C = Chat + Z(D; Chat) - Z(V; Chat)``, and general graphs are multisets of
connected ones.  With edge marking every ``x^k`` above also carries ``y^k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .dissections import CisArgs, Faces, dissection_cis, rooting_kernel
from .errors import ConsistencyError, SeriesDomainError, UsageError
from .series import (EdgeSeries, PowerSeries, YPoly, compose, exp0,
                     multiset_exp, substitute_power)

DEFAULT_ORDER = 30


@dataclass(frozen=True)
class CensusTables:
    """Exact counting series truncated at ``trunc``.

    ``chat``, ``c`` and ``g`` count vertex-rooted connected, connected and all
    unlabelled outerplanar graphs (the empty graph included in ``g``); ``d``
    counts dissections.  The ``*_xy`` fields are the edge-marked versions.
    """

    trunc: int
    d: PowerSeries
    chat: PowerSeries
    c: PowerSeries
    g: PowerSeries
    d_xy: Optional[EdgeSeries] = None
    chat_xy: Optional[EdgeSeries] = None
    c_xy: Optional[EdgeSeries] = None
    g_xy: Optional[EdgeSeries] = None


def _kind(edge_marked):
    return EdgeSeries if edge_marked else PowerSeries


def _y(edge_marked):
    return YPoly.y() if edge_marked else 1


def _kernels(order, edge_marked, faces):
    """Return ``k -> (A', J1, J2)`` with ``y`` replaced by ``y^k``."""
    base = rooting_kernel(_y(edge_marked), faces, order)
    if not edge_marked:
        return lambda k: base
    cache = {1: base}

    def at(k):
        if k not in cache:
            cache[k] = tuple(s.subs_y_pow(k) for s in base)
        return cache[k]

    return at


def _quotient(kernel, a, b):
    """``Z(V; a, b)/a`` through the rooting kernel."""
    ap, j1, j2 = kernel
    return compose(ap, a) + compose(j1, b) + a * compose(j2, b)


def _rhs(chat, kernels):
    """Right-hand side of the rooted fixed-point equation at ``chat``'s order."""
    n = chat.order
    kind = type(chat)
    acc = None
    for k in range(1, n + 1):
        a = substitute_power(chat, k)
        if a.is_zero():
            break
        term = _quotient(kernels(k), a, substitute_power(chat, 2 * k))
        acc = term if k == 1 else acc + term / k
    return kind.monomial(1, n) * exp0(acc.truncate(n))


def solve_chat(order, edge_marked=False, faces=Faces.ALL):
    """Vertex-rooted connected graphs, one coefficient per pass.

    ``[x^n]`` of the right-hand side only involves ``chat_1..chat_{n-1}``, so
    each pass fixes one more coefficient; a full residual check follows.
    """
    if order < 1:
        raise UsageError("the rooted series needs order >= 1")
    kernels = _kernels(order, edge_marked, faces)
    kind = _kind(edge_marked)
    chat = kind.monomial(1, 1)
    for n in range(2, order + 1):
        nxt = _rhs(chat.pad(n), kernels)
        chat = nxt.truncate(n)
    if _rhs(chat, kernels) != chat:
        raise ConsistencyError("rooted connected series does not satisfy its equation")
    return chat


def _plethysm(series):
    return lambda d: substitute_power(series, d)


def _connected(chat, edge_marked, faces):
    kernels = _kernels(chat.order, edge_marked, faces)
    chat2 = substitute_power(chat, 2)
    args = CisArgs(chat, chat2, _plethysm(chat), y=_y(edge_marked), faces=faces)
    zd = dissection_cis(args)
    zv = chat * _quotient(kernels(1), chat, chat2)
    return chat + zd - zv


def chat_series(order=DEFAULT_ORDER, edge_marked=False):
    """Vertex-rooted connected outerplanar graphs."""
    return build_tables(order, edge_marked).chat_xy if edge_marked \
        else build_tables(order).chat


def c_series(order=DEFAULT_ORDER, edge_marked=False):
    """Connected outerplanar graphs."""
    return build_tables(order, edge_marked).c_xy if edge_marked else build_tables(order).c


def g_series(order=DEFAULT_ORDER, edge_marked=False):
    """All outerplanar graphs, empty graph included."""
    return build_tables(order, edge_marked).g_xy if edge_marked else build_tables(order).g


@lru_cache(maxsize=16)
def build_tables(order=DEFAULT_ORDER, edge_marked=False, faces=Faces.ALL):
    """Exact tables; with ``edge_marked`` the plain tables are the ``y = 1`` image."""
    if order < 1:
        raise UsageError("tables need order >= 1")
    if edge_marked and faces is not Faces.ALL:
        raise UsageError("edge-marked tables cover only the general family")
    if edge_marked:
        d_xy = dissection_cis(CisArgs.monomials(order, edge_marked=True))
        chat_xy = solve_chat(order, True)
        c_xy = _connected(chat_xy, True, faces)
        g_xy = multiset_exp(c_xy)
        for s in (d_xy, chat_xy, c_xy, g_xy):
            s.check_degree_cap()
        return CensusTables(order, d_xy.eval_y1(), chat_xy.eval_y1(), c_xy.eval_y1(),
                            g_xy.eval_y1(), d_xy, chat_xy, c_xy, g_xy)
    d = dissection_cis(CisArgs.monomials(order, faces=faces))
    chat = solve_chat(order, False, faces)
    c = _connected(chat, False, faces)
    g = multiset_exp(c)
    tables = CensusTables(order, d, chat, c, g)
    _check_counts(tables)
    return tables


def _check_counts(t):
    for name in ("d", "chat", "c", "g"):
        s = getattr(t, name)
        for n, v in enumerate(s.coeffs):
            if v.denominator != 1 or v < 0:
                raise ConsistencyError(f"{name}[{n}] = {v} is not a count")
    for n in range(1, t.trunc + 1):
        if not t.c[n] <= t.g[n]:
            raise ConsistencyError(f"connected count exceeds total at n={n}")


def counts(series):
    """Coefficients as Python integers (the series must hold counts)."""
    out = []
    for v in series.coeffs:
        if v.denominator != 1:
            raise ConsistencyError(f"non-integral coefficient {v}")
        out.append(int(v))
    return out


def edge_counts(series):
    """``rows[n][m]`` = number of structures with ``n`` vertices and ``m`` edges."""
    return [[int(v) for v in p.coeffs] for p in series.coeffs]


def expected_components_exact(n, tables=None):
    """Mean number of components of a uniform unlabelled outerplanar graph on ``n`` vertices."""
    t = tables or build_tables(max(n, 1))
    if n < 0 or n > t.trunc:
        raise UsageError(f"n={n} outside the table range 0..{t.trunc}")
    acc = t.c
    for k in range(2, t.trunc + 1):
        acc = acc + substitute_power(t.c, k)
    return (t.g * acc)[n] / t.g[n]


def components_distribution_exact(family, n, tables=None):
    """Counts of ``n``-vertex outerplanar graphs by number of components in ``family``.

    ``family`` is the counting series of a class of connected outerplanar
    graphs (termwise at most the connected series).  Uses
    ``G(x) exp(sum_k (u^k - 1)/k A(x^k))`` with ``u`` carried as the edge
    variable of an :class:`EdgeSeries`.
    """
    t = tables or build_tables(max(n, 1))
    if n < 0 or n > t.trunc:
        raise UsageError(f"n={n} outside the table range 0..{t.trunc}")
    if family.order < n:
        raise UsageError("family series is shorter than n")
    if family[0] != 0:
        raise SeriesDomainError("family must have constant term 0")
    for k in range(1, n + 1):
        if family[k] > t.c[k] or family[k] < 0:
            raise UsageError(f"family exceeds the connected counts at n={k}")
    a = family.truncate(n)
    marked = EdgeSeries.from_rows([YPoly([0, v]) for v in a.coeffs])
    plain = EdgeSeries.from_rows([YPoly([v]) for v in a.coeffs])
    acc = None
    for k in range(1, n + 1):
        term = (substitute_power(marked, k) - substitute_power(plain, k)) / k
        acc = term if acc is None else acc + term
    g = EdgeSeries.from_rows([YPoly([v]) for v in t.g.truncate(n).coeffs])
    row = (g * exp0(acc))[n]
    out = [int(row[k]) for k in range(n + 1)]
    if sum(out) != t.g[n]:
        raise ConsistencyError("component distribution does not sum to the total count")
    return out


def bipartite_dissection_series(order=DEFAULT_ORDER):
    """Dissections all of whose inner faces have an even number of sides."""
    if order < 2:
        raise UsageError("bipartite dissections need order >= 2")
    return dissection_cis(CisArgs.monomials(order, faces=Faces.EVEN))
