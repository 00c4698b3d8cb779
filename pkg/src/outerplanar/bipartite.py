"""Bipartite outerplanar graphs.

An outerplanar graph is bipartite exactly when every inner face of each block
is a polygon with an even number of sides, so the same pipeline runs with
the even-face dissection construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import DEFAULT_ORDER, bipartite_dissection_series, build_tables
from .dissections import Faces
from .series import PowerSeries


@dataclass(frozen=True)
class BipartiteTables:
    trunc: int
    d_b: PowerSeries
    chat_b: PowerSeries
    c_b: PowerSeries
    g_b: PowerSeries


def bipartite_tables(order=DEFAULT_ORDER):
    """Exact bipartite dissections, rooted connected, connected and general series."""
    t = build_tables(order, faces=Faces.EVEN)
    return BipartiteTables(order, t.d, t.chat, t.c, t.g)


__all__ = ["BipartiteTables", "bipartite_tables", "bipartite_dissection_series"]
