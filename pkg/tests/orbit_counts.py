"""Orbit counts on small dissections, computed from explicit automorphism groups."""

import itertools
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from outerplanar.oracle import is_two_connected_or_edge, outerplanar_classes


def _outer_cycle(g, n):
    if n == 2:
        return (0, 1)
    for p in itertools.permutations(range(1, n)):
        cyc = (0,) + p
        if p[0] < p[-1] and all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
            return cyc
    raise AssertionError("dissection without a Hamiltonian cycle")


def _orbits(items, act, group):
    seen, k = set(), 0
    for it in items:
        if it not in seen:
            k += 1
            seen.update(act(a, it) for a in group)
    return k


def _edge(a, e):
    return frozenset(a[v] for v in e)


@lru_cache(maxsize=None)
def dissection_orbits(n_max):
    """Per-size totals of vertex, outer-edge, chord and face orbits over all dissections."""
    out = {k: [0] * (n_max + 1) for k in ("vertex", "oriented", "reflective", "inner", "face")}
    for n in range(2, n_max + 1):
        for sg in outerplanar_classes(n):
            if not is_two_connected_or_edge(sg):
                continue
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(sg.edges())
            autos = list(GraphMatcher(g, g).isomorphisms_iter())
            cyc = _outer_cycle(g, n)
            outer = {frozenset((cyc[i], cyc[(i + 1) % n])) for i in range(n)} if n > 2 \
                else {frozenset(cyc)}
            directed = [t for e in outer for t in (tuple(e), tuple(e)[::-1])]
            reversible = [(a, b) for a, b in directed
                          if any(p[a] == b and p[b] == a for p in autos)]
            chords = [frozenset(e) for e in g.edges() if frozenset(e) not in outer]
            faces = [frozenset(c) for c in nx.chordless_cycles(g)] if n > 2 else []
            out["vertex"][n] += _orbits(range(n), lambda a, v: a[v], autos)
            out["oriented"][n] += _orbits(directed, lambda a, e: (a[e[0]], a[e[1]]), autos)
            out["reflective"][n] += _orbits(reversible, lambda a, e: (a[e[0]], a[e[1]]), autos)
            out["inner"][n] += _orbits(chords, _edge, autos)
            out["face"][n] += _orbits(faces, _edge, autos)
    return out
