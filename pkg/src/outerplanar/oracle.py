"""Brute-force census of small unlabelled outerplanar graphs.

Independent of every generating-function formula: outerplanarity is decided
by searching for a K4 or K2,3 minor, isomorphism classes by a canonical
labelling (colour refinement, then every ordering of the colour cells).

Two enumeration strategies produce the same census:

* ``exhaustive``: scan every labelled graph on ``n`` vertices (``n <= 7``);
* ``extension``: outerplanarity is closed under vertex deletion, so every
  class on ``n`` vertices arises from a class on ``n - 1`` vertices plus one
  new vertex joined to some subset.  This reaches ``n = 8`` in seconds.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .errors import UsageError

log = logging.getLogger(__name__)

MAX_DEFAULT = 7
MAX_SLOW = 8


@dataclass(frozen=True)
class SmallGraph:
    """Simple graph on vertices ``0..n-1``; ``adj[v]`` is a neighbour bitmask."""

    n: int
    adj: tuple

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise UsageError("loops are not allowed")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def from_mask(cls, n, mask):
        """Bit ``k`` of ``mask`` is the ``k``-th pair of ``combinations(range(n), 2)``."""
        return cls.from_edges(n, [p for k, p in enumerate(_pairs(n)) if mask >> k & 1])

    def edges(self):
        return [(a, b) for a, b in _pairs(self.n) if self.adj[a] >> b & 1]

    @property
    def m(self):
        return sum(bin(a).count("1") for a in self.adj) // 2

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def delete_edge(self, a, b):
        adj = list(self.adj)
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
        return SmallGraph(self.n, tuple(adj))

    def delete_vertex(self, v):
        keep = [u for u in range(self.n) if u != v]
        return self.induced(keep)

    def induced(self, keep):
        index = {u: i for i, u in enumerate(keep)}
        return SmallGraph.from_edges(
            len(keep), [(index[a], index[b]) for a, b in self.edges() if a in index and b in index])

    def contract_edge(self, a, b):
        """Merge ``b`` into ``a`` (simple graph result)."""
        edges = set()
        for u, v in self.edges():
            u = a if u == b else u
            v = a if v == b else v
            if u != v:
                edges.add((min(u, v), max(u, v)))
        keep = [u for u in range(self.n) if u != b]
        index = {u: i for i, u in enumerate(keep)}
        return SmallGraph.from_edges(len(keep), [(index[u], index[v]) for u, v in edges])

    def add_vertex(self, neighbours):
        n = self.n
        adj = list(self.adj) + [0]
        for u in neighbours:
            adj[u] |= 1 << n
            adj[n] |= 1 << u
        return SmallGraph(n + 1, tuple(adj))

    def relabel(self, perm):
        """Vertex ``v`` becomes ``perm[v]``."""
        return SmallGraph.from_edges(self.n, [(perm[a], perm[b]) for a, b in self.edges()])


@lru_cache(maxsize=None)
def _pairs(n):
    return tuple(combinations(range(n), 2))


# -- canonical labelling -------------------------------------------------------

def _refine(g):
    """Stable colouring by iterated (colour, sorted neighbour colours)."""
    colours = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in range(g.n) if g.adj[v] >> u & 1)))
                for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def _code(g, order):
    """Upper-triangular adjacency bits of ``g`` listed in vertex order ``order``."""
    code = 0
    n = g.n
    for i in range(n):
        row = g.adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _orderings(g):
    colours = _refine(g)
    cells = [[v for v in range(g.n) if colours[v] == c] for c in sorted(set(colours))]
    for choice in product(*(permutations(c) for c in cells)):
        yield [v for cell in choice for v in cell]


def canonical_form(g):
    """Isomorphism invariant ``(n, code)``; equal iff the graphs are isomorphic."""
    return (g.n, max(_code(g, o) for o in _orderings(g)))


def canonical_graph(g):
    return canonical_graph_from_key(canonical_form(g))


def vertex_orbits(g):
    """Number of orbits of the automorphism group on the vertices."""
    colours = _refine(g)
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    base = list(range(g.n))
    ref = _code(g, base)
    cells = [[v for v in range(g.n) if colours[v] == c] for c in sorted(set(colours))]
    positions = [v for cell in cells for v in cell]
    for order in _orderings(g):
        # automorphism: positions[k] -> order[k]
        perm = [0] * g.n
        for k in range(g.n):
            perm[positions[k]] = order[k]
        if _code(g, perm) == ref:
            for v in range(g.n):
                a, b = find(v), find(perm[v])
                if a != b:
                    parent[a] = b
    return len({find(v) for v in range(g.n)})


# -- structural predicates ---------------------------------------------------------

def components(g):
    seen, out = 0, []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp, frontier = 1 << s, 1 << s
        while frontier:
            nxt = 0
            for v in range(g.n):
                if frontier >> v & 1:
                    nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g):
    return g.n >= 1 and len(components(g)) == 1


def is_two_connected_or_edge(g):
    """Two-connected, or the single edge (the smallest dissection)."""
    if g.n == 2:
        return g.m == 1
    if g.n < 3 or not is_connected(g):
        return False
    return all(is_connected(g.delete_vertex(v)) for v in range(g.n))


def is_bipartite(g):
    colour = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in range(g.n):
                if g.adj[v] >> u & 1:
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        stack.append(u)
                    elif colour[u] == colour[v]:
                        return False
    return True


def _contains_forbidden_subgraph(g):
    n, adj = g.n, g.adj
    for a, b in combinations(range(n), 2):
        if bin(adj[a] & adj[b]).count("1") >= 3:
            return True  # K2,3 on {a, b} and three common neighbours
    for quad in combinations(range(n), 4):
        if all(adj[u] >> v & 1 for u, v in combinations(quad, 2)):
            return True
    return False


def _strip(g):
    """Drop vertices of degree <= 1; neither forbidden minor can use them."""
    while True:
        low = [v for v in range(g.n) if g.degree(v) <= 1]
        if not low:
            return g
        g = g.induced([v for v in range(g.n) if g.degree(v) > 1])


@lru_cache(maxsize=None)
def _has_minor_canonical(key):
    g = canonical_graph_from_key(key)
    if g.n < 4 or g.m < 6:
        return False
    if _contains_forbidden_subgraph(g):
        return True
    for a, b in g.edges():
        if has_forbidden_minor(g.delete_edge(a, b)):
            return True
        if has_forbidden_minor(g.contract_edge(a, b)):
            return True
    return False


def canonical_graph_from_key(key):
    n, code = key
    edges, bit = [], n * (n - 1) // 2 - 1
    for i in range(n):
        for j in range(i + 1, n):
            if code >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return SmallGraph.from_edges(n, edges)


def has_forbidden_minor(g):
    """True iff ``g`` has a K4 or K2,3 minor (delete/contract search, memoised)."""
    g = _strip(g)
    if g.n < 4 or g.m < 6:
        return False
    return _has_minor_canonical(canonical_form(g))


def is_outerplanar(g):
    """No K4 minor and no K2,3 minor."""
    if g.n > 10:
        raise UsageError("the minor search is limited to n <= 10")
    return not has_forbidden_minor(g)


# -- census ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphCensus:
    """Counts of isomorphism classes keyed by ``(m, connected, two_connected, bipartite)``."""

    n: int
    entries: dict

    def total(self, connected=None, two_connected=None, bipartite=None, m=None):
        out = 0
        for (em, c, t, b), v in self.entries.items():
            if ((connected is None or c == connected) and (two_connected is None or t == two_connected)
                    and (bipartite is None or b == bipartite) and (m is None or em == m)):
                out += v
        return out

    def rows(self):
        """``(n, m, connected, two_connected, bipartite, count)`` in a fixed order."""
        return [(self.n,) + key + (v,) for key, v in sorted(self.entries.items())]


def _check_limit(n, allow_slow):
    if n < 0:
        raise UsageError("n must be non-negative")
    limit = MAX_SLOW if allow_slow else MAX_DEFAULT
    if n > limit:
        raise UsageError(f"oracle census is limited to n <= {limit}"
                         + ("" if allow_slow else " (n = 8 needs allow_slow)"))


def _scan(args):
    n, lo, hi = args
    found = set()
    cap = 2 * n - 3 if n >= 2 else 0
    for mask in range(lo, hi):
        if bin(mask).count("1") > cap:
            continue  # an outerplanar graph has at most 2n - 3 edges
        g = SmallGraph.from_mask(n, mask)
        if is_outerplanar(g):
            found.add(canonical_form(g)[1])
    return found


def _classes_exhaustive(n, workers):
    total = 1 << (n * (n - 1) // 2)
    chunks = max(1, min(64, total // 256))
    bounds = [(n, total * i // chunks, total * (i + 1) // chunks) for i in range(chunks)]
    found = set()
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan, bounds):
                found |= part
    else:
        for b in bounds:
            found |= _scan(b)
    return sorted(found)


@lru_cache(maxsize=None)
def _classes_extension(n):
    if n <= 1:
        return (0,) if n == 1 else ()
    found = set()
    for code in _classes_extension(n - 1):
        g = canonical_graph_from_key((n - 1, code))
        for k in range(n):
            for nb in combinations(range(n - 1), k):
                h = g.add_vertex(nb)
                if is_outerplanar(h):
                    found.add(canonical_form(h)[1])
    return tuple(sorted(found))


def outerplanar_classes(n, method=None, workers=None, allow_slow=False):
    """Canonical representatives of the unlabelled outerplanar graphs on ``n`` vertices."""
    _check_limit(n, allow_slow)
    if method is None:
        method = "exhaustive" if n <= 6 else "extension"
    if method == "exhaustive":
        if n > 7:
            raise UsageError("the exhaustive scan is limited to n <= 7")
        if n == 0:
            codes = [0]
        else:
            codes = _classes_exhaustive(n, workers)
    elif method == "extension":
        codes = [0] if n == 0 else list(_classes_extension(n))
    else:
        raise UsageError(f"unknown census method {method!r}")
    if n == 8:
        log.warning("n = 8 census: expect a run time of seconds to minutes")
    return [canonical_graph_from_key((n, c)) for c in codes]


def _classify(g):
    return (g.m, is_connected(g), is_two_connected_or_edge(g), is_bipartite(g))


def census(n, method=None, workers=None, allow_slow=False):
    """Class counts by edge count, connectivity, two-connectivity and bipartiteness."""
    counter = Counter(_classify(g) for g in outerplanar_classes(n, method, workers, allow_slow))
    return GraphCensus(n, dict(counter))


def rooted_census(n, method=None, allow_slow=False):
    """Like :func:`census` but each class weighted by its number of vertex orbits."""
    counter = Counter()
    for g in outerplanar_classes(n, method, allow_slow=allow_slow):
        counter[_classify(g)] += vertex_orbits(g)
    return GraphCensus(n, dict(counter))


def component_counts(n, predicate, method=None, allow_slow=False):
    """``out[k]`` = classes on ``n`` vertices with exactly ``k`` components satisfying ``predicate``."""
    out = [0] * (n + 1)
    for g in outerplanar_classes(n, method, allow_slow=allow_slow):
        k = sum(1 for comp in components(g) if predicate(g.induced(comp)))
        out[k] += 1
    return out


def census_csv_rows(c):
    header = ("n", "m", "connected", "two_connected", "bipartite", "count")
    return [header] + [tuple(str(int(v)) if isinstance(v, bool) else str(v) for v in row)
                       for row in c.rows()]
