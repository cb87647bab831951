"""Class membership and enumeration up to isomorphism."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .canonical import canonical_graph, certificate
from .errors import InvalidInput, SizeCapExceeded
from .structures import (
    Graph,
    OrderedColoredGraph,
    contains_clique,
    is_monotone,
    is_proper_coloring,
)

KINDS = (
    "n_colorable",
    "n_colorable_ordered",
    "n_chromatic",
    "n_chromatic_ordered",
    "kn_free",
    "colored_ordered",
    "monotone_colored_ordered",
)
UNORDERED_KINDS = ("n_colorable", "n_chromatic", "kn_free")
ORDERED_KINDS = ("n_colorable_ordered", "n_chromatic_ordered")
COLORED_KINDS = ("colored_ordered", "monotone_colored_ordered")

CHROMATIC_CAP = 12
ENUM_CAPS = {"unordered": 7, "ordered": 6, "colored": 5}


@dataclass(frozen=True)
class ClassSpec:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown class kind {self.kind!r}")
        if self.n < 1:
            raise InvalidInput("n must be positive")

    @property
    def family(self) -> str:
        if self.kind in UNORDERED_KINDS:
            return "unordered"
        if self.kind in ORDERED_KINDS:
            return "ordered"
        return "colored"


def _clique_number(adj: tuple, v: int) -> int:
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            u = cand.bit_length() - 1
            cand &= ~(1 << u)
            grow(cand & adj[u], size + 1)

    grow((1 << v) - 1, 0)
    return best


def _dsatur(adj: tuple, v: int) -> list[int]:
    col = [0] * v
    for _ in range(v):
        best, key = -1, None
        for u in range(v):
            if col[u]:
                continue
            sat = len({col[w] for w in range(v) if adj[u] >> w & 1 and col[w]})
            k = (sat, adj[u].bit_count())
            if key is None or k > key:
                best, key = u, k
        used = {col[w] for w in range(v) if adj[best] >> w & 1}
        c = 1
        while c in used:
            c += 1
        col[best] = c
    return col


def _colorable(adj: tuple, v: int, k: int) -> bool:
    # highest-degree-first order makes conflicts surface early
    order = sorted(range(v), key=lambda u: -adj[u].bit_count())
    col = [0] * v

    def place(i: int, used: int) -> bool:
        if i == v:
            return True
        u = order[i]
        forbidden = {col[w] for w in range(v) if adj[u] >> w & 1 and col[w]}
        # a fresh color is interchangeable with any other unused one
        for c in range(1, min(k, used + 1) + 1):
            if c not in forbidden:
                col[u] = c
                if place(i + 1, max(used, c)):
                    return True
                col[u] = 0
        return False

    return place(0, 0)


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number; 0 for the empty graph."""
    if isinstance(g, OrderedColoredGraph):
        g = g.graph
    v = g.vertex_count
    if v > cap:
        raise SizeCapExceeded("chromatic number", v, cap)
    if v == 0:
        return 0
    lo = _clique_number(g.adj, v)
    hi = max(_dsatur(g.adj, v))
    for k in range(lo, hi):
        if _colorable(g.adj, v, k):
            return k
    return hi


def is_member(g, spec: ClassSpec) -> bool:
    if spec.kind in COLORED_KINDS:
        if not isinstance(g, OrderedColoredGraph) or g.coloring is None or not g.ordered:
            return False
        if g.n != spec.n or not is_proper_coloring(g):
            return False
        return spec.kind == "colored_ordered" or is_monotone(g)
    graph = g.graph if isinstance(g, OrderedColoredGraph) else g
    if spec.kind == "kn_free":
        return not contains_clique(graph, spec.n)
    chi = chromatic_number(graph)
    if spec.kind.startswith("n_colorable"):
        return chi <= spec.n
    return chi == spec.n


def _extend_all(reps: list[Graph], jobs: int) -> list[Graph]:
    """Every graph on one more vertex, one per isomorphism class."""
    cands = []
    for g in reps:
        v = g.vertex_count
        for s in range(1 << v):
            cands.append(Graph(v + 1, g.edges + tuple((u, v) for u in range(v) if s >> u & 1)))
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as ex:
            keys = list(ex.map(certificate, cands, chunksize=256))
    else:
        keys = [certificate(c) for c in cands]
    seen = {}
    for key, c in zip(keys, cands):
        seen.setdefault(key, c)
    return [canonical_graph(seen[k]) for k in sorted(seen)]


def enumerate_graphs(max_vertices: int, jobs: int = 1) -> Iterator[Graph]:
    """One canonical graph per isomorphism class, by size then certificate.

    Every graph on ``v`` vertices arises from one on ``v-1`` vertices by adding
    a vertex with some neighborhood, so extending all representatives and
    deduplicating is exhaustive.
    """
    level = [Graph(0)]
    yield level[0]
    for _ in range(max_vertices):
        level = _extend_all(level, jobs)
        yield from level


def _labeled_graphs(v: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, v) for i in range(j)]
    m = len(pairs)
    for code in range(1 << m):
        yield Graph(v, tuple(p for b, p in enumerate(pairs) if code >> (m - 1 - b) & 1))


def enumerate_members(spec: ClassSpec, max_vertices: int, min_vertices: int = 0, jobs: int = 1):
    """Members with ``min_vertices..max_vertices`` vertices, one per class.

    Unordered kinds yield canonical :class:`Graph` objects; ordered kinds yield
    :class:`OrderedColoredGraph` objects (isomorphic only when equal).
    """
    cap = ENUM_CAPS[spec.family]
    if max_vertices > cap:
        raise SizeCapExceeded(f"enumeration of {spec.kind}", max_vertices, cap)
    if spec.family == "unordered":
        for g in enumerate_graphs(max_vertices, jobs):
            if g.vertex_count >= min_vertices and is_member(g, spec):
                yield g
        return
    for v in range(min_vertices, max_vertices + 1):
        for g in _labeled_graphs(v):
            if spec.family == "ordered":
                x = OrderedColoredGraph(g, spec.n)
                if is_member(x, spec):
                    yield x
                continue
            for row in kernels.proper_colorings(g.adj_array(), v, spec.n):
                x = OrderedColoredGraph(g, spec.n, tuple(int(c) for c in row))
                if spec.kind == "colored_ordered" or is_monotone(x):
                    yield x
