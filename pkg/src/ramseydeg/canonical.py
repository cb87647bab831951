"""Canonical forms, isomorphism tests and automorphism groups.

The canonical certificate of a graph is the lexicographically least
column-major upper-triangle bit string over all vertex relabelings.  The
search places vertices one position at a time; the next column of the string
depends only on which vertex comes next, so only vertices minimizing it are
branched on (an individualize-and-refine step), and twin vertices are
explored once.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import NotOrdered, SizeCapExceeded
from .structures import Graph, OrderedColoredGraph

CANON_CAP = 10
LIST_CAP = 8
# 11 vertices already use 55 of the 63 certificate bits
_HARD_CAP = 11


@dataclass(frozen=True)
class CanonicalForm:
    vertex_count: int
    relabeling: tuple  # relabeling[old] = new
    certificate: str

    def key(self) -> tuple:
        return (self.vertex_count, self.certificate)


@dataclass(frozen=True)
class AutGroup:
    order: int
    elements: tuple | None = None
    generators: tuple = ()

    def __len__(self):
        return self.order


def _check_cap(g: Graph, cap: int):
    cap = min(cap, _HARD_CAP)
    if g.vertex_count > cap:
        raise SizeCapExceeded("canonical labeling", g.vertex_count, cap)


@lru_cache(maxsize=1 << 16)
def _canon(g: Graph) -> tuple:
    v = g.vertex_count
    perm, cert = kernels.canonical_search(g.adj_array(), v)
    nbits = v * (v - 1) // 2
    bits = format(cert, f"0{nbits}b") if nbits else ""
    relabel = [0] * v
    for pos, u in enumerate(perm):
        relabel[int(u)] = pos
    return tuple(relabel), bits


def canonical_form(g: Graph, cap: int = CANON_CAP) -> CanonicalForm:
    _check_cap(g, cap)
    relabel, bits = _canon(g)
    return CanonicalForm(g.vertex_count, relabel, bits)


def certificate(g: Graph, cap: int = CANON_CAP) -> tuple:
    """Hashable isomorphism invariant ``(vertex_count, bits)``."""
    _check_cap(g, cap)
    return (g.vertex_count, _canon(g)[1])


def canonical_graph(g: Graph, cap: int = CANON_CAP) -> Graph:
    cf = canonical_form(g, cap)
    return g.relabel(cf.relabeling)


def are_isomorphic(a: Graph, b: Graph, cap: int = CANON_CAP) -> bool:
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        _check_cap(a, cap)
        _check_cap(b, cap)
        return False
    return certificate(a, cap) == certificate(b, cap)


def find_isomorphism(a: Graph, b: Graph, cap: int = CANON_CAP) -> tuple | None:
    """A map ``f`` with ``f[u]`` the image in ``b`` of vertex ``u`` of ``a``."""
    if not are_isomorphic(a, b, cap):
        return None
    ra = canonical_form(a, cap).relabeling
    rb = canonical_form(b, cap).relabeling
    inv_b = [0] * len(rb)
    for u, pos in enumerate(rb):
        inv_b[pos] = u
    return tuple(inv_b[ra[u]] for u in range(len(ra)))


def ordered_colored_isomorphic(a: OrderedColoredGraph, b: OrderedColoredGraph) -> bool:
    """Isomorphism of ordered structures: the only candidate map is the identity."""
    if not (a.ordered and b.ordered):
        raise NotOrdered("both structures must be ordered")
    if a.n != b.n:
        warnings.warn(f"structures over different color universes ({a.n} vs {b.n}) are not comparable")
        return False
    return a.graph == b.graph and a.coloring == b.coloring


def refine_colors(g: Graph) -> np.ndarray:
    """Stable color refinement starting from degrees.

    Colors are numbered by sorted signature, so they are isomorphism
    invariants and can prune automorphism search.
    """
    v = g.vertex_count
    nbrs = [g.neighbors(u) for u in range(v)]
    col = [len(nb) for nb in nbrs]
    ncls = len(set(col))
    while True:
        sig = [(col[u], tuple(sorted(col[w] for w in nbrs[u]))) for u in range(v)]
        table = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [table[s] for s in sig]
        if len(table) == ncls:
            return np.array(new, np.int64)
        col, ncls = new, len(table)


def is_automorphism(g: Graph, perm) -> bool:
    return set(g.relabel(perm).edges) == set(g.edges)


@lru_cache(maxsize=1 << 14)
def _aut_chain(g: Graph) -> tuple:
    v = g.vertex_count
    adj = g.adj_array()
    vcol = refine_colors(g)
    img0 = np.full(v, -1, np.int64)
    order = 1
    gens = []
    for b in range(v):
        orbit = 0
        for w in range(b, v):
            if vcol[w] != vcol[b]:
                continue
            img = img0.copy()
            img[b] = w
            cnt, out = kernels.automorphism_search(adj, v, vcol, img, 1, 1)
            if cnt:
                orbit += 1
                if w != b:
                    gens.append(tuple(int(x) for x in out[0]))
        order *= orbit
        img0[b] = b
    return order, tuple(gens)


def automorphism_order(g: Graph, cap: int = CANON_CAP) -> int:
    _check_cap(g, cap)
    return _aut_chain(g)[0]


def automorphism_group(g: Graph, cap: int = CANON_CAP, list_cap: int = LIST_CAP) -> AutGroup:
    """Order via a stabilizer chain; full element list when ``v <= list_cap``."""
    _check_cap(g, cap)
    order, gens = _aut_chain(g)
    elements = None
    if g.vertex_count <= list_cap:
        v = g.vertex_count
        cnt, out = kernels.automorphism_search(
            g.adj_array(), v, refine_colors(g), np.full(v, -1, np.int64), order + 1, order
        )
        assert cnt == order, (cnt, order)
        elements = tuple(tuple(int(x) for x in row) for row in out)
    return AutGroup(order, elements, gens)


def relabeling_count(g: Graph) -> int:
    """Distinct labeled graphs isomorphic to ``g`` (``v!/|Aut|``)."""
    return math.factorial(g.vertex_count) // automorphism_order(g)
