"""Core immutable graph types and their validity predicates.

Vertices are ``0..v-1``; colors are ``1..n``.  An ordered structure always
uses the vertex index order as its linear order, so two ordered structures
are isomorphic exactly when they are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidColoring,
    InvalidInput,
    LoopEdge,
    MissingColoring,
    NotOrdered,
    VertexOutOfRange,
)

__all__ = [
    "Graph",
    "OrderedColoredGraph",
    "ColoringOfCopies",
    "make_graph",
    "is_proper_coloring",
    "is_monotone",
    "contains_clique",
    "complete_graph",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_multipartite",
    "disjoint_union",
]


def _normalize_edges(vertex_count, edge_list):
    if vertex_count < 0:
        raise InvalidInput(f"vertex_count must be nonnegative, got {vertex_count}")
    seen = set()
    for pair in edge_list:
        a, b = (int(x) for x in pair)
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        for x in (a, b):
            if not 0 <= x < vertex_count:
                raise VertexOutOfRange(f"vertex {x} not in 0..{vertex_count - 1}")
        seen.add((a, b) if a < b else (b, a))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """Finite simple loopless graph on ``0..vertex_count-1``."""

    vertex_count: int
    edges: tuple = ()
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = _normalize_edges(self.vertex_count, self.edges)
        object.__setattr__(self, "edges", edges)
        masks = [0] * self.vertex_count
        for a, b in edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        object.__setattr__(self, "adj", tuple(masks))

    def __len__(self):
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self.adj[v]
        return [u for u in range(self.vertex_count) if m >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def adj_array(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64)

    def edge_bits(self) -> str:
        """Upper triangle in column-major order (the graph6 bit order)."""
        v = self.vertex_count
        return "".join(
            "1" if self.adj[i] >> j & 1 else "0" for j in range(1, v) for i in range(j)
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename vertex ``u`` to ``perm[u]``."""
        return Graph(self.vertex_count, tuple((perm[a], perm[b]) for a, b in self.edges))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        pos = {u: i for i, u in enumerate(vertices)}
        edges = [
            (pos[a], pos[b])
            for a, b in combinations(vertices, 2)
            if self.adj[a] >> b & 1
        ]
        return Graph(len(vertices), tuple(edges))


@dataclass(frozen=True)
class OrderedColoredGraph:
    """A graph with a color universe ``[n]``, optional coloring and order flag.

    Covers ordered graphs (no coloring), members of the class of ordered
    properly colored graphs, and monotone members of that class.
    """

    graph: Graph
    n: int = 1
    coloring: tuple | None = None
    ordered: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput(f"color universe size must be positive, got {self.n}")
        if self.coloring is not None:
            col = tuple(int(c) for c in self.coloring)
            if len(col) != self.graph.vertex_count:
                raise InvalidColoring(
                    f"coloring has {len(col)} entries for {self.graph.vertex_count} vertices"
                )
            bad = [c for c in col if not 1 <= c <= self.n]
            if bad:
                raise InvalidColoring(f"color {bad[0]} outside 1..{self.n}")
            object.__setattr__(self, "coloring", col)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def with_coloring(self, coloring, n: int | None = None) -> "OrderedColoredGraph":
        return OrderedColoredGraph(self.graph, self.n if n is None else n, tuple(coloring), self.ordered)

    def reduct(self) -> "OrderedColoredGraph":
        """Forget the coloring."""
        return OrderedColoredGraph(self.graph, self.n, None, self.ordered)

    def induced(self, vertices: Sequence[int]) -> "OrderedColoredGraph":
        """Substructure on ``vertices``, renamed by position in the sequence."""
        col = None if self.coloring is None else tuple(self.coloring[u] for u in vertices)
        return OrderedColoredGraph(self.graph.induced(vertices), self.n, col, self.ordered)

    def reorder(self, order: Sequence[int]) -> "OrderedColoredGraph":
        """Same structure with the linear order ``order[0] < order[1] < ...``."""
        return self.induced(order)

    def key(self) -> tuple:
        """Sort key; also the ordered-isomorphism invariant."""
        return (self.vertex_count, self.graph.edge_bits(), self.coloring or ())


@dataclass(frozen=True)
class ColoringOfCopies:
    """A ``k``-coloring of an enumerated copy list (colors are ``1..k``)."""

    colors: tuple
    k: int
    copies: tuple = ()

    def __post_init__(self):
        if self.k < 1:
            raise InvalidInput("k must be positive")
        if any(not 1 <= c <= self.k for c in self.colors):
            raise InvalidColoring(f"copy colors must lie in 1..{self.k}")
        if self.copies and len(self.copies) != len(self.colors):
            raise InvalidInput("coloring is not total over the copy list")

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, i):
        return self.colors[i]

    def as_table(self) -> list[tuple]:
        return [(i, tuple(self.copies[i]) if self.copies else None, c) for i, c in enumerate(self.colors)]


def make_graph(vertex_count: int, edge_list: Iterable = ()) -> Graph:
    """Build a :class:`Graph`, normalizing and deduplicating the edges."""
    return Graph(int(vertex_count), tuple(tuple(e) for e in edge_list))


def _require_coloring(g: OrderedColoredGraph):
    if g.coloring is None:
        raise MissingColoring("structure has no coloring")


def is_proper_coloring(g: OrderedColoredGraph) -> bool:
    _require_coloring(g)
    col = g.coloring
    return all(col[a] != col[b] for a, b in g.graph.edges)


def is_monotone(g: OrderedColoredGraph) -> bool:
    if not g.ordered:
        raise NotOrdered("monotonicity needs a linear order")
    _require_coloring(g)
    col = g.coloring
    return all(col[i] <= col[i + 1] for i in range(len(col) - 1))


def contains_clique(g: Graph, m: int) -> bool:
    if m < 1:
        raise InvalidInput("clique size must be at least 1")
    if m > g.vertex_count:
        return False
    adj = g.adj

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand:
            if cand.bit_count() < need:
                return False
            u = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if grow(cand & adj[u], need - 1):
                return True
        return False

    return grow((1 << g.vertex_count) - 1, m)


def complete_graph(m: int) -> Graph:
    return Graph(m, tuple(combinations(range(m), 2)))


def empty_graph(m: int) -> Graph:
    return Graph(m, ())


def path_graph(m: int) -> Graph:
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise InvalidInput("a cycle needs at least 3 vertices")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Parts are consecutive index blocks."""
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    edges = [(a, b) for a, b in combinations(range(len(part)), 2) if part[a] != part[b]]
    return Graph(len(part), tuple(edges))


def disjoint_union(parts: Sequence[OrderedColoredGraph], n: int) -> OrderedColoredGraph:
    """Concatenate ordered structures; the order places ``parts[0]`` first."""
    edges, colors, offset = [], [], 0
    for p in parts:
        edges.extend((a + offset, b + offset) for a, b in p.graph.edges)
        if p.coloring is None:
            raise MissingColoring("disjoint union expects colored parts")
        colors.extend(p.coloring)
        offset += p.vertex_count
    return OrderedColoredGraph(Graph(offset, tuple(edges)), n, tuple(colors), True)
