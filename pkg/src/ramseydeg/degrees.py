"""Extension catalogs and the three Ramsey-degree counts.

* ``sigma(x, n)``: non-isomorphic proper ``n``-colorings of an ordered graph.
* ``tau(x, n)``: non-isomorphic (order, nondecreasing proper coloring)
  enrichments of an unordered graph.
* ``aut_degree(x)``: ``|x|! / |Aut(x)|``, the degree among K_n-free graphs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from itertools import permutations, product

from . import kernels
from .canonical import automorphism_group, automorphism_order
from .classes import ClassSpec
from .errors import InvalidInput, SizeCapExceeded
from .structures import Graph, OrderedColoredGraph, complete_multipartite

SIGMA_CAP = 12
CATALOG_CAP = 10
MONOTONE_CAP = 8


@dataclass(frozen=True)
class ExtensionCatalog:
    """Pairwise non-isomorphic extensions, indexed ``1..len`` in key order."""

    base: object
    target: ClassSpec
    items: tuple
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {it.key(): i + 1 for i, it in enumerate(self.items)})

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        """1-based access."""
        return self.items[i - 1]

    def index_of(self, ext: OrderedColoredGraph) -> int | None:
        return self._index.get(ext.key())


def as_ordered(x) -> OrderedColoredGraph:
    if isinstance(x, Graph):
        return OrderedColoredGraph(x)
    if not x.ordered:
        return OrderedColoredGraph(x.graph, x.n, None, True)
    return x


def as_graph(x) -> Graph:
    return x.graph if isinstance(x, OrderedColoredGraph) else x


def _warn_outside(x, n):
    warnings.warn(f"graph on {as_graph(x).vertex_count} vertices is not {n}-colorable; degree reported as 0")


def enumerate_extensions_ordered(x, n: int, cap: int = CATALOG_CAP) -> ExtensionCatalog:
    """Every proper ``n``-coloring of the ordered graph ``x``.

    Order-preserving bijections of a chain are trivial, so distinct colorings
    are never isomorphic and no deduplication is needed.
    """
    g = as_ordered(x).graph
    if g.vertex_count > cap:
        raise SizeCapExceeded("ordered extension catalog", g.vertex_count, cap)
    rows = kernels.proper_colorings(g.adj_array(), g.vertex_count, n)
    items = tuple(OrderedColoredGraph(g, n, tuple(int(c) for c in r)) for r in rows)
    if not items:
        _warn_outside(x, n)
    return ExtensionCatalog(as_ordered(x), ClassSpec("colored_ordered", n), items)


def sigma(x, n: int, cap: int = SIGMA_CAP) -> int:
    g = as_graph(x)
    if g.vertex_count > cap:
        raise SizeCapExceeded("sigma", g.vertex_count, cap)
    count = kernels.count_proper_colorings(g.adj_array(), g.vertex_count, n)
    if count == 0:
        _warn_outside(x, n)
    return count


def _class_orders(classes):
    """All linear orders listing the color classes in color order."""
    for choice in product(*(permutations(c) for c in classes)):
        yield [u for block in choice for u in block]


def monotone_pairs(g: Graph, n: int):
    """Raw (order, coloring) generation: yields ``(order, coloring)`` pairs."""
    for row in kernels.proper_colorings(g.adj_array(), g.vertex_count, n):
        col = tuple(int(c) for c in row)
        classes = [[u for u in range(g.vertex_count) if col[u] == c] for c in range(1, n + 1)]
        for order in _class_orders(classes):
            yield order, col


def enumerate_extensions_monotone(x, n: int, cap: int = MONOTONE_CAP) -> ExtensionCatalog:
    """Monotone enrichments of ``x`` up to isomorphism, by raw generation."""
    g = as_graph(x)
    if g.vertex_count > cap:
        raise SizeCapExceeded("monotone extension catalog", g.vertex_count, cap)
    seen = {}
    for order, col in monotone_pairs(g, n):
        ext = OrderedColoredGraph(g.induced(order), n, tuple(col[u] for u in order))
        seen.setdefault(ext.key(), ext)
    if not seen:
        _warn_outside(x, n)
    items = tuple(seen[k] for k in sorted(seen))
    return ExtensionCatalog(g, ClassSpec("monotone_colored_ordered", n), items)


def tau(x, n: int, cap: int = MONOTONE_CAP) -> int:
    return len(enumerate_extensions_monotone(x, n, cap))


def tau_burnside(x, n: int, cap: int = MONOTONE_CAP) -> int:
    """Orbit count of labeled monotone pairs under ``Aut(x)`` by averaging fixed points."""
    g = as_graph(x)
    if g.vertex_count > cap:
        raise SizeCapExceeded("tau (orbit counting)", g.vertex_count, cap)
    group = automorphism_group(g, list_cap=cap)
    # pairs sharing a coloring differ only in the order inside each class
    labeled = 0
    for row in kernels.proper_colorings(g.adj_array(), g.vertex_count, n):
        sizes = [int((row == c).sum()) for c in range(1, n + 1)]
        labeled += math.prod(math.factorial(s) for s in sizes)
    total = 0
    for perm in group.elements:
        total += _fixed_pairs(perm, labeled)
    if total % group.order:
        raise ArithmeticError("orbit count is not integral")
    return total // group.order


def _fixed_pairs(perm, labeled: int) -> int:
    # a permutation preserving a finite linear order is the identity, so only
    # the identity fixes any (order, coloring) pair
    if any(perm[u] != u for u in range(len(perm))):
        return 0
    return labeled


def aut_degree(x, cap: int = 10) -> int:
    g = as_graph(x)
    return math.factorial(g.vertex_count) // automorphism_order(g, cap)


@dataclass(frozen=True)
class ElementaryRow:
    n: int
    m: int
    l: int
    sigma_closed: int
    sigma_enum: int
    tau_closed: int
    tau_enum: int | None

    @property
    def family(self) -> str:
        return f"K{self.m}" if self.l == 1 else f"K({','.join([str(self.l)] * self.m)})"

    @property
    def sigma_flag(self) -> str:
        return "ok" if self.sigma_closed == self.sigma_enum else "DISCREPANCY"

    @property
    def tau_flag(self) -> str:
        if self.tau_enum is None:
            return "n/a"
        return "ok" if self.tau_closed == self.tau_enum else "DISCREPANCY"

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "sigma_closed": self.sigma_closed,
            "sigma_enum": self.sigma_enum,
            "sigma_flag": self.sigma_flag,
            "tau_closed": self.tau_closed,
            "tau_enum": self.tau_enum,
            "tau_flag": self.tau_flag,
        }


def elementary_report(n: int, max_m: int, max_l: int) -> list[ElementaryRow]:
    """Closed forms for ``K_m`` and complete ``m``-partite graphs next to enumeration.

    Closed forms: ``C(n,m)*(l*m)!`` for sigma and ``C(n,m)`` for tau.  Rows
    where they disagree with enumeration are flagged, never reconciled.
    """
    if n < 1 or max_m < 1 or max_l < 1:
        raise InvalidInput("n, max_m and max_l must be positive")
    rows = []
    for m in range(1, min(max_m, n) + 1):
        for l in range(1, max_l + 1):
            g = complete_multipartite([l] * m)
            if g.vertex_count > SIGMA_CAP:
                continue
            rows.append(
                ElementaryRow(
                    n=n,
                    m=m,
                    l=l,
                    sigma_closed=math.comb(n, m) * math.factorial(l * m),
                    sigma_enum=sigma(g, n),
                    tau_closed=math.comb(n, m),
                    tau_enum=tau(g, n) if g.vertex_count <= MONOTONE_CAP else None,
                )
            )
    return rows


REPORT_COLUMNS = (
    "family", "n", "m", "l",
    "sigma_closed", "sigma_enum", "sigma_flag",
    "tau_closed", "tau_enum", "tau_flag",
)


def report_tsv(rows: list[ElementaryRow]) -> str:
    lines = ["\t".join(REPORT_COLUMNS)]
    for r in rows:
        d = r.as_dict()
        lines.append("\t".join("n/a" if d[c] is None else str(d[c]) for c in REPORT_COLUMNS))
    return "\n".join(lines) + "\n"
