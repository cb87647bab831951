"""Partition-calculus oracle and executable versions of the lower-bound gadgets.

Structures come in three kinds, and all arguments of one query share a kind:

* ``plain``: :class:`Graph` (copies are vertex sets inducing the pattern),
* ``ordered``: uncolored ordered :class:`OrderedColoredGraph`,
* ``colored``: colored ordered :class:`OrderedColoredGraph`.

For the two ordered kinds a copy is a vertex set whose increasing
enumeration is an isomorphism onto the pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Sequence

import numpy as np

from . import kernels
from .canonical import automorphism_order, certificate, find_isomorphism
from .classes import ClassSpec, enumerate_members, is_member
from .degrees import (
    as_graph,
    as_ordered,
    enumerate_extensions_monotone,
    enumerate_extensions_ordered,
    monotone_pairs,
)
from .errors import (
    InvalidExtension,
    InvalidInput,
    MissingColoring,
    NotNColorable,
    NotOrdered,
    SizeCapExceeded,
)
from .structures import (
    ColoringOfCopies,
    Graph,
    OrderedColoredGraph,
    complete_graph,
    disjoint_union,
    is_monotone,
    is_proper_coloring,
)

PATTERN_CAP = 8
HOST_CAP = 128
DEFAULT_BUDGET = 1 << 26


def kind_of(s) -> str:
    if isinstance(s, Graph):
        return "plain"
    if not s.ordered:
        return "plain"
    return "ordered" if s.coloring is None else "colored"


@dataclass(frozen=True)
class Embedding:
    pattern: object = field(repr=False)
    host: object = field(repr=False)
    map: tuple  # map[i] is the host vertex receiving pattern vertex i

    @property
    def image(self) -> tuple:
        return tuple(sorted(self.map))


def _ordered_copies(pattern: OrderedColoredGraph, host: OrderedColoredGraph, first_only=False):
    m, v = pattern.vertex_count, host.vertex_count
    padj, hadj = pattern.graph.adj, host.graph.adj
    pcol, hcol = pattern.coloring, host.coloring
    if pcol is not None and hcol is None:
        raise MissingColoring("colored pattern needs a colored host")
    chosen = []
    out = []

    def extend(i: int, start: int) -> bool:
        if i == m:
            out.append(tuple(chosen))
            return first_only
        # leave room for the remaining pattern vertices
        for h in range(start, v - (m - i) + 1):
            if pcol is not None and hcol[h] != pcol[i]:
                continue
            if any((padj[i] >> j & 1) != (hadj[h] >> chosen[j] & 1) for j in range(i)):
                continue
            chosen.append(h)
            if extend(i + 1, h + 1):
                return True
            chosen.pop()
        return False

    extend(0, 0)
    return out


def _plain_copies(pattern: Graph, host: Graph):
    m = pattern.vertex_count
    target = certificate(pattern)
    pairs = list(combinations(range(m), 2))
    ecount = pattern.edge_count
    memo = {}
    out = []
    hadj = host.adj
    for s in combinations(range(host.vertex_count), m):
        code = 0
        for a, b in pairs:
            code = code << 1 | (hadj[s[a]] >> s[b] & 1)
        hit = memo.get(code)
        if hit is None:
            if code.bit_count() != ecount:
                hit = memo[code] = False
            else:
                hit = memo[code] = certificate(host.induced(s)) == target
        if hit:
            out.append(s)
    return out


def _check_sizes(pattern, host):
    pv = as_graph(pattern).vertex_count
    hv = as_graph(host).vertex_count
    if pv > PATTERN_CAP:
        raise SizeCapExceeded("copy pattern", pv, PATTERN_CAP)
    if hv > HOST_CAP:
        raise SizeCapExceeded("copy host", hv, HOST_CAP)


def enumerate_copies(pattern, host) -> list[Embedding]:
    """Copies of ``pattern`` in ``host`` in lexicographic order of image sets."""
    _check_sizes(pattern, host)
    kp, kh = kind_of(pattern), kind_of(host)
    if kp == "plain":
        p, h = as_graph(pattern), as_graph(host)
        out = []
        for s in _plain_copies(p, h):
            f = find_isomorphism(p, h.induced(s))
            out.append(Embedding(pattern, host, tuple(s[i] for i in f)))
        return out
    if kh == "plain":
        raise NotOrdered("ordered pattern needs an ordered host")
    return [Embedding(pattern, host, s) for s in _ordered_copies(pattern, host)]


def copy_images(pattern, host) -> list[tuple]:
    """Image sets only; cheaper than :func:`enumerate_copies`."""
    _check_sizes(pattern, host)
    if kind_of(pattern) == "plain":
        return _plain_copies(as_graph(pattern), as_graph(host))
    return _ordered_copies(pattern, host)


def find_embedding(pattern: OrderedColoredGraph, host: OrderedColoredGraph) -> Embedding | None:
    """First order-preserving induced embedding, or ``None``."""
    found = _ordered_copies(pattern, host, first_only=True)
    return Embedding(pattern, host, found[0]) if found else None


def embedding_multiplicity(pattern) -> int:
    """Embeddings per copy: ``|Aut|`` for plain patterns, 1 for ordered ones."""
    return automorphism_order(as_graph(pattern)) if kind_of(pattern) == "plain" else 1


# --------------------------------------------------------------------------
# arrow relation


@dataclass(frozen=True)
class ArrowQuery:
    host: object
    target: object
    pattern: object
    k: int
    t: int = 1

    def __post_init__(self):
        if self.k < 1 or not 1 <= self.t <= self.k:
            raise InvalidInput(f"need k >= 1 and 1 <= t <= k, got k={self.k}, t={self.t}")
        kinds = {kind_of(self.host), kind_of(self.target), kind_of(self.pattern)}
        if len(kinds) != 1:
            raise InvalidInput(f"host, target and pattern must share a kind, got {sorted(kinds)}")


@dataclass(frozen=True)
class ArrowResult:
    holds: bool
    bad_coloring: ColoringOfCopies | None
    colorings_examined: int
    target_copies: tuple = ()


def _search(host, target, patterns, k, t, budget) -> ArrowResult:
    xcopies, pid = [], []
    for p, pat in enumerate(patterns):
        imgs = copy_images(pat, host)
        xcopies.extend(imgs)
        pid.extend([p] * len(imgs))
    ycopies = copy_images(target, host)
    sets = [frozenset(s) for s in xcopies]
    members = []
    for y in ycopies:
        ys = set(y)
        members.append([i for i, s in enumerate(sets) if s <= ys])
    c = len(xcopies)

    def bad(colors):
        return ColoringOfCopies(tuple(int(x) for x in colors), k, tuple(xcopies))

    if not ycopies:
        return ArrowResult(False, bad([1] * c), 0, ())
    if any(not mem for mem in members):
        return ArrowResult(True, None, 0, tuple(ycopies))
    width = max(len(mem) for mem in members)
    ymem = np.full((len(members), width), -1, np.int64)
    ylen = np.zeros(len(members), np.int64)
    last = [[] for _ in range(c)]
    for y, mem in enumerate(members):
        ymem[y, : len(mem)] = mem
        ylen[y] = len(mem)
        last[max(mem)].append(y)
    ls = np.zeros(c + 1, np.int64)
    for i in range(c):
        ls[i + 1] = ls[i] + len(last[i])
    li = np.array([y for lst in last for y in lst], np.int64)
    status, nodes, colors = kernels.arrow_search(
        np.array(pid, np.int64), len(patterns), ymem, ylen, ls, li, k, t, budget
    )
    if status == 1:
        return ArrowResult(True, None, nodes, tuple(ycopies))
    return ArrowResult(False, bad(colors), nodes, tuple(ycopies))


def arrow_check(q: ArrowQuery, budget: int = DEFAULT_BUDGET) -> ArrowResult:
    """Decide ``host -> (target)^pattern_{k,t}`` exhaustively.

    On failure the lexicographically least bad coloring of the pattern copies
    is returned: under it every copy of the target sees more than ``t`` colors.
    """
    return _search(q.host, q.target, [q.pattern], q.k, q.t, budget)


def simultaneous_arrow_result(host, target, patterns: Sequence, k: int, budget: int = DEFAULT_BUDGET):
    if not patterns:
        raise InvalidInput("need at least one pattern")
    keys = [p.key() if isinstance(p, OrderedColoredGraph) else certificate(p) for p in patterns]
    if len(set(keys)) != len(keys):
        raise InvalidInput("patterns must be pairwise distinct")
    ArrowQuery(host, target, patterns[0], k, 1)
    return _search(host, target, list(patterns), k, 1, budget)


def simultaneous_arrow_check(host, target, patterns: Sequence, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Every simultaneous ``k``-coloring of the copies of all patterns leaves a
    copy of ``target`` monochromatic for each pattern separately."""
    return simultaneous_arrow_result(host, target, patterns, k, budget).holds


# --------------------------------------------------------------------------
# orders on color classes


def monotone_order(z: OrderedColoredGraph) -> list[int]:
    if z.coloring is None:
        raise MissingColoring("reordering needs a coloring")
    return sorted(range(z.vertex_count), key=lambda u: z.coloring[u])


def monotone_reorder(z: OrderedColoredGraph) -> OrderedColoredGraph:
    """Stable re-sort by color: the unique monotone order agreeing with the
    old one inside every color class."""
    if not z.ordered:
        raise NotOrdered("reordering needs an ordered structure")
    return z.reorder(monotone_order(z))


def _class_members(order, coloring):
    classes = {}
    for u in order:
        classes.setdefault(coloring[u], []).append(u)
    return classes


def order_relation_per_class(order_a, order_b, coloring) -> dict:
    """For each color, whether ``order_b`` restricted to the class coincides
    with, is opposite to, or neither, ``order_a``.  Singletons coincide."""
    if sorted(order_a) != sorted(order_b):
        raise InvalidInput("orders must be on the same vertex set")
    ca, cb = _class_members(order_a, coloring), _class_members(order_b, coloring)
    out = {}
    for c in sorted(ca):
        if ca[c] == cb[c]:
            out[c] = "coincide"
        elif ca[c] == cb[c][::-1]:
            out[c] = "opposite"
        else:
            out[c] = "neither"
    return out


def is_convex_classes(order, coloring) -> bool:
    pos = {u: i for i, u in enumerate(order)}
    for members in _class_members(order, coloring).values():
        ps = [pos[u] for u in members]
        if max(ps) - min(ps) + 1 != len(ps):
            return False
    return True


# --------------------------------------------------------------------------
# lower-bound gadgets


def _catalog(x, n, mode):
    if mode == "ordered_colored":
        return enumerate_extensions_ordered(x, n)
    if mode == "monotone":
        return enumerate_extensions_monotone(x, n)
    raise InvalidInput(f"unknown mode {mode!r}")


def build_gadget_Y(x, n: int, mode: str = "ordered_colored") -> OrderedColoredGraph:
    """Disjoint union of every extension of ``x`` followed by a rainbow ``K_n``."""
    cat = _catalog(x, n, mode)
    if not len(cat):
        raise NotNColorable(f"graph is not {n}-colorable")
    rainbow = OrderedColoredGraph(complete_graph(n), n, tuple(range(1, n + 1)))
    y = disjoint_union(list(cat.items) + [rainbow], n)
    return monotone_reorder(y) if mode == "monotone" else y


def _recolorings(y: OrderedColoredGraph, n: int, mode: str):
    """Yield ``(f, flips, structure)`` for every admissible recoloring."""
    base = list(range(y.vertex_count))
    for f in permutations(range(1, n + 1)):
        col = tuple(f[c - 1] for c in y.coloring)
        if mode == "ordered_colored":
            yield f, None, OrderedColoredGraph(y.graph, n, col)
            continue
        classes = _class_members(base, y.coloring)
        inv = {f[c - 1]: c for c in range(1, n + 1)}
        for flips in product((False, True), repeat=n):
            order = []
            for new_c in range(1, n + 1):
                block = classes.get(inv[new_c], [])
                order.extend(block[::-1] if flips[inv[new_c] - 1] else block)
            yield f, flips, OrderedColoredGraph(y.graph, n, col).reorder(order)


def recolor_embed_check(x, n: int, mode: str = "ordered_colored") -> bool:
    """Every extension of ``x`` embeds into every admissible recoloring of the gadget.

    Admissible: colors permuted by any ``f``; in monotone mode additionally
    each color class kept or reversed, with classes laid out by new color.
    """
    cat = _catalog(x, n, mode)
    y = build_gadget_Y(x, n, mode)
    for _f, _flips, z in _recolorings(y, n, mode):
        for item in cat:
            if find_embedding(item, z) is None:
                return False
    return True


def extension_type_coloring(T: OrderedColoredGraph, x, mode: str = "ordered_colored") -> ColoringOfCopies:
    """Color each copy of ``x`` in the reduct of ``T`` by the catalog index of
    the extension ``T`` induces on it."""
    if T.coloring is None:
        raise InvalidExtension("host carries no coloring")
    if not T.ordered or not is_proper_coloring(T):
        raise InvalidExtension("host extension is not an ordered proper coloring")
    if mode == "monotone" and not is_monotone(T):
        raise InvalidExtension("host extension is not monotone")
    cat = _catalog(x, T.n, mode)
    if mode == "ordered_colored":
        imgs = copy_images(as_ordered(x), T.reduct())
    else:
        imgs = copy_images(as_graph(x), T.graph)
    colors = []
    for s in imgs:
        idx = cat.index_of(T.induced(sorted(s)))
        if idx is None:
            raise InvalidExtension(f"copy {s} induces no catalog extension")
        colors.append(idx)
    return ColoringOfCopies(tuple(colors), max(1, len(cat)), tuple(tuple(s) for s in imgs))


# --------------------------------------------------------------------------
# empirical degree within size caps


@dataclass
class DegreeReport:
    status: str  # "DETERMINED" or "UNDETERMINED"
    degree: int | None
    lower_bound: int
    lower_witness: object
    upper_within_caps: int | None
    witnesses: dict = field(default_factory=dict)
    missing: list = field(default_factory=list)


def _extensions_of(y, spec: ClassSpec):
    """Every enrichment of ``y`` used to read off types of pattern copies."""
    if spec.family == "ordered":
        g = y.graph
        for row in kernels.proper_colorings(g.adj_array(), g.vertex_count, spec.n):
            yield OrderedColoredGraph(g, spec.n, tuple(int(c) for c in row))
    elif spec.kind == "kn_free":
        for order in permutations(range(y.vertex_count)):
            yield OrderedColoredGraph(y).reorder(order)
    elif spec.family == "unordered":
        for order, col in monotone_pairs(y, spec.n):
            yield OrderedColoredGraph(y, spec.n, col).reorder(order)
    else:
        yield y


def _types_realized(ext: OrderedColoredGraph, x, spec: ClassSpec) -> frozenset:
    if spec.family == "unordered":
        imgs = copy_images(as_graph(x), ext.graph)
    elif spec.family == "ordered":
        imgs = copy_images(as_ordered(x), ext.reduct())
    else:
        imgs = copy_images(x, ext)
    return frozenset(ext.induced(sorted(s)).key() for s in imgs)


_MERGE_LIMIT = 1 << 16


def _merged_bound(type_sets: list, k: int) -> int:
    """Colors guaranteed on every target copy when pattern copies are colored
    by a map from types to ``k`` colors, maximized over such maps.

    Types may outnumber colors, so the best merge is searched; past
    ``_MERGE_LIMIT`` maps only the trivial bound 1 is claimed.
    """
    best_possible = min(min(len(s) for s in type_sets), k)
    universe = sorted(set().union(*type_sets))
    if len(universe) <= k:
        return best_possible
    if k ** len(universe) > _MERGE_LIMIT:
        return 1
    pos = {t: i for i, t in enumerate(universe)}
    idx = [[pos[t] for t in s] for s in type_sets]
    best = 1
    for f in product(range(k), repeat=len(universe)):
        got = min(len({f[i] for i in s}) for s in idx)
        if got > best:
            best = got
            if best == best_possible:
                break
    return best


def empirical_degree(
    x,
    spec: ClassSpec,
    k: int = 2,
    pattern_cap: int = 3,
    target_cap: int = 3,
    host_cap: int = 7,
    budget: int = DEFAULT_BUDGET,
) -> DegreeReport:
    """Smallest ``t`` such that every member ``Y`` within ``target_cap`` has a
    member ``Z`` within ``host_cap`` with ``Z -> (Y)^x_{k,t}``.

    The lower bound is certified for hosts of every size: enrich the host,
    color each copy of ``x`` by a fixed merge of its type into ``k`` colors;
    if every enrichment of some ``Y`` then shows ``L`` colors, ``t >= L``.
    When no host within the caps reaches that bound the result is
    UNDETERMINED; an upper bound found only within caps is never reported as
    the degree.
    """
    xv = as_graph(x).vertex_count
    if xv > pattern_cap:
        raise SizeCapExceeded("degree pattern", xv, pattern_cap)
    if not is_member(x, spec):
        raise InvalidInput("pattern is not a member of the class")
    targets = list(enumerate_members(spec, target_cap))
    hosts = list(enumerate_members(spec, host_cap))

    lower, witness = 1, None
    for y in targets:
        bound = _merged_bound([_types_realized(e, x, spec) for e in _extensions_of(y, spec)], k)
        if bound > lower or witness is None and bound == lower:
            lower, witness = bound, y

    def host_for(y, t):
        yv = as_graph(y).vertex_count
        for z in hosts:
            if as_graph(z).vertex_count < yv:
                continue
            if arrow_check(ArrowQuery(z, y, x, k, t), budget).holds:
                return z
        return None

    report = DegreeReport("UNDETERMINED", None, lower, witness, None)
    for t in range(lower, k + 1):
        found, missing = {}, []
        for y in targets:
            z = host_for(y, t)
            if z is None:
                missing.append(y)
            else:
                found[y] = z
        if not missing:
            report.upper_within_caps = t
            if t == lower:
                report.status, report.degree, report.witnesses = "DETERMINED", t, found
            break
        if t == lower:
            report.missing = missing
            report.witnesses = found
    return report


# --------------------------------------------------------------------------
# reordering mechanics


def monotone_patterns(n: int, max_vertices: int = 3) -> list[OrderedColoredGraph]:
    return list(enumerate_members(ClassSpec("monotone_colored_ordered", n), max_vertices, 1))


def reorder_report(z: OrderedColoredGraph, patterns) -> dict:
    """Check the reordering claims on one structure.

    Copy sets are compared as sets of original vertices.  ``copies_included``
    says every copy in ``z`` survives in the reordered structure;
    ``copies_equal`` is the stronger statement that no copy is gained.
    """
    order = monotone_order(z)
    zs = monotone_reorder(z)
    rel = order_relation_per_class(list(range(z.vertex_count)), order, z.coloring)
    included = equal = on_monotone = True
    for p in patterns:
        before = {frozenset(s) for s in copy_images(p, z)}
        after = {frozenset(order[i] for i in s) for s in copy_images(p, zs)}
        included &= before <= after
        equal &= before == after
        mono = {s for s in after if _monotone_in(z, s)}
        on_monotone &= mono == before
    return {
        "monotone": is_monotone(zs),
        "idempotent": monotone_reorder(zs) == zs,
        "classwise_order_kept": all(r == "coincide" for r in rel.values()),
        "copies_included": included,
        "copies_equal_on_monotone_sets": on_monotone,
        "copies_equal": equal,
    }


def _monotone_in(z: OrderedColoredGraph, s) -> bool:
    cols = [z.coloring[u] for u in sorted(s)]
    return all(a <= b for a, b in zip(cols, cols[1:]))


def random_proper_structure(rng, max_vertices: int, n: int) -> OrderedColoredGraph:
    """Random ordered graph with a random proper coloring in ``1..n``."""
    v = int(rng.integers(1, max_vertices + 1))
    col = [int(c) for c in rng.integers(1, n + 1, size=v)]
    edges = [(a, b) for a, b in combinations(range(v), 2) if col[a] != col[b] and rng.random() < 0.5]
    return OrderedColoredGraph(Graph(v, tuple(edges)), n, tuple(col))
