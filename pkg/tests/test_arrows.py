import itertools
import random

import numpy as np
import pytest

from ramseydeg.arrows import (
    ArrowQuery,
    arrow_check,
    build_gadget_Y,
    copy_images,
    embedding_multiplicity,
    empirical_degree,
    enumerate_copies,
    extension_type_coloring,
    find_embedding,
    is_convex_classes,
    monotone_patterns,
    monotone_reorder,
    order_relation_per_class,
    random_proper_structure,
    recolor_embed_check,
    reorder_report,
    simultaneous_arrow_check,
)
from ramseydeg.classes import ClassSpec
from ramseydeg.degrees import enumerate_extensions_ordered
from ramseydeg.errors import BudgetExceeded, InvalidExtension, InvalidInput
from ramseydeg.structures import (
    Graph,
    OrderedColoredGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_monotone,
    make_graph,
    path_graph,
)


def ordered(g, n=1, col=None):
    return OrderedColoredGraph(g, n, col)


def brute_arrow(host, target, patterns, k, t=1):
    """First bad coloring in lexicographic order, or None when the arrow holds."""
    xs = [copy_images(p, host) for p in patterns]
    flat = [(p, frozenset(s)) for p, imgs in enumerate(xs) for s in imgs]
    ys = [set(y) for y in copy_images(target, host)]
    for colors in itertools.product(range(1, k + 1), repeat=len(flat)):
        good = False
        for y in ys:
            inside = [(p, c) for (p, s), c in zip(flat, colors) if s <= y]
            per = {}
            for p, c in inside:
                per.setdefault(p, set()).add(c)
            if all(len(v) <= t for v in per.values()):
                good = True
                break
        if not good:
            return colors
    return None


# copies ---------------------------------------------------------------------


def test_copy_examples():
    assert len(enumerate_copies(complete_graph(2), complete_graph(4))) == 6
    assert len(enumerate_copies(ordered(complete_graph(2)), ordered(complete_graph(3)))) == 3
    pair = ordered(empty_graph(2), 2, (1, 1))
    host = ordered(empty_graph(3), 2, (1, 1, 1))
    assert len(enumerate_copies(pair, host)) == 3


def test_copies_are_induced_embeddings():
    host = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    for pat in [path_graph(3), complete_graph(2), empty_graph(2), cycle_graph(4)]:
        embs = enumerate_copies(pat, host)
        images = [e.image for e in embs]
        assert len(set(images)) == len(images)
        for e in embs:
            for a, b in itertools.combinations(range(pat.vertex_count), 2):
                assert pat.has_edge(a, b) == host.has_edge(e.map[a], e.map[b])
        m = pat.vertex_count
        brute = [s for s in itertools.combinations(range(6), m)
                 if any(host.induced([s[i] for i in p]) == pat for p in itertools.permutations(range(m)))]
        assert images == brute


def test_ordered_copies_respect_order_and_color():
    host = ordered(path_graph(4), 2, (1, 2, 1, 2))
    pat = ordered(complete_graph(2), 2, (1, 2))
    assert copy_images(pat, host) == [(0, 1), (2, 3)]
    assert copy_images(ordered(complete_graph(2), 2, (2, 1)), host) == [(1, 2)]
    assert find_embedding(ordered(empty_graph(2), 2, (2, 2)), host).map == (1, 3)


def test_multiplicity():
    assert embedding_multiplicity(cycle_graph(4)) == 8
    assert embedding_multiplicity(ordered(cycle_graph(4))) == 1


# arrow oracle ---------------------------------------------------------------


def test_classical_ramsey():
    k2, k3 = complete_graph(2), complete_graph(3)
    assert arrow_check(ArrowQuery(complete_graph(6), k3, k2, 2, 1)).holds
    res = arrow_check(ArrowQuery(complete_graph(5), k3, k2, 2, 1))
    assert not res.holds
    bad = res.bad_coloring
    edges = [tuple(c) for c in bad.copies]
    red = make_graph(5, [e for e, c in zip(edges, bad.colors) if c == 1])
    blue = make_graph(5, [e for e, c in zip(edges, bad.colors) if c == 2])
    # both color classes are 5-cycles: the pentagon and pentagram
    assert all(red.degree(u) == 2 and blue.degree(u) == 2 for u in range(5))
    for tri in itertools.combinations(range(5), 3):
        cols = {c for e, c in zip(edges, bad.colors) if set(e) <= set(tri)}
        assert len(cols) == 2


def test_t_equal_k_holds():
    z = cycle_graph(5)
    for k in (1, 2, 3):
        assert arrow_check(ArrowQuery(z, path_graph(3), complete_graph(2), k, k)).holds


def test_no_target_copy_fails():
    res = arrow_check(ArrowQuery(path_graph(3), complete_graph(3), complete_graph(2), 2))
    assert not res.holds and set(res.bad_coloring.colors) == {1}


def test_query_validation():
    with pytest.raises(InvalidInput):
        ArrowQuery(complete_graph(3), complete_graph(2), complete_graph(1), 2, 3)
    with pytest.raises(InvalidInput):
        ArrowQuery(complete_graph(3), ordered(complete_graph(2)), complete_graph(1), 2)


def _small_instances():
    rng = random.Random(11)
    graphs = []
    for _ in range(25):
        v = rng.randint(3, 6)
        graphs.append(Graph(v, tuple(e for e in itertools.combinations(range(v), 2) if rng.random() < 0.55)))
    return graphs


@pytest.mark.parametrize("k,t", [(2, 1), (3, 1), (3, 2)])
def test_arrow_matches_brute_force(k, t):
    for z in _small_instances():
        for y, x in [(complete_graph(2), complete_graph(1)), (path_graph(3), complete_graph(2)),
                     (empty_graph(2), complete_graph(1)), (complete_graph(3), complete_graph(2))]:
            ncopies = len(copy_images(x, z))
            if k ** ncopies > 20000:
                continue
            res = arrow_check(ArrowQuery(z, y, x, k, t))
            expect = brute_arrow(z, y, [x], k, t)
            assert res.holds == (expect is None)
            if expect is not None:
                assert res.bad_coloring.colors == expect


def test_arrow_monotone_in_t():
    for z in _small_instances()[:10]:
        verdicts = [arrow_check(ArrowQuery(z, path_graph(3), complete_graph(2), 3, t)).holds for t in (1, 2, 3)]
        assert verdicts == sorted(verdicts)


def test_arrow_monotone_in_host():
    # an induced supergraph of a good host is good
    z = cycle_graph(5)
    y, x = complete_graph(2), complete_graph(1)
    assert arrow_check(ArrowQuery(z, y, x, 2)).holds
    bigger = make_graph(7, list(z.edges) + [(0, 5), (5, 6)])
    assert bigger.induced(range(5)) == z
    assert arrow_check(ArrowQuery(bigger, y, x, 2)).holds


def test_ordered_and_colored_arrows():
    z = ordered(path_graph(3), 2, (1, 2, 1))
    y = ordered(complete_graph(2), 2, (1, 2))
    x = ordered(complete_graph(1), 2, (1,))
    assert arrow_check(ArrowQuery(z, y, x, 2)).holds
    zo = ordered(complete_graph(4))
    res = arrow_check(ArrowQuery(zo, ordered(complete_graph(3)), ordered(complete_graph(2)), 2))
    assert res.holds == (brute_arrow(zo, ordered(complete_graph(3)), [ordered(complete_graph(2))], 2) is None)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        arrow_check(ArrowQuery(complete_graph(6), complete_graph(3), complete_graph(2), 2), budget=10)


# simultaneous ---------------------------------------------------------------


def test_simultaneous_single_pattern_reduces():
    z, y, x = complete_graph(5), complete_graph(3), complete_graph(2)
    assert simultaneous_arrow_check(z, y, [x], 2) == arrow_check(ArrowQuery(z, y, x, 2)).holds


def test_simultaneous_unique_target_copy():
    y = ordered(path_graph(3), 2, (1, 2, 1))
    a = ordered(complete_graph(1), 2, (1,))
    b = ordered(complete_graph(1), 2, (2,))
    # pattern a has two copies inside y, so it can be split
    assert not simultaneous_arrow_check(y, y, [a, b], 2)
    assert simultaneous_arrow_check(y, y, [b], 2)


def test_simultaneous_matches_brute_force():
    cat = enumerate_extensions_ordered(ordered(complete_graph(1)), 2)
    pats = list(cat)
    yhat = build_gadget_Y(ordered(complete_graph(1)), 2)
    rng = random.Random(2)
    hosts = [yhat]
    for _ in range(12):
        v = rng.randint(3, 6)
        col = tuple(rng.randint(1, 2) for _ in range(v))
        edges = [(a, b) for a, b in itertools.combinations(range(v), 2) if col[a] != col[b] and rng.random() < 0.6]
        hosts.append(ordered(Graph(v, tuple(edges)), 2, col))
    for z in hosts:
        for y in [ordered(complete_graph(2), 2, (1, 2)), ordered(empty_graph(2), 2, (1, 1))]:
            assert simultaneous_arrow_check(z, y, pats, 2) == (brute_arrow(z, y, pats, 2) is None)


def test_simultaneous_rejects_duplicates():
    x = complete_graph(2)
    with pytest.raises(InvalidInput):
        simultaneous_arrow_check(complete_graph(4), complete_graph(3), [x, x], 2)


# gadgets --------------------------------------------------------------------


def test_gadget_examples():
    y = build_gadget_Y(ordered(complete_graph(1)), 2)
    assert y.vertex_count == 4 and y.coloring == (1, 2, 1, 2) and y.graph.edges == ((2, 3),)
    y2 = build_gadget_Y(ordered(complete_graph(2)), 2)
    assert y2.vertex_count == 6 and y2.graph.edge_count == 3
    ym = build_gadget_Y(complete_graph(1), 2, "monotone")
    assert is_monotone(ym)


def test_recolor_examples():
    assert recolor_embed_check(ordered(complete_graph(1)), 2)
    assert recolor_embed_check(ordered(complete_graph(2)), 3)
    assert recolor_embed_check(complete_graph(2), 2, "monotone")


def test_gadget_without_rainbow_clique_can_fail():
    # dropping the rainbow K_n breaks the claim for a pattern whose catalog
    # does not fix colors: the check is not vacuous
    y = ordered(empty_graph(1), 2, (1,))
    assert find_embedding(ordered(empty_graph(1), 2, (2,)), y) is None


# extension-type coloring ----------------------------------------------------


def test_alpha_on_k1():
    t = ordered(path_graph(4), 2, (1, 2, 1, 2))
    alpha = extension_type_coloring(t, ordered(complete_graph(1)))
    assert alpha.colors == (1, 2, 1, 2)


def test_alpha_on_even_cycle():
    t = ordered(cycle_graph(6), 2, (1, 2, 1, 2, 1, 2))
    alpha = extension_type_coloring(t, ordered(complete_graph(2)))
    assert set(alpha.colors) <= {1, 2} and len(alpha) == len(copy_images(ordered(complete_graph(2)), t.reduct()))


def test_alpha_no_copies():
    t = ordered(empty_graph(3), 2, (1, 2, 1))
    assert len(extension_type_coloring(t, ordered(complete_graph(2)))) == 0


def test_alpha_rejects_improper_host():
    with pytest.raises(InvalidExtension):
        extension_type_coloring(ordered(complete_graph(2), 2, (1, 1)), ordered(complete_graph(1)))
    with pytest.raises(InvalidExtension):
        extension_type_coloring(ordered(complete_graph(2), 2, (2, 1)), complete_graph(1), "monotone")


def test_alpha_permutes_under_recoloring():
    x = ordered(path_graph(3))
    rng = random.Random(4)
    for _ in range(20):
        v = rng.randint(3, 6)
        col = tuple(rng.randint(1, 3) for _ in range(v))
        edges = [(a, b) for a, b in itertools.combinations(range(v), 2) if col[a] != col[b] and rng.random() < 0.7]
        t = ordered(Graph(v, tuple(edges)), 3, col)
        f = list(rng.sample([1, 2, 3], 3))
        tf = ordered(t.graph, 3, tuple(f[c - 1] for c in col))
        a, b = extension_type_coloring(t, x), extension_type_coloring(tf, x)
        assert a.copies == b.copies
        mapping = {}
        for i, j in zip(a.colors, b.colors):
            assert mapping.setdefault(i, j) == j
        assert len(set(mapping.values())) == len(mapping)


# reordering -----------------------------------------------------------------


def test_reorder_examples():
    z = ordered(empty_graph(3), 2, (2, 1, 1))
    zs = monotone_reorder(z)
    assert zs.coloring == (1, 1, 2)
    mono = ordered(make_graph(3, [(0, 2)]), 2, (1, 1, 2))
    assert monotone_reorder(mono) == mono


def test_reorder_random_properties():
    rng = np.random.default_rng(0)
    pats = monotone_patterns(3)
    for _ in range(60):
        z = random_proper_structure(rng, 6, 3)
        rep = reorder_report(z, pats)
        for key in ("monotone", "idempotent", "classwise_order_kept", "copies_included",
                    "copies_equal_on_monotone_sets"):
            assert rep[key], key


def test_reorder_can_create_copies():
    # the two non-adjacent vertices colored (2, 1) form no monotone pair before
    # reordering, but do afterwards
    z = ordered(empty_graph(2), 2, (2, 1))
    rep = reorder_report(z, [ordered(empty_graph(2), 2, (1, 2))])
    assert rep["copies_included"] and not rep["copies_equal"]


def test_order_relations():
    col = (1, 1, 1, 2)
    a = [0, 1, 2, 3]
    assert set(order_relation_per_class(a, a, col).values()) == {"coincide"}
    assert order_relation_per_class(a, a[::-1], col) == {1: "opposite", 2: "coincide"}
    assert order_relation_per_class(a, [1, 0, 2, 3], col)[1] == "neither"


def test_convexity():
    assert is_convex_classes([0, 1, 2, 3], (1, 1, 2, 2))
    assert not is_convex_classes([0, 1, 2], (1, 2, 1))
    assert is_convex_classes([2, 0, 1], (3, 3, 3))


# empirical degree -----------------------------------------------------------


def test_degree_ordered_k1():
    rep = empirical_degree(ordered(complete_graph(1)), ClassSpec("n_colorable_ordered", 2), host_cap=5)
    assert rep.lower_bound >= 2
    assert rep.status == "DETERMINED" and rep.degree == 2


def test_degree_k1_edgeless_class():
    rep = empirical_degree(complete_graph(1), ClassSpec("n_colorable", 1), host_cap=5)
    assert (rep.status, rep.degree) == ("DETERMINED", 1)


def test_degree_k2_kn_free():
    rep = empirical_degree(complete_graph(2), ClassSpec("kn_free", 3), host_cap=5)
    assert (rep.status, rep.degree) == ("DETERMINED", 1)


def test_degree_undetermined_when_hosts_too_small():
    rep = empirical_degree(complete_graph(2), ClassSpec("n_colorable", 2), target_cap=3, host_cap=3)
    assert rep.status == "UNDETERMINED" and rep.degree is None
