import itertools
import math
import random

import pytest

from conftest import brute_aut_order
from ramseydeg.canonical import (
    are_isomorphic,
    automorphism_group,
    automorphism_order,
    canonical_form,
    canonical_graph,
    certificate,
    find_isomorphism,
    is_automorphism,
    ordered_colored_isomorphic,
    refine_colors,
    relabeling_count,
)
from ramseydeg.classes import enumerate_graphs
from ramseydeg.errors import NotOrdered, SizeCapExceeded
from ramseydeg.structures import (
    Graph,
    OrderedColoredGraph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    make_graph,
    path_graph,
)


def naive_certificate(g):
    v = g.vertex_count
    return min(g.relabel(p).edge_bits() for p in itertools.permutations(range(v))) if v else ""


def test_certificate_examples():
    a = make_graph(3, [(0, 1), (1, 2)])
    b = make_graph(3, [(1, 0), (0, 2)])
    assert certificate(a) == certificate(b)
    assert certificate(complete_graph(3)) != certificate(path_graph(3))
    four = [g for g in enumerate_graphs(4) if g.vertex_count == 4]
    assert len({certificate(g) for g in four}) == 11


def test_certificate_is_naive_minimum_up_to_6():
    for g in enumerate_graphs(6):
        cf = canonical_form(g)
        assert cf.certificate == naive_certificate(g)
        # relabeling reproduces the certificate
        assert g.relabel(cf.relabeling).edge_bits() == cf.certificate


def test_certificate_is_naive_minimum_sample_7():
    rng = random.Random(7)
    graphs = [g for g in enumerate_graphs(7) if g.vertex_count == 7]
    for g in rng.sample(graphs, 25):
        assert canonical_form(g).certificate == naive_certificate(g)


def test_certificate_invariance_random_perms():
    rng = random.Random(1)
    corpus = [cycle_graph(6), complete_multipartite([2, 3]), path_graph(7),
              make_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (0, 4), (6, 7)])]
    corpus += rng.sample([g for g in enumerate_graphs(6) if g.vertex_count == 6], 10)
    for g in corpus:
        c = certificate(g)
        for _ in range(200):
            p = list(range(g.vertex_count))
            rng.shuffle(p)
            assert certificate(g.relabel(p)) == c


def test_aut_examples():
    assert automorphism_group(complete_graph(3)).order == 6
    assert automorphism_group(path_graph(3)).order == 2
    assert automorphism_group(cycle_graph(5)).order == 10
    assert automorphism_order(cycle_graph(5)) == brute_aut_order(cycle_graph(5))


def test_aut_elements_are_automorphisms():
    for g in [cycle_graph(6), complete_multipartite([1, 2, 3]), empty_graph(4)]:
        grp = automorphism_group(g)
        assert len(set(grp.elements)) == grp.order
        assert all(is_automorphism(g, p) for p in grp.elements)
        assert math.factorial(g.vertex_count) % grp.order == 0


def test_aut_order_only_beyond_list_cap():
    grp = automorphism_group(cycle_graph(9))
    assert grp.order == 18 and grp.elements is None
    assert all(is_automorphism(cycle_graph(9), p) for p in grp.generators)


def test_orbit_stabilizer_up_to_6():
    for g in enumerate_graphs(6):
        v = g.vertex_count
        labeled = {g.relabel(p).edges for p in itertools.permutations(range(v))}
        assert automorphism_order(g) == brute_aut_order(g)
        assert automorphism_order(g) * len(labeled) == math.factorial(v)
        assert relabeling_count(g) == len(labeled)


def test_are_isomorphic_examples():
    assert are_isomorphic(cycle_graph(4), complete_multipartite([2, 2]))
    k3_plus = make_graph(4, [(0, 1), (0, 2), (1, 2)])
    assert not are_isomorphic(k3_plus, path_graph(4))
    rng = random.Random(3)
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)])
    for _ in range(20):
        p, q = list(range(6)), list(range(6))
        rng.shuffle(p)
        rng.shuffle(q)
        assert are_isomorphic(g.relabel(p), g.relabel(q))


def test_find_isomorphism_maps_edges():
    a = path_graph(5)
    b = a.relabel([3, 0, 4, 1, 2])
    f = find_isomorphism(a, b)
    assert a.relabel(f) == b
    assert find_isomorphism(path_graph(4), cycle_graph(4)) is None


def test_isomorphism_is_equivalence_on_corpus():
    # labeled 5-vertex graphs grouped by brute-force classes must match certificates
    graphs = list(enumerate_graphs(7))
    certs = [certificate(g) for g in graphs]
    assert len(set(certs)) == len(graphs)
    rng = random.Random(5)
    for g in rng.sample(graphs, 40):
        p = list(range(g.vertex_count))
        rng.shuffle(p)
        h = g.relabel(p)
        assert are_isomorphic(g, g)
        assert are_isomorphic(g, h) and are_isomorphic(h, g)
        assert are_isomorphic(h, canonical_graph(g))


def test_cap():
    with pytest.raises(SizeCapExceeded):
        certificate(empty_graph(11))
    assert certificate(empty_graph(11), cap=11)[0] == 11
    with pytest.raises(SizeCapExceeded):
        certificate(empty_graph(12), cap=20)


def test_ordered_colored_examples():
    a = OrderedColoredGraph(complete_graph(2), 2, (1, 2))
    assert ordered_colored_isomorphic(a, OrderedColoredGraph(complete_graph(2), 2, (1, 2)))
    assert not ordered_colored_isomorphic(a, OrderedColoredGraph(complete_graph(2), 2, (2, 1)))
    with pytest.warns(UserWarning):
        assert not ordered_colored_isomorphic(
            OrderedColoredGraph(empty_graph(2), 2, (1, 2)), OrderedColoredGraph(empty_graph(2), 3, (1, 2))
        )
    with pytest.raises(NotOrdered):
        ordered_colored_isomorphic(a, OrderedColoredGraph(complete_graph(2), 2, (1, 2), ordered=False))


def test_refinement_colors_are_invariant():
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
    p = [4, 2, 0, 5, 1, 3]
    a, b = refine_colors(g), refine_colors(g.relabel(p))
    assert all(a[u] == b[p[u]] for u in range(6))


def test_empty_and_trivial():
    assert canonical_form(Graph(0)).certificate == ""
    assert automorphism_order(Graph(0)) == 1
    assert automorphism_order(Graph(1)) == 1
