"""Tests for the isomorphism-reduced sweep of small multigraphs."""

from __future__ import annotations

import random
from collections import Counter

from iharazeta.families import gen_family, parse_family_spec
from iharazeta.multigraph import build_multigraph, structural_report
from iharazeta.smallgraphs import (
    canonical_key,
    connected_multigraphs,
    is_isomorphic,
)


def relabel(g, perm):
    return build_multigraph(
        [(perm[u], perm[v]) for u, v in g.edge_list()], g.n
    )


def test_class_counts_small():
    # hand-checked by listing the classes for each budget up to three edges
    assert len(connected_multigraphs(1)) == 1
    assert len(connected_multigraphs(2)) == 3
    assert len(connected_multigraphs(3)) == 8
    assert len(connected_multigraphs(4)) == 20
    assert len(connected_multigraphs(5)) == 53


def test_class_counts_from_sweep(sweep7):
    by_edges = Counter(g.edge_count for g in sweep7)
    assert sum(v for k, v in by_edges.items() if k <= 6) == 156
    assert sum(by_edges.values()) == 489


def test_all_classes_up_to_three_edges_are_the_expected_ones():
    reps = connected_multigraphs(3)
    expected = [
        "C(1)",       # single loop
        "G(1,1)",     # two loops on one vertex
        "C(2)",       # doubled edge
        "BQ(3)",      # three loops
        "G(1,2)",     # loop plus doubled edge
        "Gp(2,2,1)",  # triple edge
        "C(3)",       # triangle
        "H(1,1,1)",   # two looped vertices joined by an edge
    ]
    models = [gen_family(parse_family_spec(t)) for t in expected]
    for model in models:
        assert sum(1 for g in reps if is_isomorphic(g, model)) == 1
    assert len(reps) == len(models)


def test_emitted_graphs_satisfy_the_constraints(sweep7):
    keys = set()
    for g in sweep7:
        assert g.edge_count <= 7
        rep = structural_report(g)
        assert rep.connected
        assert rep.min_degree >= 2
        keys.add(canonical_key(g))
    assert len(keys) == len(sweep7)


def test_order_is_deterministic():
    a = connected_multigraphs(4)
    assert a == connected_multigraphs(4)
    counts = [g.edge_count for g in a]
    assert counts == sorted(counts)


def test_canonical_key_is_relabeling_invariant():
    rng = random.Random(55)
    samples = [
        gen_family(parse_family_spec(t))
        for t in ("G(3,4)", "k4-minus", "loop-bigon", "D(2,1,3)", "Kb(2,3)")
    ]
    for g in samples:
        key = canonical_key(g)
        for _ in range(10):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert canonical_key(h) == key
            assert is_isomorphic(g, h)


def test_is_isomorphic_separates_equal_degree_sequences():
    # both are two cycles sharing a vertex: same degree sequence and size,
    # but the cycle lengths differ
    a = gen_family(parse_family_spec("G(2,4)"))
    b = gen_family(parse_family_spec("G(3,3)"))
    assert sorted(a.degrees()) == sorted(b.degrees())
    assert a.edge_count == b.edge_count
    assert not is_isomorphic(a, b)


def test_is_isomorphic_quick_rejects():
    triangle = gen_family(parse_family_spec("C(3)"))
    square = gen_family(parse_family_spec("C(4)"))
    assert not is_isomorphic(triangle, square)
    # same size and degree sequence, different loop multiset
    assert not is_isomorphic(
        gen_family(parse_family_spec("H(1,1,1)")),
        gen_family(parse_family_spec("Gp(2,2,1)")),
    )


def test_min_degree_one_widens_the_sweep():
    keys2 = {canonical_key(g) for g in connected_multigraphs(3)}
    all1 = connected_multigraphs(3, min_degree=1)
    keys1 = {canonical_key(g) for g in all1}
    assert keys2 < keys1
    for g in all1:
        assert structural_report(g).connected
        assert min(g.degrees()) >= 1
    assert any(
        g.edge_count == 1 and sorted(g.degrees()) == [1, 1] for g in all1
    )
