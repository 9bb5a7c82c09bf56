import logging
from collections import Counter

import pytest
from hypothesis import given, settings

from arrlab import central
from arrlab.central import (
    ConditionTriple,
    central_arrangement,
    common_point,
    duplicate_witness,
    find_condition_triples,
    is_injective,
    is_injective_order_free,
    label_multiset,
    tau_formula,
)
from arrlab.graph import GraphError, Reorientation, SimpleAcyclicDigraph
from conftest import normalized_digraphs, relabeled_digraphs
from oracles import brute_labels, has_cycle_dfs

FIG1 = SimpleAcyclicDigraph(3, ((1, 2), (1, 3), (2, 3)))
EXAMPLE = SimpleAcyclicDigraph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4)))
CHERRY = SimpleAcyclicDigraph(3, ((1, 2), (1, 3)))


def test_common_point():
    assert common_point(3) == (1, 0, -1)
    assert [2 * v for v in common_point(4)] == [3, 1, -1, -3]
    assert sum(common_point(6)) == 0
    with pytest.raises(ValueError):
        common_point(0)


@given(normalized_digraphs())
def test_common_point_on_every_hyperplane(g):
    c = common_point(g.n)
    assert all(h.value(c) == h.a for h in central_arrangement(g).hyperplanes)


def test_central_arrangement_rejects_unnormalized():
    with pytest.raises(GraphError):
        central_arrangement(SimpleAcyclicDigraph(2, ((2, 1),)))
    with pytest.raises(GraphError):
        find_condition_triples(SimpleAcyclicDigraph(2, ((2, 1),)))


def test_cherry_labels_by_oracle():
    # frozen from the brute-force oracle: one label occurs twice
    assert brute_labels(3, CHERRY.edges) == [(0, 0, 0), (1, 0, 0), (1, 0, 0), (2, 0, 0)]
    assert label_multiset(CHERRY) == Counter(brute_labels(3, CHERRY.edges))
    w = duplicate_witness(CHERRY, ConditionTriple(1, 2, 3))
    assert w.constructed and w.tau == (1, 0, 0)


def test_example_values():
    assert not is_injective(EXAMPLE)
    assert [t.as_list() for t in find_condition_triples(EXAMPLE)] == [[1, 3, 4], [2, 3, 4]]
    ms = label_multiset(EXAMPLE)
    assert sum(ms.values()) == 18 and len(ms) == 12
    assert sorted(central.duplicated_labels(EXAMPLE)) == sorted(
        [(2, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (2, 1, 0, 0), (1, 2, 0, 0), (3, 1, 0, 0)]
    )


def test_witness_json():
    w = duplicate_witness(EXAMPLE, ConditionTriple(1, 3, 4))
    assert w.to_json() == {
        "triple": [1, 3, 4],
        "first_switched": [[1, 2], [1, 3]],
        "second_switched": [[1, 2], [1, 4]],
        "tau": [2, 0, 0, 0],
        "constructed": True,
    }


def test_witness_rejects_non_triple():
    with pytest.raises(GraphError):
        duplicate_witness(EXAMPLE, ConditionTriple(1, 2, 3))


def test_fallback_is_logged(monkeypatch, caplog):
    monkeypatch.setattr(central, "construction_edges", lambda g, t: [(1, 4), (1, 3)])
    with caplog.at_level(logging.WARNING, logger="arrlab.central"):
        w = duplicate_witness(EXAMPLE, ConditionTriple(1, 3, 4))
    assert not w.constructed
    assert "exhaustively" in caplog.text
    assert central.label_of_reorientation(w.first) == central.label_of_reorientation(w.second)
    assert w.first != w.second


def test_brute_force_witness_on_injective_graph():
    with pytest.raises(GraphError):
        central._brute_force_witness(FIG1, None)


@settings(max_examples=150)
@given(normalized_digraphs(max_n=6))
def test_injectivity_matches_label_counts(g):
    dup = any(c > 1 for c in label_multiset(g).values())
    assert is_injective(g) == (not dup)
    assert is_injective_order_free(g) == (not dup)


@given(relabeled_digraphs(max_n=6))
def test_injectivity_is_relabeling_invariant(pair):
    h, g = pair
    assert is_injective(g) == is_injective(h) == is_injective_order_free(g)


@given(normalized_digraphs(max_n=5))
def test_labels_match_oracle(g):
    assert sorted(label_multiset(g).elements()) == brute_labels(g.n, g.edges)


@settings(max_examples=150)
@given(normalized_digraphs(min_n=3, max_n=7))
def test_witnesses(g):
    for t in find_condition_triples(g):
        w = duplicate_witness(g, t)
        assert w.constructed
        assert w.first.switched != w.second.switched
        for r in (w.first, w.second):
            assert not has_cycle_dfs(g.n, r.oriented_edges())
        assert central.label_of_reorientation(w.first) == central.label_of_reorientation(w.second) == w.tau
        if central.all_construction_edges_present(g, t):
            assert w.tau == tau_formula(g.n, t)


def test_label_counts_switched_out_edges():
    r = Reorientation(EXAMPLE, frozenset({(1, 3), (2, 3)}))
    assert central.label_of_reorientation(r) == (1, 1, 0, 0)
