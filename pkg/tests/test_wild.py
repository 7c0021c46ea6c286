from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qblocks.acceptance import REPRESENTATIVES
from qblocks.quivers import block_quiver
from qblocks.wild import (
    DYNKIN,
    EUCLIDEAN,
    NEITHER,
    classify_component,
    classify_graph,
    duplicate_quiver,
    graph_from_edges,
    is_special_biserial,
    representation_type,
)
from qblocks.weights import Weight, block_class


def path(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def star(*arms: int) -> list[tuple[int, int]]:
    edges, nxt = [], 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return edges


CASES = [
    (path(5), DYNKIN, "A5"),
    ([(0, 0)], EUCLIDEAN, "~A0"),
    ([(0, 1), (1, 0)], EUCLIDEAN, "~A1"),
    ([(0, 1), (1, 2), (2, 3), (3, 0)], EUCLIDEAN, "~A3"),
    (star(1, 1, 1), DYNKIN, "D4"),
    (star(1, 1, 4), DYNKIN, "D7"),
    (star(1, 2, 2), DYNKIN, "E6"),
    (star(1, 2, 3), DYNKIN, "E7"),
    (star(1, 2, 4), DYNKIN, "E8"),
    (star(2, 2, 2), EUCLIDEAN, "~E6"),
    (star(1, 3, 3), EUCLIDEAN, "~E7"),
    (star(1, 2, 5), EUCLIDEAN, "~E8"),
    (star(1, 1, 1, 1), EUCLIDEAN, "~D4"),
    ([(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)], EUCLIDEAN, "~D5"),
    ([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)], EUCLIDEAN, "~D6"),
    (star(2, 2, 3), NEITHER, ""),
    (star(1, 1, 1, 1, 1), NEITHER, ""),
    ([(a, b) for a in range(4) for b in range(a + 1, 4)], NEITHER, ""),
    ([(0, 0), (0, 1)], NEITHER, ""),
    ([(0, 1), (0, 1), (0, 1)], NEITHER, ""),
]


@pytest.mark.parametrize("edges, kind, name", CASES)
def test_classify_examples(edges, kind, name):
    cls = classify_component(graph_from_edges(edges))
    assert (cls.kind, cls.name) == (kind, name)


def test_components_classified_separately():
    g = graph_from_edges(path(3) + [(10, 11), (11, 10)])
    assert sorted(str(c) for _, c in classify_graph(g)) == ["A3", "~A1"]


@given(st.sampled_from(CASES), st.randoms(use_true_random=False))
def test_classification_ignores_labels(case, rnd):
    edges, kind, name = case
    nodes = sorted({x for e in edges for x in e})
    image = dict(zip(nodes, rnd.sample([f"n{i}" for i in range(100)], len(nodes))))
    relabeled = [(image[u], image[v]) for u, v in edges]
    rnd.shuffle(relabeled)
    cls = classify_component(graph_from_edges(relabeled))
    assert (cls.kind, cls.name) == (kind, name)


def test_separated_quiver_of_typical_block():
    quiver, _ = block_quiver(block_class(Weight.of(2, 0, -1), "q"), 6)
    sep = duplicate_quiver(quiver)
    assert sep.is_bipartite()
    assert len(sep.nodes) == 2 * len(quiver.vertices)
    assert sorted(str(c) for _, c in classify_graph(sep.underlying_graph())) == ["A2", "A2"]


def test_separated_quiver_of_loop_block():
    quiver, _ = block_quiver(block_class(Weight.of(6, 3, -2), "sq"), 6)
    sep = duplicate_quiver(quiver)
    assert [sep.node_name(n) for n in sep.arrows[0]] == ["L(6,3,-2)", "L(6,3,-2)'"]
    assert [str(c) for _, c in classify_graph(sep.underlying_graph())] == ["A2"]


def test_biserial_sets_binomials_aside():
    quiver, relations = block_quiver(block_class(Weight.of(1, 0, 0), "q"), 6)
    report = is_special_biserial(quiver, relations)
    assert report.holds and report.binomial_relations


def test_q_principal_is_not_biserial():
    quiver, relations = block_quiver(block_class(Weight.zero(3), "q"), 6)
    report = is_special_biserial(quiver, relations)
    assert not report.holds and report.violation


VERDICTS = {("q", "0,0,0"): "Wild"}


@pytest.mark.parametrize("algebra_name, weight", REPRESENTATIVES)
def test_representation_type(algebra_name, weight):
    verdict = representation_type(block_class(Weight.parse(weight), algebra_name))
    assert verdict.verdict == VERDICTS.get((algebra_name, weight), "Tame")


@pytest.mark.parametrize("cutoff", [6, 8, 10])
def test_q_principal_wild_witness(cutoff):
    verdict = representation_type(block_class(Weight.zero(3), "q"), cutoff).to_json()
    witness = verdict["witness"]
    assert witness["classification"] == NEITHER
    assert {"L(4,0,-4)", "PiL(4,0,-4)"} <= set(witness["degree_3_beyond_index_3"])
