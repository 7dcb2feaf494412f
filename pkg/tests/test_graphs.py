import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from suqconn.graphs import (
    Add,
    CompositionError,
    Edge,
    FramedGraph,
    Fr,
    Graph,
    GraphError,
    GraphSchemaError,
    NotComparableError,
    Or,
    Sub,
    apply_moves,
    common_refinement,
    compose_edges,
    geq,
    graph_from_json,
    graph_to_json,
    plan,
    random_graph,
    random_refinement,
)
from suqconn.morphisms import FramingLift

from conftest import E, rngs


# ==== edges ================================================================


def test_edge_invariants():
    e = E(0, 1)
    assert e.source == 0 and e.target == 1
    assert e.reverse().source == 1 and e.reverse().reverse() == e
    with pytest.raises(GraphError):
        E(1, 1)
    with pytest.raises(GraphError):
        E(2, 1)


def test_edge_split_follows_composition_order():
    e1, e2 = E(0, 2).split(1)
    assert compose_edges(e1, e2) == E(0, 2)
    assert (e1, e2) == (E(1, 2), E(0, 1))
    b1, b2 = E(0, 2, False).split(1)
    assert compose_edges(b1, b2) == E(0, 2, False)


def test_edge_key_roundtrip():
    e = E(Fraction(1, 3), 2, False, "loop")
    assert Edge.from_key(e.key()) == e
    with pytest.raises(GraphError):
        Edge.from_key("c:0:1:x")


def test_compose_edges_examples():
    assert compose_edges(E(1, 2), E(0, 1)) == E(0, 2)
    with pytest.raises(CompositionError):
        compose_edges(E(0, 1), E(1, 2))
    assert compose_edges(E(0, 1, False), E(1, 2, False)) == E(0, 2, False)


def test_compose_edges_rejects_other_curves_and_gaps():
    with pytest.raises(CompositionError):
        compose_edges(E(1, 2), E(0, 1, curve="d"))
    with pytest.raises(CompositionError):
        compose_edges(E(2, 3), E(0, 1))


# ==== graphs ===============================================================


def test_graph_rejects_overlaps_and_reverse_pairs():
    with pytest.raises(GraphError):
        Graph([E(0, 2), E(1, 3)])
    with pytest.raises(GraphError):
        Graph([E(0, 2), E(0, 2, False)])
    Graph([E(0, 1), E(1, 2), E(0, 1, curve="d")])


def test_canonical_order():
    g = Graph([E(1, 2, curve="b"), E(2, 3), E(0, 1, False)])
    assert g.ordered == (E(1, 2, curve="b"), E(0, 1, False), E(2, 3))


# ==== geq ==================================================================


def test_geq_examples():
    assert geq(Graph([E(0, 1), E(1, 2)]), Graph([E(0, 2)]))
    assert not geq(Graph([E(0, 1)]), Graph([E(0, 2)]))
    assert geq(Graph([E(0, 2, False)]), Graph([E(0, 2)]))


def test_geq_needs_exact_tiling():
    assert not geq(Graph([E(0, 1), E(Fraction(3, 2), 2)]), Graph([E(0, 2)]))
    assert not geq(Graph([E(-1, 1), E(1, 2)]), Graph([E(0, 2)]))
    assert geq(Graph([E(0, 1), E(1, 2), E(5, 6)]), Graph([E(0, 2)]))


@given(rngs)
def test_geq_preorder(rng):
    g0 = random_graph(rng)
    g1 = random_refinement(rng, g0)
    g2 = random_refinement(rng, g1)
    assert geq(g0, g0)
    assert geq(g1, g0) and geq(g2, g1)
    assert geq(g2, g0)


# ==== common refinement ====================================================


def test_common_refinement_examples():
    r = common_refinement(Graph([E(0, 2)]), Graph([E(1, 3)]))
    assert r == Graph([E(0, 1), E(1, 2), E(2, 3)])
    g = Graph([E(0, 1), E(2, 3)])
    assert common_refinement(g, g) == g
    a, b = Graph([E(0, 1)]), Graph([E(0, 1, curve="d")])
    assert common_refinement(a, b) == Graph([E(0, 1), E(0, 1, curve="d")])


def test_common_refinement_normalizes_orientation():
    g = Graph([E(0, 1, False)])
    assert common_refinement(g, g) == Graph([E(0, 1)])


def test_directedness_200_pairs():
    rng = random.Random(4)
    for _ in range(200):
        g1, g2 = random_graph(rng), random_graph(rng)
        r = common_refinement(g1, g2)
        assert geq(r, g1) and geq(r, g2)


# ==== plans ================================================================


def test_plan_examples():
    assert plan(Graph([E(0, 1), E(1, 2)]), Graph([E(0, 2)])) == [Sub(E(0, 2), Fraction(1))]
    assert plan(Graph([E(0, 1, False), E(2, 3)]), Graph([E(0, 1)])) == [Or(E(0, 1)), Add(E(2, 3))]
    moves = plan(FramedGraph({E(0, 1): Fraction(1, 2)}), FramedGraph({E(0, 1): 0}))
    assert moves == [Fr(E(0, 1), FramingLift(0), FramingLift(Fraction(1, 2)))]


def test_plan_not_comparable():
    with pytest.raises(NotComparableError):
        plan(Graph([E(0, 1)]), Graph([E(0, 2)]))


def test_plan_identity_is_empty():
    g = Graph([E(0, 1), E(3, 4, False)])
    assert plan(g, g) == []


def _replay(g1, g0, rng=None):
    return apply_moves(g0, plan(g1, g0, rng)) == g1


def test_plan_soundness_200_pairs():
    rng = random.Random(9)
    for i in range(200):
        g0 = random_graph(rng, framed=i % 2 == 1)
        g1 = random_refinement(rng, g0)
        assert _replay(g1, g0)
        assert _replay(g1, g0, rng)


@given(rngs)
def test_plan_soundness(rng):
    g0 = random_graph(rng, framed=rng.random() < 0.5)
    g1 = random_refinement(rng, g0, extra_edges=2)
    assert _replay(g1, g0, rng)


def test_framed_add_is_tagged_with_lift():
    g0 = FramedGraph({E(0, 1): 0})
    g1 = FramedGraph({E(0, 1): 0, E(2, 3): Fraction(1, 3)})
    moves = plan(g1, g0)
    adds = [m for m in moves if isinstance(m, Add)]
    assert adds and all(m.lift is not None for m in adds)
    assert apply_moves(g0, moves) == g1


def test_framed_relation_delegates_to_bare():
    g0 = FramedGraph({E(0, 2): Fraction(1, 4)})
    g1 = FramedGraph({E(0, 1): 0, E(1, 2): Fraction(-1, 6)})
    assert geq(g1, g0) and not geq(g0, g1)


# ==== JSON =================================================================


def test_json_roundtrip():
    g = FramedGraph({E(0, Fraction(1, 2)): Fraction(1, 3), E(1, 2, False, "d"): 0})
    assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g
    h = Graph([E(0, 1), E(2, 3, False)])
    data = graph_to_json(h)
    assert all("frame" not in e for e in data["edges"])
    assert graph_from_json(data) == h


@pytest.mark.parametrize(
    "data,path",
    [
        ([], "$"),
        ({}, "$"),
        ({"edges": [{"curve": "c", "lo": "x", "hi": "1", "dir": "f"}]}, "$.edges[0].lo"),
        ({"edges": [{"curve": "c", "lo": "0", "hi": "1", "dir": "z"}]}, "$.edges[0].dir"),
    ],
)
def test_json_schema_errors_carry_paths(data, path):
    with pytest.raises(GraphSchemaError) as info:
        graph_from_json(data)
    assert str(info.value).startswith(path)


def test_json_mixed_frames_rejected():
    data = {"edges": [
        {"curve": "c", "lo": "0", "hi": "1", "dir": "f", "frame": "0"},
        {"curve": "c", "lo": "1", "hi": "2", "dir": "f"},
    ]}
    with pytest.raises(GraphSchemaError):
        graph_from_json(data)
