import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkrecog.catalog import GroupId, GroupSpecError, parse_group, pi
from gkrecog.gkgraph import (
    E6_3,
    E6_3_TWISTED,
    GKGraph,
    encoded_graph,
    export,
    graph_for,
    nonneighbors_of,
    parse_graph,
    rule_graph,
)


def test_encoded_graph_sizes_are_pinned():
    minus, plus = encoded_graph(E6_3_TWISTED), encoded_graph(E6_3)
    assert (len(minus.vertices), len(minus.edges)) == (10, 12)
    assert (len(plus.vertices), len(plus.edges)) == (9, 12)


def test_encoded_graph_degrees():
    minus, plus = encoded_graph(E6_3_TWISTED), encoded_graph(E6_3)
    assert minus.neighbors(37) == (19,)
    assert plus.degree(757) == 0


@pytest.mark.parametrize("target", [E6_3, E6_3_TWISTED], ids=str)
def test_encoded_vertices_match_order_formula(target):
    assert encoded_graph(target).vertices == pi(target)


def test_encoded_graph_rejects_other_groups():
    with pytest.raises(GroupSpecError):
        encoded_graph(GroupId("F4", q=3))


def test_nonneighbors():
    assert nonneighbors_of(encoded_graph(E6_3_TWISTED), 2) == (19, 37, 73)
    assert nonneighbors_of(encoded_graph(E6_3), 2) == (73, 757)
    assert nonneighbors_of(GKGraph.build([2, 3, 5], []), 2) == (3, 5)
    with pytest.raises(ValueError):
        nonneighbors_of(GKGraph.build([2, 3, 5], []), 7)


def test_alt5_and_alt6_have_the_same_edgeless_graph():
    g5, g6 = rule_graph(GroupId("Alt", 5)), rule_graph(GroupId("Alt", 6))
    assert g5 == g6 == GKGraph.build([2, 3, 5], [])


def test_l2_757_components():
    g = rule_graph(GroupId("L", 2, 757))
    assert g.components() == [(2, 3, 7), (379,), (757,)]


@pytest.mark.parametrize("q", [5, 7, 8, 11, 16, 25, 27, 49, 81, 125, 757, 3**9, 757**2])
def test_l2_graph_has_three_clique_components(q):
    g = rule_graph(GroupId("L", 2, q))
    comps = g.components()
    assert len(comps) == 3
    for comp in comps:
        assert all(g.has_edge(a, b) for a in comp for b in comp if a < b)
    assert g.vertices == pi(GroupId("L", 2, q))


def test_rule_graph_rejects_unsupported():
    with pytest.raises(GroupSpecError):
        rule_graph(GroupId("L", 3, 3))


def test_graph_for_uses_isomorphic_names():
    assert graph_for(parse_group("L(3,2)")) == rule_graph(GroupId("L", 2, 7))
    assert graph_for(parse_group("L(4,2)")) == rule_graph(GroupId("Alt", 8))


def test_export_edge_list_order():
    lines = export(encoded_graph(E6_3), "edges").splitlines()
    assert lines[0] == "2 3"
    assert lines[-1] == "13 73"
    assert len(lines) == 12


def test_export_empty_graph_dot():
    assert export(GKGraph.build([], []), "dot") == "graph G {\n}\n"


def test_export_dot_layout():
    text = export(GKGraph.build([2, 3, 5], [(3, 2)]), "dot")
    assert text == "graph G {\n  2;\n  3;\n  5;\n  2 -- 3;\n}\n"


def test_export_json_shape():
    data = json.loads(export(encoded_graph(E6_3_TWISTED), "json"))
    assert data["vertices"] == [2, 3, 5, 7, 13, 19, 37, 41, 61, 73]
    assert data["edges"][0] == [2, 3]
    assert data["edges"] == sorted(data["edges"])


@pytest.mark.parametrize("fmt", ["dot", "json"])
@pytest.mark.parametrize("target", [E6_3, E6_3_TWISTED], ids=str)
def test_round_trip_encoded(fmt, target):
    g = encoded_graph(target)
    assert parse_graph(export(g, fmt), fmt) == g
    assert parse_graph(export(g, fmt)) == g  # format sniffing


def test_edge_list_round_trip_needs_isolated_vertices():
    g = encoded_graph(E6_3)
    text = export(g, "edges")
    assert parse_graph(text, "edges", vertices=g.vertices) == g
    assert 757 not in parse_graph(text, "edges").vertices
    assert parse_graph(text + "757\n", "edges") == g


@st.composite
def graphs(draw, max_vertices=12):
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    vs = draw(st.lists(st.sampled_from(primes[:max_vertices]), unique=True, max_size=max_vertices))
    pairs = [(a, b) for a in vs for b in vs if a < b]
    es = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return GKGraph.build(vs, es)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_round_trip_property(g):
    for fmt in ("dot", "json"):
        assert parse_graph(export(g, fmt), fmt) == g
    assert parse_graph(export(g, "edges"), "edges", vertices=g.vertices) == g


def test_graph_invariants():
    with pytest.raises(ValueError):
        GKGraph.build([2, 3], [(2, 2)])
    with pytest.raises(ValueError):
        GKGraph((2, 3), frozenset({(2, 5)}))
    with pytest.raises(ValueError):
        GKGraph((3, 2), frozenset())
    assert GKGraph.build([3, 2], [(3, 2)]).has_edge(2, 3)
