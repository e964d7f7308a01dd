import pytest
from hypothesis import given

from conftest import graphs
from crossings.errors import DuplicateEdgeError, ParseError, SelfLoopError, ValidationError, VertexRangeError
from crossings.graph import (
    FAMILIES,
    FAMILY_MINIMUM,
    FamilyId,
    build_graph,
    family_graph,
    max_degree,
    parse_edge_list,
    serialize_edge_list,
)


def test_build_graph_basic():
    g = build_graph(4, [(1, 2), (3, 4)])
    assert g.m == 2
    assert max_degree(g) == 1


def test_build_graph_normalizes_and_sorts():
    g = build_graph(5, [(4, 3), (2, 1), (5, 1)])
    assert g.edges == ((1, 2), (1, 5), (3, 4))


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        build_graph(3, [(1, 1)])


def test_duplicate_after_normalization_rejected():
    with pytest.raises(DuplicateEdgeError):
        build_graph(5, [(1, 2), (2, 1)])


@pytest.mark.parametrize("edge", [(0, 1), (1, 6), (-2, 3)])
def test_out_of_range_rejected(edge):
    with pytest.raises(VertexRangeError):
        build_graph(5, [edge])


def test_diagnostics_are_distinct():
    kinds = set()
    for n, edges in [(3, [(1, 1)]), (3, [(1, 2), (2, 1)]), (3, [(1, 4)])]:
        with pytest.raises(ValidationError) as info:
            build_graph(n, edges)
        kinds.add(type(info.value))
    assert len(kinds) == 3


def test_matching_family():
    g = family_graph(FamilyId("matching", 3))
    assert g.n == 6
    assert g.edges == ((1, 2), (3, 4), (5, 6))


def test_cycle_family():
    g = family_graph(FamilyId("cycle", 5))
    assert set(g.edges) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}


def test_kite_family():
    g = family_graph(FamilyId("kite", 5))
    assert g.m == 4
    assert max_degree(g) == 3
    assert g.edges == ((1, 2), (1, 3), (1, 4), (4, 5))


@pytest.mark.parametrize("tag,k,expected", [("path", 6, 2), ("matching", 4, 1), ("kite", 7, 5)])
def test_max_degree_examples(tag, k, expected):
    assert max_degree(family_graph(FamilyId(tag, k))) == expected


def test_edgeless_max_degree():
    assert max_degree(build_graph(4, [])) == 0


@pytest.mark.parametrize("tag", FAMILIES)
def test_family_minimum_enforced(tag):
    with pytest.raises(ValidationError):
        FamilyId(tag, FAMILY_MINIMUM[tag] - 1)


@pytest.mark.parametrize("tag", FAMILIES)
@pytest.mark.parametrize("offset", range(0, 25, 3))
def test_family_shape(tag, offset):
    k = FAMILY_MINIMUM[tag] + offset
    g = family_graph(FamilyId(tag, k))
    expected = {
        "matching": (2 * k, k, 1),
        "path": (k, k - 1, 2),
        "cycle": (k, k, 2),
        "triangles": (3 * k, 3 * k, 2),
        "kite": (k, k - 1, k - 2),
    }[tag]
    if tag == "path" and k == 2:
        expected = (2, 1, 1)
    assert (g.n, g.m, max_degree(g)) == expected
    assert sum(g.degrees) == 2 * g.m


def test_parse_example():
    g = parse_edge_list("4 2\n1 2\n3 4\n")
    assert g == build_graph(4, [(1, 2), (3, 4)])


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# a comment\n\n3 2\n# inner\n1 2\n2 3\n")
    assert g.edges == ((1, 2), (2, 3))


def test_parse_wrong_edge_count():
    with pytest.raises(ParseError, match="declared 3 edges, found 2"):
        parse_edge_list("4 3\n1 2\n3 4\n")


@pytest.mark.parametrize("text", ["", "4\n", "a b\n", "3 1\n1 x\n", "3 1\n1 2 3\n"])
def test_parse_malformed(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_propagates_validation():
    with pytest.raises(SelfLoopError):
        parse_edge_list("3 1\n2 2\n")


def test_serialize_canonical():
    assert serialize_edge_list(family_graph(FamilyId("path", 3))) == "3 2\n1 2\n2 3\n"


@given(graphs(max_n=10))
def test_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g
    assert sum(g.degrees) == 2 * g.m


def test_graph_is_hashable_and_immutable():
    g = build_graph(3, [(1, 2)])
    assert hash(g) == hash(build_graph(3, [(2, 1)]))
    with pytest.raises(AttributeError):
        g.n = 4
