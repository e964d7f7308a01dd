import random
from math import comb

import pytest
from hypothesis import given, settings

from conftest import atlas_graphs, graphs
from crossings.census import (
    CONFIG_TYPES,
    census,
    census_by_enumeration,
    classify_subset,
    closed_form_census,
    count_config,
    count_r_matchings,
)
from crossings.errors import ValidationError
from crossings.graph import FAMILIES, FAMILY_MINIMUM, FamilyId, build_graph, family_graph


def fam(tag, k):
    return family_graph(FamilyId(tag, k))


@pytest.mark.parametrize("tag,k,r,expected", [
    ("path", 5, 2, 3),        # C(n-r, r) = C(3, 2)
    ("cycle", 6, 3, 2),       # (n/r) C(n-r-1, r-1) = 2 * C(2, 2)
    ("triangles", 2, 2, 9),   # 3^r C(n, r) = 9 * C(2, 2)
])
def test_r_matching_examples(tag, k, r, expected):
    assert count_r_matchings(fam(tag, k), r) == expected


@pytest.mark.parametrize("r", [0, 5, -1])
def test_r_out_of_range(r):
    with pytest.raises(ValidationError):
        count_r_matchings(fam("path", 5), r)


def test_config_examples():
    assert count_config(fam("path", 7), "C2") == 3      # 3 C(n-4, 3)
    assert count_config(fam("cycle", 6), "C7") == 12    # n (n-4)
    for t in CONFIG_TYPES:
        assert count_config(fam("matching", 5), t) == 0


def test_unknown_config():
    with pytest.raises(ValidationError):
        count_config(fam("path", 5), "C3")


def test_census_path5():
    c = census(fam("path", 5))
    assert (c.m2, c.m3, c.m4, c.s2, c.s4, c.s5, c.s6, c.s7) == (3, 0, 0, 0, 0, 0, 1, 2)


def test_census_triangles2():
    c = census(fam("triangles", 2))
    assert (c.m2, c.m3, c.m4, c.s2, c.s4, c.s7) == (9, 0, 0, 0, 9, 18)


def test_census_edgeless():
    c = census(build_graph(5, []))
    assert (c.m2, c.m3, c.m4, c.s2, c.s4, c.s5, c.s6, c.s7) == (0,) * 8


def test_closed_form_examples():
    c = closed_form_census(FamilyId("path", 6))
    assert (c.s4, c.s5) == (1, 2)
    assert closed_form_census(FamilyId("cycle", 7)).s2 == 7
    c = closed_form_census(FamilyId("kite", 6))
    assert (c.m2, c.m4, c.s7) == (3, 0, 3)


@pytest.mark.parametrize("edges,kind", [
    ([(1, 2), (3, 4), (5, 6)], "m3"),
    ([(1, 2), (2, 3), (4, 5)], "C7"),
    ([(1, 2), (2, 3), (3, 4)], None),                 # P4: not a union of two 2-matchings
    ([(1, 2), (2, 3), (1, 3)], None),                 # triangle
    ([(1, 2), (3, 4), (5, 6), (7, 8)], "m4"),
    ([(1, 2), (2, 3), (4, 5), (6, 7)], "C2"),
    ([(1, 2), (2, 3), (4, 5), (5, 6)], "C4"),
    ([(1, 2), (2, 3), (3, 4), (5, 6)], "C5"),
    ([(1, 2), (2, 3), (3, 4), (4, 5)], "C6"),
    ([(1, 2), (2, 3), (3, 4), (1, 4)], "Q4"),
    ([(1, 2), (1, 3), (1, 4), (5, 6)], None),         # degree 3
    ([(1, 2), (2, 3), (1, 3), (4, 5)], None),         # triangle + edge
])
def test_classifier(edges, kind):
    assert classify_subset(edges) == kind


def test_oracle_agreement_atlas():
    for g in atlas_graphs(6):
        assert census(g) == census_by_enumeration(g), g


def test_oracle_agreement_random_8_vertices():
    rng = random.Random(20240501)
    for _ in range(60):
        n = rng.randint(6, 8)
        p = rng.random()
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
        g = build_graph(n, edges)
        assert census(g) == census_by_enumeration(g), g


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_oracle_agreement_property(g):
    assert census(g) == census_by_enumeration(g)


@given(graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_m2_identity(g):
    c = census(g)
    assert c.m2 == comb(g.m, 2) - sum(comb(d, 2) for d in g.degrees)
    assert min(c.as_dict().values()) >= 0
    assert c.m4 <= comb(g.m, 4)


@given(graphs(min_n=2, max_n=9))
@settings(max_examples=80, deadline=None)
def test_monotone_under_edge_deletion(g):
    if g.m == 0:
        return
    full = census(g).as_dict()
    for drop in g.edges:
        sub = census(build_graph(g.n, [e for e in g.edges if e != drop])).as_dict()
        for key in ("m", "m2", "m3", "m4", "s2", "s4", "s5", "s6", "s7", "delta"):
            assert sub[key] <= full[key]


@pytest.mark.parametrize("tag", FAMILIES)
def test_family_closed_forms(tag):
    for k in range(FAMILY_MINIMUM[tag], 31):
        assert closed_form_census(FamilyId(tag, k)) == census(fam(tag, k)), (tag, k)


def test_census_scales_to_thousands_of_edges():
    c = census(fam("cycle", 3000))
    assert c == closed_form_census(FamilyId("cycle", 3000))
    c = census(fam("kite", 1500))
    assert c == closed_form_census(FamilyId("kite", 1500))
