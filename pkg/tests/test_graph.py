import random

import pytest

from artincenter.graph import (
    INF,
    DefiningGraph,
    GraphFormatError,
    make_graph,
    parse_graph,
)


def test_parse_basic():
    g = parse_graph("vertices: a b\nedge a b 3\n")
    assert g.vertices == ("a", "b")
    assert g.label("a", "b") == 3
    assert g.label("b", "a") == 3


def test_absent_edge_is_infinite():
    g = parse_graph("vertices: a b\n")
    assert g.label("a", "b") == INF


def test_explicit_inf_normalizes_to_absence():
    g = parse_graph("vertices: a b\nedge a b inf\n")
    assert g.label("a", "b") == INF
    assert g.edges == ()
    assert g.to_text() == parse_graph("vertices: a b\n").to_text()


def test_comments_and_blank_lines():
    g = parse_graph("# header\n\nvertices: a b c  # trailing\nedge a b 2\n# done\n")
    assert g.label("a", "b") == 2


@pytest.mark.parametrize(
    "text",
    [
        "vertices: a\nedge a a 3\n",        # self-loop
        "vertices: a a\n",                  # duplicate vertex
        "vertices: a b\nedge a q 3\n",      # unknown vertex
        "vertices: a b\nedge a b 1\n",      # label < 2
        "vertices: a b\nedge a b 3\nedge a b 4\n",  # conflicting duplicate
        "edge a b 3\n",                     # missing vertices line
        "vertices: a b\nedge a b x\n",      # malformed label
        "vertices: a b\nedge a b\n",        # short edge line
    ],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_duplicate_identical_edge_is_idempotent():
    g = parse_graph("vertices: a b\nedge a b 3\nedge a b 3\n")
    assert g.label("a", "b") == 3


def test_serialize_round_trip():
    text = "vertices: c a b\nedge a b 3\nedge c a 5\n"
    g = parse_graph(text)
    once = g.to_text()
    again = parse_graph(once).to_text()
    assert once == again
    assert once.splitlines()[0] == "vertices: c a b"


def test_cone_points():
    path = make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)])
    assert path.cone_points() == ("b",)
    triangle = make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 4), ("a", "c", 5)])
    assert triangle.cone_points() == ("a", "b", "c")
    isolated = make_graph(["a", "b"], [])
    assert isolated.cone_points() == ()


def test_join_factors_examples():
    k4 = make_graph(
        "abcd", [(u, v, 2) for u, v in [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]]
    )
    assert [f.vertices for f in k4.join_factors()] == [("a",), ("b",), ("c",), ("d",)]

    edge = make_graph(["a", "b"], [("a", "b", 3)])
    assert [f.vertices for f in edge.join_factors()] == [("a", "b")]

    joined = make_graph(["a", "b", "c"], [("a", "b", 3), ("a", "c", 2), ("b", "c", 2)])
    assert [f.vertices for f in joined.join_factors()] == [("a", "b"), ("c",)]


def test_join_factors_properties_random():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(0, 7)
        verts = list("abcdefg"[:n])
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                m = rng.choice((2, 2, 3, 5, INF))
                if m != INF:
                    edges.append((verts[i], verts[j], m))
        g = make_graph(verts, edges)
        factors = g.join_factors()
        # partition of the vertex set
        combined = [v for f in factors for v in f.vertices]
        assert sorted(combined) == sorted(g.vertices)
        # maximality: factors do not decompose further
        for f in factors:
            assert [x.vertices for x in f.join_factors()] == [f.vertices]
        # cross-factor labels are exactly 2
        for fi in range(len(factors)):
            for fj in range(fi + 1, len(factors)):
                for u in factors[fi].vertices:
                    for v in factors[fj].vertices:
                        assert g.label(u, v) == 2


def test_induced():
    path = make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)])
    sub = path.induced(["a", "c"])
    assert sub.vertices == ("a", "c")
    assert sub.label("a", "c") == INF
    assert path.induced(path.vertices) == path
    assert path.induced([]).vertices == ()
    with pytest.raises(ValueError):
        path.induced(["a", "z"])


def test_induced_preserves_declaration_order():
    g = make_graph(["c", "a", "b"], [("c", "a", 3)])
    assert g.induced(["a", "b", "c"]).vertices == ("c", "a", "b")


def test_is_clique():
    assert make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 4), ("a", "c", 5)]).is_clique()
    assert not make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)]).is_clique()
    assert make_graph(["a"], []).is_clique()
    # every vertex of a clique is a cone point
    tri = make_graph(["a", "b", "c"], [("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])
    assert tri.cone_points() == tri.vertices


def test_amalgam_split():
    path = make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 3)])
    left, base, right = path.amalgam_split("a", "c")
    assert left.vertices == ("b", "c")
    assert base.vertices == ("b",)
    assert right.vertices == ("a", "b")

    two = make_graph(["a", "b"], [])
    left, base, right = two.amalgam_split("a", "b")
    assert left.vertices == ("b",)
    assert base.vertices == ()
    assert right.vertices == ("a",)

    tri = make_graph(["a", "b", "c"], [("a", "b", 3), ("b", "c", 4), ("a", "c", 5)])
    with pytest.raises(ValueError):
        tri.amalgam_split("a", "b")


def test_graph_is_hashable_and_immutable():
    g = make_graph(["a", "b"], [("a", "b", 3)])
    h = make_graph(["a", "b"], [("a", "b", 3)])
    assert g == h and hash(g) == hash(h)
    assert {g, h} == {g}
