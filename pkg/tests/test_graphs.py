import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antilabel import (
    FamilySpec,
    Graph,
    ParseError,
    bipartition,
    complement,
    complete_multipartite,
    cycle,
    generate,
    grid,
    hypercube,
    join,
    parse_graph,
    path,
    pendant_star,
    random_tree,
    serialize_graph,
    star,
    union,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if possible:
        edges = draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible)))
    else:
        edges = []
    return Graph(n, edges)


def test_graph_basic_invariants():
    g = Graph(4, [(0, 1), (2, 1), (1, 2)])  # duplicates collapse, order normalizes
    assert g.edges == ((0, 1), (1, 2))
    assert g.neighbors(1) == (0, 2)
    assert g.degree(1) == 2 and g.degree(3) == 0
    assert g.max_degree == 2 and g.min_degree == 0
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(-1)


def test_path_smallest():
    g = path(2)
    assert (g.n, g.m) == (2, 1)


def test_hypercube_3():
    g = hypercube(3)
    assert (g.n, g.m) == (8, 12)
    assert g.max_degree == g.min_degree == 3
    sides = bipartition(g)
    assert sides is not None and sorted(sides.sizes) == [4, 4]


def test_complete_multipartite_2_3():
    g = complete_multipartite(2, 3)
    assert (g.n, g.m) == (5, 6)


def test_union_examples():
    assert union(path(2), path(2)).m == 2
    k3 = complete_multipartite(1, 1, 1)
    assert union(k3, Graph(1)).m == 3
    u = union(cycle(3), cycle(4))
    assert (u.n, u.m) == (7, 7)
    # no cross edges
    assert all(not ((a < 3) ^ (b < 3)) for a, b in u.edges)


def test_join_examples():
    assert join(Graph(2), Graph(3)) == complete_multipartite(2, 3)
    wheel = join(Graph(1), cycle(4))
    assert (wheel.n, wheel.m) == (5, 8)
    assert join(path(2), path(2)).m == 6  # complete on 4 vertices


def test_complement_examples():
    k4 = complete_multipartite(1, 1, 1, 1)
    assert complement(k4).m == 0
    assert complement(path(3)).edges == ((0, 2),)
    c5c = complement(cycle(5))
    assert sorted(c5c.degree(v) for v in c5c.vertices) == [2, 2, 2, 2, 2]


def test_bipartition_examples():
    assert sorted(bipartition(path(4)).sizes) == [2, 2]
    assert bipartition(cycle(5)) is None
    q3 = bipartition(hypercube(3))
    assert q3 is not None
    assert q3.x1 == frozenset(v for v in range(8) if bin(v).count("1") % 2 == 0)


@settings(deadline=None, max_examples=120)
@given(graphs())
def test_handshake_and_complement_involution(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.m
    assert complement(complement(g)) == g
    assert complement(g).m == g.n * (g.n - 1) // 2 - g.m


@settings(deadline=None, max_examples=80)
@given(graphs(max_n=6), graphs(max_n=6))
def test_union_join_counts(g1, g2):
    u = union(g1, g2)
    assert (u.n, u.m) == (g1.n + g2.n, g1.m + g2.m)
    j = join(g1, g2)
    assert (j.n, j.m) == (g1.n + g2.n, g1.m + g2.m + g1.n * g2.n)


@settings(deadline=None, max_examples=120)
@given(graphs())
def test_bipartition_has_no_monochromatic_edge(g):
    sides = bipartition(g)
    if sides is None:
        return
    for u, v in g.edges:
        assert (u in sides.x1) != (v in sides.x1)


@settings(deadline=None, max_examples=60)
@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=10**6))
def test_random_tree_is_a_deterministic_tree(n, seed):
    t = random_tree(n, seed)
    assert t.m == n - 1
    assert t.is_connected()
    assert t == random_tree(n, seed)


def test_generator_declared_properties():
    assert cycle(5).min_degree == cycle(5).max_degree == 2
    g = grid(3, 4)
    assert (g.n, g.m) == (12, 3 * 3 + 2 * 4)
    assert g.has_edge(0, 1) and g.has_edge(0, 4)  # row-major numbering
    s = star(4)
    assert s.degree(0) == 4 and s.n == 5
    ps = pendant_star(2, 3)
    assert ps.n == 5 and ps.m == 4
    assert sorted(bipartition(ps).sizes) == [2, 3]
    assert ps.max_degree == 3


def test_pendant_star_validation():
    with pytest.raises(ValueError):
        pendant_star(3, 2)
    with pytest.raises(ValueError):
        pendant_star(0, 2)


def test_family_spec_round_trip():
    spec = FamilySpec.parse("grid:3,4")
    assert spec == FamilySpec("grid", (3, 4))
    assert str(spec) == "grid:3,4"
    assert generate(spec) == grid(3, 4)
    assert generate(FamilySpec.parse("multipartite:2,3")) == complete_multipartite(2, 3)
    assert generate(FamilySpec.parse("random-tree:9,42")) == random_tree(9, 42)


def test_family_spec_rejects_garbage():
    for bad in ["nope:3", "path", "path:", "path:x", "grid:3", "cycle:2", "hypercube:0"]:
        with pytest.raises(ValueError):
            generate(FamilySpec.parse(bad))


def test_parse_graph_examples():
    assert parse_graph("p 3 2\ne 0 1\ne 1 2") == path(3)
    lone = parse_graph("p 1 0")
    assert (lone.n, lone.m) == (1, 0)
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("e 0 0")


def test_parse_graph_headerless_infers_n():
    g = parse_graph("e 0 1\ne 1 4")
    assert g.n == 5 and g.m == 2


def test_parse_graph_error_lines():
    with pytest.raises(ParseError, match="line 2.*out of range"):
        parse_graph("p 2 1\ne 0 2")
    with pytest.raises(ParseError, match="line 3.*duplicate edge"):
        parse_graph("e 0 1\n# fine\ne 1 0")
    with pytest.raises(ParseError, match="line 1.*tag"):
        parse_graph("q 1 2")
    with pytest.raises(ParseError, match="declares"):
        parse_graph("p 3 2\ne 0 1")
    with pytest.raises(ParseError, match="line 2.*header must precede"):
        parse_graph("e 0 1\np 2 1")


def test_serialize_round_trip_on_comments_and_whitespace():
    text = "# a path\np 3 2\n\ne 1 2   # tail comment\ne 0 1\n"
    g = parse_graph(text)
    assert parse_graph(serialize_graph(g)) == g
    assert serialize_graph(g) == "p 3 2\ne 0 1\ne 1 2\n"


@settings(deadline=None, max_examples=80)
@given(graphs())
def test_serialize_parse_identity(g):
    assert parse_graph(serialize_graph(g)) == g
