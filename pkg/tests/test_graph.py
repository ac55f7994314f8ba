import pytest
from hypothesis import given
from hypothesis import strategies as st

from loceq.errors import BudgetExceeded, GraphFormatError, InvalidArgument, InvalidOperation
from loceq.gf import SUPPORTED_Q, field
from loceq.graph import (
    LabeledGraph,
    all_graphs,
    canonical_key,
    decode_key,
    delete_vertex,
    format_graph,
    is_connected,
    parse_graph,
    read_graph,
    scale_graph,
    scale_vertex,
    star,
)


@st.composite
def graphs(draw, qs=SUPPORTED_Q, max_n=6):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, max_n))
    labels = draw(st.lists(st.integers(0, q - 1), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return LabeledGraph(q, n, tuple(labels))


def test_star_path_becomes_triangle():
    P = LabeledGraph.from_edges(2, 3, [(0, 1, 1), (1, 2, 1)])
    assert star(P, 1, 1) == LabeledGraph.from_edges(2, 3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def test_star_example_q3():
    G = LabeledGraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2)])
    H = star(G, 0, 1)
    assert H.label(1, 2) == 2
    assert H.label(0, 1) == 1 and H.label(0, 2) == 2


def test_scale_vertex_example():
    G = LabeledGraph.from_edges(3, 3, [(0, 1, 1), (0, 2, 2)])
    H = scale_vertex(G, 0, 2)
    assert (H.label(0, 1), H.label(0, 2), H.label(1, 2)) == (2, 1, 0)


def test_scale_graph_example():
    G = LabeledGraph.from_edges(5, 2, [(0, 1, 2)])
    assert scale_graph(G, 3).label(0, 1) == 1
    assert scale_graph(G, 1) == G


def test_zero_scalars_rejected():
    G = LabeledGraph.from_edges(3, 2, [(0, 1, 1)])
    with pytest.raises(InvalidOperation):
        scale_vertex(G, 0, 0)
    with pytest.raises(InvalidOperation):
        scale_graph(G, 0)


def test_vertex_range():
    G = LabeledGraph.empty(3, 2)
    with pytest.raises(InvalidArgument):
        star(G, 2, 1)
    with pytest.raises(InvalidArgument):
        scale_vertex(G, -1, 1)


def test_constructor_validation():
    with pytest.raises(InvalidArgument):
        LabeledGraph(3, 3, (0, 1))
    with pytest.raises(InvalidArgument):
        LabeledGraph(3, 2, (3,))
    with pytest.raises(InvalidArgument):
        LabeledGraph.from_matrix(3, [[0, 1], [2, 0]])
    with pytest.raises(InvalidArgument):
        LabeledGraph.from_matrix(3, [[1, 0], [0, 0]])


@given(graphs(), st.data())
def test_star_inverse(G, data):
    f = G.field
    v = data.draw(st.integers(0, G.n - 1))
    r = data.draw(st.sampled_from(range(G.q)))
    H = star(G, v, r)
    assert star(H, v, f.neg[r]) == G
    assert H.row(v) == G.row(v)


@given(graphs(), st.data())
def test_scale_vertex_inverse(G, data):
    f = G.field
    v = data.draw(st.integers(0, G.n - 1))
    s = data.draw(st.sampled_from(f.nonzero))
    assert scale_vertex(scale_vertex(G, v, s), v, f.inv[s]) == G
    assert scale_vertex(G, v, 1) == G


@given(graphs(), st.data())
def test_scalar_commutes_with_local_ops(G, data):
    f = G.field
    v = data.draw(st.integers(0, G.n - 1))
    r = data.draw(st.sampled_from(range(G.q)))
    c = data.draw(st.sampled_from(f.nonzero))
    s = data.draw(st.sampled_from(f.nonzero))
    assert scale_graph(star(G, v, r), c) == star(scale_graph(G, c), v, f.div(r, c))
    assert scale_graph(scale_vertex(G, v, s), c) == scale_vertex(scale_graph(G, c), v, s)


@given(graphs())
def test_key_round_trip(G):
    assert decode_key(canonical_key(G)) == G
    assert canonical_key(LabeledGraph(G.q, G.n, list(G.labels))) == canonical_key(G)


def test_key_distinguishes_star():
    G = LabeledGraph.from_edges(2, 3, [(0, 1, 1), (1, 2, 1)])
    assert canonical_key(star(G, 1, 1)) != canonical_key(G)


def test_connectivity():
    assert is_connected(LabeledGraph.empty(3, 1))
    assert not is_connected(LabeledGraph.empty(3, 2))
    assert is_connected(LabeledGraph.from_edges(2, 4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]))
    assert not is_connected(LabeledGraph.from_edges(2, 4, [(0, 1, 1), (2, 3, 1)]))


def test_all_graphs_counts():
    assert len(list(all_graphs(2, 2))) == 2
    g3 = list(all_graphs(3, 2))
    assert len(g3) == 8
    assert sum(map(is_connected, g3)) == 4
    assert len(list(all_graphs(3, 2, connected_only=True))) == 4
    assert len(list(all_graphs(4, 3))) == 729


def test_all_graphs_budget():
    with pytest.raises(BudgetExceeded):
        all_graphs(6, 3, budget=1000)


def test_delete_vertex():
    G = LabeledGraph.from_edges(3, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 1)])
    H = delete_vertex(G, 1)
    assert H.n == 2 and H.label(0, 1) == 1


@given(graphs())
def test_text_round_trip(G):
    assert parse_graph(format_graph(G)) == G


def test_parse_comments_and_files(tmp_path):
    text = "# header next\n3 3\n0 1 2  # edge\n\n2 1 1\n"
    G = parse_graph(text)
    assert G.label(0, 1) == 2 and G.label(1, 2) == 1
    p = tmp_path / "g.txt"
    p.write_text(text)
    assert read_graph(p) == G


@pytest.mark.parametrize(
    "text,line",
    [
        ("", None),
        ("6 3\n", 1),
        ("3\n", 1),
        ("3 2\n0 1\n", 2),
        ("3 2\n0 0 1\n", 2),
        ("3 2\n0 1 3\n", 2),
        ("3 2\n0 1 1\n1 0 2\n", 3),
        ("3 2\n0 x 1\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(GraphFormatError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_field_property():
    assert LabeledGraph.empty(4, 2).field is field(4)
