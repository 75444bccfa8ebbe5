import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import circlesweep as cs
from circlesweep.errors import BadAnchor, LabelOrderViolation
from circlesweep.vdigraph import (
    Edge,
    RemoveVertex,
    SplitAtVertex,
    SplitLeaf,
    SubdivideEdge,
    VDigraph,
    Vertex,
    apply_rewrite,
    check_invariants,
    graph_from_dict,
    isomorphic,
    reversed_graph,
)


def path(*values):
    vertices = tuple(Vertex(f"v{i}", float(v)) for i, v in enumerate(values))
    edges = tuple(Edge(f"v{i}", f"v{i + 1}") for i in range(len(values) - 1))
    return VDigraph("x", vertices, edges)


def test_check_invariants_pass(disk):
    assert check_invariants(cs.build_graph(disk, cs.Axis.X)).passed


def test_check_invariants_loop():
    g = VDigraph("x", (Vertex("a", 0.0),), (Edge("a", "a"),))
    assert "no_loops" in check_invariants(g).failures


def test_check_invariants_orientation():
    g = VDigraph("x", (Vertex("a", 1.0), Vertex("b", 0.0)), (Edge("a", "b"),))
    assert "orientation" in check_invariants(g).failures


def test_check_invariants_connectivity():
    g = VDigraph("x", (Vertex("a", 0.0), Vertex("b", 1.0)), ())
    assert "connectivity" in check_invariants(g).failures


def test_iso_order_pattern():
    assert isomorphic(path(-1, 1), path(0, 5)).isomorphic


def test_iso_distinct_shapes(disk, annulus):
    g1 = cs.build_graph(disk, cs.Axis.X)
    g2 = cs.build_graph(annulus, cs.Axis.X)
    assert not isomorphic(g1, g2).isomorphic


def test_iso_tie_semantics():
    tied = VDigraph(
        "x",
        (Vertex("a", 0.0), Vertex("b", 1.0), Vertex("c", 1.0)),
        (Edge("a", "b"), Edge("a", "c")),
    )
    untied = VDigraph(
        "x",
        (Vertex("a", 0.0), Vertex("b", 1.0), Vertex("c", 2.0)),
        (Edge("a", "b"), Edge("a", "c")),
    )
    assert not isomorphic(tied, untied).isomorphic
    assert isomorphic(tied, tied).isomorphic


def test_iso_witness_is_bijection(annulus):
    g = cs.build_graph(annulus, cs.Axis.X)
    res = isomorphic(g, g)
    assert res.isomorphic
    assert sorted(res.witness) == sorted(res.witness.values())


def test_iso_multigraph_sensitivity():
    dbl = VDigraph(
        "x",
        (Vertex("a", 0.0), Vertex("b", 1.0), Vertex("c", 2.0)),
        (Edge("a", "b"), Edge("a", "b"), Edge("b", "c")),
    )
    single = VDigraph(
        "x",
        (Vertex("a", 0.0), Vertex("b", 1.0), Vertex("c", 2.0)),
        (Edge("a", "b"), Edge("b", "c"), Edge("b", "c")),
    )
    assert not isomorphic(dbl, single).isomorphic


def _fixture_graphs(*arrs):
    out = []
    for arr in arrs:
        for axis in (cs.Axis.X, cs.Axis.Y):
            out.append(cs.build_graph(arr, axis))
    return out


def test_iso_equivalence_relation(disk, annulus, lens, bite, disk_pole_moved):
    graphs = _fixture_graphs(disk, annulus, lens, bite, disk_pole_moved)
    for g in graphs:
        assert isomorphic(g, g).isomorphic
    for g1, g2 in itertools.combinations(graphs, 2):
        assert isomorphic(g1, g2).isomorphic == isomorphic(g2, g1).isomorphic
    # transitivity over a chain of relabelings
    g = graphs[1]
    h1 = VDigraph(g.axis, tuple(Vertex(v.id, 2 * v.value + 3) for v in g.vertices), g.edges)
    h2 = VDigraph(g.axis, tuple(Vertex(v.id, v.value**3) for v in h1.vertices), h1.edges)
    assert isomorphic(g, h1).isomorphic
    assert isomorphic(h1, h2).isomorphic
    assert isomorphic(g, h2).isomorphic


@given(
    scale=st.floats(min_value=0.1, max_value=10),
    shift=st.floats(min_value=-100, max_value=100),
)
@settings(max_examples=30)
def test_iso_monotone_relabel_invariance(annulus, scale, shift):
    g = cs.build_graph(annulus, cs.Axis.X)
    h = VDigraph(g.axis, tuple(Vertex(v.id, scale * v.value + shift) for v in g.vertices), g.edges)
    assert isomorphic(g, h).isomorphic


def test_split_leaf_fixture_values(disk):
    # the leaf split of the pole-centered addition at radius sqrt(2)/4
    g = cs.build_graph(disk, cs.Axis.X)
    r = 0.3535533905932738
    out = apply_rewrite(g, SplitLeaf("v1", (1 - r * r / 2, 1 - r * r / 2), 1 - r))
    values = sorted(v.value for v in out.vertices)
    assert values == pytest.approx([-1, 0.6464466094067262, 0.9375, 0.9375])
    relabeled = [v for v in out.vertices if v.value == pytest.approx(0.6464466094067262)]
    assert out.degree(relabeled[0].id) == 3
    assert check_invariants(out).passed


def test_subdivide_edge(disk):
    g = cs.build_graph(disk, cs.Axis.X)
    out = apply_rewrite(g, SubdivideEdge(("v0", "v1", 0), (0.52, 0.68)))
    assert len(out.vertices) == 4
    assert check_invariants(out).passed
    assert max(out.degree(v.id) for v in out.vertices) == 2


def test_split_leaf_bad_anchor(annulus):
    g = cs.build_graph(annulus, cs.Axis.X)
    with pytest.raises(BadAnchor):
        apply_rewrite(g, SplitLeaf("v1", (0.1, 0.1), 0.2))  # degree-3 vertex


def test_rewrite_label_violation(disk):
    g = cs.build_graph(disk, cs.Axis.X)
    with pytest.raises(LabelOrderViolation):
        apply_rewrite(g, SubdivideEdge(("v0", "v1", 0), (5.0,)))


def test_split_at_vertex(annulus):
    g = cs.build_graph(annulus, cs.Axis.X)
    out = apply_rewrite(g, SplitAtVertex("v2", 0.484375, 0.625))
    assert check_invariants(out).passed
    tied = [v for v in out.vertices if v.value == 0.484375]
    assert len(tied) == 2


def test_remove_vertex(lens):
    g = cs.build_graph(lens, cs.Axis.X)
    out = apply_rewrite(g, RemoveVertex("v1"))
    assert len(out.vertices) == 2 and len(out.edges) == 1
    assert check_invariants(out).passed


def test_graph_dict_round_trip(annulus):
    g = cs.build_graph(annulus, cs.Axis.X)
    doc = g.to_dict()
    h = graph_from_dict(doc)
    assert isomorphic(g, h).isomorphic
    assert h.to_dict() == doc


def test_reversed_graph_involution(annulus):
    g = cs.build_graph(annulus, cs.Axis.X)
    assert isomorphic(reversed_graph(reversed_graph(g)), g).isomorphic
