import math

import pytest

import circlesweep as cs
from circlesweep import moves, sweep
from circlesweep.errors import (
    CannotPlace,
    NotACorner,
    NotCriticalPole,
    OutsideClosure,
    SeedSwallowed,
    UnknownCase,
)
from circlesweep.geom import Axis, Circle, Point, dist
from circlesweep.vdigraph import isomorphic

SQRT2_4 = math.sqrt(2) / 4


def _mp(arr, cid, angle):
    return cs.resolve_move_point(arr, cid, angle)


# -- safe_radius ---------------------------------------------------------------


def test_safe_radius_disk_pole(disk):
    mp = _mp(disk, "c0", 0.0)
    # oracle: nearest foreign features are the poles (0, +-1) at distance sqrt(2)
    expected = min(dist(Point(1, 0), q) for q in (Point(0, 1), Point(0, -1), Point(-1, 0))) / 4
    assert expected == pytest.approx(SQRT2_4)
    assert cs.safe_radius(disk, mp) == pytest.approx(expected)


def test_safe_radius_disk_bottom(disk):
    assert cs.safe_radius(disk, _mp(disk, "c0", -math.pi / 2)) == pytest.approx(SQRT2_4)


def test_safe_radius_annulus(annulus):
    # distance to the outer circle (0.5) ties with the pole (1, 0)
    assert cs.safe_radius(annulus, _mp(annulus, "c1", 0.0)) == pytest.approx(0.125)


def test_safe_radius_scales_with_dilation(disk):
    big = cs.Arrangement((Circle("c0", 0, 0, 3.0),), Point(0, 0))
    assert cs.safe_radius(big, _mp(big, "c0", 0.0)) == pytest.approx(3 * SQRT2_4)


# -- add_small_circle ----------------------------------------------------------


def test_add_small_circle_default(disk):
    arr2, newc = cs.add_small_circle(disk, _mp(disk, "c0", 0.0))
    assert newc.center == Point(1, 0)
    assert newc.r == pytest.approx(SQRT2_4)
    assert newc.region_side == "outside"
    assert arr2.seed == disk.seed
    assert cs.validate(arr2).valid


def test_add_small_circle_radius_too_big(disk):
    with pytest.raises(CannotPlace):
        cs.add_small_circle(disk, _mp(disk, "c0", 0.0), 2.0)


def test_add_small_circle_generic(disk):
    mp = _mp(disk, "c0", math.atan2(0.8, 0.6))
    arr2, newc = cs.add_small_circle(disk, mp, 0.1)
    assert cs.validate(arr2).valid
    pts = cs.intersect_circles(newc, disk.circles[0])
    assert sorted(round(q.x, 4) for q in pts) == [0.5171, 0.6769]


def test_add_small_circle_seed_swallowed():
    arr = cs.Arrangement((Circle("c0", 0, 0, 1),), Point(1 - 1e-5, 0))
    with pytest.raises(SeedSwallowed):
        cs.add_small_circle(arr, _mp(arr, "c0", 0.0))


# -- locate ---------------------------------------------------------------------


def test_locate_examples(disk):
    kind, _ = cs.locate(disk, Axis.X, Point(0.6, 0.8))
    assert kind == "edge"
    kind, vid = cs.locate(disk, Axis.X, Point(1, 0))
    assert kind == "vertex"
    assert cs.build_graph(disk, Axis.X).value(vid) == 1
    with pytest.raises(OutsideClosure):
        cs.locate(disk, Axis.X, Point(3, 0))


def test_locate_interior_point(annulus):
    kind, _ = cs.locate(annulus, Axis.X, Point(0.75, 0))
    assert kind == "edge"


# -- corner_frame ----------------------------------------------------------------


def test_corner_frame_lens(lens):
    s = math.sqrt(3) / 2
    fr = cs.corner_frame(lens, Point(0.5, s))
    assert fr.d1.x == pytest.approx(s, abs=1e-6)
    assert fr.d1.y == pytest.approx(-0.5, abs=1e-6)
    assert fr.d2.x == pytest.approx(-s, abs=1e-6)
    assert fr.d2.y == pytest.approx(-0.5, abs=1e-6)
    assert fr.sign_pattern == (-1, 1)
    # angle between the region-facing rays
    assert fr.theta == pytest.approx(2 * math.pi / 3)


def test_corner_frame_lens_mirrored(lens):
    s = math.sqrt(3) / 2
    fr = cs.corner_frame(lens, Point(0.5, -s))
    assert fr.d1.x == pytest.approx(s, abs=1e-6)
    assert fr.d1.y == pytest.approx(0.5, abs=1e-6)
    assert fr.d2.x == pytest.approx(-s, abs=1e-6)
    assert fr.d2.y == pytest.approx(0.5, abs=1e-6)
    assert fr.sign_pattern == (-1, 1)


def test_corner_frame_not_a_corner(disk):
    with pytest.raises(NotACorner):
        cs.corner_frame(disk, Point(0, 0))


def test_corner_frame_components_nonzero(disk_pole_moved):
    for corner in cs.corners(disk_pole_moved):
        fr = cs.corner_frame(disk_pole_moved, corner)
        for d in (fr.d1, fr.d2):
            assert abs(d.x) > 1e-9 and abs(d.y) > 1e-9


# -- pole_fiber_profile ------------------------------------------------------------


def test_profile_disk_poles(disk):
    prof = cs.pole_fiber_profile(disk, Point(1, 0), Axis.X)
    assert prof.pole_type == "II" and (prof.a, prof.b) == (1, 1)
    prof = cs.pole_fiber_profile(disk, Point(-1, 0), Axis.X)
    assert prof.pole_type == "I" and (prof.a, prof.b) == (1, 1)


def test_profile_stacked_fixture(stacked_pole_fixture):
    arr, _, _ = stacked_pole_fixture
    prof = cs.pole_fiber_profile(arr, Point(-0.65, 0), Axis.X)
    assert prof.pole_type == "I"
    assert prof.indices == (3, 1, 1, 1)
    assert prof.lseq[0] == pytest.approx(0.0)
    assert prof.lseq[1] == pytest.approx(math.sin(3 * math.pi / 4))
    assert prof.lseq[-1] == prof.rseq[-1]  # both sequences end at the segment top


def test_profile_regular_pole_rejected(disk):
    with pytest.raises(NotCriticalPole):
        cs.pole_fiber_profile(disk, Point(0, 1), Axis.X)


# -- classify -----------------------------------------------------------------------


@pytest.mark.parametrize(
    "angle,axis,case",
    [
        (0.0, Axis.X, "2.2.1"),
        (0.0, Axis.Y, "2.3.1"),
        (math.atan2(0.8, 0.6), Axis.X, "2.1.1"),
        (-math.pi / 2, Axis.X, "2.3.1"),
        (-math.pi / 2, Axis.Y, "2.2.1"),
    ],
)
def test_classify_disk(disk, angle, axis, case):
    assert cs.classify(disk, axis, _mp(disk, "c0", angle)).case == case


def test_classify_annulus(annulus):
    assert cs.classify(annulus, Axis.X, _mp(annulus, "c1", 0.0)).case == "2.2.2"
    assert cs.classify(annulus, Axis.X, _mp(annulus, "c1", math.pi / 2)).case == "2.3.2"
    assert cs.classify(annulus, Axis.X, _mp(annulus, "c0", 2 * math.pi / 3)).case == "2.1.2"


def test_classify_vertex_regular_poles(hole_base_233, hole_base_234):
    assert cs.classify(hole_base_233, Axis.X, _mp(hole_base_233, "c0", math.pi / 2)).case == "2.3.3"
    assert cs.classify(hole_base_234, Axis.X, _mp(hole_base_234, "h0", math.pi / 2)).case == "2.3.4"


def test_classify_corner_cases(lens, stacked_pole_fixture):
    assert cs.classify(lens, Axis.X, _mp(lens, "c0", math.pi / 3)).case == "3.2.3"
    arr, h1, _ = stacked_pole_fixture
    assert cs.classify(arr, Axis.X, _mp(arr, h1.id, 0.0)).case == "5.I"


# -- predict -------------------------------------------------------------------------


def test_predict_leaf_split_values(disk):
    g = cs.build_graph(disk, Axis.X)
    mp = _mp(disk, "c0", 0.0)
    cls = cs.classify(disk, Axis.X, mp)
    cands = cs.predict(g, cls, mp, SQRT2_4, disk)
    assert len(cands) == 1
    values = sorted(v.value for v in cands[0].graph.vertices)
    assert values == pytest.approx([-1, 1 - SQRT2_4, 0.9375, 0.9375])


def test_predict_generic_values(disk):
    g = cs.build_graph(disk, Axis.X)
    mp = _mp(disk, "c0", math.atan2(0.8, 0.6))
    cls = cs.classify(disk, Axis.X, mp)
    cands = cs.predict(g, cls, mp, 0.1, disk)
    assert len(cands) == 2  # the two fold orientations are not isomorphic
    arr2, _ = cs.add_small_circle(disk, mp, 0.1)
    post = cs.build_graph(arr2, Axis.X)
    hits = [c for c in cands if isomorphic(c.graph, post).isomorphic]
    assert len(hits) == 1
    values = sorted(v.value for v in hits[0].graph.vertices)
    assert values == pytest.approx([-1, 0.5, 0.5171, 0.6769, 1], abs=1e-4)


def test_predict_unknown_case(disk):
    g = cs.build_graph(disk, Axis.X)
    mp = _mp(disk, "c0", 0.0)
    cls = cs.classify(disk, Axis.X, mp)
    bogus = moves.MoveClassification(cls.axis, "9.9", cls.anchor)
    with pytest.raises(UnknownCase):
        cs.predict(g, bogus, mp, 0.1, disk)


# -- verify ---------------------------------------------------------------------------


def test_verify_disk_pole(disk):
    rep = cs.verify(disk, _mp(disk, "c0", 0.0))
    assert rep.ok
    assert rep.case_for(Axis.X) == "2.2.1"
    assert rep.radius == pytest.approx(SQRT2_4)


def test_verify_disk_generic(disk):
    rep = cs.verify(disk, _mp(disk, "c0", math.atan2(0.8, 0.6)))
    assert rep.ok
    assert rep.case_for(Axis.X) == "2.1.1"


def test_verify_radius_above_safe(disk):
    with pytest.raises(CannotPlace):
        cs.verify(disk, _mp(disk, "c0", 0.0), 2.0)


@pytest.mark.parametrize(
    "base,circle,angle,case",
    [
        ("disk", "c0", math.atan2(0.8, 0.6), "2.1.1"),
        ("annulus", "c0", 2 * math.pi / 3, "2.1.2"),
        ("disk", "c0", 0.0, "2.2.1"),
        ("annulus", "c1", 0.0, "2.2.2"),
        ("disk", "c0", -math.pi / 2, "2.3.1"),
        ("annulus", "c1", math.pi / 2, "2.3.2"),
        ("hole_base_233", "c0", math.pi / 2, "2.3.3"),
        ("hole_base_234", "h0", math.pi / 2, "2.3.4"),
    ],
)
def test_verify_catalog_cases(request, base, circle, angle, case):
    arr = request.getfixturevalue(base)
    mp = _mp(arr, circle, angle)
    assert cs.classify(arr, Axis.X, mp).case == case
    rep = cs.verify(arr, mp)
    assert rep.ok, rep.to_dict()["axes"]
    assert rep.case_for(Axis.X) == case


def test_verify_corner_moves(lens, disk_pole_moved):
    rep = cs.verify(lens, _mp(lens, "c0", math.pi / 3))
    assert rep.ok and rep.case_for(Axis.X) == "3.2.3"

    corner = max(cs.corners(disk_pole_moved), key=lambda c: c.point.y)
    ang = math.atan2(corner.point.y, corner.point.x)
    rep = cs.verify(disk_pole_moved, _mp(disk_pole_moved, "c0", ang))
    assert rep.ok
    assert rep.case_for(Axis.X) == "3.2.2.1"
    assert rep.case_for(Axis.Y) == "3.2.3"


def test_verify_stacked_pole(stacked_pole_fixture):
    arr, h1, _ = stacked_pole_fixture
    rep = cs.verify(arr, _mp(arr, h1.id, 0.0))
    assert rep.ok
    assert rep.case_for(Axis.X) == "5.I"
    post = rep.axes[0].recomputed
    # the rewrite parks collected features on a fresh vertex at the original value
    kept = [v for v in post.vertices if v.value == pytest.approx(-0.65)]
    assert len(kept) == 1 and post.degree(kept[0].id) == 3


def test_verify_stacked_pole_mirrored(stacked_pole_fixture):
    arr, h1, _ = stacked_pole_fixture
    mirrored = cs.apply_move(arr, cs.ReflectVertical(0.0))
    rep = cs.verify(mirrored, _mp(mirrored, h1.id, math.pi))
    assert rep.ok
    assert rep.case_for(Axis.X) == "5.II"


def test_verify_locality(disk):
    rep = cs.verify(disk, _mp(disk, "c0", 0.0))
    pre = [v.value for v in rep.axes[0].pre.vertices]
    post = [v.value for v in rep.axes[0].recomputed.vertices]
    new_vals = [v for v in post if v not in pre]
    for val in new_vals:
        assert 1 - 2 * rep.radius <= val <= 1 + 2 * rep.radius


def test_move_report_serializable(disk):
    from circlesweep.jsonio import canonical_json

    rep = cs.verify(disk, _mp(disk, "c0", 0.0))
    text = canonical_json(rep.to_dict())
    assert '"verdict":"ok"' in text
