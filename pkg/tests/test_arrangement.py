import json
import math

import pytest

import circlesweep as cs
from circlesweep.errors import InvalidArrangement
from circlesweep.geom import INSIDE, OUTSIDE, Circle, Point
from circlesweep.jsonio import canonical_json


def test_membership_examples(disk):
    assert cs.membership(disk, Point(0, 0)).state == "interior"
    assert cs.membership(disk, Point(2, 0)).state == "exterior"
    m = cs.membership(disk, Point(1, 0))
    assert m.state == "boundary" and m.on_circles == ("c0",)


def test_membership_seed_interior_for_fixtures(disk, annulus, lens, bite):
    for arr in (disk, annulus, lens, bite):
        assert cs.membership(arr, arr.seed).state == "interior"


def test_validate_disk(disk):
    report = cs.validate(disk)
    assert report.valid and report.violations == ()


def test_validate_pole_intersection():
    # (1, 0) lies on both circles and is a sweep-critical pole of the first
    arr = cs.Arrangement(
        (Circle("c0", 0, 0, 1, INSIDE), Circle("c1", 1, 1, 1, OUTSIDE)), Point(-0.2, 0)
    )
    report = cs.validate(arr)
    assert not report.valid
    assert any(v.clause == "no_pole_intersection" for v in report.violations)


def test_validate_triple_point(lens):
    corner = Point(0.5, math.sqrt(3) / 2)
    third = Circle("c2", corner.x, corner.y - 0.9, 0.9, INSIDE)
    arr = cs.Arrangement(lens.circles + (third,), cs.Point(0.5, 0.2))
    report = cs.validate(arr)
    assert not report.valid
    assert any(v.clause == "no_triple" for v in report.violations)


def test_validate_tangent_pair():
    arr = cs.Arrangement(
        (Circle("c0", 0, 0, 1, INSIDE), Circle("c1", 2, 0, 1, OUTSIDE)), Point(0, 0)
    )
    report = cs.validate(arr)
    assert not report.valid
    assert any(v.clause == "transversal" for v in report.violations)


def test_validate_unbounded_seed():
    # seed outside the disk: sign cell requires inside, so seed is exterior
    arr = cs.Arrangement((Circle("c0", 0, 0, 1, INSIDE),), Point(3, 0))
    report = cs.validate(arr)
    assert not report.valid
    assert any(v.clause == "bounded" for v in report.violations)


def test_validate_invariant_under_rigid_moves(disk_pole_moved):
    assert cs.validate(disk_pole_moved).valid
    bad = cs.Arrangement(
        (Circle("c0", 0, 0, 1, INSIDE), Circle("c1", 2, 0, 1, OUTSIDE)), Point(0, 0)
    )
    assert not cs.validate(bad).valid
    for move in (
        cs.Translate(0.3, -2.0),
        cs.ReflectVertical(0.25),
        cs.ReflectHorizontal(-1.0),
        cs.RotateQuarter(Point(0.1, 0.7), "ccw"),
        cs.RotateQuarter(Point(-1.0, 0.2), "cw"),
    ):
        assert cs.validate(cs.apply_move(disk_pole_moved, move)).valid
        assert not cs.validate(cs.apply_move(bad, move)).valid


def test_corners_on_exactly_two_circles(annulus, lens, bite, disk_pole_moved):
    for arr in (lens, bite, disk_pole_moved):
        for corner in cs.corners(arr):
            dists = sorted(c.boundary_distance(corner.point) for c in arr.circles)
            assert dists[0] <= arr.eps and dists[1] <= arr.eps
            if len(dists) > 2:
                assert dists[2] > 10 * arr.eps
    assert cs.corners(annulus) == ()


def test_boundary_features_disk(disk):
    feats = cs.boundary_features(disk, cs.Axis.X)
    assert len(feats) == 4
    assert all(on for _, on in feats)
    crit_pts = {f.point for f, _ in feats if f.kind == "sweep_critical"}
    assert crit_pts == {Point(-1, 0), Point(1, 0)}


def test_boundary_features_annulus(annulus):
    feats = cs.boundary_features(annulus, cs.Axis.X)
    crit_on = {f.point for f, on in feats if on and getattr(f, "kind", "") == "sweep_critical"}
    assert crit_on == {Point(-1, 0), Point(1, 0), Point(-0.5, 0), Point(0.5, 0)}


def test_boundary_features_lens(lens):
    feats = cs.boundary_features(lens, cs.Axis.X)
    on_pts = {(round(f.point.x, 6), round(f.point.y, 6)) for f, on in feats if on}
    s = round(math.sqrt(3) / 2, 6)
    assert (0.5, s) in on_pts and (0.5, -s) in on_pts
    assert (1.0, 0.0) in on_pts and (0.0, 0.0) in on_pts  # critical poles inside the lens
    off_pts = {(round(f.point.x, 6), round(f.point.y, 6)) for f, on in feats if not on}
    assert (-1.0, 0.0) in off_pts and (2.0, 0.0) in off_pts


def test_on_region_features_have_boundary_membership(disk_pole_moved):
    for f, on in cs.boundary_features(disk_pole_moved, cs.Axis.X):
        if on:
            assert cs.membership(disk_pole_moved, f.point).state == "boundary"


def test_json_round_trip(annulus):
    doc = cs.arrangement_to_dict(annulus)
    text = canonical_json(doc)
    again = cs.arrangement_from_dict(json.loads(text))
    assert again == annulus
    assert canonical_json(cs.arrangement_to_dict(again)) == text


def test_malformed_document():
    with pytest.raises(ValueError):
        cs.arrangement_from_dict({"circles": [{"id": "a"}], "seed": [0, 0]})


def test_structural_invariants():
    with pytest.raises(InvalidArrangement):
        cs.Arrangement((), Point(0, 0))
    with pytest.raises(InvalidArrangement):
        cs.Arrangement(
            (Circle("a", 0, 0, 1), Circle("a", 1, 0, 1)), Point(0, 0)
        )
