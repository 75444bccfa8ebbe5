import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import circlesweep as cs
from circlesweep.errors import DegenerateIntersection, NotOnCircle
from circlesweep.geom import Axis, Circle, Point, Tolerance, all_pole_points, dist

EPS = 1e-9


def test_poles_axis_x():
    c = Circle("c", 2, 3, 0.5)
    crit, reg = cs.poles(c, Axis.X)
    assert {p.point for p in crit} == {Point(1.5, 3), Point(2.5, 3)}
    assert {p.point for p in reg} == {Point(2, 2.5), Point(2, 3.5)}
    assert all(p.kind == "sweep_critical" for p in crit)


def test_poles_unit_circle():
    c = Circle("c", 0, 0, 1)
    crit_x, _ = cs.poles(c, Axis.X)
    assert {p.point for p in crit_x} == {Point(-1, 0), Point(1, 0)}
    crit_y, reg_y = cs.poles(c, Axis.Y)
    assert {p.point for p in crit_y} == {Point(0, -1), Point(0, 1)}
    assert {p.point for p in reg_y} == {Point(-1, 0), Point(1, 0)}


def _on_both(p: Point, c1: Circle, c2: Circle, tol=1e-8):
    # oracle: substitute into both circle equations
    return abs(dist(p, c1.center) - c1.r) <= tol and abs(dist(p, c2.center) - c2.r) <= tol


def test_intersect_two_unit_circles():
    c1, c2 = Circle("a", 0, 0, 1), Circle("b", 1, 0, 1)
    pts = cs.intersect_circles(c1, c2)
    assert len(pts) == 2
    ys = sorted(p.y for p in pts)
    assert ys == pytest.approx([-math.sqrt(3) / 2, math.sqrt(3) / 2])
    assert all(p.x == pytest.approx(0.5) for p in pts)
    assert all(_on_both(p, c1, c2) for p in pts)


def test_intersect_separated():
    assert cs.intersect_circles(Circle("a", 0, 0, 1), Circle("b", 3, 0, 1)) == ()


def test_intersect_nested():
    assert cs.intersect_circles(Circle("a", 0, 0, 1), Circle("b", 0.1, 0, 0.2)) == ()


def test_intersect_tangent_is_error():
    with pytest.raises(DegenerateIntersection) as exc:
        cs.intersect_circles(Circle("a", 0, 0, 1), Circle("b", 2, 0, 1))
    assert exc.value.kind == "tangency"


def test_intersect_coincident_is_error():
    with pytest.raises(DegenerateIntersection) as exc:
        cs.intersect_circles(Circle("a", 0, 0, 1), Circle("b", 0, 0, 1))
    assert exc.value.kind == "coincident"


def test_tangent_direction_east():
    t1, t2 = cs.tangent_direction(Circle("c", 0, 0, 1), Point(1, 0))
    assert {(round(t.x, 12), round(t.y, 12)) for t in (t1, t2)} == {(0, 1), (0, -1)}


def test_tangent_direction_derived():
    # quarter-turn of the radius vector
    p = Point(0.5, math.sqrt(3) / 2)
    t1, t2 = cs.tangent_direction(Circle("c", 0, 0, 1), p)
    expected = Point(-math.sqrt(3) / 2, 0.5)
    assert any(
        t.x == pytest.approx(s * expected.x) and t.y == pytest.approx(s * expected.y)
        for t in (t1, t2)
        for s in (1, -1)
    )


def test_tangent_off_circle():
    with pytest.raises(NotOnCircle):
        cs.tangent_direction(Circle("c", 0, 0, 1), Point(2, 0))


def test_apply_move_examples(disk):
    moved = cs.apply_move(disk, cs.Translate(1, 2))
    assert moved.circles[0].center == Point(1, 2)
    assert moved.seed == Point(1, 2)

    arr = cs.Arrangement((cs.Circle("c0", 1, 0, 0.5),), cs.Point(1, 0))
    assert cs.apply_move(arr, cs.ReflectVertical(0)).circles[0].center == Point(-1, 0)
    rot = cs.apply_move(arr, cs.RotateQuarter(Point(0, 0), "ccw"))
    assert rot.circles[0].center.x == pytest.approx(0)
    assert rot.circles[0].center.y == pytest.approx(1)
    rot_cw = cs.apply_move(arr, cs.RotateQuarter(Point(0, 0), "cw"))
    assert rot_cw.circles[0].center.y == pytest.approx(-1)


finite = st.floats(min_value=-5, max_value=5, allow_nan=False)
radii = st.floats(min_value=0.05, max_value=3)


@given(cx=finite, cy=finite, r=radii, axis=st.sampled_from([Axis.X, Axis.Y]))
def test_poles_lie_on_circle(cx, cy, r, axis):
    c = Circle("c", cx, cy, r)
    crit, reg = cs.poles(c, axis)
    for p in crit + reg:
        assert abs(dist(p.point, c.center) - r) <= EPS


@given(x1=finite, y1=finite, r1=radii, x2=finite, y2=finite, r2=radii)
def test_intersection_symmetric_and_on_circles(x1, y1, r1, x2, y2, r2):
    c1, c2 = Circle("a", x1, y1, r1), Circle("b", x2, y2, r2)
    try:
        pts12 = cs.intersect_circles(c1, c2)
        pts21 = cs.intersect_circles(c2, c1)
    except DegenerateIntersection:
        return
    assert {(round(p.x, 9), round(p.y, 9)) for p in pts12} == {
        (round(p.x, 9), round(p.y, 9)) for p in pts21
    }
    for p in pts12:
        assert abs(dist(p, c1.center) - r1) <= 10 * EPS
        assert abs(dist(p, c2.center) - r2) <= 10 * EPS


_moves = st.one_of(
    st.builds(cs.Translate, finite, finite),
    st.builds(cs.ReflectVertical, finite),
    st.builds(cs.ReflectHorizontal, finite),
    st.builds(cs.RotateQuarter, st.builds(Point, finite, finite), st.sampled_from(["ccw", "cw"])),
)


@given(move=_moves, cx=finite, cy=finite, r=radii, cx2=finite, cy2=finite, r2=radii)
@settings(max_examples=60)
def test_apply_move_preserves_distances_and_radii(move, cx, cy, r, cx2, cy2, r2):
    arr = cs.Arrangement(
        (Circle("a", cx, cy, r), Circle("b", cx2, cy2, r2)), Point(cx, cy), Tolerance()
    )
    moved = cs.apply_move(arr, move)
    assert [c.r for c in moved.circles] == [c.r for c in arr.circles]
    d0 = dist(arr.circles[0].center, arr.circles[1].center)
    d1 = dist(moved.circles[0].center, moved.circles[1].center)
    assert abs(d0 - d1) <= 10 * EPS


@given(dx=finite, dy=finite, cx=finite, cy=finite, r=radii)
def test_translate_round_trip(dx, dy, cx, cy, r):
    arr = cs.Arrangement((Circle("a", cx, cy, r),), Point(cx, cy))
    back = cs.apply_move(cs.apply_move(arr, cs.Translate(dx, dy)), cs.Translate(-dx, -dy))
    assert dist(back.circles[0].center, arr.circles[0].center) <= 10 * EPS
    assert dist(back.seed, arr.seed) <= 10 * EPS


def test_pole_points_cover_both_axes():
    c = Circle("c", 1, 2, 3)
    assert set(all_pole_points(c)) == {Point(-2, 2), Point(4, 2), Point(1, -1), Point(1, 5)}


def test_tolerance_range():
    with pytest.raises(ValueError):
        Tolerance(0.0)
    with pytest.raises(ValueError):
        Tolerance(1e-2)
