"""Circle primitives: poles, intersections, tangents, rigid motions.

All operations are pure functions on immutable values under an absolute
coordinate tolerance (radii are desk scale, O(1)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import NamedTuple

from .errors import DegenerateIntersection, NotOnCircle

DEFAULT_EPS = 1e-9

INSIDE = "inside"
OUTSIDE = "outside"

SWEEP_CRITICAL = "sweep_critical"
SWEEP_REGULAR = "sweep_regular"


class Point(NamedTuple):
    x: float
    y: float

    def shifted(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)


def require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite coordinate: {v!r}")


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


class Axis(Enum):
    """Projection choice: graph value = this coordinate, fibers transverse."""

    X = "x"
    Y = "y"

    @property
    def index(self) -> int:
        return 0 if self is Axis.X else 1

    def value_of(self, p: Point) -> float:
        return p.x if self is Axis.X else p.y

    def other_of(self, p: Point) -> float:
        return p.y if self is Axis.X else p.x


@dataclass(frozen=True)
class Tolerance:
    """Absolute coordinate tolerance; 0 < eps < 1e-3."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not (0.0 < self.eps < 1e-3):
            raise ValueError(f"tolerance out of range: {self.eps}")


@dataclass(frozen=True)
class Circle:
    id: str
    cx: float
    cy: float
    r: float
    region_side: str = INSIDE  # side of this circle the region lies on

    def __post_init__(self):
        require_finite(self.cx, self.cy, self.r)
        if self.r <= 0:
            raise ValueError(f"radius must be positive, got {self.r}")
        if self.region_side not in (INSIDE, OUTSIDE):
            raise ValueError(f"bad region_side: {self.region_side!r}")

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)

    @property
    def sign(self) -> int:
        return 1 if self.region_side == INSIDE else -1

    def point_at(self, angle: float) -> Point:
        return Point(self.cx + self.r * math.cos(angle), self.cy + self.r * math.sin(angle))

    def signed_margin(self, p: Point) -> float:
        """Coordinate-scale margin: positive iff p is on the region side."""
        return self.sign * (self.r - dist(p, self.center))

    def boundary_distance(self, p: Point) -> float:
        """Distance from p to the circle (as a curve)."""
        return abs(dist(p, self.center) - self.r)

    def on_circle(self, p: Point, eps: float = DEFAULT_EPS) -> bool:
        return self.boundary_distance(p) <= eps


@dataclass(frozen=True)
class Pole:
    """Axis-extreme point of a circle.

    ``sweep_critical`` poles for an axis are the two points where the
    tangent line is parallel to the fiber direction (they fold the sweep);
    the other two are ``sweep_regular``. The kind is keyed on tangency
    geometry, not on any naming convention.
    """

    point: Point
    owner: str
    kind: str
    axis: Axis


def poles(c: Circle, axis: Axis) -> tuple[tuple[Pole, Pole], tuple[Pole, Pole]]:
    """Return ((critical pair), (regular pair)) of the circle for the axis."""
    horiz = (Point(c.cx - c.r, c.cy), Point(c.cx + c.r, c.cy))
    vert = (Point(c.cx, c.cy - c.r), Point(c.cx, c.cy + c.r))
    crit, reg = (horiz, vert) if axis is Axis.X else (vert, horiz)
    return (
        tuple(Pole(p, c.id, SWEEP_CRITICAL, axis) for p in crit),
        tuple(Pole(p, c.id, SWEEP_REGULAR, axis) for p in reg),
    )


def all_pole_points(c: Circle) -> tuple[Point, Point, Point, Point]:
    """The four axis-extreme points, axis-independent."""
    return (
        Point(c.cx - c.r, c.cy),
        Point(c.cx + c.r, c.cy),
        Point(c.cx, c.cy - c.r),
        Point(c.cx, c.cy + c.r),
    )


def intersect_circles(c1: Circle, c2: Circle, tol: Tolerance = Tolerance()) -> tuple[Point, ...]:
    """Transversal intersection points of two distinct circles.

    Returns two points, or the empty tuple when separated/nested.
    Raises DegenerateIntersection for tangent or coincident pairs; these
    signal an arrangement-invalid pair rather than an empty answer.
    """
    if c1.id == c2.id:
        raise ValueError("intersect_circles requires distinct circles")
    eps = tol.eps
    d = dist(c1.center, c2.center)
    if d <= eps and abs(c1.r - c2.r) <= eps:
        raise DegenerateIntersection("coincident", f"{c1.id}/{c2.id}")
    if abs(d - (c1.r + c2.r)) <= eps or abs(d - abs(c1.r - c2.r)) <= eps:
        raise DegenerateIntersection("tangency", f"{c1.id}/{c2.id}")
    if d > c1.r + c2.r or d < abs(c1.r - c2.r):
        return ()
    a = (d * d + c1.r * c1.r - c2.r * c2.r) / (2.0 * d)
    h2 = c1.r * c1.r - a * a
    h = math.sqrt(max(h2, 0.0))
    ux, uy = (c2.cx - c1.cx) / d, (c2.cy - c1.cy) / d
    mx, my = c1.cx + a * ux, c1.cy + a * uy
    return (Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux))


def tangent_direction(c: Circle, p: Point, tol: Tolerance = Tolerance()) -> tuple[Point, Point]:
    """Both unit tangent directions of the circle at a point on it."""
    v = Point(p.x - c.cx, p.y - c.cy)
    n = math.hypot(v.x, v.y)
    if abs(n - c.r) > tol.eps:
        raise NotOnCircle(f"point {p} not on circle {c.id} (|d-r|={abs(n - c.r):.3e})")
    t = Point(-v.y / n, v.x / n)
    return (t, Point(-t.x, -t.y))


# -- rigid motions ----------------------------------------------------------

CCW = "ccw"
CW = "cw"


@dataclass(frozen=True)
class Translate:
    dx: float
    dy: float

    def apply(self, p: Point) -> Point:
        return Point(p.x + self.dx, p.y + self.dy)


@dataclass(frozen=True)
class ReflectVertical:
    """Reflection across the vertical line x = x0."""

    x0: float

    def apply(self, p: Point) -> Point:
        return Point(2.0 * self.x0 - p.x, p.y)


@dataclass(frozen=True)
class ReflectHorizontal:
    """Reflection across the horizontal line y = x0."""

    x0: float

    def apply(self, p: Point) -> Point:
        return Point(p.x, 2.0 * self.x0 - p.y)


@dataclass(frozen=True)
class RotateQuarter:
    """Quarter rotation about a center; ccw maps (1,0)-offsets to (0,1)."""

    center: Point
    direction: str = CCW

    def __post_init__(self):
        if self.direction not in (CCW, CW):
            raise ValueError(f"bad rotation direction: {self.direction!r}")

    def apply(self, p: Point) -> Point:
        cx, cy = self.center
        dx, dy = p.x - cx, p.y - cy
        if self.direction == CCW:
            return Point(cx - dy, cy + dx)
        return Point(cx + dy, cy - dx)


RigidMove = Translate | ReflectVertical | ReflectHorizontal | RotateQuarter


def apply_move(arr, move: RigidMove):
    """Transformed copy of an arrangement; radii and region sides unchanged."""
    circles = tuple(
        replace(c, cx=move.apply(c.center).x, cy=move.apply(c.center).y) for c in arr.circles
    )
    return replace(arr, circles=circles, seed=move.apply(arr.seed))
