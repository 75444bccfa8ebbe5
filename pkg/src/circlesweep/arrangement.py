"""Circle arrangements: region model, membership, features, validation.

An arrangement is a circle family with region-side signs plus a seed
point; the region is the connected component of the sign cell
``{q : every circle's signed margin > 0}`` containing the seed.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from . import geom
from .errors import DegenerateIntersection, InvalidArrangement
from .geom import Circle, Point, Tolerance, dist

INTERIOR = "interior"
BOUNDARY = "boundary"
EXTERIOR = "exterior"


@dataclass(frozen=True)
class Arrangement:
    circles: tuple[Circle, ...]
    seed: Point
    tol: Tolerance = Tolerance()

    def __post_init__(self):
        if not self.circles:
            raise InvalidArrangement("arrangement needs at least one circle")
        ids = [c.id for c in self.circles]
        if len(set(ids)) != len(ids):
            raise InvalidArrangement(f"duplicate circle ids: {ids}")
        geom.require_finite(self.seed.x, self.seed.y)
        for c in self.circles:
            if c.r <= self.tol.eps:
                raise InvalidArrangement(f"circle {c.id} radius below tolerance")

    def circle(self, cid: str) -> Circle:
        for c in self.circles:
            if c.id == cid:
                return c
        raise KeyError(cid)

    @property
    def eps(self) -> float:
        return self.tol.eps

    def with_circle(self, c: Circle) -> "Arrangement":
        return Arrangement(self.circles + (c,), self.seed, self.tol)

    def fresh_id(self) -> str:
        used = {c.id for c in self.circles}
        k = len(self.circles)
        while f"c{k}" in used:
            k += 1
        return f"c{k}"


@dataclass(frozen=True)
class Membership:
    state: str
    on_circles: tuple[str, ...] = ()


def membership(arr: Arrangement, q: Point) -> Membership:
    """Sign-cell membership of a point, with the circles it lies on.

    Interior/Exterior refer to the sign cell; the seed's connected
    component is selected downstream by the sweep.
    """
    eps = arr.eps
    on = []
    ok = True
    for c in arr.circles:
        if c.boundary_distance(q) <= eps:
            on.append(c.id)
        elif c.signed_margin(q) <= eps:
            ok = False
    if not ok:
        return Membership(EXTERIOR)
    if on:
        return Membership(BOUNDARY, tuple(on))
    return Membership(INTERIOR)


@dataclass(frozen=True)
class Corner:
    """Transversal intersection point of exactly two circles."""

    point: Point
    circles: tuple[str, str]


def corners(arr: Arrangement) -> tuple[Corner, ...]:
    """All pairwise intersection points in the plane.

    Raises DegenerateIntersection for tangent/coincident pairs; validation
    reports those as data instead.
    """
    out = []
    for c1, c2 in itertools.combinations(arr.circles, 2):
        for p in geom.intersect_circles(c1, c2, arr.tol):
            pair = tuple(sorted((c1.id, c2.id)))
            out.append(Corner(p, pair))
    return tuple(out)


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str
    features: tuple = ()

    def to_dict(self) -> dict:
        return {"clause": self.clause, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...] = ()

    def to_dict(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_dict() for v in self.violations]}


_CLAUSE_ORDER = {
    "bounded": 0,
    "transversal": 1,
    "no_triple": 2,
    "no_pole_intersection": 3,
    "touches_all_circles": 4,
    "near_degenerate": 5,
}

_validate_cache: dict[tuple[Arrangement, bool], ValidationReport] = {}


def validate(arr: Arrangement, lenient: bool = False) -> ValidationReport:
    """Check the arrangement clauses; violations are data, not errors.

    Strict mode (default) enforces transversality, triple-point and
    pole-exclusion everywhere in the plane; lenient mode restricts those
    checks to points meeting the sign-cell closure.
    """
    key = (arr, lenient)
    cached = _validate_cache.get(key)
    if cached is not None:
        return cached
    report = _validate(arr, lenient)
    if len(_validate_cache) > 512:
        _validate_cache.clear()
    _validate_cache[key] = report
    return report


def _in_cell_closure(arr: Arrangement, p: Point) -> bool:
    return membership(arr, p).state in (INTERIOR, BOUNDARY)


def _validate(arr: Arrangement, lenient: bool) -> ValidationReport:
    eps = arr.eps
    violations: list[Violation] = []

    if membership(arr, arr.seed).state != INTERIOR:
        violations.append(Violation("bounded", "seed point is not strictly interior to the sign cell"))

    all_points: list[tuple[Point, tuple[str, str]]] = []
    for c1, c2 in itertools.combinations(arr.circles, 2):
        d = dist(c1.center, c2.center)
        gap_outer = abs(d - (c1.r + c2.r))
        gap_inner = abs(d - abs(c1.r - c2.r))
        try:
            pts = geom.intersect_circles(c1, c2, arr.tol)
        except DegenerateIntersection as exc:
            a = (d * d + c1.r * c1.r - c2.r * c2.r) / (2.0 * d) if d > eps else c1.r
            ux, uy = ((c2.cx - c1.cx) / d, (c2.cy - c1.cy) / d) if d > eps else (1.0, 0.0)
            touch = Point(c1.cx + a * ux, c1.cy + a * uy)
            if not lenient or _in_cell_closure(arr, touch):
                violations.append(
                    Violation("transversal", f"{exc.kind} between {c1.id} and {c2.id}", (touch,))
                )
            continue
        if pts and min(gap_outer, gap_inner) <= 10 * eps:
            violations.append(
                Violation("near_degenerate", f"near-tangent pair {c1.id}/{c2.id} (margin <= 10*eps)")
            )
        for p in pts:
            all_points.append((p, (c1.id, c2.id)))

    for p, pair in all_points:
        if lenient and not _in_cell_closure(arr, p):
            continue
        for c in arr.circles:
            if c.id in pair:
                continue
            if c.boundary_distance(p) <= 10 * eps:
                violations.append(
                    Violation(
                        "no_triple",
                        f"third circle {c.id} passes through intersection of {pair[0]}/{pair[1]}",
                        (p,),
                    )
                )
        for c in arr.circles:
            for pole_pt in geom.all_pole_points(c):
                if dist(p, pole_pt) <= 10 * eps:
                    violations.append(
                        Violation(
                            "no_pole_intersection",
                            f"intersection of {pair[0]}/{pair[1]} coincides with a pole of {c.id}",
                            (p,),
                        )
                    )

    if not violations:
        violations.extend(_sweep_clauses(arr))

    violations.sort(key=lambda v: _CLAUSE_ORDER.get(v.clause, 9))
    return ValidationReport(not violations, tuple(violations))


def _sweep_clauses(arr: Arrangement) -> list[Violation]:
    """Clauses needing fiber machinery: boundedness, contact, genericity."""
    from . import sweep  # deferred: sweep depends on this module's types

    violations: list[Violation] = []
    contact: set[str] = set()
    for axis in (geom.Axis.X, geom.Axis.Y):
        try:
            res = sweep.get_sweep(arr, axis)
        except Exception as exc:  # degenerate geometry the sweep cannot order
            violations.append(Violation("near_degenerate", f"sweep failed on axis {axis.value}: {exc}"))
            return violations
        if res.unbounded_seed:
            violations.append(
                Violation("bounded", f"seed component does not terminate along axis {axis.value}")
            )
        if res.seed_run is None:
            violations.append(
                Violation("bounded", f"seed not inside any bounded fiber interval (axis {axis.value})")
            )
        contact |= res.contact_circles
        violations.extend(_genericity_clause(arr, res, axis))
    if not any(v.clause == "bounded" for v in violations):
        missing = sorted({c.id for c in arr.circles} - contact)
        if missing:
            violations.append(
                Violation(
                    "touches_all_circles",
                    f"region closure never meets circle(s): {', '.join(missing)}",
                )
            )
    return violations


def _genericity_clause(arr: Arrangement, res, axis) -> list[Violation]:
    """No two critical values within tolerance, except blessed exact ties.

    Exact ties (<= eps) are allowed when the tied features are the two
    corners of one circle pair, or when they lie on a single closed fiber
    segment (deliberate stacked-pole alignments). Near ties in
    (eps, 10*eps] are always rejected: event ordering would be ambiguous.
    """
    eps = arr.eps
    violations = []
    values = sorted((ev.value, ev) for ev in res.events)
    for (v1, _), (v2, _) in zip(values, values[1:]):
        if eps < v2 - v1 <= 10 * eps:
            violations.append(
                Violation(
                    "near_degenerate",
                    f"critical values {v1!r} and {v2!r} within 10*eps on axis {axis.value}",
                )
            )
    for ev in res.events:
        if len(ev.features) < 2:
            continue
        if _shared_circle_corners(ev.features):
            continue
        if len(ev.segments) == 1:
            continue
        placed = [seg for seg in ev.segments if seg.features]
        if len(placed) == 1:
            continue
        violations.append(
            Violation(
                "near_degenerate",
                f"{len(ev.features)} features tie at value {ev.value!r} on axis {axis.value} "
                "without a blessing (corners of one circle or shared fiber segment)",
            )
        )
    return violations


def _shared_circle_corners(features) -> bool:
    """Tied corners all involving one common circle: forced by its construction."""
    common: set[str] | None = None
    for f in features:
        if not isinstance(f, Corner):
            return False
        common = set(f.circles) if common is None else common & set(f.circles)
    return bool(common)


def boundary_features(arr: Arrangement, axis: geom.Axis):
    """All poles (both kinds) and corners with their on-region flags."""
    from . import sweep

    if not validate(arr).valid:
        raise InvalidArrangement("boundary_features requires a valid arrangement")
    res = sweep.get_sweep(arr, axis)
    out = []
    for c in arr.circles:
        crit, reg = geom.poles(c, axis)
        for pole in crit + reg:
            out.append((pole, res.point_on_region(pole.point)))
    for corner in corners(arr):
        out.append((corner, res.point_on_region(corner.point)))
    return out


# -- file schema -------------------------------------------------------------


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "circles": [
            {"id": c.id, "cx": c.cx, "cy": c.cy, "r": c.r, "region_side": c.region_side}
            for c in arr.circles
        ],
        "seed": [arr.seed.x, arr.seed.y],
        "tolerance": arr.eps,
    }


def arrangement_from_dict(data: dict) -> Arrangement:
    try:
        circles = tuple(
            Circle(
                id=str(c["id"]),
                cx=float(c["cx"]),
                cy=float(c["cy"]),
                r=float(c["r"]),
                region_side=str(c["region_side"]),
            )
            for c in data["circles"]
        )
        seed = Point(float(data["seed"][0]), float(data["seed"][1]))
        tol = Tolerance(float(data.get("tolerance", geom.DEFAULT_EPS)))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise ValueError(f"malformed arrangement document: {exc}") from exc
    return Arrangement(circles, seed, tol)


def load_arrangement(path: str) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return arrangement_from_dict(json.load(fh))
