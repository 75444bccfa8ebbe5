"""Small-circle additions: placement, classification, prediction, verification.

A move picks a point on an existing circle inside the region closure and
adds a sufficiently small circle centered there (the region always loses
the new disk). Each move lands in a finite catalog of local graph
rewrites; ``verify`` recomputes the post-move graph and checks that it is
isomorphic to exactly one predicted candidate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import geom, sweep, vdigraph
from .arrangement import (
    BOUNDARY,
    EXTERIOR,
    Arrangement,
    Corner,
    arrangement_to_dict,
    corners,
    membership,
    validate,
)
from .errors import (
    BadAnchor,
    CannotPlace,
    DegeneratePoint,
    InvalidArrangement,
    LabelOrderViolation,
    NotACorner,
    NotCriticalPole,
    OutsideClosure,
    SeedSwallowed,
    UnknownCase,
    UnsupportedConfiguration,
    ZeroComponent,
)
from .geom import OUTSIDE, Axis, Circle, Point, dist
from .vdigraph import VDigraph, isomorphic, reversed_graph

FORBIDDEN_CASES = ("3.2.1", "3.2.2.2", "3.2.4")


@dataclass(frozen=True)
class MovePoint:
    circle: str
    angle: float
    point: Point


def resolve_move_point(arr: Arrangement, circle_id: str, angle: float) -> MovePoint:
    """Point on the named circle; must lie in the region closure."""
    c = arr.circle(circle_id)
    p = c.point_at(angle)
    res = sweep.get_sweep(arr, Axis.X)
    if membership(arr, p).state != BOUNDARY or not res.point_on_region(p):
        raise OutsideClosure(f"angle {angle!r} on {circle_id} is not on the region closure")
    return MovePoint(circle_id, angle, p)


def safe_radius(arr: Arrangement, p: MovePoint) -> float:
    """Quarter of the distance from p to the nearest foreign feature.

    Features: circles not through p, and every pole/corner other than p
    itself. Guarantees the new circle meets only circles through p and
    stays clear of all special points.
    """
    eps = arr.eps
    q = p.point
    dists: list[float] = []
    for c in arr.circles:
        bd = c.boundary_distance(q)
        if bd > 10 * eps:
            dists.append(bd)
    for c in arr.circles:
        for pole_pt in geom.all_pole_points(c):
            d = dist(q, pole_pt)
            if d > 10 * eps:
                dists.append(d)
    for corner in corners(arr):
        d = dist(q, corner.point)
        if d > 10 * eps:
            dists.append(d)
    if not dists:
        raise DegeneratePoint("no features away from the move point")
    D = min(dists)
    if D <= 10 * eps:
        raise DegeneratePoint(f"nearest feature within 10*eps of {q}")
    return D / 4.0


def add_small_circle(
    arr: Arrangement, p: MovePoint, r: float | None = None
) -> tuple[Arrangement, Circle]:
    """Append an outside-signed circle centered at p; halve-and-retry on failure."""
    eps = arr.eps
    safe = safe_radius(arr, p)
    radius = safe if r is None else float(r)
    if radius > safe + eps:
        raise CannotPlace(f"radius {radius!r} exceeds safe bound {safe!r}")
    if radius <= 10 * eps:
        raise DegeneratePoint(f"radius {radius!r} below tolerance")
    cid = arr.fresh_id()
    swallowed = False
    last_report = None
    for _ in range(9):
        if radius <= 10 * eps:
            break
        if dist(arr.seed, p.point) <= radius:
            swallowed = True
            radius /= 2.0
            continue
        cand = Circle(cid, p.point.x, p.point.y, radius, OUTSIDE)
        arr2 = arr.with_circle(cand)
        report = validate(arr2)
        if report.valid:
            return arr2, cand
        last_report = report
        radius /= 2.0
        swallowed = False
    if swallowed and last_report is None:
        raise SeedSwallowed(f"seed {arr.seed} inside every retried disk at {p.point}")
    detail = "; ".join(v.detail for v in last_report.violations) if last_report else "unknown"
    raise CannotPlace(f"no valid radius after retries: {detail}")


def locate(arr: Arrangement, axis: Axis, p: Point):
    """Quotient image of a closure point: ("vertex", id) or ("edge", id)."""
    return sweep.get_sweep(arr, axis).locate_point(p)


# -- corner frames ------------------------------------------------------------


@dataclass(frozen=True)
class CornerFrame:
    corner: Corner
    d1: Point
    d2: Point
    sign_pattern: tuple[int, int]
    theta: float


def _region_facing_tangent(arr: Arrangement, on: Circle, other: Circle, p: Point) -> Point:
    """Tangent direction of `on` at p whose ray enters the region side of `other`."""
    t1, t2 = geom.tangent_direction(on, p, arr.tol)
    ux = (p.x - other.cx) / dist(p, other.center)
    uy = (p.y - other.cy) / dist(p, other.center)
    # derivative of other's signed margin along t: sign * (-t . u)
    g1 = other.sign * -(t1.x * ux + t1.y * uy)
    if abs(g1) <= arr.eps:
        raise UnsupportedConfiguration(f"tangents of {on.id} and {other.id} parallel at {p}")
    return t1 if g1 > 0 else t2


def corner_frame(arr: Arrangement, p: Corner | Point, r: float | None = None) -> CornerFrame:
    """Region-facing tangent pair at a corner, its sign pattern, and angle.

    The first-order side test is equivalent to picking, on each tangent
    line, the intersection with the added circle of radius r closer to the
    region arc; r therefore does not enter the result.
    """
    eps = arr.eps
    pt = p.point if isinstance(p, Corner) else p
    hit = None
    for corner in corners(arr):
        if dist(corner.point, pt) <= 10 * eps:
            hit = corner
            break
    if hit is None:
        raise NotACorner(f"{pt} is not an intersection point of two circles")
    c1 = arr.circle(hit.circles[0])
    c2 = arr.circle(hit.circles[1])
    d1 = _region_facing_tangent(arr, c1, c2, hit.point)
    d2 = _region_facing_tangent(arr, c2, c1, hit.point)
    for d in (d1, d2):
        if abs(d.x) <= eps or abs(d.y) <= eps:
            raise ZeroComponent(f"corner-frame direction {d} has a vanishing component")
    pattern = (1 if d1.x * d2.x > 0 else -1, 1 if d1.y * d2.y > 0 else -1)
    dot = max(-1.0, min(1.0, d1.x * d2.x + d1.y * d2.y))
    return CornerFrame(hit, d1, d2, pattern, math.acos(dot))


# -- pole fiber profiles -------------------------------------------------------


@dataclass(frozen=True)
class PoleFiberProfile:
    """Increasing entering/departing height sequences of a critical pole's fiber.

    For II-type poles the data is computed on the arrangement reflected
    across the fiber line through the pole (which makes it I-type).
    """

    pole_type: str  # "I" | "II"
    lseq: tuple[float, ...]
    rseq: tuple[float, ...]
    j0pp: int  # index of the pole in lseq (1-based); 0 for singleton fibers
    j0ppp: int
    seg_lo: float
    seg_hi: float
    pole_v: float

    @property
    def a(self) -> int:
        return len(self.lseq)

    @property
    def b(self) -> int:
        return len(self.rseq)

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.j0pp, self.j0ppp)


def _uv(p: Point, axis: Axis) -> tuple[float, float]:
    return (p.x, p.y) if axis is Axis.X else (p.y, p.x)


def _point_uv(u: float, v: float, axis: Axis) -> Point:
    return Point(u, v) if axis is Axis.X else Point(v, u)


def _critical_pole_owner(arr: Arrangement, p: Point, axis: Axis) -> Circle:
    eps = arr.eps
    for c in arr.circles:
        for pole in geom.poles(c, axis)[0]:
            if dist(pole.point, p) <= 10 * eps:
                return c
    raise NotCriticalPole(f"{p} is not a sweep-critical pole for axis {axis.value}")


def _is_i_type(arr: Arrangement, p: Point, axis: Axis, owner: Circle) -> bool:
    step = max(1000 * arr.eps, 1e-6 * owner.r)
    u, v = _uv(p, axis)
    probe = _point_uv(u - step, v, axis)
    return membership(arr, probe).state == EXTERIOR


def pole_fiber_profile(arr: Arrangement, p, axis: Axis = Axis.X) -> PoleFiberProfile:
    """Walk the fiber segment through a boundary critical pole."""
    pt = p.point if hasattr(p, "point") else p
    owner = _critical_pole_owner(arr, pt, axis)
    res = sweep.get_sweep(arr, axis)
    if not res.point_on_region(pt):
        raise NotCriticalPole(f"{pt} is not on the region boundary")
    if _is_i_type(arr, pt, axis, owner):
        return _i_profile(arr, pt, axis, "I")
    u, v = _uv(pt, axis)
    mirror = geom.ReflectVertical(u) if axis is Axis.X else geom.ReflectHorizontal(u)
    reflected = geom.apply_move(arr, mirror)
    prof = _i_profile(reflected, pt, axis, "II")
    return prof


def _i_profile(arr: Arrangement, pt: Point, axis: Axis, pole_type: str) -> PoleFiberProfile:
    eps = arr.eps
    u, v = _uv(pt, axis)
    segments = sweep._closed_fiber(arr, axis, u)
    pad = 10 * eps
    seg = None
    for s in segments:
        if s.lo - pad <= v <= s.hi + pad:
            seg = s
            break
    if seg is None:
        raise NotCriticalPole(f"no fiber segment through {pt}")
    if seg.hi - seg.lo <= 4 * eps:
        return PoleFiberProfile(pole_type, (v,), (v,), 0, 1, v, v, v)

    i_heights: list[float] = []
    ii_heights: list[float] = []
    for c in arr.circles:
        for pole in geom.poles(c, axis)[0]:
            qu, qv = _uv(pole.point, axis)
            if abs(qu - u) > eps or not (seg.lo - pad <= qv <= seg.hi + pad):
                continue
            if membership(arr, pole.point).state != BOUNDARY:
                continue
            if _is_i_type(arr, pole.point, axis, c):
                i_heights.append(qv)
            else:
                ii_heights.append(qv)
    for corner in corners(arr):
        qu, qv = _uv(corner.point, axis)
        if abs(qu - u) <= eps and seg.lo - pad <= qv <= seg.hi + pad:
            if membership(arr, corner.point).state == BOUNDARY:
                raise UnsupportedConfiguration(
                    f"corner on the fiber segment through {pt}; profile undefined"
                )
    i_heights.sort()
    ii_heights.sort()
    for hs in (i_heights, ii_heights):
        for a, b in zip(hs, hs[1:]):
            if b - a <= eps:
                raise UnsupportedConfiguration("coincident poles on one fiber segment")
    lseq = tuple(i_heights) + (seg.hi,)
    rseq = tuple(ii_heights) + (seg.hi,)
    j0pp = None
    for i, h in enumerate(i_heights):
        if abs(h - v) <= pad:
            j0pp = i + 1
    if j0pp is None:
        raise NotCriticalPole(f"{pt} missing from its own fiber profile")
    j0ppp = 1
    for i, h in enumerate(rseq):
        if h < v:
            j0ppp = i + 2
    return PoleFiberProfile(pole_type, lseq, rseq, j0pp, j0ppp, seg.lo, seg.hi, v)


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class MoveClassification:
    axis: Axis
    case: str
    anchor: tuple[str, str]  # ("vertex"|"edge", id)
    frame: CornerFrame | None = None
    profile: PoleFiberProfile | None = None

    def to_dict(self) -> dict:
        out: dict = {"axis": self.axis.value, "case": self.case, "anchor": list(self.anchor)}
        if self.frame is not None:
            out["corner_frame"] = {
                "point": [self.frame.corner.point.x, self.frame.corner.point.y],
                "circles": list(self.frame.corner.circles),
                "d1": [self.frame.d1.x, self.frame.d1.y],
                "d2": [self.frame.d2.x, self.frame.d2.y],
                "sign_pattern": list(self.frame.sign_pattern),
                "theta": self.frame.theta,
            }
        if self.profile is not None:
            out["pole_profile"] = {
                "type": self.profile.pole_type,
                "a": self.profile.a,
                "b": self.profile.b,
                "j0pp": self.profile.j0pp,
                "j0ppp": self.profile.j0ppp,
                "lseq": list(self.profile.lseq),
                "rseq": list(self.profile.rseq),
            }
        return out


_PATTERN_CASE = {(1, 1): "3.2.1", (1, -1): "3.2.2", (-1, 1): "3.2.3", (-1, -1): "3.2.4"}


def classify(arr: Arrangement, axis: Axis, p: MovePoint) -> MoveClassification:
    """Catalog case of a move point: generic, pole, corner, or stacked pole."""
    eps = arr.eps
    pt = p.point
    host = arr.circle(p.circle)

    on = membership(arr, pt).on_circles
    if len(on) >= 2:
        frame = corner_frame(arr, pt)
        pattern = frame.sign_pattern if axis is Axis.X else (frame.sign_pattern[1], frame.sign_pattern[0])
        case = _PATTERN_CASE[pattern]
        return MoveClassification(axis, case, locate(arr, axis, pt), frame=frame)

    crit, reg = geom.poles(host, axis)
    if any(dist(q.point, pt) <= 10 * eps for q in crit):
        profile = pole_fiber_profile(arr, pt, axis)
        anchor = locate(arr, axis, pt)
        if profile.j0pp == 0:
            case = "2.2.1"
        elif profile.indices[:2] == (2, 1):
            case = "2.2.2"
        else:
            case = "5.I" if profile.pole_type == "I" else "5.II"
        return MoveClassification(axis, case, anchor, profile=profile)

    anchor = locate(arr, axis, pt)
    if any(dist(q.point, pt) <= 10 * eps for q in reg):
        inside = host.region_side == geom.INSIDE
        if anchor[0] == "edge":
            case = "2.3.1" if inside else "2.3.2"
        else:
            case = "2.3.3" if inside else "2.3.4"
        return MoveClassification(axis, case, anchor)

    case = "2.1.1" if anchor[0] == "edge" else "2.1.2"
    return MoveClassification(axis, case, anchor)


# -- prediction ----------------------------------------------------------------


@dataclass(frozen=True)
class Candidate:
    tag: str
    graph: VDigraph


def _edge_key(g: VDigraph, idx: int) -> vdigraph.EdgeKey:
    e = g.edges[idx]
    occ = sum(1 for i in range(idx) if g.edges[i] == e)
    return (e.src, e.dst, occ)


def _anchor_edge(g: VDigraph, anchor) -> vdigraph.EdgeKey:
    kind, eid = anchor
    if kind != "edge":
        raise BadAnchor(f"expected edge anchor, got {anchor}")
    return _edge_key(g, int(eid[1:]))


def _host_corner_values(arr: Arrangement, host: Circle, new_c: Circle, axis: Axis) -> list[float]:
    pts = geom.intersect_circles(new_c, host, arr.tol)
    if len(pts) != 2:
        raise UnsupportedConfiguration("added circle does not cross its host twice")
    return sorted(_uv(q, axis)[0] for q in pts)


def _region_fold(arr2: Arrangement, p: Point, r: float, axis: Axis) -> float:
    """Axis value of the added circle's critical pole on the region boundary."""
    u, v = _uv(p, axis)
    for cand in (u - r, u + r):
        if membership(arr2, _point_uv(cand, v, axis)).state == BOUNDARY:
            return cand
    raise UnsupportedConfiguration("no fold of the added circle lies on the region boundary")


def _cross_corner_values(
    arr: Arrangement, arr2: Arrangement, hit: Corner, new_c: Circle, axis: Axis
) -> list[float]:
    """Axis values of the added circle's region-closure corners at a corner move."""
    out = []
    for cid in hit.circles:
        pts = geom.intersect_circles(new_c, arr.circle(cid), arr.tol)
        kept = [q for q in pts if membership(arr2, q).state == BOUNDARY]
        if len(kept) != 1:
            raise UnsupportedConfiguration(
                f"expected one closure intersection with {cid}, found {len(kept)}"
            )
        out.append(_uv(kept[0], axis)[0])
    return out


def predict(
    g: VDigraph,
    cls: MoveClassification,
    p: MovePoint,
    r: float,
    arr: Arrangement,
) -> list[Candidate]:
    """Candidate post-move graphs, one per alternative the catalog leaves open.

    Labels use actual feature coordinates (folds at +-r, corner values from
    circle intersections), so a matching candidate agrees with the
    recomputed graph in label order including ties. Candidates are deduped
    up to isomorphism.
    """
    axis = cls.axis
    host = arr.circle(p.circle)
    new_c = Circle("_probe", p.point.x, p.point.y, r, OUTSIDE)
    arr2 = arr.with_circle(new_c)
    u_p = _uv(p.point, axis)[0]

    raw: list[Candidate] = []

    def attempt(tag: str, build) -> None:
        try:
            raw.append(Candidate(tag, build()))
        except (BadAnchor, LabelOrderViolation, UnsupportedConfiguration):
            pass

    if cls.case in ("2.1.1", "2.1.2", "2.3.1", "2.3.2", "2.3.3", "2.3.4"):
        c_lo, c_hi = _host_corner_values(arr, host, new_c, axis)
        fold_lo, fold_hi = u_p - r, u_p + r

    if cls.case == "2.1.1":
        key = _anchor_edge(g, cls.anchor)

        def fold_left():
            b = vdigraph._Builder(g)
            mids = b.subdivide(b.edge_index(key), (fold_lo, c_hi))
            b.attach_leaf(mids[0], c_lo)
            return _done(b)

        def fold_right():
            b = vdigraph._Builder(g)
            mids = b.subdivide(b.edge_index(key), (c_lo, fold_hi))
            b.attach_leaf(mids[1], c_hi)
            return _done(b)

        attempt("2.1.1", fold_left)
        attempt("2.1.1", fold_right)
    elif cls.case == "2.1.2":
        v0 = cls.anchor[1]
        for in_idx in g.in_edges(v0):
            for out_idx in g.out_edges(v0):
                in_key, out_key = _edge_key(g, in_idx), _edge_key(g, out_idx)

                def fold_left(in_key=in_key, out_key=out_key):
                    b = vdigraph._Builder(g)
                    mids = b.subdivide(b.edge_index(in_key), (fold_lo,))
                    b.attach_leaf(mids[0], c_lo)
                    b.subdivide(b.edge_index(out_key), (c_hi,))
                    return _done(b)

                def fold_right(in_key=in_key, out_key=out_key):
                    b = vdigraph._Builder(g)
                    b.subdivide(b.edge_index(in_key), (c_lo,))
                    mids = b.subdivide(b.edge_index(out_key), (fold_hi,))
                    b.attach_leaf(mids[0], c_hi)
                    return _done(b)

                attempt("2.1.2", fold_left)
                attempt("2.1.2", fold_right)
    elif cls.case in ("2.2.1", "2.2.2"):
        tie_vals = _host_corner_values(arr, host, new_c, axis)
        if abs(tie_vals[0] - tie_vals[1]) > arr.eps:
            raise UnsupportedConfiguration("pole-centered corners did not tie")
        tie = tie_vals[0]
        fold = _region_fold(arr2, p.point, r, axis)
        v0 = cls.anchor[1]
        if cls.case == "2.2.1":
            attempt(
                "2.2.1",
                lambda: vdigraph.apply_rewrite(g, vdigraph.SplitLeaf(v0, (tie, tie), fold)),
            )
        else:
            attempt(
                "2.2.2",
                lambda: vdigraph.apply_rewrite(g, vdigraph.SplitAtVertex(v0, tie, fold)),
            )
    elif cls.case == "2.3.1":
        key = _anchor_edge(g, cls.anchor)
        attempt("2.3.1", lambda: vdigraph.apply_rewrite(g, vdigraph.SubdivideEdge(key, (c_lo, c_hi))))
    elif cls.case == "2.3.2":
        key = _anchor_edge(g, cls.anchor)

        def build():
            b = vdigraph._Builder(g)
            mids = b.subdivide(b.edge_index(key), (fold_lo, fold_hi))
            b.attach_leaf(mids[0], c_lo)
            b.attach_leaf(mids[1], c_hi)
            return _done(b)

        attempt("2.3.2", build)
    elif cls.case in ("2.3.3", "2.3.4"):
        v0 = cls.anchor[1]
        for in_idx in g.in_edges(v0):
            for out_idx in g.out_edges(v0):
                in_key, out_key = _edge_key(g, in_idx), _edge_key(g, out_idx)

                def build(in_key=in_key, out_key=out_key):
                    b = vdigraph._Builder(g)
                    if cls.case == "2.3.3":
                        b.subdivide(b.edge_index(in_key), (c_lo,))
                        b.subdivide(b.edge_index(out_key), (c_hi,))
                    else:
                        mids = b.subdivide(b.edge_index(in_key), (fold_lo,))
                        b.attach_leaf(mids[0], c_lo)
                        mids = b.subdivide(b.edge_index(out_key), (fold_hi,))
                        b.attach_leaf(mids[0], c_hi)
                    return _done(b)

                attempt(cls.case, build)
    elif cls.case.startswith("3.2"):
        hit = cls.frame.corner
        k1, k2 = sorted(_cross_corner_values(arr, arr2, hit, new_c, axis))
        v0 = cls.anchor[1]
        if cls.case == "3.2.1":
            tip, other = (k1, k2) if k1 > u_p else (k2, k1)

            def build():
                b = vdigraph._Builder(g)
                b.labels[v0] = tip
                edges = b.in_indices(v0) + b.out_indices(v0)
                if len(edges) != 1:
                    raise BadAnchor("3.2.1 anchor is not degree 1")
                b.subdivide(edges[0], (other,))
                return _done(b)

            attempt("3.2.1", build)
        elif cls.case == "3.2.2":
            fold = _region_fold(arr2, p.point, r, axis)
            attempt(
                "3.2.2.1",
                lambda: vdigraph.apply_rewrite(g, vdigraph.SplitLeaf(v0, (k1, k2), fold)),
            )
            attempt(
                "3.2.2.2",
                lambda: vdigraph.apply_rewrite(g, vdigraph.SplitLeaf(v0, (k1, k1), fold)),
            )
        else:  # 3.2.3 / 3.2.4: result shaped like 2.3.3 (keep the vertex) or 2.3.1
            for in_idx in g.in_edges(v0):
                for out_idx in g.out_edges(v0):
                    in_key, out_key = _edge_key(g, in_idx), _edge_key(g, out_idx)

                    def keep(in_key=in_key, out_key=out_key):
                        b = vdigraph._Builder(g)
                        b.subdivide(b.edge_index(in_key), (k1,))
                        b.subdivide(b.edge_index(out_key), (k2,))
                        return _done(b)

                    attempt(cls.case, keep)

            def smooth():
                g2 = vdigraph.apply_rewrite(g, vdigraph.RemoveVertex(v0))
                merged = g2.edges[-1]
                occ = sum(1 for e in g2.edges[:-1] if e == merged)
                return vdigraph.apply_rewrite(
                    g2, vdigraph.SubdivideEdge((merged.src, merged.dst, occ), (k1, k2))
                )

            attempt(cls.case, smooth)
    elif cls.case in ("5.I", "5.II"):
        raw.append(Candidate(cls.case, _predict_stacked_pole(g, cls, p, r, arr, arr2)))
    else:
        raise UnknownCase(f"unsupported case id {cls.case!r}")

    out: list[Candidate] = []
    for cand in raw:
        if not any(isomorphic(cand.graph, kept.graph).isomorphic for kept in out):
            out.append(cand)
    if not out:
        raise UnknownCase(f"no instantiable candidate for case {cls.case!r}")
    return out


def _done(b: "vdigraph._Builder") -> VDigraph:
    g = b.graph()
    rep = vdigraph.check_invariants(g)
    if not rep.passed:
        raise LabelOrderViolation(f"candidate failed invariants: {rep.failures}")
    return g


def _predict_stacked_pole(
    g: VDigraph, cls: MoveClassification, p: MovePoint, r: float, arr: Arrangement, arr2: Arrangement
) -> VDigraph:
    axis = cls.axis
    host = arr.circle(p.circle)
    new_c = arr2.circles[-1]
    u_p = _uv(p.point, axis)[0]
    tie_vals = _host_corner_values(arr, host, new_c, axis)
    if abs(tie_vals[0] - tie_vals[1]) > arr.eps:
        raise UnsupportedConfiguration("pole-centered corners did not tie")
    tie = tie_vals[0]
    fold = _region_fold(arr2, p.point, r, axis)
    res = sweep.get_sweep(arr, axis)
    v0 = cls.anchor[1]
    in_edges = [int(res.run_edge[rid][1:]) for rid in res.vertex_in_runs[v0]]
    out_edges = [int(res.run_edge[rid][1:]) for rid in res.vertex_out_runs[v0]]

    if cls.case == "5.I":
        return _stacked_pole_graph(g, v0, in_edges, out_edges, cls.profile, u_p, tie, fold)
    grev = reversed_graph(g)
    built = _stacked_pole_graph(grev, v0, out_edges, in_edges, cls.profile, -u_p, -tie, -fold)
    return reversed_graph(built)


def _stacked_pole_graph(
    g: VDigraph,
    v0: str,
    in_edges: list[int],
    out_edges: list[int],
    prof: PoleFiberProfile,
    u_p: float,
    tie: float,
    fold: float,
) -> VDigraph:
    """Stacked-pole rewrite: relabel the fold, insert the tied pair, and
    collect features below/above the move point on fresh vertices at the
    original value."""
    a, b, j0pp, j0ppp = prof.indices
    if len(in_edges) != a or len(out_edges) != b:
        raise BadAnchor(
            f"vertex {v0} has {len(in_edges)} in / {len(out_edges)} out edges; profile says {a}/{b}"
        )
    if not (1 <= j0pp <= a - 1):
        raise BadAnchor(f"profile index j0''={j0pp} outside 1..{a - 1}")
    need_v3 = j0pp > 1 or j0ppp > 1
    need_v4 = (j0pp + 1 < a) or (j0ppp < b)

    labels = {v.id: v.value for v in g.vertices}
    prov = {v.id: v.provenance for v in g.vertices}
    edges = [[e.src, e.dst] for e in g.edges]
    labels[v0] = fold

    fresh = iter(f"n{i}" for i in range(len(labels) + 8))

    def new_vertex(value: float) -> str:
        vid = next(fresh)
        while vid in labels:
            vid = next(fresh)
        labels[vid] = value
        prov[vid] = ()
        return vid

    v1, v2 = new_vertex(tie), new_vertex(tie)
    v3 = new_vertex(u_p) if need_v3 else None
    v4 = new_vertex(u_p) if need_v4 else None

    for i, idx in enumerate(in_edges):
        jpp = i + 1
        if jpp < j0pp:
            edges[idx][1] = v3
        elif jpp == j0pp:
            edges[idx][1] = v1
            edges.append([v1, v3 if v3 else v0])
            if v3:
                edges.append([v3, v0])
        elif jpp == j0pp + 1:
            edges[idx][1] = v2
            edges.append([v2, v4 if v4 else v0])
            if v4:
                edges.append([v4, v0])
        else:
            edges[idx][1] = v4
    for i, idx in enumerate(out_edges):
        jpp = i + 1
        if jpp < j0ppp:
            edges[idx][0] = v3
        elif jpp > j0ppp:
            edges[idx][0] = v4

    order = sorted(labels, key=lambda vid: (labels[vid], vid))
    vertices = tuple(vdigraph.Vertex(vid, labels[vid], prov.get(vid, ())) for vid in order)
    out = VDigraph(g.axis, vertices, tuple(vdigraph.Edge(s, d) for s, d in edges))
    rep = vdigraph.check_invariants(out)
    if not rep.passed:
        raise LabelOrderViolation(f"stacked-pole rewrite invalid: {rep.failures}")
    return out


# -- verification ---------------------------------------------------------------


@dataclass(frozen=True)
class AxisReport:
    axis: Axis
    classification: MoveClassification
    case: str  # refined by the matched candidate
    pre: VDigraph
    candidates: tuple[Candidate, ...]
    recomputed: VDigraph
    matched: int | None
    verdict: str  # "ok" | "mismatch"

    def to_dict(self) -> dict:
        return {
            "axis": self.axis.value,
            "case": self.case,
            "classification": self.classification.to_dict(),
            "pre": self.pre.to_dict(),
            "candidates": [
                {"tag": c.tag, "graph": c.graph.to_dict()} for c in self.candidates
            ],
            "recomputed": self.recomputed.to_dict(),
            "matched": self.matched,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class MoveReport:
    circle: str
    angle: float
    point: Point
    radius: float
    new_circle: str
    result: Arrangement
    axes: tuple[AxisReport, AxisReport]

    @property
    def ok(self) -> bool:
        return all(ax.verdict == "ok" for ax in self.axes)

    def case_for(self, axis: Axis) -> str:
        for ax in self.axes:
            if ax.axis is axis:
                return ax.case
        raise KeyError(axis)

    def to_dict(self) -> dict:
        return {
            "move": {"circle": self.circle, "angle": self.angle, "point": [self.point.x, self.point.y]},
            "radius": self.radius,
            "new_circle": self.new_circle,
            "verdict": "ok" if self.ok else "mismatch",
            "axes": [ax.to_dict() for ax in self.axes],
            "arrangement_after": arrangement_to_dict(self.result),
        }


def verify(arr: Arrangement, p: MovePoint, r: float | None = None) -> MoveReport:
    """Classify, predict, place, recompute, and match both axes' graphs.

    With an explicit radius the move is verified exactly once. With the
    default radius, a mismatch triggers halve-and-retry: the catalog's
    rewrites assume a sufficiently small circle, and the safe radius only
    bounds Euclidean feature distances, not projection-value gaps.
    """
    if not validate(arr).valid:
        raise InvalidArrangement("verify requires a valid arrangement")
    if r is not None:
        return _verify_once(arr, p, float(r))
    safe = safe_radius(arr, p)
    schedule = [safe]
    windowed = min(safe, _window_radius(arr, p))
    if windowed < safe:
        schedule.append(windowed)
    while schedule[-1] > 1e-4:
        schedule.append(schedule[-1] / 2.0)
    last_exc: Exception | None = None
    last_report: MoveReport | None = None
    for radius in schedule[:10]:
        try:
            report = _verify_once(arr, p, radius)
        except (UnknownCase, UnsupportedConfiguration, CannotPlace) as exc:
            last_exc = exc
            continue
        if report.ok:
            return report
        last_report = report
    if last_report is not None:
        return last_report
    raise CannotPlace(f"no verifiable radius for move at {p.point}: {last_exc}")


def _window_radius(arr: Arrangement, p: MovePoint) -> float:
    """Quarter of the projection-value gap from p to other critical values.

    Keeps the new circle's events inside the anchored edge's label window
    on both axes, which the rewrite catalog presupposes.
    """
    eps = arr.eps
    gap = math.inf
    for axis in (Axis.X, Axis.Y):
        u_p = axis.value_of(p.point)
        for v in sweep.build_graph(arr, axis).vertices:
            d = abs(v.value - u_p)
            if d > eps:
                gap = min(gap, d)
    return gap / 4.0 if math.isfinite(gap) else math.inf


def _verify_once(arr: Arrangement, p: MovePoint, r: float) -> MoveReport:
    arr2, new_c = add_small_circle(arr, p, r)
    reports = []
    for axis in (Axis.X, Axis.Y):
        g_pre = sweep.build_graph(arr, axis)
        cls = classify(arr, axis, p)
        candidates = tuple(predict(g_pre, cls, p, new_c.r, arr))
        g_post = sweep.build_graph(arr2, axis)
        matched = None
        hits = 0
        for i, cand in enumerate(candidates):
            if isomorphic(cand.graph, g_post).isomorphic:
                hits += 1
                matched = i
        verdict = "ok" if hits == 1 else "mismatch"
        case = candidates[matched].tag if matched is not None and hits == 1 else cls.case
        reports.append(AxisReport(axis, cls, case, g_pre, candidates, g_post, matched, verdict))
    return MoveReport(p.circle, p.angle, p.point, new_c.r, new_c.id, arr2, tuple(reports))
