"""Level-set sweep: fibers, critical events, and the region's level graph.

The region closure is swept along one axis. Fibers are transverse line
slices; their closed segments over a critical value glue the interval
tracks of adjacent slabs. Vertices arise exactly at fiber segments
carrying a boundary sweep-critical pole or a corner; edges are maximal
interval tracks between them, oriented toward larger axis values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .arrangement import (
    BOUNDARY,
    EXTERIOR,
    INTERIOR,
    Arrangement,
    Corner,
    corners,
    membership,
)
from .errors import InvalidArrangement, OutsideClosure, RequestAtEvent
from .geom import Axis, Point, Pole, poles
from .vdigraph import Edge, Provenance, VDigraph, Vertex

Feature = Pole | Corner

_MATCH_DELTA = 1e-12  # arc evaluation offset next to an event
_MATCH_PAD = 1e-7  # segment containment slack for interval matching
_MATCH_MAX = 1e-5  # hard limit before matching is declared broken


def _uv(p: Point, axis: Axis) -> tuple[float, float]:
    return (p.x, p.y) if axis is Axis.X else (p.y, p.x)


def _point(u: float, v: float, axis: Axis) -> Point:
    return Point(u, v) if axis is Axis.X else Point(v, u)


def _packed(arr: Arrangement, axis: Axis):
    cx, cy, r, sign = kernels.pack_circles(arr.circles)
    return (cx, cy, r, sign) if axis is Axis.X else (cy, cx, r, sign)


@dataclass
class _Interval:
    lo: float
    hi: float
    lo_arc: tuple[int, int]  # (circle index, branch)
    hi_arc: tuple[int, int]
    run: int = -1


@dataclass
class _Segment:
    lo: float
    hi: float
    features: list = field(default_factory=list)
    vertex: str | None = None
    splice_run: int | None = None


@dataclass
class _Event:
    value: float
    features: list
    segments: list[_Segment] = field(default_factory=list)


@dataclass
class _Run:
    src: str | None = None  # vertex id, None = unbounded to the left
    dst: str | None = None
    first_lo: float = math.inf
    first_slab: int = -1


@dataclass
class SweepResult:
    arr: Arrangement
    axis: Axis
    events: list[_Event]
    slabs: list[tuple[float, float, float]]  # (lo, hi, sample)
    slab_intervals: list[list[_Interval]]
    graph: VDigraph
    runs: dict[int, _Run]
    run_edge: dict[int, str]  # run id -> edge id, seed component only
    seed_run: int | None
    component_runs: set[int]
    component_vertices: set[str]
    unbounded_seed: bool
    contact_circles: set[str]
    vertex_in_runs: dict[str, list[int]]  # ordered by fiber position
    vertex_out_runs: dict[str, list[int]]
    vertex_segment: dict[str, tuple[int, int]]  # vid -> (event idx, segment idx)

    # -- lookups -------------------------------------------------------------

    def event_near(self, u: float, pad: float | None = None) -> int | None:
        pad = 10 * self.arr.eps if pad is None else pad
        for i, ev in enumerate(self.events):
            if abs(ev.value - u) <= pad:
                return i
        return None

    def slab_of(self, u: float) -> int:
        for i, (lo, hi, _) in enumerate(self.slabs):
            if lo < u <= hi:
                return i
        return len(self.slabs) - 1

    def intervals_at(self, u: float) -> list[_Interval]:
        """Fresh intervals at a regular value, runs copied from the slab."""
        cxu, cyu, r, sign = _packed(self.arr, self.axis)
        counts, bounds, arcc, arcb = kernels.fiber_intervals(
            np.array([u]), cxu, cyu, r, sign, self.arr.eps
        )
        k = self.slab_of(u)
        slab = self.slab_intervals[k]
        n = int(counts[0])
        if n != len(slab):
            raise RequestAtEvent(f"value {u!r} too close to a critical event")
        out = []
        for i in range(n):
            out.append(
                _Interval(
                    bounds[0, i, 0],
                    bounds[0, i, 1],
                    (int(arcc[0, i, 0]), int(arcb[0, i, 0])),
                    (int(arcc[0, i, 1]), int(arcb[0, i, 1])),
                    slab[i].run,
                )
            )
        return out

    def point_on_region(self, p: Point) -> bool:
        """Is p in the closure of the seed component?"""
        if membership(self.arr, p).state == EXTERIOR:
            return False
        try:
            self.locate_point(p)
        except (OutsideClosure, RequestAtEvent):
            return False
        return True

    def locate_point(self, p: Point):
        """Quotient image of p: ("vertex", id) or ("edge", id)."""
        eps = self.arr.eps
        if membership(self.arr, p).state == EXTERIOR:
            raise OutsideClosure(f"{p} outside the sign cell")
        u, v = _uv(p, self.axis)
        pad = 10 * eps
        ei = self.event_near(u)
        if ei is not None:
            for seg in self.events[ei].segments:
                if seg.lo - pad <= v <= seg.hi + pad:
                    if seg.vertex is not None and seg.vertex in self.component_vertices:
                        return ("vertex", seg.vertex)
                    if seg.splice_run is not None and seg.splice_run in self.component_runs:
                        return ("edge", self.run_edge[seg.splice_run])
                    break
            raise OutsideClosure(f"{p} not on the seed component closure")
        for iv in self.intervals_at(u):
            if iv.lo - pad <= v <= iv.hi + pad:
                if iv.run in self.component_runs:
                    return ("edge", self.run_edge[iv.run])
                break
        raise OutsideClosure(f"{p} not on the seed component closure")


# -- fibers ------------------------------------------------------------------


def _closed_fiber(arr: Arrangement, axis: Axis, u: float) -> list[_Segment]:
    """Closed fiber segments of the region closure at any value.

    Handles touches (critical poles on the line), pass-through corners,
    and isolated boundary points (birth/death corners).
    """
    eps = arr.eps
    cut = 4 * eps
    entries: list[float] = []
    for c in arr.circles:
        ucx, vcx = _uv(c.center, axis)
        du = u - ucx
        if abs(abs(du) - c.r) <= 3 * eps:
            entries.append(vcx)
        elif abs(du) < c.r:
            root = math.sqrt(c.r * c.r - du * du)
            entries.extend((vcx - root, vcx + root))
    entries.sort()
    segments: list[_Segment] = []
    open_seg: _Segment | None = None
    for lo, hi in zip(entries, entries[1:]):
        if hi - lo <= cut:
            continue
        mid = 0.5 * (lo + hi)
        if membership(arr, _point(u, mid, axis)).state != INTERIOR:
            open_seg = None
            continue
        if open_seg is not None and lo - open_seg.hi <= cut:
            sep = 0.5 * (open_seg.hi + lo)
            if membership(arr, _point(u, sep, axis)).state != EXTERIOR:
                open_seg.hi = hi
                continue
        open_seg = _Segment(lo, hi)
        segments.append(open_seg)
    for y in entries:
        covered = any(seg.lo - cut <= y <= seg.hi + cut for seg in segments)
        if covered:
            continue
        if membership(arr, _point(u, y, axis)).state == BOUNDARY:
            if not any(abs(seg.lo - y) <= cut and abs(seg.hi - y) <= cut for seg in segments):
                segments.append(_Segment(y, y))
    segments.sort(key=lambda s: s.lo)
    return segments


def _eval_arc(arr: Arrangement, axis: Axis, arc: tuple[int, int], u: float) -> float:
    c = arr.circles[arc[0]]
    ucx, vcx = _uv(c.center, axis)
    d2 = c.r * c.r - (u - ucx) ** 2
    return vcx + arc[1] * math.sqrt(max(d2, 0.0))


def _match_segment(arr, axis, iv: _Interval, segments: list[_Segment], u_eval: float) -> int:
    lo = _eval_arc(arr, axis, iv.lo_arc, u_eval)
    hi = _eval_arc(arr, axis, iv.hi_arc, u_eval)
    vmid = 0.5 * (lo + hi)
    best, best_d = -1, math.inf
    for i, seg in enumerate(segments):
        d = max(seg.lo - vmid, vmid - seg.hi, 0.0)
        if d < best_d:
            best, best_d = i, d
    if best < 0 or best_d > _MATCH_MAX:
        raise InvalidArrangement(
            f"fiber interval near value {u_eval!r} matches no closed segment (gap {best_d:.2e})"
        )
    return best


# -- the sweep ---------------------------------------------------------------

_sweep_cache: dict[tuple[Arrangement, Axis, bool], SweepResult] = {}


def get_sweep(arr: Arrangement, axis: Axis, declare_regular_poles: bool = False) -> SweepResult:
    key = (arr, axis, declare_regular_poles)
    res = _sweep_cache.get(key)
    if res is None:
        res = _compute_sweep(arr, axis, declare_regular_poles)
        if len(_sweep_cache) > 128:
            _sweep_cache.clear()
        _sweep_cache[key] = res
    return res


def _boundary_critical_features(
    arr: Arrangement, axis: Axis, include_regular: bool = False
) -> list[Feature]:
    feats: list[Feature] = []
    for c in arr.circles:
        crit, reg = poles(c, axis)
        pool = crit + reg if include_regular else crit
        for pole in pool:
            if membership(arr, pole.point).state == BOUNDARY:
                feats.append(pole)
    try:
        all_corners = corners(arr)
    except Exception as exc:
        raise InvalidArrangement(f"degenerate circle pair: {exc}") from exc
    for corner in all_corners:
        if membership(arr, corner.point).state == BOUNDARY:
            feats.append(corner)
    return feats


def _group_events(arr: Arrangement, axis: Axis, feats: list[Feature]) -> list[_Event]:
    eps = arr.eps
    items = sorted(feats, key=lambda f: (_uv(f.point, axis)[0], _uv(f.point, axis)[1]))
    events: list[_Event] = []
    for f in items:
        u = _uv(f.point, axis)[0]
        if events and u - events[-1].value <= eps:
            events[-1].features.append(f)
        else:
            events.append(_Event(u, [f]))
    for ev in events:
        ev.features.sort(key=lambda f: _uv(f.point, axis)[1])
    return events


def _compute_sweep(arr: Arrangement, axis: Axis, declare_regular_poles: bool = False) -> SweepResult:
    eps = arr.eps
    feats = _boundary_critical_features(arr, axis, include_regular=declare_regular_poles)
    if not feats:
        raise InvalidArrangement("no boundary critical features; region is empty or unbounded")
    events = _group_events(arr, axis, feats)
    values = [ev.value for ev in events]

    slab_edges = [values[0] - 1.0] + [0.5 * (a + b) for a, b in zip(values, values[1:])] + [
        values[-1] + 1.0
    ]
    slabs: list[tuple[float, float, float]] = []
    for i in range(len(values) + 1):
        lo = -math.inf if i == 0 else values[i - 1]
        hi = math.inf if i == len(values) else values[i]
        sample = slab_edges[0] if i == 0 else slab_edges[-1] if i == len(values) else slab_edges[i]
        slabs.append((lo, hi, sample))

    cxu, cyu, r, sign = _packed(arr, axis)
    samples = np.array([s[2] for s in slabs])
    counts, bounds, arcc, arcb = kernels.fiber_intervals(samples, cxu, cyu, r, sign, eps)
    slab_intervals: list[list[_Interval]] = []
    for i in range(len(slabs)):
        ivs = [
            _Interval(
                bounds[i, k, 0],
                bounds[i, k, 1],
                (int(arcc[i, k, 0]), int(arcb[i, k, 0])),
                (int(arcc[i, k, 1]), int(arcb[i, k, 1])),
            )
            for k in range(int(counts[i]))
        ]
        slab_intervals.append(ivs)

    runs: dict[int, _Run] = {}
    next_run = 0

    def new_run(src: str | None, slab_idx: int, iv: _Interval) -> int:
        nonlocal next_run
        rid = next_run
        next_run += 1
        runs[rid] = _Run(src=src, first_lo=iv.lo, first_slab=slab_idx)
        iv.run = rid
        return rid

    for iv in slab_intervals[0]:
        new_run(None, 0, iv)  # region sticking out past the first event

    vertex_count = 0
    vertex_values: dict[str, float] = {}
    vertex_prov: dict[str, list[Feature]] = {}
    vertex_in_runs: dict[str, list[int]] = {}
    vertex_out_runs: dict[str, list[int]] = {}
    vertex_segment: dict[str, tuple[int, int]] = {}

    for k, ev in enumerate(events):
        left = slab_intervals[k]
        right = slab_intervals[k + 1]
        segments = _closed_fiber(arr, axis, ev.value)
        if not segments and (left or right or ev.features):
            raise InvalidArrangement(f"no fiber segments at event value {ev.value!r}")
        ev.segments = segments

        pad = 10 * eps
        for f in ev.features:
            v = _uv(f.point, axis)[1]
            homes = [s for s in segments if s.lo - pad <= v <= s.hi + pad]
            if len(homes) != 1:
                raise InvalidArrangement(
                    f"feature at {f.point} fits {len(homes)} fiber segments at {ev.value!r}"
                )
            homes[0].features.append(f)

        seg_left: dict[int, list[_Interval]] = {i: [] for i in range(len(segments))}
        seg_right: dict[int, list[_Interval]] = {i: [] for i in range(len(segments))}
        for iv in left:
            seg_left[_match_segment(arr, axis, iv, segments, ev.value - _MATCH_DELTA)].append(iv)
        for iv in right:
            seg_right[_match_segment(arr, axis, iv, segments, ev.value + _MATCH_DELTA)].append(iv)

        for si, seg in enumerate(segments):
            lefts = sorted(seg_left[si], key=lambda iv: iv.lo)
            rights = sorted(seg_right[si], key=lambda iv: iv.lo)
            if seg.features:
                vid = f"t{vertex_count}"
                vertex_count += 1
                vertex_values[vid] = ev.value
                vertex_prov[vid] = list(seg.features)
                seg.vertex = vid
                vertex_segment[vid] = (k, si)
                vertex_in_runs[vid] = []
                vertex_out_runs[vid] = []
                for iv in lefts:
                    runs[iv.run].dst = vid
                    vertex_in_runs[vid].append(iv.run)
                for iv in rights:
                    rid = new_run(vid, k + 1, iv)
                    vertex_out_runs[vid].append(rid)
                if not lefts and not rights:
                    raise InvalidArrangement(
                        f"isolated fiber segment with features at value {ev.value!r}"
                    )
            else:
                if len(lefts) != 1 or len(rights) != 1:
                    raise InvalidArrangement(
                        f"fiber topology changed without a feature at value {ev.value!r} "
                        f"({len(lefts)} -> {len(rights)} tracks)"
                    )
                rights[0].run = lefts[0].run
                seg.splice_run = lefts[0].run

    # -- locate the seed -------------------------------------------------------
    su, sv = _uv(arr.seed, axis)
    seed_run: int | None = None
    ei = None
    for i, ev in enumerate(events):
        if abs(ev.value - su) <= 10 * eps:
            ei = i
            break
    if ei is not None:
        for seg in events[ei].segments:
            if seg.lo <= sv <= seg.hi:
                if seg.splice_run is not None:
                    seed_run = seg.splice_run
                elif seg.vertex is not None:
                    ins = vertex_in_runs.get(seg.vertex) or vertex_out_runs.get(seg.vertex)
                    seed_run = ins[0] if ins else None
                break
    else:
        k = None
        for i, (lo, hi, _) in enumerate(slabs):
            if lo < su < hi:
                k = i
                break
        if k is not None:
            cxu2, cyu2, r2, sign2 = _packed(arr, axis)
            counts2, bounds2, _, _ = kernels.fiber_intervals(
                np.array([su]), cxu2, cyu2, r2, sign2, eps
            )
            if int(counts2[0]) == len(slab_intervals[k]):
                for idx in range(int(counts2[0])):
                    if bounds2[0, idx, 0] <= sv <= bounds2[0, idx, 1]:
                        seed_run = slab_intervals[k][idx].run
                        break

    # -- component of the seed -------------------------------------------------
    component_runs: set[int] = set()
    component_vertices: set[str] = set()
    if seed_run is not None:
        stack_r = [seed_run]
        while stack_r:
            rid = stack_r.pop()
            if rid in component_runs:
                continue
            component_runs.add(rid)
            for vid in (runs[rid].src, runs[rid].dst):
                if vid is None or vid in component_vertices:
                    continue
                component_vertices.add(vid)
                stack_r.extend(vertex_in_runs[vid])
                stack_r.extend(vertex_out_runs[vid])

    unbounded_seed = any(
        runs[rid].src is None or runs[rid].dst is None for rid in component_runs
    )

    # -- build the graph over the seed component -------------------------------
    vid_order = sorted(
        component_vertices,
        key=lambda vid: (vertex_values[vid], events[vertex_segment[vid][0]].segments[vertex_segment[vid][1]].lo),
    )
    rename = {old: f"v{i}" for i, old in enumerate(vid_order)}
    vertices = tuple(
        Vertex(
            rename[old],
            vertex_values[old],
            tuple(_provenance(f) for f in vertex_prov[old]),
        )
        for old in vid_order
    )
    comp_run_list = [
        rid
        for rid in sorted(component_runs)
        if runs[rid].src is not None and runs[rid].dst is not None
    ]
    comp_run_list.sort(
        key=lambda rid: (
            vertex_values[runs[rid].src],
            vertex_values[runs[rid].dst],
            runs[rid].first_lo,
            rid,
        )
    )
    run_edge = {rid: f"e{i}" for i, rid in enumerate(comp_run_list)}
    edges = tuple(Edge(rename[runs[rid].src], rename[runs[rid].dst]) for rid in comp_run_list)
    graph = VDigraph(axis.value, vertices, edges)

    contact: set[str] = set()
    for k, ivs in enumerate(slab_intervals):
        for iv in ivs:
            if iv.run in component_runs:
                contact.add(arr.circles[iv.lo_arc[0]].id)
                contact.add(arr.circles[iv.hi_arc[0]].id)
    for old in component_vertices:
        for f in vertex_prov[old]:
            contact.update(_feature_circles(f))

    vertex_in = {
        rename[old]: [rid for rid in vertex_in_runs[old]] for old in component_vertices
    }
    vertex_out = {
        rename[old]: [rid for rid in vertex_out_runs[old]] for old in component_vertices
    }
    vertex_seg = {rename[old]: vertex_segment[old] for old in component_vertices}
    for ev in events:
        for seg in ev.segments:
            if seg.vertex is not None:
                seg.vertex = rename.get(seg.vertex, seg.vertex)

    return SweepResult(
        arr=arr,
        axis=axis,
        events=events,
        slabs=slabs,
        slab_intervals=slab_intervals,
        graph=graph,
        runs=runs,
        run_edge=run_edge,
        seed_run=seed_run,
        component_runs=component_runs,
        component_vertices=set(rename.values()),
        unbounded_seed=unbounded_seed,
        contact_circles=contact,
        vertex_in_runs=vertex_in,
        vertex_out_runs=vertex_out,
        vertex_segment=vertex_seg,
    )


def _provenance(f: Feature) -> Provenance:
    if isinstance(f, Pole):
        return Provenance("pole", (f.owner,), f.point)
    return Provenance("corner", f.circles, f.point)


def _feature_circles(f: Feature) -> tuple[str, ...]:
    return (f.owner,) if isinstance(f, Pole) else f.circles


# -- public operations --------------------------------------------------------


def build_graph(arr: Arrangement, axis: Axis, declare_regular_poles: bool = False) -> VDigraph:
    """Level graph of the seed component for the axis.

    Vertices come from fiber segments carrying a boundary sweep-critical
    pole or corner; poles whose tangent is transverse to the fiber do not
    create vertices unless declare_regular_poles opts them in as degree-2
    way points for side-by-side comparison.
    """
    res = get_sweep(arr, axis, declare_regular_poles)
    if res.seed_run is None:
        raise InvalidArrangement("seed is not inside any bounded fiber interval")
    if res.unbounded_seed:
        raise InvalidArrangement("seed component is unbounded along the sweep axis")
    return res.graph


@dataclass(frozen=True)
class Event:
    value: float
    features: tuple[Feature, ...]


def critical_events(arr: Arrangement, axis: Axis) -> list[Event]:
    """Events of the seed component: boundary critical poles and corners."""
    res = get_sweep(arr, axis)
    out = []
    for ev in res.events:
        feats: list[Feature] = []
        for seg in ev.segments:
            if seg.vertex is not None and seg.vertex in res.component_vertices:
                feats.extend(seg.features)
        if feats:
            out.append(Event(ev.value, tuple(feats)))
    return out


@dataclass(frozen=True)
class FiberInterval:
    lo: float
    hi: float
    lo_circle: str
    hi_circle: str
    on_seed_component: bool
    edge: str | None


@dataclass(frozen=True)
class FiberSlice:
    axis_value: float
    intervals: tuple[FiberInterval, ...]


def fiber_at(arr: Arrangement, axis: Axis, t: float) -> FiberSlice:
    """Sign-cell intervals of one fiber at a regular value."""
    res = get_sweep(arr, axis)
    ei = res.event_near(t, pad=arr.eps)
    if ei is not None:
        raise RequestAtEvent(f"value {t!r} is within eps of event {res.events[ei].value!r}")
    out = []
    for iv in res.intervals_at(t):
        on_seed = iv.run in res.component_runs
        out.append(
            FiberInterval(
                iv.lo,
                iv.hi,
                arr.circles[iv.lo_arc[0]].id,
                arr.circles[iv.hi_arc[0]].id,
                on_seed,
                res.run_edge.get(iv.run) if on_seed else None,
            )
        )
    return FiberSlice(t, tuple(out))


def regular_samples(arr: Arrangement, axis: Axis, n: int) -> np.ndarray:
    """n values spread over the axis extent, clear of events by 100*eps."""
    res = get_sweep(arr, axis)
    eps = arr.eps
    values = [ev.value for ev in res.events]
    lo, hi = min(values), max(values)
    ts = np.linspace(lo, hi, n + 2)[1:-1]
    for i, t in enumerate(ts):
        while any(abs(t - v) < 100 * eps for v in values):
            t += 137 * eps
        ts[i] = t
    return ts


def fiber_count_oracle(arr: Arrangement, axis: Axis, samples: int) -> list[tuple[float, int]]:
    """Independent seed-component fiber counts at regular values.

    Re-derives the component structure by pure interval-overlap flooding
    across candidate critical values; shares only the crossing kernel with
    the sweep, none of its event/vertex machinery.
    """
    eps = arr.eps
    feats = _boundary_critical_features(arr, axis)
    if not feats:
        raise InvalidArrangement("no boundary critical features")
    vals = sorted({_uv(f.point, axis)[0] for f in feats})
    grouped: list[float] = []
    for v in vals:
        if not grouped or v - grouped[-1] > eps:
            grouped.append(v)
    cxu, cyu, r, sign = _packed(arr, axis)

    def intervals(ts: np.ndarray) -> list[list[tuple[float, float]]]:
        counts, bounds, _, _ = kernels.fiber_intervals(ts, cxu, cyu, r, sign, eps)
        return [
            [(bounds[i, k, 0], bounds[i, k, 1]) for k in range(int(counts[i]))]
            for i in range(len(ts))
        ]

    mids = [grouped[0] - 1.0] + [0.5 * (a + b) for a, b in zip(grouped, grouped[1:])] + [
        grouped[-1] + 1.0
    ]
    slab_iv = intervals(np.array(mids))

    # flood connectivity across each candidate value via interval overlap
    delta = 10 * eps
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, ivs in enumerate(slab_iv):
        for i in range(len(ivs)):
            parent[(k, i)] = (k, i)
    for k, v in enumerate(grouped):
        lefts = intervals(np.array([v - delta]))[0]
        rights = intervals(np.array([v + delta]))[0]
        # identify edge-sample intervals with slab intervals by order
        if len(lefts) != len(slab_iv[k]) or len(rights) != len(slab_iv[k + 1]):
            raise InvalidArrangement(
                f"oracle sampling hit a critical value near {v!r}; widen tolerances"
            )
        for i, (a1, a2) in enumerate(lefts):
            for j, (b1, b2) in enumerate(rights):
                if min(a2, b2) - max(a1, b1) >= -1e-12:
                    union((k, i), (k + 1, j))

    su, sv = _uv(arr.seed, axis)
    sk = 0
    for k, v in enumerate(grouped):
        if su > v:
            sk = k + 1
    seed_iv = intervals(np.array([su]))[0]
    seed_idx = None
    for i, (a, b) in enumerate(seed_iv):
        if a <= sv <= b:
            seed_idx = i
            break
    if seed_idx is None or len(seed_iv) != len(slab_iv[sk]):
        raise InvalidArrangement("oracle cannot locate the seed interval")
    seed_root = find((sk, seed_idx))

    ts = regular_samples(arr, axis, samples)
    t_iv = intervals(ts)
    out = []
    for i, t in enumerate(ts):
        k = 0
        for j, v in enumerate(grouped):
            if t > v:
                k = j + 1
        if len(t_iv[i]) != len(slab_iv[k]):
            raise InvalidArrangement(f"oracle interval count changed inside a slab at {t!r}")
        n = sum(1 for idx in range(len(t_iv[i])) if find((k, idx)) == seed_root)
        out.append((float(t), n))
    return out


def edge_crossing_count(g: VDigraph, t: float) -> int:
    values = {v.id: v.value for v in g.vertices}
    return sum(1 for e in g.edges if values[e.src] < t < values[e.dst])
