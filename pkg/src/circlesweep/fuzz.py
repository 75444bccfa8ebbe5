"""Randomized move sequences with per-move verification.

Each run starts from a disjoint-circle base (one bounding circle plus
optional interior holes), applies random small-circle moves, and asserts
after every move: the arrangement stays valid, the recomputed graphs
match exactly one predicted candidate, no forbidden corner case appears,
and graph edge-crossing counts agree with the fiber-count oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import moves, sweep
from .arrangement import Arrangement, arrangement_to_dict, membership, validate
from .errors import CircleSweepError
from .geom import INSIDE, OUTSIDE, Axis, Circle, Point, Tolerance, dist


@dataclass(frozen=True)
class FuzzConfig:
    seeds: int = 10
    moves_per_seed: int = 3
    rng_seed: int = 0
    oracle_samples: int = 20
    bases: tuple[Arrangement, ...] | None = None


@dataclass
class FuzzReport:
    config: FuzzConfig
    moves_attempted: int = 0
    moves_verified: int = 0
    case_counts: dict[str, int] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    invalid_bases: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        # a rejected base is an input problem, not a counterexample
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "seeds": self.config.seeds,
            "moves_per_seed": self.config.moves_per_seed,
            "rng_seed": self.config.rng_seed,
            "moves_attempted": self.moves_attempted,
            "moves_verified": self.moves_verified,
            "case_counts": dict(sorted(self.case_counts.items())),
            "violations": self.violations,
            "invalid_bases": self.invalid_bases,
            "ok": self.ok,
        }


def random_base(rng: np.random.Generator) -> Arrangement:
    """One bounding circle with 0-2 disjoint interior holes."""
    outer_r = float(rng.uniform(1.0, 2.0))
    outer = Circle("c0", float(rng.uniform(-0.5, 0.5)), float(rng.uniform(-0.5, 0.5)), outer_r, INSIDE)
    circles = [outer]
    n_holes = int(rng.integers(0, 3))
    tries = 0
    while len(circles) - 1 < n_holes and tries < 60:
        tries += 1
        hr = float(rng.uniform(0.08, 0.22)) * outer_r
        ang = float(rng.uniform(0, 2 * math.pi))
        rad = float(rng.uniform(0, outer_r - hr - 0.15 * outer_r))
        hx, hy = outer.cx + rad * math.cos(ang), outer.cy + rad * math.sin(ang)
        hole = Circle(f"c{len(circles)}", hx, hy, hr, OUTSIDE)
        if all(
            dist(hole.center, c.center) > hole.r + c.r + 0.1 * outer_r for c in circles[1:]
        ):
            circles.append(hole)
    arr = None
    for _ in range(200):
        q = Point(
            float(rng.uniform(outer.cx - outer_r, outer.cx + outer_r)),
            float(rng.uniform(outer.cy - outer_r, outer.cy + outer_r)),
        )
        cand = Arrangement(tuple(circles), q, Tolerance())
        if membership(cand, q).state == "interior" and validate(cand).valid:
            arr = cand
            break
    if arr is None:
        raise CircleSweepError("could not seed a random base arrangement")
    return arr


_PLACEMENT_FLOOR = 2e-3  # below this the catalog's genericity margins drown in eps


def _usable(arr: Arrangement, mp: moves.MovePoint) -> bool:
    try:
        if moves.safe_radius(arr, mp) < _PLACEMENT_FLOOR:
            return False
        return moves._window_radius(arr, mp) >= _PLACEMENT_FLOOR
    except CircleSweepError:
        return False


def _pick_move(arr: Arrangement, rng: np.random.Generator) -> moves.MovePoint | None:
    """Bias toward corners and poles so every catalog family gets exercised.

    Targets whose safe radius is under the placement floor are skipped:
    they sit in tolerance-collapsed pockets where no radius keeps the
    rewrite label gaps above eps.
    """
    from .arrangement import boundary_features

    choice = rng.uniform()
    if choice < 0.6:
        feats = boundary_features(arr, Axis.X)
        on_region = [f for f, on in feats if on]
        corners_on = [f for f in on_region if not hasattr(f, "owner")]
        poles_on = [f for f in on_region if hasattr(f, "owner")]
        pool = corners_on if (choice < 0.4 and corners_on) else poles_on
        rng.shuffle(pool)
        for f in pool[:8]:
            if hasattr(f, "owner"):
                cid = f.owner
            else:
                cid = f.circles[int(rng.integers(0, 2))]
            c = arr.circle(cid)
            ang = math.atan2(f.point.y - c.cy, f.point.x - c.cx)
            try:
                mp = moves.resolve_move_point(arr, cid, ang)
            except CircleSweepError:
                continue
            if _usable(arr, mp):
                return mp
    for _ in range(40):
        c = arr.circles[int(rng.integers(0, len(arr.circles)))]
        ang = _snap_pole_angle(float(rng.uniform(0, 2 * math.pi)))
        try:
            mp = moves.resolve_move_point(arr, c.id, ang)
        except CircleSweepError:
            continue
        if _usable(arr, mp):
            return mp
    return None


def _snap_pole_angle(ang: float, window: float = 1e-3) -> float:
    """Angles almost at a pole produce corners hugging the new circle's own
    poles at tolerance scale; snap them to the exact pole move instead."""
    for k in range(5):
        target = k * math.pi / 2
        if abs(ang - target) < window:
            return target % (2 * math.pi)
    return ang


def _cross_section_ok(arr: Arrangement, samples: int) -> str | None:
    for axis in (Axis.X, Axis.Y):
        g = sweep.build_graph(arr, axis)
        for t, n in sweep.fiber_count_oracle(arr, axis, samples):
            ne = sweep.edge_crossing_count(g, t)
            if ne != n:
                return f"axis {axis.value}: {ne} edges cross t={t!r} but oracle counts {n}"
    return None


def fuzz_run(config: FuzzConfig) -> FuzzReport:
    report = FuzzReport(config)
    for seed_idx in range(config.seeds):
        rng = np.random.default_rng([config.rng_seed, seed_idx])
        if config.bases:
            arr = config.bases[seed_idx % len(config.bases)]
            base_report = validate(arr)
            if not base_report.valid:
                report.invalid_bases.append(
                    {
                        "seed": seed_idx,
                        "violations": [v.to_dict() for v in base_report.violations],
                        "arrangement": arrangement_to_dict(arr),
                    }
                )
                continue
        else:
            arr = random_base(rng)
        for move_idx in range(config.moves_per_seed):
            mp = _pick_move(arr, rng)
            if mp is None:
                break
            report.moves_attempted += 1
            try:
                safe = moves.safe_radius(arr, mp)
                radius = safe * float(rng.uniform(0.5, 1.0))
                try:
                    mrep = moves.verify(arr, mp, radius)
                except CircleSweepError:
                    mrep = None
                if mrep is None or not mrep.ok:
                    # the random radius was not "sufficiently small"; let the
                    # default halve-and-retry pick one before calling it a bug
                    mrep = moves.verify(arr, mp, None)
            except CircleSweepError as exc:
                report.violations.append(
                    _violation(seed_idx, move_idx, "error", str(exc), arr)
                )
                break
            for ax in mrep.axes:
                report.case_counts[ax.case] = report.case_counts.get(ax.case, 0) + 1
                if ax.case in moves.FORBIDDEN_CASES:
                    report.violations.append(
                        _violation(seed_idx, move_idx, "forbidden_case", ax.case, arr)
                    )
            if not mrep.ok:
                report.violations.append(
                    _violation(seed_idx, move_idx, "rewrite_mismatch", mrep.to_dict()["verdict"], arr)
                )
                break
            post = mrep.result
            if not validate(post).valid:
                report.violations.append(
                    _violation(seed_idx, move_idx, "closure_violation", "post-move validate failed", arr)
                )
                break
            locality = _locality_violation(mrep)
            if locality:
                report.violations.append(_violation(seed_idx, move_idx, "locality", locality, arr))
            mismatch = _cross_section_ok(post, config.oracle_samples)
            if mismatch:
                report.violations.append(
                    _violation(seed_idx, move_idx, "cross_section", mismatch, post)
                )
                break
            report.moves_verified += 1
            arr = post
    return report


def _locality_violation(mrep: moves.MoveReport) -> str | None:
    """New/changed vertex values must stay within 2r of the move's value."""
    for ax in mrep.axes:
        u_p = ax.axis.value_of(mrep.point)
        pre = [v.value for v in ax.pre.vertices]
        post = sorted(v.value for v in ax.recomputed.vertices)
        changed = _multiset_difference(post, pre)
        for val in changed:
            if not (u_p - 2 * mrep.radius - 1e-12 <= val <= u_p + 2 * mrep.radius + 1e-12):
                return f"axis {ax.axis.value}: new value {val!r} outside +-2r of {u_p!r}"
    return None


def _multiset_difference(post: list[float], pre: list[float]) -> list[float]:
    out = list(post)
    for v in pre:
        for i, w in enumerate(out):
            if abs(w - v) <= 1e-12:
                del out[i]
                break
    return out


def _violation(seed_idx: int, move_idx: int, kind: str, detail, arr: Arrangement) -> dict:
    return {
        "seed": seed_idx,
        "move": move_idx,
        "kind": kind,
        "detail": detail,
        "arrangement": arrangement_to_dict(arr),
    }
