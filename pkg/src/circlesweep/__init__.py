"""circlesweep: circle arrangements, level-set sweep graphs, move verification."""

from .arrangement import (
    Arrangement,
    Corner,
    Membership,
    ValidationReport,
    arrangement_from_dict,
    arrangement_to_dict,
    boundary_features,
    corners,
    load_arrangement,
    membership,
    validate,
)
from .geom import (
    Axis,
    Circle,
    Point,
    Pole,
    ReflectHorizontal,
    ReflectVertical,
    RotateQuarter,
    Tolerance,
    Translate,
    apply_move,
    intersect_circles,
    poles,
    tangent_direction,
)
from .moves import (
    CornerFrame,
    MoveClassification,
    MovePoint,
    MoveReport,
    PoleFiberProfile,
    add_small_circle,
    classify,
    corner_frame,
    locate,
    pole_fiber_profile,
    predict,
    resolve_move_point,
    safe_radius,
    verify,
)
from .sweep import (
    Event,
    FiberSlice,
    build_graph,
    critical_events,
    edge_crossing_count,
    fiber_at,
    fiber_count_oracle,
)
from .vdigraph import VDigraph, apply_rewrite, check_invariants, graph_from_dict, isomorphic

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
